#include "idealgraph/ideal_ops.hpp"

#include <map>
#include <set>

#include "idealgraph/error.hpp"

namespace idealgraph {

std::string format_descriptor(const Graph& g, const SpanningDescriptor& d) {
  std::vector<std::string> parts;
  for (const auto& e : d.alpha.edges()) parts.push_back(g.edge_name(e));
  VertexId v = d.alpha.range();
  if (d.family == SpanFamily::breaking)
    parts.push_back(g.name(v) + "^H");
  else if (d.alpha.is_vertex() && d.beta.is_vertex())
    parts.push_back(g.name(v));
  auto beta = d.beta.edges();
  for (auto it = beta.rbegin(); it != beta.rend(); ++it) parts.push_back(g.edge_name(*it) + "!");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '.';
    out += parts[i];
  }
  return out;
}

std::vector<SpanningDescriptor> spanning_descriptors(const Graph& g, const AdmissiblePair& pair,
                                                     std::size_t degree_bound, std::uint64_t omega_width) {
  validate_admissible(g, pair);
  PathQuery q;
  q.max_len = degree_bound;
  q.omega_width = omega_width;
  q.until = [&](const Path& p) {
    return pair.hereditary.contains(p.range()) || pair.breaking.contains(p.range());
  };
  std::map<VertexId, std::vector<Path>> by_range;
  for (auto& p : enumerate_paths(g, q)) by_range[p.range()].push_back(std::move(p));

  std::vector<SpanningDescriptor> out;
  for (SpanFamily family : {SpanFamily::hereditary, SpanFamily::breaking}) {
    const VertexSet& targets = family == SpanFamily::hereditary ? pair.hereditary : pair.breaking;
    for (const auto& [v, paths] : by_range) {
      if (!targets.contains(v)) continue;
      for (const auto& a : paths)
        for (const auto& b : paths)
          if (a.length() + b.length() <= degree_bound) out.push_back(SpanningDescriptor{family, a, b});
    }
  }
  return out;
}

LpaElement realize(const LeavittAlgebra& alg, const AdmissiblePair& pair, const SpanningDescriptor& d) {
  if (d.family == SpanFamily::hereditary) return alg.monomial(d.alpha, d.beta);
  LpaElement gap = alg.gap_idempotent(d.alpha.range(), pair.hereditary);
  return mul(mul(alg.path(d.alpha), gap), star(alg.path(d.beta)));
}

std::vector<LpaElement> spanning_elements(const LeavittAlgebra& alg, const AdmissiblePair& pair,
                                          std::size_t degree_bound, std::uint64_t omega_width) {
  std::vector<LpaElement> out;
  std::set<std::string> seen;
  for (const auto& d : spanning_descriptors(alg.graph(), pair, degree_bound, omega_width)) {
    LpaElement x = realize(alg, pair, d);
    if (seen.insert(x.to_string()).second) out.push_back(std::move(x));
  }
  return out;
}

IdealWindow::IdealWindow(AlgebraPtr algebra, AdmissiblePair pair, std::size_t degree_bound,
                         std::uint64_t omega_width)
    : algebra_(std::move(algebra)),
      pair_(std::move(pair)),
      bound_(degree_bound),
      omega_width_(omega_width),
      rows_(algebra_->field()) {
  descriptors_ = spanning_descriptors(algebra_->graph(), pair_, bound_, omega_width_);
  elements_.reserve(descriptors_.size());
  for (const auto& d : descriptors_) {
    elements_.push_back(realize(*algebra_, pair_, d));
    rows_.insert(index_.coordinates(elements_.back()));
  }
}

bool IdealWindow::contains(const LpaElement& x) const {
  if (x.degree() > bound_)
    throw Error(Errc::degree_overflow, "element of degree " + std::to_string(x.degree()) +
                                           " exceeds the window bound " + std::to_string(bound_));
  auto row = index_.find_coordinates(x);
  return row && rows_.contains(*row);
}

ClosureReport closure_under_generators(const IdealWindow& w) {
  ClosureReport report;
  const LeavittAlgebra& alg = w.algebra();
  const Graph& g = alg.graph();
  std::vector<LpaElement> generators;
  for (VertexId v : g.vertices()) generators.push_back(alg.vertex(v));
  for (const auto& e : g.edges(w.omega_width())) {
    generators.push_back(alg.edge(e));
    generators.push_back(alg.edge_star(e));
  }
  for (std::size_t i = 0; i < w.descriptors().size(); ++i) {
    if (w.degree_bound() == 0 || w.descriptors()[i].degree() > w.degree_bound() - 1) continue;
    const LpaElement& s = w.elements()[i];
    for (const auto& t : generators) {
      for (const LpaElement& product : {mul(t, s), mul(s, t)}) {
        if (product.degree() > w.degree_bound()) {
          ++report.products_skipped;
          continue;
        }
        ++report.products_checked;
        if (!w.contains(product)) {
          report.closed = false;
          report.failure = "product " + product.to_string() + " of generator " + t.to_string() +
                           " with spanning element " + format_descriptor(g, w.descriptors()[i]) +
                           " is outside the window";
          return report;
        }
      }
    }
  }
  return report;
}

IdentityProbe left_identity_probe(const IdealWindow& w, const LpaElement& q,
                                  const std::vector<LpaElement>& witnesses) {
  auto require_inside = [&](const LpaElement& x, const char* what) {
    if (x.degree() <= w.degree_bound() && !w.contains(x))
      throw Error(Errc::outside_window, std::string(what) + " " + x.to_string() + " is not in the ideal window");
  };
  require_inside(q, "probe element");
  IdentityProbe probe;
  for (const auto& x : witnesses) {
    require_inside(x, "witness");
    ++probe.checked;
    LpaElement left = mul(q, x);
    LpaElement right = mul(x, q);
    if (left != x || right != x) {
      probe.holds = false;
      probe.witness = x;
      probe.left_product = std::move(left);
      probe.right_product = std::move(right);
      return probe;
    }
  }
  return probe;
}

}  // namespace idealgraph
