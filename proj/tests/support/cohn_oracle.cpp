#include "cohn_oracle.hpp"

#include <stdexcept>

namespace testsupport {

using namespace idealgraph;

std::optional<Cohn> eval_word(const Graph& g, const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word");
  // Track the left end (source of alpha) and the right end (source of beta).
  std::optional<Cohn> cur;
  VertexId right{};
  for (const auto& x : w) {
    if (!cur) {
      Cohn c;
      if (x.kind == GeneratorKind::vertex) {
        c.range = x.vertex;
        right = x.vertex;
      } else if (x.kind == GeneratorKind::edge) {
        c.alpha = {x.edge};
        c.range = g.range(x.edge);
        right = c.range;
      } else {
        c.beta = {x.edge};
        c.range = g.range(x.edge);
        right = g.source(x.edge);
      }
      cur = c;
      continue;
    }
    Cohn& c = *cur;
    switch (x.kind) {
      case GeneratorKind::vertex:
        if (right != x.vertex) return std::nullopt;
        break;
      case GeneratorKind::edge:
        if (c.beta.empty()) {
          if (c.range != g.source(x.edge)) return std::nullopt;
          c.alpha.push_back(x.edge);
          c.range = g.range(x.edge);
          right = c.range;
        } else {
          if (c.beta.front() != x.edge) return std::nullopt;
          c.beta.erase(c.beta.begin());
          right = c.beta.empty() ? c.range : g.source(c.beta.front());
        }
        break;
      case GeneratorKind::star:
        if (right != g.range(x.edge)) return std::nullopt;
        c.beta.insert(c.beta.begin(), x.edge);
        right = g.source(x.edge);
        break;
    }
  }
  return cur;
}

namespace {

void extend(const Graph& g, std::size_t max_len, std::uint64_t width, std::vector<EdgeRef>& path, VertexId at,
            std::map<VertexId, std::vector<std::vector<EdgeRef>>>& out) {
  out[at].push_back(path);
  if (path.size() == max_len) return;
  for (const auto& e : g.out_edges(at, width)) {
    path.push_back(e);
    extend(g, max_len, width, path, g.range(e), out);
    path.pop_back();
  }
}

}  // namespace

QuotientOracle::QuotientOracle(const Graph& g, std::size_t degree, std::uint64_t omega_width)
    : g_(&g), degree_(degree) {
  std::map<VertexId, std::vector<std::vector<EdgeRef>>> by_range;
  for (VertexId v : g.vertices()) {
    std::vector<EdgeRef> path;
    extend(g, degree, omega_width, path, v, by_range);
  }
  for (const auto& [r, paths] : by_range)
    for (const auto& a : paths)
      for (const auto& b : paths)
        if (a.size() + b.size() <= degree) {
          Cohn c{a, b, r};
          columns_.emplace(c, monomials_.size());
          monomials_.push_back(c);
        }
  for (const auto& [v, paths] : by_range) {
    if (!g.is_regular(v)) continue;
    auto out = g.out_edges(v, omega_width);
    for (const auto& a : paths)
      for (const auto& b : paths) {
        if (a.size() + b.size() + 2 > degree) continue;
        Vec row;
        row[column(Cohn{a, b, v})] += 1;
        for (const auto& e : out) {
          auto ae = a, be = b;
          ae.push_back(e);
          be.push_back(e);
          row[column(Cohn{ae, be, g.range(e)})] -= 1;
        }
        add_relation(std::move(row));
      }
  }
}

std::size_t QuotientOracle::column(const Cohn& c) const {
  auto it = columns_.find(c);
  if (it == columns_.end()) throw std::out_of_range("monomial above the oracle degree");
  return it->second;
}

QuotientOracle::Vec QuotientOracle::reduce(Vec v) const {
  std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
  for (auto it = v.begin(); it != v.end();) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    mpq_class c = it->second;
    std::size_t col = it->first;
    for (const auto& [k, x] : p->second) {
      mpq_class& slot = v[k];
      slot -= c * x;
    }
    for (auto jt = v.begin(); jt != v.end();) jt = (jt->second == 0) ? v.erase(jt) : std::next(jt);
    it = v.upper_bound(col);
  }
  return v;
}

void QuotientOracle::add_relation(Vec row) {
  row = reduce(std::move(row));
  if (row.empty()) return;
  mpq_class lead = row.begin()->second;
  for (auto& [k, x] : row) x /= lead;
  pivots_.emplace(row.begin()->first, std::move(row));
}

bool QuotientOracle::in_relations(Vec v) const { return reduce(std::move(v)).empty(); }

std::size_t QuotientOracle::normal_count(const SpecialEdgeChoice& special) const {
  std::size_t n = 0;
  for (const auto& c : monomials_) {
    bool pivot = !c.alpha.empty() && !c.beta.empty() && c.alpha.back() == c.beta.back() &&
                 special.is_special(*g_, c.alpha.back());
    if (!pivot) ++n;
  }
  return n;
}

QuotientOracle::Vec QuotientOracle::raw_vector(const RawExpression& raw) const {
  Vec v;
  for (const auto& t : raw)
    if (auto c = eval_word(*g_, t.word)) v[column(*c)] += t.coefficient.value();
  for (auto it = v.begin(); it != v.end();) it = (it->second == 0) ? v.erase(it) : std::next(it);
  return v;
}

QuotientOracle::Vec QuotientOracle::element_vector(const LpaElement& x) const {
  Vec v;
  for (const auto& [m, c] : x.terms()) {
    Cohn k{std::vector<EdgeRef>(m.alpha.edges().begin(), m.alpha.edges().end()),
           std::vector<EdgeRef>(m.beta.edges().begin(), m.beta.edges().end()), m.alpha.range()};
    v[column(k)] += c.value();
  }
  return v;
}

}  // namespace testsupport
