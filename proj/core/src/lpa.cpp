#include "idealgraph/lpa.hpp"

#include <algorithm>

#include "idealgraph/error.hpp"

namespace idealgraph {

Word star_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) {
    if (x.kind == GeneratorKind::edge)
      x.kind = GeneratorKind::star;
    else if (x.kind == GeneratorKind::star)
      x.kind = GeneratorKind::edge;
  }
  return out;
}

SpecialEdgeChoice SpecialEdgeChoice::first_edges(const Graph& g) {
  SpecialEdgeChoice out;
  for (VertexId v : g.vertices())
    if (g.is_regular(v)) out.choice_.emplace(v, g.out_edges(v, 1).front());
  return out;
}

SpecialEdgeChoice SpecialEdgeChoice::with(const Graph& g, const std::map<VertexId, EdgeRef>& overrides) {
  auto out = first_edges(g);
  for (const auto& [v, e] : overrides) {
    if (v.value >= g.vertex_count() || !g.is_regular(v))
      throw Error(Errc::ill_formed, "special edges exist only at regular vertices");
    if (!g.contains(e) || g.source(e) != v)
      throw Error(Errc::ill_formed, "special edge at " + g.name(v) + " must start there");
    out.choice_[v] = e;
  }
  return out;
}

std::optional<EdgeRef> SpecialEdgeChoice::at(VertexId v) const {
  auto it = choice_.find(v);
  if (it == choice_.end()) return std::nullopt;
  return it->second;
}

bool SpecialEdgeChoice::is_special(const Graph& g, EdgeRef e) const {
  auto s = at(g.source(e));
  return s && *s == e;
}

LeavittAlgebra::LeavittAlgebra(Graph g, Field field, SpecialEdgeChoice special)
    : graph_(std::move(g)), field_(field), special_(std::move(special)) {}

std::shared_ptr<const LeavittAlgebra> LeavittAlgebra::create(Graph g, Field field) {
  auto special = SpecialEdgeChoice::first_edges(g);
  return create(std::move(g), field, std::move(special));
}

std::shared_ptr<const LeavittAlgebra> LeavittAlgebra::create(Graph g, Field field, SpecialEdgeChoice special) {
  return std::shared_ptr<const LeavittAlgebra>(new LeavittAlgebra(std::move(g), field, std::move(special)));
}

bool LeavittAlgebra::compatible(const LeavittAlgebra& other) const {
  return this == &other ||
         (field_ == other.field_ && special_ == other.special_ && graph_ == other.graph_);
}

void LeavittAlgebra::add_normalized(Terms& terms, const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return;
  const auto& a = m.alpha;
  const auto& b = m.beta;
  if (!a.is_vertex() && !b.is_vertex() && a.last_edge() == b.last_edge() &&
      special_.is_special(graph_, a.last_edge())) {
    // alpha' e (beta' e)^* = alpha' beta'^* - sum over the other edges f at s(e).
    EdgeRef e = a.last_edge();
    Path a0 = a.prefix(a.length() - 1);
    Path b0 = b.prefix(b.length() - 1);
    add_normalized(terms, Monomial{a0, b0}, c);
    Scalar minus = -c;
    for (const auto& f : graph_.out_edges(graph_.source(e), 1)) {
      if (f == e) continue;
      add_normalized(terms, Monomial{a0.append(graph_, f), b0.append(graph_, f)}, minus);
    }
    return;
  }
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::optional<Monomial> LeavittAlgebra::multiply(const Monomial& x, const Monomial& y) const {
  // (alpha beta^*)(gamma delta^*)
  const Path& beta = x.beta;
  const Path& gamma = y.alpha;
  if (beta.is_prefix_of(gamma)) {
    return Monomial{x.alpha.concat(gamma.suffix(beta.length())), y.beta};
  }
  if (gamma.is_prefix_of(beta)) {
    return Monomial{x.alpha, y.beta.concat(beta.suffix(gamma.length()))};
  }
  return std::nullopt;
}

LpaElement LeavittAlgebra::zero() const { return LpaElement(shared_from_this()); }

LpaElement LeavittAlgebra::vertex(VertexId v) const {
  Path p = Path::vertex(graph_, v);
  return monomial(p, p);
}

LpaElement LeavittAlgebra::vertex(std::string_view name) const { return vertex(graph_.vertex(name)); }

LpaElement LeavittAlgebra::edge(EdgeRef e) const {
  return monomial(Path::from_edges(graph_, {e}), Path::vertex(graph_, graph_.range(e)));
}

LpaElement LeavittAlgebra::edge_star(EdgeRef e) const {
  return monomial(Path::vertex(graph_, graph_.range(e)), Path::from_edges(graph_, {e}));
}

LpaElement LeavittAlgebra::generator(const Generator& x) const {
  switch (x.kind) {
    case GeneratorKind::vertex: return vertex(x.vertex);
    case GeneratorKind::edge: return edge(x.edge);
    case GeneratorKind::star: return edge_star(x.edge);
  }
  throw Error(Errc::unknown_generator, "bad generator kind");
}

LpaElement LeavittAlgebra::path(const Path& p) const { return monomial(p, Path::vertex(graph_, p.range())); }

LpaElement LeavittAlgebra::monomial(const Path& alpha, const Path& beta) const {
  return monomial(alpha, beta, scalar(1));
}

LpaElement LeavittAlgebra::monomial(const Path& alpha, const Path& beta, const Scalar& c) const {
  if (alpha.range() != beta.range())
    throw Error(Errc::ill_formed, "monomial needs r(alpha) = r(beta)");
  LpaElement out = zero();
  add_normalized(out.terms_, Monomial{alpha, beta}, Scalar(field_, c.value()));
  return out;
}

LpaElement LeavittAlgebra::unit() const {
  LpaElement out = zero();
  for (VertexId v : graph_.vertices()) out += vertex(v);
  return out;
}

namespace {

enum class Rule { none, zero, keep_left, keep_right, range_vertex };

}  // namespace

std::optional<Monomial> LeavittAlgebra::reduce_word(Word word, std::mt19937_64* rng) const {
  const Graph& g = graph_;
  auto rule = [&](const Generator& a, const Generator& b) {
    using K = GeneratorKind;
    auto keep_if = [](bool ok, Rule r) { return ok ? r : Rule::zero; };
    if (a.kind == K::vertex) {
      if (b.kind == K::vertex) return keep_if(a.vertex == b.vertex, Rule::keep_left);
      if (b.kind == K::edge) return keep_if(g.source(b.edge) == a.vertex, Rule::keep_right);
      return keep_if(g.range(b.edge) == a.vertex, Rule::keep_right);
    }
    if (b.kind == K::vertex) {
      if (a.kind == K::edge) return keep_if(g.range(a.edge) == b.vertex, Rule::keep_left);
      return keep_if(g.source(a.edge) == b.vertex, Rule::keep_left);
    }
    if (a.kind == K::star && b.kind == K::edge) return keep_if(a.edge == b.edge, Rule::range_vertex);
    if (a.kind == K::edge && b.kind == K::edge)
      return g.range(a.edge) == g.source(b.edge) ? Rule::none : Rule::zero;
    if (a.kind == K::star && b.kind == K::star)
      return g.source(a.edge) == g.range(b.edge) ? Rule::none : Rule::zero;
    return g.range(a.edge) == g.range(b.edge) ? Rule::none : Rule::zero;
  };

  if (word.empty()) throw Error(Errc::ill_formed, "empty word");
  std::vector<std::size_t> open;
  for (;;) {
    open.clear();
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (rule(word[i], word[i + 1]) != Rule::none) open.push_back(i);
    if (open.empty()) break;
    std::size_t i = open.front();
    if (rng) i = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(*rng)];
    switch (rule(word[i], word[i + 1])) {
      case Rule::zero: return std::nullopt;
      case Rule::keep_left: word.erase(word.begin() + static_cast<long>(i) + 1); break;
      case Rule::keep_right: word.erase(word.begin() + static_cast<long>(i)); break;
      case Rule::range_vertex:
        word[i] = Generator::of_vertex(g.range(word[i].edge));
        word.erase(word.begin() + static_cast<long>(i) + 1);
        break;
      case Rule::none: break;
    }
  }
  // Irreducible words: a single vertex, or edges followed by starred edges.
  if (word.size() == 1 && word[0].kind == GeneratorKind::vertex) {
    Path p = Path::vertex(g, word[0].vertex);
    return Monomial{p, p};
  }
  std::vector<EdgeRef> alpha;
  std::vector<EdgeRef> beta;
  for (const auto& x : word) {
    if (x.kind == GeneratorKind::edge)
      alpha.push_back(x.edge);
    else
      beta.push_back(x.edge);
  }
  std::reverse(beta.begin(), beta.end());
  VertexId r = alpha.empty() ? g.range(beta.back()) : g.range(alpha.back());
  Path a = alpha.empty() ? Path::vertex(g, r) : Path::from_edges(g, std::move(alpha));
  Path b = beta.empty() ? Path::vertex(g, r) : Path::from_edges(g, std::move(beta));
  return Monomial{std::move(a), std::move(b)};
}

LpaElement LeavittAlgebra::normal_form(const RawExpression& raw, std::mt19937_64* rng) const {
  LpaElement out = zero();
  for (const auto& term : raw) {
    if (term.coefficient.field() != field_) throw Error(Errc::field_mismatch, "coefficient from another field");
    if (term.word.empty()) throw Error(Errc::ill_formed, "empty word");
    for (const auto& x : term.word) {
      bool ok = x.kind == GeneratorKind::vertex ? x.vertex.value < graph_.vertex_count() : graph_.contains(x.edge);
      if (!ok) throw Error(Errc::unknown_generator, "generator outside the graph");
    }
    if (rng) {
      if (auto m = reduce_word(term.word, rng)) add_normalized(out.terms_, *m, term.coefficient);
      continue;
    }
    LpaElement product = generator(term.word.front());
    for (std::size_t i = 1; i < term.word.size() && !product.is_zero(); ++i)
      product = mul(product, generator(term.word[i]));
    out += product * term.coefficient;
  }
  return out;
}

LpaElement LeavittAlgebra::gap_idempotent(VertexId v, const VertexSet& hereditary) const {
  if (!breaking_vertices(graph_, hereditary).contains(v))
    throw Error(Errc::non_admissible, graph_.name(v) + " is not a breaking vertex of " +
                                          format_set(graph_, hereditary));
  LpaElement out = vertex(v);
  for (FamilyId f : graph_.out_families(v)) {
    const auto& fam = graph_.family(f);
    if (hereditary.contains(fam.dst)) continue;
    for (std::uint64_t i = 0; i < fam.mult.count(); ++i) {
      Path e = Path::from_edges(graph_, {EdgeRef{f, i}});
      out -= monomial(e, e);
    }
  }
  return out;
}

std::size_t LpaElement::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Scalar LpaElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? algebra_->scalar(0) : it->second;
}

void LpaElement::check_same(const LpaElement& o) const {
  if (algebra_ == o.algebra_) return;
  if (algebra_->field() != o.algebra_->field())
    throw Error(Errc::field_mismatch, "elements over different fields");
  if (!algebra_->compatible(*o.algebra_)) throw Error(Errc::algebra_mismatch, "elements of different algebras");
}

void LpaElement::add_raw(const Monomial& m, const Scalar& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LpaElement LpaElement::operator-() const {
  LpaElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LpaElement& LpaElement::operator+=(const LpaElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_raw(m, c);
  return *this;
}

LpaElement& LpaElement::operator-=(const LpaElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_raw(m, -c);
  return *this;
}

LpaElement& LpaElement::operator*=(const Scalar& c) {
  if (c.field() != algebra_->field()) throw Error(Errc::field_mismatch, "scalar from another field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

LpaElement operator*(const LpaElement& a, const LpaElement& b) { return mul(a, b); }

bool operator==(const LpaElement& a, const LpaElement& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

LpaElement mul(const LpaElement& x, const LpaElement& y) {
  x.check_same(y);
  const LeavittAlgebra& alg = *x.algebra_;
  LpaElement out(x.algebra_);
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_)
      if (auto m = alg.multiply(mx, my)) alg.add_normalized(out.terms_, *m, cx * cy);
  return out;
}

LpaElement star(const LpaElement& x) {
  LpaElement out(x.algebra_);
  for (const auto& [m, c] : x.terms_) out.terms_.emplace(Monomial{m.beta, m.alpha}, c);
  return out;
}

std::map<long, LpaElement> graded_components(const LpaElement& x) {
  std::map<long, LpaElement> out;
  for (const auto& [m, c] : x.terms()) {
    auto it = out.try_emplace(m.grade(), x.algebra_ptr()).first;
    it->second += x.algebra().monomial(m.alpha, m.beta, c);
  }
  return out;
}

}  // namespace idealgraph
