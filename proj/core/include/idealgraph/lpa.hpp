#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "idealgraph/graph.hpp"
#include "idealgraph/ideal_lattice.hpp"
#include "idealgraph/path.hpp"
#include "idealgraph/scalar.hpp"

namespace idealgraph {

enum class GeneratorKind { vertex, edge, star };

/// One letter of a word in the generators v, e, e*.
struct Generator {
  GeneratorKind kind = GeneratorKind::vertex;
  VertexId vertex;  // for kind == vertex
  EdgeRef edge;     // for edge and star

  static Generator of_vertex(VertexId v) { return Generator{GeneratorKind::vertex, v, {}}; }
  static Generator of_edge(EdgeRef e) { return Generator{GeneratorKind::edge, {}, e}; }
  static Generator of_star(EdgeRef e) { return Generator{GeneratorKind::star, {}, e}; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

/// The involution on words: reverse, swapping edges and starred edges.
Word star_word(const Word& w);
/// Factors joined by '.', starred edges marked with '!'.
std::string format_word(const Graph& g, const Word& w);
/// Inverse of format_word; throws Errc::parse_error or Errc::unknown_generator.
Word parse_word(const Graph& g, std::string_view text);

/// alpha beta^* with r(alpha) = r(beta). Vertices are the pairs (v, v).
struct Monomial {
  Path alpha;
  Path beta;

  /// |alpha| + |beta|
  std::size_t degree() const noexcept { return alpha.length() + beta.length(); }
  /// |alpha| - |beta|
  long grade() const noexcept {
    return static_cast<long>(alpha.length()) - static_cast<long>(beta.length());
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// A designated outgoing edge at every regular vertex.
class SpecialEdgeChoice {
 public:
  /// The first outgoing edge (by family name, index) at each regular vertex.
  static SpecialEdgeChoice first_edges(const Graph& g);
  /// Starts from first_edges and replaces the given vertices' choices.
  /// Throws Errc::ill_formed for non-regular vertices or foreign edges.
  static SpecialEdgeChoice with(const Graph& g, const std::map<VertexId, EdgeRef>& overrides);

  std::optional<EdgeRef> at(VertexId v) const;
  bool is_special(const Graph& g, EdgeRef e) const;

  friend bool operator==(const SpecialEdgeChoice&, const SpecialEdgeChoice&) = default;

 private:
  std::map<VertexId, EdgeRef> choice_;
};

struct RawTerm {
  Scalar coefficient;
  Word word;
};

/// An unreduced linear combination of generator words.
using RawExpression = std::vector<RawTerm>;

class LpaElement;

/// L_K(E) for a fixed graph, field and special edge choice. Elements keep a
/// shared pointer to their algebra.
class LeavittAlgebra : public std::enable_shared_from_this<LeavittAlgebra> {
 public:
  static std::shared_ptr<const LeavittAlgebra> create(Graph g, Field field = Field::rational());
  static std::shared_ptr<const LeavittAlgebra> create(Graph g, Field field, SpecialEdgeChoice special);

  const Graph& graph() const noexcept { return graph_; }
  const Field& field() const noexcept { return field_; }
  const SpecialEdgeChoice& special() const noexcept { return special_; }
  /// Same graph, field and special edges.
  bool compatible(const LeavittAlgebra& other) const;

  Scalar scalar(long value) const { return Scalar(field_, value); }

  LpaElement zero() const;
  LpaElement vertex(VertexId v) const;
  LpaElement vertex(std::string_view name) const;
  LpaElement edge(EdgeRef e) const;
  LpaElement edge_star(EdgeRef e) const;
  LpaElement generator(const Generator& x) const;
  LpaElement path(const Path& p) const;
  /// c * alpha beta^*, normalized. Throws Errc::ill_formed unless r(alpha) = r(beta).
  LpaElement monomial(const Path& alpha, const Path& beta) const;
  LpaElement monomial(const Path& alpha, const Path& beta, const Scalar& c) const;
  /// Sum of all vertices, the unit of the algebra.
  LpaElement unit() const;

  /// Reduces a raw expression. With rng, relations are applied to the words
  /// at randomly chosen positions instead of multiplying left to right.
  LpaElement normal_form(const RawExpression& raw, std::mt19937_64* rng = nullptr) const;

  /// v - sum of ee^* over edges from v with range outside H. Requires v in
  /// B_H (Errc::non_admissible otherwise).
  LpaElement gap_idempotent(VertexId v, const VertexSet& hereditary) const;

  /// Text syntax: terms like `3/2 * a.b.c!.d!` joined by + and -.
  RawExpression parse_raw(std::string_view text) const;
  LpaElement parse(std::string_view text) const;
  std::string format(const LpaElement& x) const;
  std::string format(const Monomial& m) const;

 private:
  friend class LpaElement;
  friend LpaElement mul(const LpaElement& x, const LpaElement& y);

  LeavittAlgebra(Graph g, Field field, SpecialEdgeChoice special);

  using Terms = std::map<Monomial, Scalar>;
  void add_normalized(Terms& terms, const Monomial& m, const Scalar& c) const;
  std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) const;
  std::optional<Monomial> reduce_word(Word word, std::mt19937_64* rng) const;

  Graph graph_;
  Field field_;
  SpecialEdgeChoice special_;
};

using AlgebraPtr = std::shared_ptr<const LeavittAlgebra>;

/// A finite combination of normal monomials with nonzero coefficients.
class LpaElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit LpaElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  const LeavittAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest |alpha| + |beta| among the terms; 0 for zero.
  std::size_t degree() const noexcept;
  /// Coefficient of a normal monomial, zero if absent.
  Scalar coefficient(const Monomial& m) const;

  LpaElement operator-() const;
  LpaElement& operator+=(const LpaElement& o);
  LpaElement& operator-=(const LpaElement& o);
  LpaElement& operator*=(const Scalar& c);

  friend LpaElement operator+(LpaElement a, const LpaElement& b) { return a += b; }
  friend LpaElement operator-(LpaElement a, const LpaElement& b) { return a -= b; }
  friend LpaElement operator*(LpaElement a, const Scalar& c) { return a *= c; }
  friend LpaElement operator*(const Scalar& c, LpaElement a) { return a *= c; }
  friend LpaElement operator*(const LpaElement& a, const LpaElement& b);
  /// Throws Errc::algebra_mismatch for elements of different algebras.
  friend bool operator==(const LpaElement& a, const LpaElement& b);

  std::string to_string() const { return algebra_->format(*this); }

 private:
  friend class LeavittAlgebra;
  friend LpaElement mul(const LpaElement& x, const LpaElement& y);
  friend LpaElement star(const LpaElement& x);

  void check_same(const LpaElement& o) const;
  void add_raw(const Monomial& m, const Scalar& c);

  AlgebraPtr algebra_;
  Terms terms_;
};

LpaElement mul(const LpaElement& x, const LpaElement& y);
LpaElement star(const LpaElement& x);
/// Terms grouped by |alpha| - |beta|; zero components are omitted.
std::map<long, LpaElement> graded_components(const LpaElement& x);

}  // namespace idealgraph
