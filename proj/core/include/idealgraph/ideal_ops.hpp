#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idealgraph/ideal_lattice.hpp"
#include "idealgraph/lpa.hpp"
#include "idealgraph/paths.hpp"
#include "idealgraph/row_space.hpp"

namespace idealgraph {

enum class SpanFamily {
  hereditary,  // alpha beta^* with r(alpha) = r(beta) in H
  breaking,    // alpha v^H beta^* with r(alpha) = r(beta) = v in S
};

struct SpanningDescriptor {
  SpanFamily family = SpanFamily::hereditary;
  Path alpha;
  Path beta;

  std::size_t degree() const noexcept { return alpha.length() + beta.length(); }
  friend bool operator==(const SpanningDescriptor&, const SpanningDescriptor&) = default;
};

/// Element syntax with the gap idempotent written as v^H, e.g. "e.w^H".
std::string format_descriptor(const Graph& g, const SpanningDescriptor& d);

/// Both spanning families with |alpha| + |beta| <= bound, H family first.
std::vector<SpanningDescriptor> spanning_descriptors(const Graph& g, const AdmissiblePair& pair,
                                                     std::size_t degree_bound,
                                                     std::uint64_t omega_width = kDefaultOmegaWidth);

LpaElement realize(const LeavittAlgebra& alg, const AdmissiblePair& pair, const SpanningDescriptor& d);

/// Normal forms of all spanning elements of degree <= bound, without repeats.
std::vector<LpaElement> spanning_elements(const LeavittAlgebra& alg, const AdmissiblePair& pair,
                                          std::size_t degree_bound,
                                          std::uint64_t omega_width = kDefaultOmegaWidth);

/// The span of the spanning elements with descriptor degree <= bound, as an
/// exact reduced row space.
class IdealWindow {
 public:
  IdealWindow(AlgebraPtr algebra, AdmissiblePair pair, std::size_t degree_bound,
              std::uint64_t omega_width = kDefaultOmegaWidth);

  const LeavittAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const AdmissiblePair& pair() const noexcept { return pair_; }
  std::size_t degree_bound() const noexcept { return bound_; }
  std::uint64_t omega_width() const noexcept { return omega_width_; }
  const std::vector<SpanningDescriptor>& descriptors() const noexcept { return descriptors_; }
  /// realize(descriptors()[i]) in normal form.
  const std::vector<LpaElement>& elements() const noexcept { return elements_; }
  const RowSpace& rows() const noexcept { return rows_; }
  const MonomialIndex& index() const noexcept { return index_; }

  /// Throws Errc::degree_overflow when x has a term of degree above the bound.
  bool contains(const LpaElement& x) const;

 private:
  AlgebraPtr algebra_;
  AdmissiblePair pair_;
  std::size_t bound_;
  std::uint64_t omega_width_;
  std::vector<SpanningDescriptor> descriptors_;
  std::vector<LpaElement> elements_;
  MonomialIndex index_;
  RowSpace rows_;
};

struct ClosureReport {
  bool closed = true;
  std::size_t products_checked = 0;
  /// Products whose degree exceeds the bound.
  std::size_t products_skipped = 0;
  std::string failure;
};

/// t*s and s*t lie in the window for every spanning element s of degree
/// <= bound - 1 and every generator t, whenever the product has degree <= bound.
ClosureReport closure_under_generators(const IdealWindow& w);

struct IdentityProbe {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<LpaElement> witness;
  std::optional<LpaElement> left_product;   // q * witness
  std::optional<LpaElement> right_product;  // witness * q
};

/// Checks q x = x = x q for every witness, stopping at the first failure.
/// Throws Errc::outside_window if q or a witness has degree within the bound
/// but is not in the window.
IdentityProbe left_identity_probe(const IdealWindow& w, const LpaElement& q,
                                  const std::vector<LpaElement>& witnesses);

}  // namespace idealgraph
