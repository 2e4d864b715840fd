#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <string>
#include <vector>

#include "idealgraph/constructions.hpp"
#include "idealgraph/ideal_ops.hpp"
#include "idealgraph/lpa.hpp"

namespace idealgraph {

/// Images of the generators of a constructed graph inside L_K(E).
struct GeneratorImage {
  std::vector<LpaElement> q;               // indexed by VertexId of the constructed graph
  std::map<EdgeRef, LpaElement> t;         // constructed-graph edges present in the window
  std::map<EdgeRef, LpaElement> t_star;
};

struct LeavittFamily {
  ConstructedGraph built;
  AdmissiblePair pair;
  AlgebraPtr algebra;  // L_K(E)
  GeneratorImage image;
  bool old_style = false;
};

/// H vertex v -> v, S vertex v -> v^H, path vertex alpha -> alpha alpha^* or
/// alpha r(alpha)^H alpha^*; E-edges -> themselves, barred edges -> alpha or
/// alpha r(alpha)^H. Path vertices up to trunc_len.
LeavittFamily build_family(AlgebraPtr algebra, const AdmissiblePair& pair, std::size_t trunc_len,
                           std::uint64_t omega_width = kDefaultOmegaWidth);
/// The same assignment on the old graph.
LeavittFamily build_old_family(AlgebraPtr algebra, const AdmissiblePair& pair, std::size_t trunc_len,
                               std::uint64_t omega_width = kDefaultOmegaWidth);

enum class CheckStatus { pass, fail, skip };
std::string_view to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::string detail;
  /// lhs - rhs of the first failing instance, in element syntax.
  std::optional<std::string> defect;
};

struct Report {
  std::vector<CheckResult> checks;
  std::map<std::string, std::size_t> tallies;
  std::vector<std::string> notes;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
};

/// Relation checks on the images: idempotence and orthogonality of the q's,
/// t^* = star(t), t^*(e) t(f) = delta q(r(e)), source and range absorption,
/// CK2 at regular vertices of the constructed graph, and the path-set
/// observations (F1 and F2 disjoint, no F1 member extends an F1 or F2
/// member, no F2 member extends an F1 member, v^H e = 0 for e leaving H).
Report verify_leavitt_relations(const LeavittFamily& family);

/// Names of the checks that are relations proper (not path-set facts).
std::span<const std::string_view> relation_check_names() noexcept;
/// All relation checks are present and none failed.
bool relations_passed(const Report& r);

/// Every image of degree within the window bound lies in the window.
CheckResult verify_images_in_window(const LeavittFamily& family, const IdealWindow& window);

/// Product of the images of a word over the constructed graph's generators.
/// Throws Errc::unknown_generator for generators outside the truncation.
LpaElement phi_apply(const LeavittFamily& family, const Word& word);

enum class SpanCase { case_I, case_II, case_III, case_IV, s_vertex, s_path };
std::string_view to_string(SpanCase c) noexcept;

struct Preimage {
  Word word;
  SpanCase alpha_case = SpanCase::case_I;
  SpanCase beta_case = SpanCase::case_I;
};

/// Classifies alpha and beta and assembles W_alpha star(W_beta). Throws
/// Errc::outside_window when a needed path vertex was truncated away.
Preimage preimage_of_spanning(const LeavittFamily& family, const SpanningDescriptor& d);

/// Every spanning element of degree <= bound gets a preimage whose image is
/// exactly the element. Tallies count the case of alpha and of beta.
Report verify_surjectivity_window(const LeavittFamily& family, std::size_t degree_bound);

/// q(u) != 0 for every vertex u of the truncation.
Report injectivity_witnesses(const LeavittFamily& family);

struct GapReport {
  /// S empty: both constructions give the same graph.
  bool coincide = false;
  Report old_relations;
  std::size_t spanning_checked = 0;
  std::size_t old_span_rank = 0;
  /// Spanning elements outside the span of the old family's image.
  std::vector<SpanningDescriptor> missing;
  /// q = sum of the old vertex images, against the missing elements.
  std::optional<IdentityProbe> probe;
  std::vector<std::string> notes;
};

/// Spans the images of mu nu^* for old-graph paths with |mu| + |nu| <= bound
/// and reports which spanning elements of the ideal it misses.
GapReport old_construction_gap(AlgebraPtr algebra, const AdmissiblePair& pair, std::size_t degree_bound,
                               std::size_t trunc_len, std::uint64_t omega_width = kDefaultOmegaWidth);

/// Decides membership of an element in the span of the old family's image.
class OldImageSpan {
 public:
  OldImageSpan(const LeavittFamily& old_family, std::size_t degree_bound);
  bool contains(const LpaElement& x) const;
  std::size_t rank() const noexcept { return rows_.rank(); }

 private:
  MonomialIndex index_;
  RowSpace rows_;
};

}  // namespace idealgraph
