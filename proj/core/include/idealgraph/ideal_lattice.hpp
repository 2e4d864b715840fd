#pragma once

#include <compare>
#include <string>
#include <vector>

#include "idealgraph/graph.hpp"

namespace idealgraph {

/// Subset of a graph's vertices, stored as a bitmap over VertexId.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}

  static VertexSet of(const Graph& g, std::initializer_list<std::string_view> names);
  static VertexSet all(const Graph& g);
  /// Bit i of mask selects VertexId{i}.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(VertexId v) const noexcept { return v.value < bits_.size() && bits_[v.value]; }
  void insert(VertexId v);
  void erase(VertexId v);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<VertexId> members() const;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  std::vector<bool> bits_;
};

/// "{v,w}" with names in vertex order.
std::string format_set(const Graph& g, const VertexSet& set);

/// A saturated hereditary set together with a set of its breaking vertices.
struct AdmissiblePair {
  VertexSet hereditary;
  VertexSet breaking;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

std::string format_pair(const Graph& g, const AdmissiblePair& pair);

bool is_hereditary(const Graph& g, const VertexSet& set);
bool is_saturated(const Graph& g, const VertexSet& set);

/// Least saturated hereditary superset.
VertexSet saturate(const Graph& g, const VertexSet& set);

/// Infinite emitters sending a finite, positive number of edges outside the set.
VertexSet breaking_vertices(const Graph& g, const VertexSet& hereditary);

bool is_admissible(const Graph& g, const AdmissiblePair& pair);
/// Throws Errc::non_admissible naming the violated condition.
void validate_admissible(const Graph& g, const AdmissiblePair& pair);

inline constexpr std::size_t kDefaultEnumerationBound = 16;

/// Brute force over all vertex subsets; throws Errc::bound_exceeded above max_vertices.
std::vector<VertexSet> saturated_hereditary_subsets(const Graph& g,
                                                    std::size_t max_vertices = kDefaultEnumerationBound);

/// Every (H, S) with H saturated hereditary and S a subset of B_H, ordered by
/// the bitmask of H and then of S.
std::vector<AdmissiblePair> enumerate_admissible_pairs(const Graph& g,
                                                       std::size_t max_vertices = kDefaultEnumerationBound);

}  // namespace idealgraph
