#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idealgraph {

struct VertexId {
  std::uint32_t value = 0;
  friend auto operator<=>(VertexId, VertexId) = default;
};

struct FamilyId {
  std::uint32_t value = 0;
  friend auto operator<=>(FamilyId, FamilyId) = default;
};

/// Number of parallel edges in a family: a positive count or countably many.
class Multiplicity {
 public:
  static Multiplicity finite(std::uint64_t count);
  static constexpr Multiplicity omega() { return Multiplicity(0, true); }

  bool is_omega() const noexcept { return omega_; }
  /// Only meaningful for finite multiplicities.
  std::uint64_t count() const noexcept { return count_; }
  /// True when an edge with this index exists in the family.
  bool admits(std::uint64_t index) const noexcept { return omega_ || index < count_; }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  constexpr Multiplicity(std::uint64_t count, bool omega) : count_(count), omega_(omega) {}

  std::uint64_t count_ = 1;
  bool omega_ = false;
};

struct EdgeFamily {
  std::string name;
  VertexId src;
  VertexId dst;
  Multiplicity mult = Multiplicity::finite(1);

  friend bool operator==(const EdgeFamily&, const EdgeFamily&) = default;
};

/// One element of E^1: the index-th edge of a family.
struct EdgeRef {
  FamilyId family;
  std::uint64_t index = 0;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

enum class VertexKind { regular, sink, infinite_emitter };

std::string_view to_string(VertexKind kind) noexcept;

/// Input record for Graph::build, with endpoints given by name.
struct FamilySpec {
  std::string name;
  std::string src;
  std::string dst;
  Multiplicity mult = Multiplicity::finite(1);
};

/// Immutable directed graph. Vertices and families are kept sorted by name, so
/// VertexId and FamilyId order coincide with name order.
class Graph {
 public:
  Graph() = default;

  /// Validates names and endpoints and canonicalizes the order.
  static Graph build(std::vector<std::string> vertices, std::vector<FamilySpec> families);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t family_count() const noexcept { return families_.size(); }

  std::span<const std::string> vertex_names() const noexcept { return vertex_names_; }
  const std::string& name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws Errc::unknown_vertex.
  VertexId vertex(std::string_view name) const;
  std::vector<VertexId> vertices() const;

  std::span<const EdgeFamily> families() const noexcept { return families_; }
  const EdgeFamily& family(FamilyId id) const;
  std::optional<FamilyId> find_family(std::string_view name) const;
  std::span<const FamilyId> out_families(VertexId v) const;
  std::span<const FamilyId> in_families(VertexId v) const;

  bool contains(EdgeRef e) const noexcept;
  VertexId source(EdgeRef e) const;
  VertexId range(EdgeRef e) const;
  /// "e" for a family of multiplicity one, "g[3]" otherwise.
  std::string edge_name(EdgeRef e) const;
  std::optional<EdgeRef> find_edge(std::string_view name) const;

  VertexKind classify(VertexId v) const;
  bool is_regular(VertexId v) const { return classify(v) == VertexKind::regular; }

  /// Outgoing edges in (family name, index) order. Omega families contribute
  /// indices below omega_width.
  std::vector<EdgeRef> out_edges(VertexId v, std::uint64_t omega_width) const;
  std::vector<EdgeRef> edges(std::uint64_t omega_width) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_names_ == b.vertex_names_ && a.families_ == b.families_;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<EdgeFamily> families_;
  std::vector<std::vector<FamilyId>> out_;
  std::vector<std::vector<FamilyId>> in_;
};

/// Accepts classify_vertex by name, rejecting unknown names.
VertexKind classify_vertex(const Graph& g, std::string_view vertex);

bool is_valid_family_name(std::string_view name) noexcept;
bool is_valid_vertex_name(std::string_view name) noexcept;

}  // namespace idealgraph
