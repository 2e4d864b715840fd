#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idealgraph/graph.hpp"
#include "idealgraph/ideal_lattice.hpp"
#include "idealgraph/path.hpp"
#include "idealgraph/paths.hpp"

namespace idealgraph {

enum class PathSetKind {
  f1,         // last edge enters H from outside H and S
  f2,         // positive length, range in S
  old,        // old-style set with the S-to-H edges removed
  old_tilde,  // old-style set before that removal
};

std::string_view to_string(PathSetKind kind) noexcept;

/// A possibly infinite set of paths, materialized up to max_len (and up to
/// omega_width indices per omega family).
struct PathSet {
  PathSetKind kind = PathSetKind::f1;
  std::vector<Path> members;
  std::size_t max_len = 0;
  std::uint64_t omega_width = kDefaultOmegaWidth;
  bool is_infinite = false;
  /// Some member was left out because of max_len or omega_width.
  bool truncated = false;

  bool contains(const Path& p) const;
};

PathSet f1_set(const Graph& g, const AdmissiblePair& pair, std::size_t max_len,
               std::uint64_t omega_width = kDefaultOmegaWidth);
PathSet f2_set(const Graph& g, const AdmissiblePair& pair, std::size_t max_len,
               std::uint64_t omega_width = kDefaultOmegaWidth);
PathSet old_tilde_set(const Graph& g, const AdmissiblePair& pair, std::size_t max_len,
                      std::uint64_t omega_width = kDefaultOmegaWidth);
PathSet old_set(const Graph& g, const AdmissiblePair& pair, std::size_t max_len,
                std::uint64_t omega_width = kDefaultOmegaWidth);

/// Membership predicates, usable on any path of the graph.
bool in_f1(const Graph& g, const AdmissiblePair& pair, const Path& p);
bool in_f2(const Graph& g, const AdmissiblePair& pair, const Path& p);
bool in_old_tilde(const Graph& g, const AdmissiblePair& pair, const Path& p);
bool in_old(const Graph& g, const AdmissiblePair& pair, const Path& p);

enum class VertexOriginKind { hereditary, breaking, f1_path, f2_path, old_path };
enum class EdgeOriginKind { graph_edge, bar_f1, bar_f2, bar_old };

std::string_view to_string(VertexOriginKind kind) noexcept;
std::string_view to_string(EdgeOriginKind kind) noexcept;

struct VertexOrigin {
  VertexOriginKind kind = VertexOriginKind::hereditary;
  /// The original vertex (as a length-zero path) or the path the vertex stands for.
  Path path;
};

struct EdgeOrigin {
  EdgeOriginKind kind = EdgeOriginKind::graph_edge;
  /// Family of the original graph, for graph_edge.
  FamilyId original_family;
  /// The barred path, for the bar_* kinds.
  std::optional<Path> path;
};

/// A graph built from E and an admissible pair, with every new vertex and
/// family traced back to what it came from in E.
struct ConstructedGraph {
  Graph graph;
  std::vector<VertexOrigin> vertex_origin;  // indexed by VertexId of graph
  std::vector<EdgeOrigin> edge_origin;      // indexed by FamilyId of graph
  std::optional<std::size_t> truncated_at;
  std::uint64_t omega_width = kDefaultOmegaWidth;
  std::vector<PathSet> path_sets;
  std::vector<std::string> notes;

  std::optional<VertexId> vertex_for_original(VertexId v) const;
  std::optional<VertexId> vertex_for_path(const Path& p) const;
  std::optional<FamilyId> bar_family_for_path(const Path& p) const;
  /// The E-edge behind an edge of graph_edge origin.
  EdgeRef to_original(EdgeRef e) const;
  std::optional<EdgeRef> from_original(EdgeRef e) const;

  std::map<VertexId, VertexId> original_vertices;
  std::map<FamilyId, FamilyId> original_families;
  std::map<Path, VertexId> path_vertices;
  std::map<Path, FamilyId> bar_families;
};

/// The corrected graph: vertices H, S, F1 and F2 (paths up to max_len), edges
/// of E leaving H, edges of E from S into H, and one barred edge per path vertex.
ConstructedGraph build_bar_graph(const Graph& g, const AdmissiblePair& pair, std::size_t max_len,
                                 std::uint64_t omega_width = kDefaultOmegaWidth);

/// The earlier construction. Without max_len the old path set must be finite
/// (Errc::infinite_path_set otherwise).
ConstructedGraph build_old_graph(const Graph& g, const AdmissiblePair& pair,
                                 std::optional<std::size_t> max_len = std::nullopt,
                                 std::uint64_t omega_width = kDefaultOmegaWidth);

struct CycleCorrespondence {
  bool holds = true;
  std::size_t cycles = 0;
  std::string detail;
};

/// Every vertex-simple cycle of the constructed graph uses E-edges only, and
/// distinct cycles map to distinct cycles of E.
CycleCorrespondence cycle_correspondence_check(const Graph& g, const ConstructedGraph& built);

/// The graph document plus an "origin" block.
std::string emit_constructed(const Graph& original, const ConstructedGraph& built);

}  // namespace idealgraph
