#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "idealgraph/graph.hpp"

namespace idealgraph {

/// A finite path, possibly of length zero. Composability is checked when the
/// path is built, so every Path value is a genuine element of E^*.
///
/// Paths are ordered by length, then lexicographically by (family, index),
/// which matches (family name, index) since graphs keep families sorted.
class Path {
 public:
  static Path vertex(const Graph& g, VertexId v);
  /// Throws Errc::not_composable when consecutive edges do not meet, and
  /// Errc::unknown_edge for references outside the graph.
  static Path from_edges(const Graph& g, std::vector<EdgeRef> edges);

  std::size_t length() const noexcept { return edges_.size(); }
  bool is_vertex() const noexcept { return edges_.empty(); }
  VertexId source() const noexcept { return vertices_.front(); }
  VertexId range() const noexcept { return vertices_.back(); }
  std::span<const EdgeRef> edges() const noexcept { return edges_; }
  /// The n+1 vertices visited, source first.
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  EdgeRef edge(std::size_t i) const { return edges_.at(i); }
  EdgeRef last_edge() const { return edges_.back(); }

  /// this followed by tail; requires range() == tail.source().
  Path concat(const Path& tail) const;
  Path append(const Graph& g, EdgeRef e) const;
  /// The first n edges (a vertex path at source() when n == 0).
  Path prefix(std::size_t n) const;
  /// Everything after the first n edges.
  Path suffix(std::size_t n) const;
  bool is_prefix_of(const Path& other) const noexcept;

  /// Concatenated edge names; the vertex name for a length-zero path.
  std::string word(const Graph& g) const;
  /// Edge names joined by '.', for diagnostics.
  std::string dotted(const Graph& g) const;

  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) {
    return a.edges_ == b.edges_ && a.vertices_ == b.vertices_;
  }

 private:
  Path() = default;

  std::vector<EdgeRef> edges_;
  std::vector<VertexId> vertices_;
};

}  // namespace idealgraph
