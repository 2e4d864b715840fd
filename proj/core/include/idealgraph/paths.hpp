#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "idealgraph/graph.hpp"
#include "idealgraph/path.hpp"

namespace idealgraph {

inline constexpr std::uint64_t kDefaultOmegaWidth = 2;

struct PathQuery {
  std::size_t max_len = 0;
  /// How many indices of each omega family are materialized.
  std::uint64_t omega_width = kDefaultOmegaWidth;
  /// Filter on the source vertex; empty means every vertex.
  std::function<bool(VertexId)> from;
  /// Filter on the complete path; empty means every path.
  std::function<bool(const Path&)> until;
};

/// Lazily yields every path of length <= max_len accepted by the query, each
/// once, in length-then-lexicographic order. Single consumer; the graph must
/// outlive the stream.
class PathStream {
 public:
  PathStream(const Graph& g, PathQuery query);

  std::optional<Path> next();

 private:
  struct Frame {
    std::vector<EdgeRef> options;
    std::size_t next = 0;
  };

  std::optional<Path> advance();
  void start_length();

  const Graph* graph_;
  PathQuery query_;
  std::size_t length_ = 0;
  std::uint32_t vertex_cursor_ = 0;
  std::vector<Frame> stack_;
  std::vector<EdgeRef> chosen_;
};

std::vector<Path> enumerate_paths(const Graph& g, PathQuery query);

struct Cycle {
  /// Canonical rotation: starts at the smallest source vertex.
  Path path;
  /// Set when the cycle runs through an omega family, so infinitely many
  /// parallel copies exist beyond the reported indices 0 and 1.
  bool infinitely_many_parallel = false;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Rotates a cycle to start at its smallest source vertex.
Path canonical_rotation(const Graph& g, const Path& cycle);

/// All cycles of length <= max_len whose edge sources are pairwise distinct,
/// one per rotation class, sorted by path order.
std::vector<Cycle> vertex_simple_cycles(const Graph& g, std::size_t max_len);

/// Every cycle has an exit.
bool condition_L(const Graph& g);

/// No vertex is the base of exactly one first-return path.
bool condition_K(const Graph& g);

/// Number of first-return paths at v, saturated at 2 (2 means "two or more").
int return_path_count(const Graph& g, VertexId v);

}  // namespace idealgraph
