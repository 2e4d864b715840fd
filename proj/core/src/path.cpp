#include "idealgraph/path.hpp"

#include "idealgraph/error.hpp"

namespace idealgraph {

Path Path::vertex(const Graph& g, VertexId v) {
  g.name(v);
  Path p;
  p.vertices_.push_back(v);
  return p;
}

Path Path::from_edges(const Graph& g, std::vector<EdgeRef> edges) {
  if (edges.empty()) throw Error(Errc::not_composable, "edge list is empty; use Path::vertex");
  Path p;
  p.vertices_.reserve(edges.size() + 1);
  p.vertices_.push_back(g.source(edges.front()));
  for (const auto& e : edges) {
    if (g.source(e) != p.vertices_.back())
      throw Error(Errc::not_composable, "edge '" + g.edge_name(e) + "' does not start at '" +
                                            g.name(p.vertices_.back()) + "'");
    p.vertices_.push_back(g.range(e));
  }
  p.edges_ = std::move(edges);
  return p;
}

Path Path::concat(const Path& tail) const {
  if (range() != tail.source())
    throw Error(Errc::not_composable, "path concatenation across different vertices");
  Path p = *this;
  p.edges_.insert(p.edges_.end(), tail.edges_.begin(), tail.edges_.end());
  p.vertices_.insert(p.vertices_.end(), tail.vertices_.begin() + 1, tail.vertices_.end());
  return p;
}

Path Path::append(const Graph& g, EdgeRef e) const {
  if (g.source(e) != range())
    throw Error(Errc::not_composable, "edge '" + g.edge_name(e) + "' does not start at '" +
                                          g.name(range()) + "'");
  Path p = *this;
  p.edges_.push_back(e);
  p.vertices_.push_back(g.range(e));
  return p;
}

Path Path::prefix(std::size_t n) const {
  if (n > length()) throw Error(Errc::not_composable, "prefix longer than path");
  Path p;
  p.edges_.assign(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(n));
  p.vertices_.assign(vertices_.begin(), vertices_.begin() + static_cast<std::ptrdiff_t>(n) + 1);
  return p;
}

Path Path::suffix(std::size_t n) const {
  if (n > length()) throw Error(Errc::not_composable, "suffix start beyond path");
  Path p;
  p.edges_.assign(edges_.begin() + static_cast<std::ptrdiff_t>(n), edges_.end());
  p.vertices_.assign(vertices_.begin() + static_cast<std::ptrdiff_t>(n), vertices_.end());
  return p;
}

bool Path::is_prefix_of(const Path& other) const noexcept {
  if (source() != other.source() || length() > other.length()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i] != other.edges_[i]) return false;
  return true;
}

std::string Path::word(const Graph& g) const {
  if (is_vertex()) return g.name(source());
  std::string out;
  for (const auto& e : edges_) out += g.edge_name(e);
  return out;
}

std::string Path::dotted(const Graph& g) const {
  if (is_vertex()) return g.name(source());
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += '.';
    out += g.edge_name(edges_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (a.is_vertex()) return a.source() <=> b.source();
  for (std::size_t i = 0; i < a.edges_.size(); ++i)
    if (auto c = a.edges_[i] <=> b.edges_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace idealgraph
