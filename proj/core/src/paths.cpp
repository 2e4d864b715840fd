#include "idealgraph/paths.hpp"

#include <algorithm>
#include <functional>

#include "idealgraph/error.hpp"

namespace idealgraph {

PathStream::PathStream(const Graph& g, PathQuery query) : graph_(&g), query_(std::move(query)) {}

void PathStream::start_length() {
  stack_.clear();
  chosen_.clear();
  Frame first;
  for (const auto& e : graph_->edges(query_.omega_width)) {
    if (!query_.from || query_.from(graph_->source(e))) first.options.push_back(e);
  }
  stack_.push_back(std::move(first));
}

std::optional<Path> PathStream::advance() {
  while (!stack_.empty()) {
    auto& top = stack_.back();
    const std::size_t depth = stack_.size() - 1;
    if (top.next == top.options.size()) {
      stack_.pop_back();
      continue;
    }
    EdgeRef e = top.options[top.next++];
    chosen_.resize(depth);
    chosen_.push_back(e);
    if (chosen_.size() == length_) return Path::from_edges(*graph_, chosen_);
    stack_.push_back(Frame{graph_->out_edges(graph_->range(e), query_.omega_width), 0});
  }
  return std::nullopt;
}

std::optional<Path> PathStream::next() {
  while (length_ <= query_.max_len) {
    if (length_ == 0) {
      while (vertex_cursor_ < graph_->vertex_count()) {
        VertexId v{vertex_cursor_++};
        if (query_.from && !query_.from(v)) continue;
        Path p = Path::vertex(*graph_, v);
        if (!query_.until || query_.until(p)) return p;
      }
      length_ = 1;
      if (length_ <= query_.max_len) start_length();
      continue;
    }
    while (auto p = advance()) {
      if (!query_.until || query_.until(*p)) return p;
    }
    ++length_;
    if (length_ <= query_.max_len) start_length();
  }
  return std::nullopt;
}

std::vector<Path> enumerate_paths(const Graph& g, PathQuery query) {
  std::vector<Path> out;
  PathStream stream(g, std::move(query));
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

Path canonical_rotation(const Graph& g, const Path& cycle) {
  if (cycle.is_vertex() || cycle.source() != cycle.range())
    throw Error(Errc::ill_formed, "canonical_rotation expects a cycle");
  auto edges = cycle.edges();
  std::size_t best = 0;
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (g.source(edges[i]) < g.source(edges[best])) best = i;
  std::vector<EdgeRef> rotated;
  rotated.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) rotated.push_back(edges[(best + i) % edges.size()]);
  return Path::from_edges(g, std::move(rotated));
}

namespace {

// Omega families are reported up to index 1 only.
constexpr std::uint64_t kCycleOmegaWidth = 2;

void extend_cycles(const Graph& g, VertexId start, std::size_t max_len, std::vector<EdgeRef>& edges,
                   std::vector<bool>& on_path, std::vector<Cycle>& out) {
  if (edges.size() >= max_len) return;
  VertexId here = edges.empty() ? start : g.range(edges.back());
  for (const auto& e : g.out_edges(here, kCycleOmegaWidth)) {
    VertexId next = g.range(e);
    if (next == start) {
      edges.push_back(e);
      Cycle c{Path::from_edges(g, edges), false};
      for (const auto& ce : edges)
        if (g.family(ce.family).mult.is_omega()) c.infinitely_many_parallel = true;
      out.push_back(std::move(c));
      edges.pop_back();
      continue;
    }
    if (next < start || on_path[next.value]) continue;
    on_path[next.value] = true;
    edges.push_back(e);
    extend_cycles(g, start, max_len, edges, on_path, out);
    edges.pop_back();
    on_path[next.value] = false;
  }
}

bool has_exit(const Graph& g, const Path& cycle) {
  for (const auto& e : cycle.edges()) {
    for (FamilyId f : g.out_families(g.source(e))) {
      if (f != e.family) return true;
      const auto& m = g.family(f).mult;
      if (m.is_omega() || m.count() > 1) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Cycle> vertex_simple_cycles(const Graph& g, std::size_t max_len) {
  std::vector<Cycle> out;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<EdgeRef> edges;
  for (VertexId s : g.vertices()) {
    on_path[s.value] = true;
    extend_cycles(g, s, max_len, edges, on_path, out);
    on_path[s.value] = false;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.path < b.path; });
  return out;
}

bool condition_L(const Graph& g) {
  for (const auto& c : vertex_simple_cycles(g, g.vertex_count()))
    if (!has_exit(g, c.path)) return false;
  return true;
}

int return_path_count(const Graph& g, VertexId v) {
  const std::size_t n = g.vertex_count();

  // Vertices other than v that can reach v without passing through v.
  std::vector<bool> reaches(n, false);
  std::vector<VertexId> work;
  for (FamilyId f : g.in_families(v)) {
    VertexId u = g.family(f).src;
    if (u != v && !reaches[u.value]) {
      reaches[u.value] = true;
      work.push_back(u);
    }
  }
  while (!work.empty()) {
    VertexId z = work.back();
    work.pop_back();
    for (FamilyId f : g.in_families(z)) {
      VertexId u = g.family(f).src;
      if (u != v && !reaches[u.value]) {
        reaches[u.value] = true;
        work.push_back(u);
      }
    }
  }

  // Of those, the ones reachable from v avoiding v.
  std::vector<bool> live(n, false);
  for (FamilyId f : g.out_families(v)) {
    VertexId z = g.family(f).dst;
    if (z != v && reaches[z.value] && !live[z.value]) {
      live[z.value] = true;
      work.push_back(z);
    }
  }
  while (!work.empty()) {
    VertexId u = work.back();
    work.pop_back();
    for (FamilyId f : g.out_families(u)) {
      VertexId z = g.family(f).dst;
      if (z != v && reaches[z.value] && !live[z.value]) {
        live[z.value] = true;
        work.push_back(z);
      }
    }
  }

  auto relevant = [&](VertexId u) { return u == v || live[u.value]; };
  for (const auto& fam : g.families())
    if (fam.mult.is_omega() && relevant(fam.src) && relevant(fam.dst)) return 2;

  // A cycle among live vertices yields infinitely many return paths.
  enum Color : char { white, grey, black };
  std::vector<Color> color(n, white);
  std::vector<int> count(n, 0);
  bool cyclic = false;
  auto saturate = [](std::uint64_t x) { return x >= 2 ? 2 : static_cast<int>(x); };
  std::function<void(VertexId)> visit = [&](VertexId u) {
    color[u.value] = grey;
    std::uint64_t total = 0;
    for (FamilyId f : g.out_families(u)) {
      const auto& fam = g.family(f);
      if (fam.dst == v) {
        total += std::min<std::uint64_t>(fam.mult.count(), 2);
      } else if (live[fam.dst.value]) {
        if (color[fam.dst.value] == grey) {
          cyclic = true;
          continue;
        }
        if (color[fam.dst.value] == white) visit(fam.dst);
        total += std::min<std::uint64_t>(fam.mult.count(), 2) * static_cast<std::uint64_t>(count[fam.dst.value]);
      }
    }
    count[u.value] = saturate(total);
    color[u.value] = black;
  };
  std::uint64_t total = 0;
  for (FamilyId f : g.out_families(v)) {
    const auto& fam = g.family(f);
    if (fam.dst == v) {
      total += std::min<std::uint64_t>(fam.mult.count(), 2);
    } else if (live[fam.dst.value]) {
      if (color[fam.dst.value] == white) visit(fam.dst);
      total += std::min<std::uint64_t>(fam.mult.count(), 2) * static_cast<std::uint64_t>(count[fam.dst.value]);
    }
  }
  if (cyclic) return 2;
  return saturate(total);
}

bool condition_K(const Graph& g) {
  for (VertexId v : g.vertices())
    if (return_path_count(g, v) == 1) return false;
  return true;
}

}  // namespace idealgraph
