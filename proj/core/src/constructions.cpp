#include "idealgraph/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "idealgraph/error.hpp"
#include "idealgraph/graph_io.hpp"
#include "json.hpp"

namespace idealgraph {

std::string_view to_string(PathSetKind kind) noexcept {
  switch (kind) {
    case PathSetKind::f1: return "F1";
    case PathSetKind::f2: return "F2";
    case PathSetKind::old: return "F_old";
    case PathSetKind::old_tilde: return "F_old_tilde";
  }
  return "?";
}

std::string_view to_string(VertexOriginKind kind) noexcept {
  switch (kind) {
    case VertexOriginKind::hereditary: return "H";
    case VertexOriginKind::breaking: return "S";
    case VertexOriginKind::f1_path: return "F1";
    case VertexOriginKind::f2_path: return "F2";
    case VertexOriginKind::old_path: return "F_old";
  }
  return "?";
}

std::string_view to_string(EdgeOriginKind kind) noexcept {
  switch (kind) {
    case EdgeOriginKind::graph_edge: return "E";
    case EdgeOriginKind::bar_f1: return "bar_F1";
    case EdgeOriginKind::bar_f2: return "bar_F2";
    case EdgeOriginKind::bar_old: return "bar_F_old";
  }
  return "?";
}

bool PathSet::contains(const Path& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

bool in_f1(const Graph& g, const AdmissiblePair& pair, const Path& p) {
  if (p.is_vertex()) return false;
  auto last = p.last_edge();
  VertexId src = g.source(last);
  return pair.hereditary.contains(g.range(last)) && !pair.hereditary.contains(src) &&
         !pair.breaking.contains(src);
}

bool in_f2(const Graph&, const AdmissiblePair& pair, const Path& p) {
  return !p.is_vertex() && pair.breaking.contains(p.range());
}

bool in_old_tilde(const Graph&, const AdmissiblePair& pair, const Path& p) {
  if (p.is_vertex()) return false;
  auto in_hs = [&](VertexId v) { return pair.hereditary.contains(v) || pair.breaking.contains(v); };
  if (pair.hereditary.contains(p.source()) || !in_hs(p.range())) return false;
  auto verts = p.vertices();
  for (std::size_t i = 1; i + 1 < verts.size(); ++i)
    if (in_hs(verts[i])) return false;
  return true;
}

bool in_old(const Graph& g, const AdmissiblePair& pair, const Path& p) {
  if (!in_old_tilde(g, pair, p)) return false;
  return !(p.length() == 1 && pair.breaking.contains(p.source()) &&
           pair.hereditary.contains(p.range()));
}

namespace {

// Paths e_1...e_n (n >= 1) with s(e_1) in `start`, r(e_i) in `interior` for
// i < n and e_n satisfying `final_edge`. The set is infinite exactly when an
// omega family can be used, or when a cycle of interior vertices lies on some
// member.
struct PathShape {
  std::function<bool(VertexId)> start;
  std::function<bool(VertexId)> interior;
  std::function<bool(const EdgeFamily&)> final_edge;
};

bool shape_is_infinite(const Graph& g, const PathShape& shape) {
  const std::size_t n = g.vertex_count();
  // Vertices where the next edge of a member can start.
  std::vector<bool> forward(n, false);
  std::vector<VertexId> work;
  for (VertexId v : g.vertices())
    if (shape.start(v)) {
      forward[v.value] = true;
      work.push_back(v);
    }
  while (!work.empty()) {
    VertexId u = work.back();
    work.pop_back();
    for (FamilyId f : g.out_families(u)) {
      VertexId z = g.family(f).dst;
      if (shape.interior(z) && !forward[z.value]) {
        forward[z.value] = true;
        work.push_back(z);
      }
    }
  }
  // Vertices from which a member can still be completed.
  std::vector<bool> back(n, false);
  for (const auto& fam : g.families())
    if (shape.final_edge(fam) && !back[fam.src.value]) {
      back[fam.src.value] = true;
      work.push_back(fam.src);
    }
  while (!work.empty()) {
    VertexId z = work.back();
    work.pop_back();
    if (!shape.interior(z)) continue;
    for (FamilyId f : g.in_families(z)) {
      VertexId u = g.family(f).src;
      if (!back[u.value]) {
        back[u.value] = true;
        work.push_back(u);
      }
    }
  }
  auto live = [&](VertexId v) { return forward[v.value] && back[v.value]; };

  for (const auto& fam : g.families()) {
    if (!fam.mult.is_omega() || !forward[fam.src.value]) continue;
    if (shape.final_edge(fam)) return true;
    if (shape.interior(fam.dst) && live(fam.dst)) return true;
  }

  // Cycle detection on live interior vertices.
  enum Color : char { white, grey, black };
  std::vector<Color> color(n, white);
  std::function<bool(VertexId)> dfs = [&](VertexId u) {
    color[u.value] = grey;
    for (FamilyId f : g.out_families(u)) {
      VertexId z = g.family(f).dst;
      if (!shape.interior(z) || !live(z)) continue;
      if (color[z.value] == grey) return true;
      if (color[z.value] == white && dfs(z)) return true;
    }
    color[u.value] = black;
    return false;
  };
  for (VertexId v : g.vertices())
    if (shape.interior(v) && live(v) && color[v.value] == white && dfs(v)) return true;
  return false;
}

PathSet collect(const Graph& g, PathSetKind kind, std::size_t max_len, std::uint64_t omega_width,
                bool infinite, std::function<bool(const Path&)> member) {
  PathSet set;
  set.kind = kind;
  set.max_len = max_len;
  set.omega_width = omega_width;
  set.is_infinite = infinite;
  // A finite set of this shape has no member longer than the vertex count.
  std::size_t horizon = infinite ? max_len : std::max(max_len, g.vertex_count());
  PathQuery q;
  q.max_len = horizon;
  q.omega_width = omega_width;
  q.until = member;
  for (auto& p : enumerate_paths(g, q)) {
    if (p.length() <= max_len)
      set.members.push_back(std::move(p));
    else
      set.truncated = true;
  }
  if (infinite) set.truncated = true;
  return set;
}

bool in_hs(const AdmissiblePair& pair, VertexId v) {
  return pair.hereditary.contains(v) || pair.breaking.contains(v);
}

}  // namespace

PathSet f1_set(const Graph& g, const AdmissiblePair& pair, std::size_t max_len, std::uint64_t omega_width) {
  validate_admissible(g, pair);
  PathShape shape{[](VertexId) { return true; }, [](VertexId) { return true; },
                  [&](const EdgeFamily& f) {
                    return pair.hereditary.contains(f.dst) && !in_hs(pair, f.src);
                  }};
  return collect(g, PathSetKind::f1, max_len, omega_width, shape_is_infinite(g, shape),
                 [&](const Path& p) { return in_f1(g, pair, p); });
}

PathSet f2_set(const Graph& g, const AdmissiblePair& pair, std::size_t max_len, std::uint64_t omega_width) {
  validate_admissible(g, pair);
  PathShape shape{[](VertexId) { return true; }, [](VertexId) { return true; },
                  [&](const EdgeFamily& f) { return pair.breaking.contains(f.dst); }};
  return collect(g, PathSetKind::f2, max_len, omega_width, shape_is_infinite(g, shape),
                 [&](const Path& p) { return in_f2(g, pair, p); });
}

PathSet old_tilde_set(const Graph& g, const AdmissiblePair& pair, std::size_t max_len,
                      std::uint64_t omega_width) {
  validate_admissible(g, pair);
  PathShape shape{[&](VertexId v) { return !pair.hereditary.contains(v); },
                  [&](VertexId v) { return !in_hs(pair, v); },
                  [&](const EdgeFamily& f) { return in_hs(pair, f.dst); }};
  return collect(g, PathSetKind::old_tilde, max_len, omega_width, shape_is_infinite(g, shape),
                 [&](const Path& p) { return in_old_tilde(g, pair, p); });
}

PathSet old_set(const Graph& g, const AdmissiblePair& pair, std::size_t max_len, std::uint64_t omega_width) {
  validate_admissible(g, pair);
  // Edges from S into H only ever occur as length-one members, which are removed.
  PathShape shape{[&](VertexId v) { return !pair.hereditary.contains(v); },
                  [&](VertexId v) { return !in_hs(pair, v); },
                  [&](const EdgeFamily& f) {
                    return in_hs(pair, f.dst) &&
                           !(pair.breaking.contains(f.src) && pair.hereditary.contains(f.dst));
                  }};
  return collect(g, PathSetKind::old, max_len, omega_width, shape_is_infinite(g, shape),
                 [&](const Path& p) { return in_old(g, pair, p); });
}

std::optional<VertexId> ConstructedGraph::vertex_for_original(VertexId v) const {
  auto it = original_vertices.find(v);
  if (it == original_vertices.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> ConstructedGraph::vertex_for_path(const Path& p) const {
  auto it = path_vertices.find(p);
  if (it == path_vertices.end()) return std::nullopt;
  return it->second;
}

std::optional<FamilyId> ConstructedGraph::bar_family_for_path(const Path& p) const {
  auto it = bar_families.find(p);
  if (it == bar_families.end()) return std::nullopt;
  return it->second;
}

EdgeRef ConstructedGraph::to_original(EdgeRef e) const {
  const auto& origin = edge_origin.at(e.family.value);
  if (origin.kind != EdgeOriginKind::graph_edge)
    throw Error(Errc::unknown_edge, "edge '" + graph.edge_name(e) + "' is not an edge of the original graph");
  return EdgeRef{origin.original_family, e.index};
}

std::optional<EdgeRef> ConstructedGraph::from_original(EdgeRef e) const {
  auto it = original_families.find(e.family);
  if (it == original_families.end()) return std::nullopt;
  EdgeRef out{it->second, e.index};
  if (!graph.contains(out)) return std::nullopt;
  return out;
}

namespace {

struct PathVertexSpec {
  Path path;
  VertexOriginKind vertex_kind;
  EdgeOriginKind edge_kind;
};

ConstructedGraph assemble(const Graph& g, const AdmissiblePair& pair, const std::vector<PathVertexSpec>& paths,
                          std::vector<PathSet> sets, std::optional<std::size_t> truncated_at,
                          std::uint64_t omega_width) {
  std::vector<std::string> vertex_names;
  std::vector<FamilySpec> families;
  std::set<std::string, std::less<>> used;

  auto claim = [&](const std::string& name, const std::string& what) {
    if (!used.insert(name).second)
      throw Error(Errc::name_collision, what + " '" + name + "' clashes with an existing name");
  };

  for (VertexId v : g.vertices()) {
    if (in_hs(pair, v)) {
      vertex_names.push_back(g.name(v));
      claim(g.name(v), "vertex");
    }
  }
  std::vector<FamilyId> kept;
  for (std::uint32_t i = 0; i < g.family_count(); ++i) {
    const auto& f = g.families()[i];
    bool from_h = pair.hereditary.contains(f.src);
    bool s_to_h = pair.breaking.contains(f.src) && pair.hereditary.contains(f.dst);
    if (!from_h && !s_to_h) continue;
    families.push_back(FamilySpec{f.name, g.name(f.src), g.name(f.dst), f.mult});
    claim(f.name, "edge");
    kept.push_back(FamilyId{i});
  }
  for (const auto& spec : paths) {
    std::string word = spec.path.word(g);
    claim(word, "path vertex");
    std::string bar = "bar(" + word + ")";
    claim(bar, "barred edge");
    vertex_names.push_back(word);
    families.push_back(FamilySpec{bar, word, g.name(spec.path.range()), Multiplicity::finite(1)});
  }

  ConstructedGraph out;
  out.graph = Graph::build(std::move(vertex_names), std::move(families));
  out.truncated_at = truncated_at;
  out.omega_width = omega_width;
  out.path_sets = std::move(sets);

  std::vector<std::optional<VertexOrigin>> vorigin(out.graph.vertex_count());
  std::vector<std::optional<EdgeOrigin>> eorigin(out.graph.family_count());
  for (VertexId v : g.vertices()) {
    if (!in_hs(pair, v)) continue;
    VertexId nv = out.graph.vertex(g.name(v));
    auto kind = pair.hereditary.contains(v) ? VertexOriginKind::hereditary : VertexOriginKind::breaking;
    vorigin[nv.value] = VertexOrigin{kind, Path::vertex(g, v)};
    out.original_vertices.emplace(v, nv);
  }
  for (FamilyId f : kept) {
    FamilyId nf = *out.graph.find_family(g.family(f).name);
    eorigin[nf.value] = EdgeOrigin{EdgeOriginKind::graph_edge, f, std::nullopt};
    out.original_families.emplace(f, nf);
  }
  for (const auto& spec : paths) {
    std::string word = spec.path.word(g);
    VertexId nv = out.graph.vertex(word);
    FamilyId nf = *out.graph.find_family("bar(" + word + ")");
    vorigin[nv.value] = VertexOrigin{spec.vertex_kind, spec.path};
    eorigin[nf.value] = EdgeOrigin{spec.edge_kind, FamilyId{}, spec.path};
    out.path_vertices.emplace(spec.path, nv);
    out.bar_families.emplace(spec.path, nf);
  }
  for (auto& o : vorigin) out.vertex_origin.push_back(std::move(*o));
  for (auto& o : eorigin) out.edge_origin.push_back(std::move(*o));
  return out;
}

}  // namespace

ConstructedGraph build_bar_graph(const Graph& g, const AdmissiblePair& pair, std::size_t max_len,
                                 std::uint64_t omega_width) {
  validate_admissible(g, pair);
  if (max_len < 1) throw Error(Errc::ill_formed, "max_len must be at least 1");
  auto f1 = f1_set(g, pair, max_len, omega_width);
  auto f2 = f2_set(g, pair, max_len, omega_width);
  for (const auto& p : f1.members)
    if (f2.contains(p)) throw Error(Errc::ill_formed, "F1 and F2 intersect");

  std::vector<PathVertexSpec> paths;
  for (const auto& p : f1.members)
    paths.push_back(PathVertexSpec{p, VertexOriginKind::f1_path, EdgeOriginKind::bar_f1});
  for (const auto& p : f2.members)
    paths.push_back(PathVertexSpec{p, VertexOriginKind::f2_path, EdgeOriginKind::bar_f2});

  std::optional<std::size_t> truncated;
  if (f1.truncated || f2.truncated) truncated = max_len;
  std::vector<PathSet> sets;
  sets.push_back(std::move(f1));
  sets.push_back(std::move(f2));
  return assemble(g, pair, paths, std::move(sets), truncated, omega_width);
}

ConstructedGraph build_old_graph(const Graph& g, const AdmissiblePair& pair, std::optional<std::size_t> max_len,
                                 std::uint64_t omega_width) {
  validate_admissible(g, pair);
  std::size_t limit = max_len.value_or(g.vertex_count());
  auto tilde = old_tilde_set(g, pair, limit, omega_width);
  auto set = old_set(g, pair, limit, omega_width);
  if (!max_len && set.is_infinite)
    throw Error(Errc::infinite_path_set, "old path set is infinite; supply max_len");

  std::vector<PathVertexSpec> paths;
  for (const auto& p : set.members)
    paths.push_back(PathVertexSpec{p, VertexOriginKind::old_path, EdgeOriginKind::bar_old});

  std::optional<std::size_t> truncated;
  if (set.truncated) truncated = limit;
  std::vector<PathSet> sets;
  sets.push_back(std::move(tilde));
  sets.push_back(std::move(set));
  auto out = assemble(g, pair, paths, std::move(sets), truncated, omega_width);
  if (pair.hereditary.empty())
    out.notes.push_back("old construction is stated for nonempty H; built with H empty anyway");
  return out;
}

CycleCorrespondence cycle_correspondence_check(const Graph& g, const ConstructedGraph& built) {
  CycleCorrespondence out;
  auto cycles = vertex_simple_cycles(built.graph, built.graph.vertex_count());
  out.cycles = cycles.size();
  std::set<Path> images;
  for (const auto& c : cycles) {
    std::vector<EdgeRef> mapped;
    for (const auto& e : c.path.edges()) {
      if (built.edge_origin[e.family.value].kind != EdgeOriginKind::graph_edge) {
        out.holds = false;
        out.detail = "cycle " + c.path.dotted(built.graph) + " uses a constructed edge";
        return out;
      }
      mapped.push_back(built.to_original(e));
    }
    Path original = Path::from_edges(g, std::move(mapped));
    if (!images.insert(canonical_rotation(g, original)).second) {
      out.holds = false;
      out.detail = "two cycles map to " + original.dotted(g);
      return out;
    }
  }
  out.detail = std::to_string(out.cycles) + " cycle(s), all made of original edges";
  return out;
}

std::string emit_constructed(const Graph& original, const ConstructedGraph& built) {
  using nlohmann::json;
  json doc = json::parse(emit_graph(built.graph));
  json vertices = json::object();
  for (VertexId v : built.graph.vertices()) {
    const auto& o = built.vertex_origin[v.value];
    json entry{{"kind", to_string(o.kind)}};
    if (!o.path.is_vertex()) entry["path"] = o.path.dotted(original);
    vertices[built.graph.name(v)] = std::move(entry);
  }
  json edges = json::object();
  for (std::uint32_t i = 0; i < built.graph.family_count(); ++i) {
    const auto& o = built.edge_origin[i];
    json entry{{"kind", to_string(o.kind)}};
    if (o.path) entry["path"] = o.path->dotted(original);
    edges[built.graph.families()[i].name] = std::move(entry);
  }
  json sets = json::array();
  for (const auto& s : built.path_sets) {
    json members = json::array();
    for (const auto& p : s.members) members.push_back(p.word(original));
    sets.push_back(json{{"kind", to_string(s.kind)},
                        {"members", std::move(members)},
                        {"max_len", s.max_len},
                        {"is_infinite", s.is_infinite},
                        {"truncated", s.truncated}});
  }
  doc["origin"] = json{{"vertices", std::move(vertices)},
                       {"edges", std::move(edges)},
                       {"truncated_at", built.truncated_at ? json(*built.truncated_at) : json(nullptr)},
                       {"omega_width", built.omega_width},
                       {"path_sets", std::move(sets)},
                       {"notes", built.notes}};
  return doc.dump(2);
}

}  // namespace idealgraph
