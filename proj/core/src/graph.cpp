#include "idealgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "idealgraph/error.hpp"

namespace idealgraph {

Multiplicity Multiplicity::finite(std::uint64_t count) {
  if (count == 0) throw Error(Errc::invalid_multiplicity, "multiplicity must be at least 1");
  return Multiplicity(count, false);
}

std::string_view to_string(VertexKind kind) noexcept {
  switch (kind) {
    case VertexKind::regular: return "regular";
    case VertexKind::sink: return "sink";
    case VertexKind::infinite_emitter: return "infinite_emitter";
  }
  return "?";
}

namespace {

bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_word_char(char c) {
  return is_ident_char(c) || c == '(' || c == ')' || c == '[' || c == ']';
}

}  // namespace

bool is_valid_vertex_name(std::string_view name) noexcept {
  return !name.empty() && std::all_of(name.begin(), name.end(), is_word_char);
}

bool is_valid_family_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  if (is_ident_start(name.front()) && std::all_of(name.begin(), name.end(), is_ident_char))
    return true;
  // Constructed graphs name their new edges bar(word).
  constexpr std::string_view prefix = "bar(";
  if (name.size() > prefix.size() + 1 && name.starts_with(prefix) && name.back() == ')') {
    auto inner = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    return std::all_of(inner.begin(), inner.end(), is_word_char);
  }
  return false;
}

Graph Graph::build(std::vector<std::string> vertices, std::vector<FamilySpec> families) {
  std::set<std::string, std::less<>> seen;
  for (const auto& v : vertices) {
    if (!is_valid_vertex_name(v)) throw Error(Errc::invalid_name, "vertex name '" + v + "'");
    if (!seen.insert(v).second) throw Error(Errc::duplicate_name, "vertex '" + v + "'");
  }
  for (const auto& f : families) {
    if (!is_valid_family_name(f.name)) throw Error(Errc::invalid_name, "edge name '" + f.name + "'");
    if (!seen.insert(f.name).second) throw Error(Errc::duplicate_name, "edge '" + f.name + "'");
  }

  Graph g;
  g.vertex_names_ = std::move(vertices);
  std::sort(g.vertex_names_.begin(), g.vertex_names_.end());

  std::sort(families.begin(), families.end(),
            [](const FamilySpec& a, const FamilySpec& b) { return a.name < b.name; });
  g.families_.reserve(families.size());
  for (auto& f : families) {
    auto src = g.find_vertex(f.src);
    auto dst = g.find_vertex(f.dst);
    if (!src) throw Error(Errc::dangling_endpoint, "edge '" + f.name + "' source '" + f.src + "'");
    if (!dst) throw Error(Errc::dangling_endpoint, "edge '" + f.name + "' range '" + f.dst + "'");
    g.families_.push_back(EdgeFamily{std::move(f.name), *src, *dst, f.mult});
  }

  g.out_.assign(g.vertex_names_.size(), {});
  g.in_.assign(g.vertex_names_.size(), {});
  for (std::uint32_t i = 0; i < g.families_.size(); ++i) {
    g.out_[g.families_[i].src.value].push_back(FamilyId{i});
    g.in_[g.families_[i].dst.value].push_back(FamilyId{i});
  }
  return g;
}

const std::string& Graph::name(VertexId v) const {
  if (v.value >= vertex_names_.size())
    throw Error(Errc::unknown_vertex, "vertex id " + std::to_string(v.value));
  return vertex_names_[v.value];
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - vertex_names_.begin())};
}

VertexId Graph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(Errc::unknown_vertex, "'" + std::string(name) + "'");
  return *v;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out(vertex_names_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = VertexId{i};
  return out;
}

const EdgeFamily& Graph::family(FamilyId id) const {
  if (id.value >= families_.size())
    throw Error(Errc::unknown_edge, "family id " + std::to_string(id.value));
  return families_[id.value];
}

std::optional<FamilyId> Graph::find_family(std::string_view name) const {
  auto it = std::lower_bound(families_.begin(), families_.end(), name,
                             [](const EdgeFamily& f, std::string_view n) { return f.name < n; });
  if (it == families_.end() || it->name != name) return std::nullopt;
  return FamilyId{static_cast<std::uint32_t>(it - families_.begin())};
}

std::span<const FamilyId> Graph::out_families(VertexId v) const {
  name(v);
  return out_[v.value];
}

std::span<const FamilyId> Graph::in_families(VertexId v) const {
  name(v);
  return in_[v.value];
}

bool Graph::contains(EdgeRef e) const noexcept {
  return e.family.value < families_.size() && families_[e.family.value].mult.admits(e.index);
}

VertexId Graph::source(EdgeRef e) const {
  if (!contains(e)) throw Error(Errc::unknown_edge, "edge reference out of range");
  return families_[e.family.value].src;
}

VertexId Graph::range(EdgeRef e) const {
  if (!contains(e)) throw Error(Errc::unknown_edge, "edge reference out of range");
  return families_[e.family.value].dst;
}

std::string Graph::edge_name(EdgeRef e) const {
  const auto& f = family(e.family);
  if (!f.mult.is_omega() && f.mult.count() == 1) return f.name;
  return f.name + "[" + std::to_string(e.index) + "]";
}

std::optional<EdgeRef> Graph::find_edge(std::string_view name) const {
  if (auto fam = find_family(name)) {
    const auto& f = families_[fam->value];
    if (!f.mult.is_omega() && f.mult.count() == 1) return EdgeRef{*fam, 0};
    return std::nullopt;
  }
  if (name.empty() || name.back() != ']') return std::nullopt;
  auto open = name.rfind('[');
  if (open == std::string_view::npos || open == 0) return std::nullopt;
  auto fam = find_family(name.substr(0, open));
  if (!fam) return std::nullopt;
  const auto& f = families_[fam->value];
  if (!f.mult.is_omega() && f.mult.count() == 1) return std::nullopt;
  auto digits = name.substr(open + 1, name.size() - open - 2);
  std::uint64_t index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    return std::nullopt;
  EdgeRef e{*fam, index};
  if (!contains(e)) return std::nullopt;
  return e;
}

VertexKind Graph::classify(VertexId v) const {
  std::uint64_t total = 0;
  for (FamilyId id : out_families(v)) {
    const auto& m = families_[id.value].mult;
    if (m.is_omega()) return VertexKind::infinite_emitter;
    total += m.count();
  }
  return total == 0 ? VertexKind::sink : VertexKind::regular;
}

std::vector<EdgeRef> Graph::out_edges(VertexId v, std::uint64_t omega_width) const {
  std::vector<EdgeRef> out;
  for (FamilyId id : out_families(v)) {
    const auto& m = families_[id.value].mult;
    std::uint64_t n = m.is_omega() ? omega_width : m.count();
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(EdgeRef{id, i});
  }
  return out;
}

std::vector<EdgeRef> Graph::edges(std::uint64_t omega_width) const {
  std::vector<EdgeRef> out;
  for (std::uint32_t id = 0; id < families_.size(); ++id) {
    const auto& m = families_[id].mult;
    std::uint64_t n = m.is_omega() ? omega_width : m.count();
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(EdgeRef{FamilyId{id}, i});
  }
  return out;
}

VertexKind classify_vertex(const Graph& g, std::string_view vertex) {
  return g.classify(g.vertex(vertex));
}

}  // namespace idealgraph
