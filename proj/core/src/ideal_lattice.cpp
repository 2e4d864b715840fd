#include "idealgraph/ideal_lattice.hpp"

#include <algorithm>

#include "idealgraph/error.hpp"

namespace idealgraph {

VertexSet VertexSet::of(const Graph& g, std::initializer_list<std::string_view> names) {
  VertexSet s(g.vertex_count());
  for (auto n : names) s.insert(g.vertex(n));
  return s;
}

VertexSet VertexSet::all(const Graph& g) {
  VertexSet s(g.vertex_count());
  for (auto v : g.vertices()) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i)
    if (mask >> i & 1U) s.bits_[i] = true;
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v.value >= bits_.size()) throw Error(Errc::unknown_vertex, "vertex id outside set universe");
  bits_[v.value] = true;
}

void VertexSet::erase(VertexId v) {
  if (v.value < bits_.size()) bits_[v.value] = false;
}

std::size_t VertexSet::size() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(VertexId{i});
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::uint32_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(VertexId{i})) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::uint32_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && other.contains(VertexId{i})) return true;
  return false;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string format_set(const Graph& g, const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (auto v : set.members()) {
    if (!first) out += ',';
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

std::string format_pair(const Graph& g, const AdmissiblePair& pair) {
  return "(" + format_set(g, pair.hereditary) + ", " + format_set(g, pair.breaking) + ")";
}

bool is_hereditary(const Graph& g, const VertexSet& set) {
  for (const auto& f : g.families())
    if (set.contains(f.src) && !set.contains(f.dst)) return false;
  return true;
}

namespace {

bool ranges_inside(const Graph& g, VertexId v, const VertexSet& set) {
  for (FamilyId f : g.out_families(v))
    if (!set.contains(g.family(f).dst)) return false;
  return true;
}

}  // namespace

bool is_saturated(const Graph& g, const VertexSet& set) {
  for (VertexId v : g.vertices())
    if (!set.contains(v) && g.is_regular(v) && ranges_inside(g, v, set)) return false;
  return true;
}

VertexSet saturate(const Graph& g, const VertexSet& set) {
  VertexSet out = set;
  if (out.universe() != g.vertex_count()) {
    out = VertexSet(g.vertex_count());
    for (auto v : set.members()) out.insert(v);
  }
  // Forward closure makes the result hereditary even for non-hereditary input.
  std::vector<VertexId> work = out.members();
  while (!work.empty()) {
    VertexId v = work.back();
    work.pop_back();
    for (FamilyId f : g.out_families(v)) {
      VertexId r = g.family(f).dst;
      if (!out.contains(r)) {
        out.insert(r);
        work.push_back(r);
      }
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : g.vertices()) {
      if (!out.contains(v) && g.is_regular(v) && ranges_inside(g, v, out)) {
        out.insert(v);
        changed = true;
      }
    }
  }
  return out;
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& hereditary) {
  VertexSet out(g.vertex_count());
  for (VertexId v : g.vertices()) {
    if (g.classify(v) != VertexKind::infinite_emitter) continue;
    std::uint64_t leaving = 0;
    bool infinite = false;
    for (FamilyId f : g.out_families(v)) {
      const auto& fam = g.family(f);
      if (hereditary.contains(fam.dst)) continue;
      if (fam.mult.is_omega())
        infinite = true;
      else
        leaving += fam.mult.count();
    }
    if (!infinite && leaving > 0) out.insert(v);
  }
  return out;
}

bool is_admissible(const Graph& g, const AdmissiblePair& pair) {
  try {
    validate_admissible(g, pair);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void validate_admissible(const Graph& g, const AdmissiblePair& pair) {
  const auto& h = pair.hereditary;
  const auto& s = pair.breaking;
  if (h.universe() != g.vertex_count() || s.universe() != g.vertex_count())
    throw Error(Errc::non_admissible, "vertex sets belong to a different graph");
  if (!is_hereditary(g, h)) throw Error(Errc::non_admissible, format_set(g, h) + " is not hereditary");
  if (!is_saturated(g, h)) throw Error(Errc::non_admissible, format_set(g, h) + " is not saturated");
  if (s.intersects(h)) throw Error(Errc::non_admissible, "S meets H");
  auto b = breaking_vertices(g, h);
  if (!s.is_subset_of(b))
    throw Error(Errc::non_admissible,
                format_set(g, s) + " is not contained in the breaking vertices " + format_set(g, b));
}

std::vector<VertexSet> saturated_hereditary_subsets(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices || n >= 63)
    throw Error(Errc::bound_exceeded, std::to_string(n) + " vertices exceed the enumeration bound of " +
                                          std::to_string(max_vertices));
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto set = VertexSet::from_mask(n, mask);
    if (is_hereditary(g, set) && is_saturated(g, set)) out.push_back(std::move(set));
  }
  return out;
}

std::vector<AdmissiblePair> enumerate_admissible_pairs(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  std::vector<AdmissiblePair> out;
  for (auto& h : saturated_hereditary_subsets(g, max_vertices)) {
    auto breaking = breaking_vertices(g, h).members();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << breaking.size()); ++mask) {
      VertexSet s(n);
      for (std::size_t i = 0; i < breaking.size(); ++i)
        if (mask >> i & 1U) s.insert(breaking[i]);
      out.push_back(AdmissiblePair{h, std::move(s)});
    }
  }
  return out;
}

}  // namespace idealgraph
