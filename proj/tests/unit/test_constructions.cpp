#include <doctest.h>

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "idealgraph/constructions.hpp"
#include "idealgraph/error.hpp"
#include "idealgraph/graph_io.hpp"
#include "random_graph.hpp"
#include "seed.hpp"

using namespace idealgraph;

namespace {

std::vector<std::string> words(const Graph& g, const PathSet& s) {
  std::vector<std::string> out;
  for (const auto& p : s.members) out.push_back(p.word(g));
  return out;
}

struct Shape {
  std::function<bool(VertexId)> start, interior;
  std::function<bool(const EdgeFamily&)> final_edge;
  // Length-one members are judged separately when set.
  std::function<bool(const EdgeFamily&)> single;
};

// Walk counting: is there a member of length in (|V|, 3|V| + 2], or a member
// through an omega family? Either can be pumped into infinitely many.
bool pumping_oracle(const Graph& g, const Shape& s) {
  std::size_t n = g.vertex_count();
  // reach[v][o]: some admissible prefix ends at v with an interior at v, o = used omega
  std::vector<std::array<bool, 2>> reach(n, {false, false});
  for (const auto& f : g.families()) {
    bool om = f.mult.is_omega();
    bool single_ok = s.single ? s.single(f) : s.final_edge(f);
    if (s.start(f.src) && single_ok && om) return true;
  }
  // prefixes of length 1 ending at an interior vertex
  for (const auto& f : g.families())
    if (s.start(f.src) && s.interior(f.dst)) reach[f.dst.value][f.mult.is_omega()] = true;
  for (std::size_t len = 2; len <= 3 * n + 2; ++len) {
    for (const auto& f : g.families())
      for (int o = 0; o < 2; ++o)
        if (reach[f.src.value][o] && s.final_edge(f) && (o || f.mult.is_omega() || len > n)) return true;
    std::vector<std::array<bool, 2>> next(n, {false, false});
    for (const auto& f : g.families())
      for (int o = 0; o < 2; ++o)
        if (reach[f.src.value][o] && s.interior(f.dst)) next[f.dst.value][o || f.mult.is_omega()] = true;
    reach = std::move(next);
  }
  return false;
}

}  // namespace

TEST_CASE("F1 and F2 of the example truncated at 3") {
  auto g = testsupport::example_graph();
  auto pair = testsupport::example_pair(g);
  auto f1 = f1_set(g, pair, 3);
  auto f2 = f2_set(g, pair, 3);
  CHECK(f1.members.empty());
  CHECK_FALSE(f1.is_infinite);
  CHECK(words(g, f2) == std::vector<std::string>{"e", "f", "ef", "fe", "efe", "fef"});
  CHECK(f2.is_infinite);
  CHECK(f2.truncated);
}

TEST_CASE("bar graph of the example") {
  auto g = testsupport::example_graph();
  auto built = build_bar_graph(g, testsupport::example_pair(g), 3);
  const Graph& b = built.graph;
  CHECK(b.vertex_count() == 9);
  CHECK(built.truncated_at == std::size_t{3});
  for (const char* w : {"e", "f", "ef", "fe", "efe", "fef"}) {
    CAPTURE(w);
    auto fam = b.find_family(std::string("bar(") + w + ")");
    REQUIRE(fam);
    CHECK(b.name(b.family(*fam).src) == w);
    CHECK(b.family(*fam).mult == Multiplicity::finite(1));
  }
  CHECK(b.name(b.family(*b.find_family("bar(ef)")).dst) == "v");
  CHECK(b.name(b.family(*b.find_family("bar(efe)")).dst) == "w");
  // g and h leave S into H and are kept; e and f run inside S and are not.
  CHECK(b.find_family("g"));
  CHECK(b.find_family("h"));
  CHECK_FALSE(b.find_family("e"));
  CHECK(b.family(*b.find_family("g")).mult.is_omega());
  CHECK(cycle_correspondence_check(g, built).holds);

  auto doc = emit_constructed(g, built);
  CHECK(doc.find("\"origin\"") != std::string::npos);
}

TEST_CASE("old graph of the example") {
  auto g = testsupport::example_graph();
  auto built = build_old_graph(g, testsupport::example_pair(g));
  const Graph& b = built.graph;
  std::vector<std::string> names(b.vertex_names().begin(), b.vertex_names().end());
  CHECK(names == std::vector<std::string>{"e", "f", "v", "w", "x"});
  REQUIRE(b.family_count() == 4);
  auto edge = [&](const char* name) { return b.family(*b.find_family(name)); };
  CHECK(b.name(edge("bar(e)").src) == "e");
  CHECK(b.name(edge("bar(e)").dst) == "w");
  CHECK(b.name(edge("bar(f)").src) == "f");
  CHECK(b.name(edge("bar(f)").dst) == "v");
  CHECK(edge("g").mult.is_omega());
  CHECK(edge("h").mult.is_omega());
  CHECK_FALSE(built.truncated_at);
}

TEST_CASE("old graph without a bound needs a finite path set") {
  auto g = Graph::build({"u", "x"}, {{"a", "u", "u"}, {"b", "u", "x"}});
  AdmissiblePair pair{VertexSet::of(g, {"x"}), VertexSet(2)};
  try {
    build_old_graph(g, pair);
    FAIL("accepted an infinite old path set");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::infinite_path_set);
  }
  CHECK(build_old_graph(g, pair, 2).graph.vertex_count() == 3);
}

TEST_CASE("path vertex names may not clash with kept vertices") {
  auto omega = Multiplicity::omega();
  auto g = Graph::build({"cd", "m", "u"},
                        {{"c", "u", "m"}, {"d", "m", "cd"}, {"y", "m", "m", omega}, {"z", "u", "u", omega}});
  AdmissiblePair pair{VertexSet::of(g, {"cd"}), VertexSet(3)};
  try {
    build_bar_graph(g, pair, 2);
    FAIL("no collision reported");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::name_collision);
  }
}

TEST_CASE("property: path sets against predicates and the pumping oracle") {
  auto rng = testsupport::make_rng(3);
  testsupport::RandomGraphOptions opt;
  opt.max_vertices = 5;
  opt.max_families = 6;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testsupport::random_graph(rng, opt);
    CAPTURE(emit_graph(g));
    for (const auto& pair : enumerate_admissible_pairs(g)) {
      const auto& H = pair.hereditary;
      const auto& S = pair.breaking;
      auto hs = [&](VertexId v) { return H.contains(v) || S.contains(v); };
      auto any = [](VertexId) { return true; };
      Shape f1{any, any, [&](const EdgeFamily& f) { return H.contains(f.dst) && !hs(f.src); }, {}};
      Shape f2{any, any, [&](const EdgeFamily& f) { return S.contains(f.dst); }, {}};
      auto not_h = [&](VertexId v) { return !H.contains(v); };
      auto not_hs = [&](VertexId v) { return !hs(v); };
      auto into_hs = [&](const EdgeFamily& f) { return hs(f.dst); };
      Shape tilde{not_h, not_hs, into_hs, {}};
      Shape old{not_h, not_hs, into_hs,
                [&](const EdgeFamily& f) { return hs(f.dst) && !(S.contains(f.src) && H.contains(f.dst)); }};

      struct Case {
        PathSet set;
        const Shape* shape;
        std::function<bool(const Path&)> member;
      };
      std::vector<Case> cases{
          {f1_set(g, pair, 3), &f1, [&](const Path& p) { return in_f1(g, pair, p); }},
          {f2_set(g, pair, 3), &f2, [&](const Path& p) { return in_f2(g, pair, p); }},
          {old_tilde_set(g, pair, 3), &tilde, [&](const Path& p) { return in_old_tilde(g, pair, p); }},
          {old_set(g, pair, 3), &old, [&](const Path& p) { return in_old(g, pair, p); }},
      };
      PathQuery q;
      q.max_len = 3;
      auto all = enumerate_paths(g, q);
      for (const auto& c : cases) {
        CAPTURE(to_string(c.set.kind));
        CAPTURE(format_pair(g, pair));
        CHECK(c.set.is_infinite == pumping_oracle(g, *c.shape));
        std::vector<Path> expected;
        for (const auto& p : all)
          if (c.member(p)) expected.push_back(p);
        CHECK(c.set.members == expected);
        if (c.set.is_infinite) CHECK(c.set.truncated);
      }
      for (const auto& p : cases[0].set.members) CHECK_FALSE(cases[1].set.contains(p));
      for (const auto& p : cases[3].set.members) CHECK(cases[2].set.contains(p));
    }
  }
}

TEST_CASE("property: constructions coincide when S is empty and cycles come from E") {
  auto rng = testsupport::make_rng(4);
  testsupport::RandomGraphOptions opt;
  opt.allow_omega = false;
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testsupport::random_graph(rng, opt);
    CAPTURE(emit_graph(g));
    for (const auto& h : saturated_hereditary_subsets(g)) {
      AdmissiblePair pair{h, VertexSet(g.vertex_count())};
      auto bar = build_bar_graph(g, pair, 3);
      auto old = build_old_graph(g, pair, 3);
      CHECK(bar.graph == old.graph);
      CHECK(cycle_correspondence_check(g, bar).holds);
      auto reparsed = parse_graph(emit_constructed(g, bar));
      CHECK(reparsed == bar.graph);
    }
  }
}
