#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "idealgraph/error.hpp"
#include "idealgraph/graph.hpp"
#include "idealgraph/graph_io.hpp"
#include "idealgraph/path.hpp"
#include "idealgraph/paths.hpp"
#include "random_graph.hpp"
#include "seed.hpp"

using namespace idealgraph;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an idealgraph::Error");
  return Errc::ill_formed;
}

std::size_t out_count(const Graph& g, VertexId v) {
  std::size_t n = 0;
  for (FamilyId f : g.out_families(v)) n += g.family(f).mult.is_omega() ? 2 : g.family(f).mult.count();
  return n;
}

// Closed walks at v that do not revisit v, counted by length and capped at two.
int brute_return_count(const Graph& g, VertexId v) {
  std::size_t n = g.vertex_count();
  std::vector<int> walks(n, 0);  // walks of the current length from v, avoiding v after the start
  walks[v.value] = 1;
  int found = 0;
  for (std::size_t len = 1; len <= 3 * n && found < 2; ++len) {
    std::vector<int> next(n, 0);
    for (VertexId u : g.vertices()) {
      if (walks[u.value] == 0) continue;
      for (const auto& e : g.out_edges(u, 2)) {
        int& slot = g.range(e) == v ? found : next[g.range(e).value];
        slot = std::min(2, slot + walks[u.value]);
      }
    }
    walks = std::move(next);
  }
  return found;
}

bool brute_condition_L(const Graph& g) {
  for (const auto& c : vertex_simple_cycles(g, g.vertex_count())) {
    bool exit = false;
    for (const auto& e : c.path.edges()) exit = exit || out_count(g, g.source(e)) >= 2;
    if (!exit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build canonicalizes vertex and family order") {
  auto g = Graph::build({"w", "v"}, {{"b", "w", "v"}, {"a", "v", "w", Multiplicity::finite(3)}});
  CHECK(g.vertex_names()[0] == "v");
  CHECK(g.families()[0].name == "a");
  CHECK(g.edge_name(EdgeRef{FamilyId{0}, 2}) == "a[2]");
  CHECK(g.edge_name(EdgeRef{FamilyId{1}, 0}) == "b");
  CHECK(g.find_edge("a[1]") == EdgeRef{FamilyId{0}, 1});
  CHECK_FALSE(g.find_edge("a[3]"));
  CHECK_FALSE(g.contains(EdgeRef{FamilyId{1}, 1}));
}

TEST_CASE("build rejects bad input") {
  CHECK(code_of([] { Graph::build({"v", "v"}, {}); }) == Errc::duplicate_name);
  CHECK(code_of([] { Graph::build({"v"}, {{"a", "v", "u"}}); }) == Errc::dangling_endpoint);
  CHECK(code_of([] { Graph::build({"v"}, {{"a", "v", "v"}, {"a", "v", "v"}}); }) == Errc::duplicate_name);
  CHECK(code_of([] { Graph::build({"v w"}, {}); }) == Errc::invalid_name);
  CHECK(code_of([] { Multiplicity::finite(0); }) == Errc::invalid_multiplicity);
  CHECK(code_of([] { testsupport::example_graph().vertex("y"); }) == Errc::unknown_vertex);
}

TEST_CASE("vertex classification on the example") {
  auto g = testsupport::example_graph();
  CHECK(classify_vertex(g, "v") == VertexKind::infinite_emitter);
  CHECK(classify_vertex(g, "w") == VertexKind::infinite_emitter);
  CHECK(classify_vertex(g, "x") == VertexKind::sink);
  CHECK(g.out_edges(g.vertex("v"), 3).size() == 4);
  auto rose = Graph::build({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
  CHECK(rose.is_regular(rose.vertex("v")));
}

TEST_CASE("json round trip") {
  const char* doc = R"({"vertices":["x","v","w"],"edges":[
      {"name":"g","src":"v","dst":"x","mult":"omega"},
      {"name":"e","src":"v","dst":"w"},
      {"name":"f","src":"w","dst":"v","mult":1},
      {"name":"h","src":"w","dst":"x","mult":"omega"}]})";
  auto g = parse_graph(doc);
  CHECK(g == testsupport::example_graph());
  CHECK(parse_graph(emit_graph(g)) == g);
  CHECK(emit_graph(parse_graph(emit_graph(g))) == emit_graph(g));
}

TEST_CASE("json rejections") {
  CHECK(code_of([] { parse_graph("[1,2"); }) == Errc::malformed_document);
  CHECK(code_of([] { parse_graph(R"({"edges":[]})"); }) == Errc::malformed_document);
  CHECK(code_of([] { parse_graph(R"({"vertices":["v"],"edges":[{"name":"a","src":"v","dst":"u"}]})"); }) ==
        Errc::dangling_endpoint);
  CHECK(code_of([] { parse_graph(R"({"vertices":["v"],"edges":[{"name":"a","src":"v","dst":"v","mult":0}]})"); }) ==
        Errc::invalid_multiplicity);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":["v"],"edges":[{"name":"a","src":"v","dst":"v","mult":"many"}]})");
        }) == Errc::invalid_multiplicity);
}

TEST_CASE("paths compose and order") {
  auto g = testsupport::example_graph();
  EdgeRef e = *g.find_edge("e"), f = *g.find_edge("f"), g0 = *g.find_edge("g[0]");
  auto ef = Path::from_edges(g, {e, f});
  CHECK(ef.source() == g.vertex("v"));
  CHECK(ef.range() == g.vertex("v"));
  CHECK(ef.word(g) == "ef");
  CHECK(ef.dotted(g) == "e.f");
  CHECK(code_of([&] { Path::from_edges(g, {e, e}); }) == Errc::not_composable);
  CHECK(ef.prefix(1) == Path::from_edges(g, {e}));
  CHECK(ef.suffix(1) == Path::from_edges(g, {f}));
  CHECK(ef.prefix(0) == Path::vertex(g, g.vertex("v")));
  CHECK(Path::from_edges(g, {e}).is_prefix_of(ef));
  CHECK(Path::from_edges(g, {g0}) < ef);
  CHECK(Path::vertex(g, g.vertex("x")) < Path::from_edges(g, {e}));
  CHECK(ef.append(g, g0).length() == 3);
}

TEST_CASE("path enumeration on a rose counts 2^n paths of length n") {
  auto rose = Graph::build({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
  PathQuery q;
  q.max_len = 6;
  auto paths = enumerate_paths(rose, q);
  CHECK(paths.size() == 127);
  CHECK(std::is_sorted(paths.begin(), paths.end()));
}

TEST_CASE("cycles and conditions on the example") {
  auto g = testsupport::example_graph();
  auto cycles = vertex_simple_cycles(g, 4);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].path.dotted(g) == "e.f");
  CHECK(condition_L(g));
  CHECK_FALSE(condition_K(g));
  CHECK(return_path_count(g, g.vertex("v")) == 1);
  CHECK(return_path_count(g, g.vertex("x")) == 0);
}

TEST_CASE("two loops at a vertex satisfy condition K") {
  auto g = Graph::build({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
  CHECK(condition_K(g));
  auto loop = Graph::build({"v"}, {{"a", "v", "v"}});
  CHECK_FALSE(condition_L(loop));
  CHECK_FALSE(condition_K(loop));
}

TEST_CASE("property: random graphs round trip through json and agree with brute-force conditions") {
  auto rng = testsupport::make_rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testsupport::random_graph(rng);
    CAPTURE(emit_graph(g));
    CHECK(parse_graph(emit_graph(g)) == g);
    for (VertexId v : g.vertices()) CHECK(return_path_count(g, v) == brute_return_count(g, v));
    CHECK(condition_L(g) == brute_condition_L(g));

    PathQuery q;
    q.max_len = 3;
    auto paths = enumerate_paths(g, q);
    CHECK(std::is_sorted(paths.begin(), paths.end()));
    CHECK(std::adjacent_find(paths.begin(), paths.end()) == paths.end());
    PathStream stream(g, q);
    std::size_t streamed = 0;
    while (stream.next()) ++streamed;
    CHECK(streamed == paths.size());

    for (const auto& c : vertex_simple_cycles(g, g.vertex_count())) {
      std::set<VertexId> sources;
      for (const auto& e : c.path.edges()) sources.insert(g.source(e));
      CHECK(sources.size() == c.path.length());
      CHECK(c.path.source() == c.path.range());
      CHECK(canonical_rotation(g, c.path) == c.path);
    }
  }
}
