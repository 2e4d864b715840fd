#include <benchmark/benchmark.h>

#include <random>

#include "idealgraph/ideal_lattice.hpp"
#include "idealgraph/ideal_ops.hpp"
#include "idealgraph/iso_check.hpp"
#include "idealgraph/lpa.hpp"

using namespace idealgraph;

namespace {

Graph example() {
  return Graph::build({"v", "w", "x"}, {{"e", "v", "w", Multiplicity::finite(1)},
                                        {"f", "w", "v", Multiplicity::finite(1)},
                                        {"g", "v", "x", Multiplicity::omega()},
                                        {"h", "w", "x", Multiplicity::omega()}});
}

Graph rose(std::size_t petals) {
  std::vector<FamilySpec> fams;
  for (std::size_t i = 0; i < petals; ++i) fams.push_back({std::string(1, char('a' + i)), "v", "v"});
  return Graph::build({"v"}, fams);
}

// n vertices on a cycle, each with a chord two steps ahead.
Graph chorded_cycle(std::size_t n) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<FamilySpec> fams;
  for (std::size_t i = 0; i < n; ++i) {
    fams.push_back({"c" + std::to_string(i), vs[i], vs[(i + 1) % n]});
    fams.push_back({"d" + std::to_string(i), vs[i], vs[(i + 2) % n]});
  }
  return Graph::build(vs, fams);
}

void BM_NormalFormRose(benchmark::State& state) {
  auto alg = LeavittAlgebra::create(rose(3));
  std::string text = "a.b.c.c!.b!.a! + b.b.a!.a! - 2 * c.c.c!";
  for (std::size_t i = 1; i < static_cast<std::size_t>(state.range(0)); ++i) text = "a." + text + ".a!";
  auto raw = alg->parse_raw(text);
  for (auto _ : state) benchmark::DoNotOptimize(alg->normal_form(raw));
}
BENCHMARK(BM_NormalFormRose)->DenseRange(1, 4);

void BM_MultiplyRose(benchmark::State& state) {
  auto alg = LeavittAlgebra::create(rose(2));
  auto x = alg->parse("a.b.a! + b.b.a!.b! - a.a.a!");
  auto y = alg->parse("b.a.b!.b! + a.b!.a! + v");
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}
BENCHMARK(BM_MultiplyRose);

void BM_AdmissiblePairs(benchmark::State& state) {
  auto g = chorded_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible_pairs(g));
}
BENCHMARK(BM_AdmissiblePairs)->DenseRange(4, 12, 4);

void BM_IdealWindow(benchmark::State& state) {
  auto g = example();
  auto alg = LeavittAlgebra::create(g);
  AdmissiblePair pair{VertexSet::of(g, {"x"}), VertexSet::of(g, {"v", "w"})};
  for (auto _ : state) benchmark::DoNotOptimize(IdealWindow(alg, pair, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_IdealWindow)->DenseRange(2, 5);

void BM_VerifyExample(benchmark::State& state) {
  auto g = example();
  auto alg = LeavittAlgebra::create(g);
  AdmissiblePair pair{VertexSet::of(g, {"x"}), VertexSet::of(g, {"v", "w"})};
  auto trunc = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto fam = build_family(alg, pair, trunc);
    benchmark::DoNotOptimize(verify_leavitt_relations(fam));
    benchmark::DoNotOptimize(verify_surjectivity_window(fam, trunc));
  }
}
BENCHMARK(BM_VerifyExample)->DenseRange(2, 5);

}  // namespace
BENCHMARK_MAIN();
