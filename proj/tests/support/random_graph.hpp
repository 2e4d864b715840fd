#pragma once

#include <random>
#include <string>
#include <vector>

#include "idealgraph/graph.hpp"

namespace testsupport {

struct RandomGraphOptions {
  std::size_t max_vertices = 6;
  std::size_t max_families = 8;
  bool allow_omega = true;
  std::size_t max_multiplicity = 2;
};

// Vertices v0.., families a.. with random endpoints and multiplicities.
inline idealgraph::Graph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt = {}) {
  using namespace idealgraph;
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::size_t n = pick(1, opt.max_vertices);
  std::size_t m = pick(0, opt.max_families);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<FamilySpec> families;
  for (std::size_t i = 0; i < m; ++i) {
    FamilySpec f;
    f.name = std::string(1, static_cast<char>('a' + i));
    f.src = vertices[pick(0, n - 1)];
    f.dst = vertices[pick(0, n - 1)];
    if (opt.allow_omega && pick(0, 4) == 0)
      f.mult = Multiplicity::omega();
    else
      f.mult = Multiplicity::finite(pick(1, opt.max_multiplicity));
    families.push_back(std::move(f));
  }
  return Graph::build(std::move(vertices), std::move(families));
}

}  // namespace testsupport
