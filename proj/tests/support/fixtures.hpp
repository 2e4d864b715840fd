#pragma once

#include <vector>

#include "idealgraph/graph.hpp"
#include "idealgraph/ideal_lattice.hpp"

namespace testsupport {

inline idealgraph::Graph example_graph() {
  using namespace idealgraph;
  return Graph::build({"v", "w", "x"}, {{"e", "v", "w", Multiplicity::finite(1)},
                                        {"f", "w", "v", Multiplicity::finite(1)},
                                        {"g", "v", "x", Multiplicity::omega()},
                                        {"h", "w", "x", Multiplicity::omega()}});
}

inline idealgraph::AdmissiblePair example_pair(const idealgraph::Graph& g) {
  return {idealgraph::VertexSet::of(g, {"x"}), idealgraph::VertexSet::of(g, {"v", "w"})};
}

// Small graphs the normal form is checked on against the quotient oracle.
inline std::vector<idealgraph::Graph> oracle_graphs() {
  using namespace idealgraph;
  auto one = Multiplicity::finite(1);
  return {
      Graph::build({"v"}, {{"a", "v", "v", one}}),
      Graph::build({"v"}, {{"a", "v", "v", one}, {"b", "v", "v", one}}),
      Graph::build({"v", "w"}, {{"a", "v", "w", one}, {"b", "w", "v", one}, {"c", "w", "w", one}}),
      example_graph(),
      Graph::build({"u", "v", "w"},
                   {{"p", "u", "v", Multiplicity::finite(2)}, {"q", "v", "w", one}, {"r", "u", "w", one}}),
  };
}

}  // namespace testsupport
