#ifndef DISTSPEC_ISO_HPP
#define DISTSPEC_ISO_HPP

#include "distspec/graph.hpp"

#include <optional>
#include <vector>

namespace distspec {

// Backtracking edge-preserving bijection search, pruned by iterated
// degree / distance-profile partition refinement.  Practical for order up
// to roughly 40; larger inputs are accepted but may be slow.  Any returned
// bijection is verified edge-by-edge first.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

// g isomorphic to its complement?
bool is_self_complementary(const Graph& g);

// Automorphism with the given vertex image pinned, or nullopt.
std::optional<std::vector<int>> automorphism_mapping(const Graph& g, int from, int to);

// Orbit of vertex 0 is the whole vertex set (sufficient by group action).
bool is_vertex_transitive(const Graph& g);

} // namespace distspec

#endif
