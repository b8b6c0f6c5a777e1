#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exlab/graph.hpp"

namespace exlab {

/// All maximal cliques (Bron-Kerbosch with Tomita pivoting). Isolated
/// vertices come out as singleton cliques. Output is sorted
/// lexicographically.
std::vector<VertexSet> maximal_cliques(const Graph& graph);

/// Every clique of exactly `size` vertices, lexicographically sorted.
std::vector<VertexSet> cliques_of_size(const Graph& graph, std::size_t size);

/// A maximum clique, found by branch and bound with a greedy colouring
/// bound. Returns the empty set only for the empty graph.
VertexSet maximum_clique(const Graph& graph);

/// A maximum independent set (maximum clique of the complement).
VertexSet maximum_independent_set(const Graph& graph);

}  // namespace exlab
