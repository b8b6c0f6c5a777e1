#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace exlab {

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<std::size_t>;
using Bitset = boost::dynamic_bitset<>;

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n_vertices);

  std::size_t n_vertices() const { return adjacency_.size(); }

  /// Adds {u, v}. Self-loops and out-of-range endpoints throw exlab::Error.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u][v]; }
  const Bitset& neighbours(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }
  std::size_t n_edges() const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  Graph complement() const;
  /// True iff every pair in `vertices` is adjacent.
  bool is_clique(const VertexSet& vertices) const;
  bool is_independent(const VertexSet& vertices) const;

  friend bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.adjacency_ == rhs.adjacency_;
  }

 private:
  std::vector<Bitset> adjacency_;
};

VertexSet to_vertex_set(const Bitset& bits);

}  // namespace exlab
