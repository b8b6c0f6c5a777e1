#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exlab/graph.hpp"

namespace exlab {

/// Abstract simplicial complex of exclusive events, stored by its facets.
///
/// The exclusive sets are the subsets of size >= 2 of some facet.
/// Singletons are simplices but never exclusive sets. A complex built
/// through from_facets() is canonical: each facet is sorted, the facet list
/// is sorted lexicographically, facets form an antichain and every vertex
/// is covered (isolated vertices appear as singleton facets).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Canonicalising constructor. Drops empty and non-maximal facets and
  /// adds singleton facets for uncovered vertices. Throws exlab::Error on
  /// an out-of-range vertex, a label count different from n_vertices, or
  /// a duplicate label.
  static SimplicialComplex from_facets(std::size_t n_vertices, std::vector<VertexSet> facets,
                                       std::vector<std::string> labels = {});

  /// Stores the facets as given (each facet sorted, list sorted) without
  /// enforcing invariants. Used for loading files that must then be checked
  /// with validate().
  static SimplicialComplex raw(std::size_t n_vertices, std::vector<VertexSet> facets,
                               std::vector<std::string> labels = {});

  std::size_t n_vertices() const { return n_vertices_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  /// Label of vertex v, or its index as text when unlabelled.
  std::string label(std::size_t v) const;
  std::optional<std::size_t> find_label(const std::string& label) const;

  /// True iff `vertices` (any size) lies inside some facet.
  bool contains_simplex(const VertexSet& vertices) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t n_vertices_ = 0;
  std::vector<VertexSet> facets_;
  std::vector<std::string> labels_;
};

/// Sorts and deduplicates `vertices`.
VertexSet normalize(VertexSet vertices);

/// One human-readable entry per violated invariant; empty iff `complex`
/// is well formed.
std::vector<std::string> validate(const SimplicialComplex& complex);

/// True iff |S| >= 2 and S lies in some facet. Throws on out-of-range vertices.
bool is_exclusive_set(const SimplicialComplex& complex, const VertexSet& vertices);

/// Graph of exclusive pairs.
Graph skeleton(const SimplicialComplex& complex);

/// Complex whose simplices are exactly the cliques of the skeleton.
SimplicialComplex clique_complex(const SimplicialComplex& complex);

/// Complex of a graph's cliques, carrying the given labels.
SimplicialComplex clique_complex(const Graph& graph, std::vector<std::string> labels = {});

/// Joint complex of two independent experiments. Vertex (i, j) has index
/// i * b.n_vertices() + j. A joint set is exclusive when its first
/// coordinates are pairwise distinct and exclusive in `a`, or its second
/// coordinates are pairwise distinct and exclusive in `b`.
SimplicialComplex or_product(const SimplicialComplex& a, const SimplicialComplex& b);

/// k-fold OR product of `complex` with itself (k >= 1).
SimplicialComplex or_power(const SimplicialComplex& complex, std::size_t copies);

/// Restriction to `vertices`, reindexed 0..|S|-1 in increasing order.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const VertexSet& vertices);

/// `count` pairwise-disjoint cliques of `size` vertices in the skeleton,
/// or nullopt when an exhaustive search proves there are none. When
/// count * size == n_vertices the result is a partition of the vertices.
std::optional<std::vector<VertexSet>> find_disjoint_cliques(const SimplicialComplex& complex,
                                                            std::size_t size, std::size_t count);

}  // namespace exlab
