#include "exlab/cliques.hpp"

#include <algorithm>

#include "exlab/error.hpp"

namespace exlab {

Graph::Graph(std::size_t n_vertices) : adjacency_(n_vertices, Bitset(n_vertices)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_vertices() || v >= n_vertices()) throw Error("edge endpoint out of range");
  if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

std::size_t Graph::n_edges() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_vertices(); ++u) {
    for (auto v = adjacency_[u].find_next(u); v != Bitset::npos; v = adjacency_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph out(n_vertices());
  for (std::size_t v = 0; v < n_vertices(); ++v) {
    out.adjacency_[v] = ~adjacency_[v];
    out.adjacency_[v].reset(v);
  }
  return out;
}

bool Graph::is_clique(const VertexSet& vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (!adjacent(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

bool Graph::is_independent(const VertexSet& vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

VertexSet to_vertex_set(const Bitset& bits) {
  VertexSet out;
  out.reserve(bits.count());
  for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v)) out.push_back(v);
  return out;
}

namespace {

class BronKerbosch {
 public:
  explicit BronKerbosch(const Graph& graph) : graph_(graph) {}

  std::vector<VertexSet> run() {
    const std::size_t n = graph_.n_vertices();
    Bitset candidates(n);
    candidates.set();
    Bitset current(n);
    expand(current, candidates, Bitset(n));
    std::sort(cliques_.begin(), cliques_.end());
    return std::move(cliques_);
  }

 private:
  void expand(Bitset& current, Bitset candidates, Bitset excluded) {
    if (candidates.none()) {
      if (excluded.none()) cliques_.push_back(to_vertex_set(current));
      return;
    }
    // Tomita pivot: the vertex of P u X covering most of P.
    const Bitset pool = candidates | excluded;
    std::size_t pivot = Bitset::npos;
    std::size_t best = 0;
    for (auto u = pool.find_first(); u != Bitset::npos; u = pool.find_next(u)) {
      const std::size_t covered = (candidates & graph_.neighbours(u)).count();
      if (pivot == Bitset::npos || covered > best) {
        best = covered;
        pivot = u;
      }
    }
    const Bitset branch = candidates - graph_.neighbours(pivot);
    for (auto v = branch.find_first(); v != Bitset::npos; v = branch.find_next(v)) {
      current.set(v);
      expand(current, candidates & graph_.neighbours(v), excluded & graph_.neighbours(v));
      current.reset(v);
      candidates.reset(v);
      excluded.set(v);
    }
  }

  const Graph& graph_;
  std::vector<VertexSet> cliques_;
};

void extend_cliques(const Graph& graph, std::size_t size, VertexSet& current,
                    const Bitset& candidates, std::vector<VertexSet>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  if (current.size() + candidates.count() < size) return;
  for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
    Bitset next = candidates & graph.neighbours(v);
    // Only extend with larger indices so each clique is produced once, in order.
    for (auto u = next.find_first(); u != Bitset::npos && u <= v; u = next.find_next(u)) next.reset(u);
    current.push_back(v);
    extend_cliques(graph, size, current, next, out);
    current.pop_back();
  }
}

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& graph) : graph_(graph) {}

  VertexSet run() {
    Bitset all(graph_.n_vertices());
    all.set();
    VertexSet current;
    expand(current, all);
    return best_;
  }

 private:
  // Greedy sequential colouring; colour[i] bounds the clique size that can
  // be built from order[0..i].
  void colour_sort(const Bitset& candidates, VertexSet& order, std::vector<std::size_t>& colour) const {
    Bitset uncoloured = candidates;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      Bitset available = uncoloured;
      while (available.any()) {
        const std::size_t v = available.find_first();
        available.reset(v);
        available -= graph_.neighbours(v);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  void expand(VertexSet& current, Bitset candidates) {
    VertexSet order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      const Bitset next = candidates & graph_.neighbours(v);
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  const Graph& graph_;
  VertexSet best_;
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& graph) {
  if (graph.n_vertices() == 0) return {};
  return BronKerbosch(graph).run();
}

std::vector<VertexSet> cliques_of_size(const Graph& graph, std::size_t size) {
  std::vector<VertexSet> out;
  if (size == 0 || size > graph.n_vertices()) return out;
  Bitset all(graph.n_vertices());
  all.set();
  VertexSet current;
  extend_cliques(graph, size, current, all, out);
  return out;
}

VertexSet maximum_clique(const Graph& graph) {
  if (graph.n_vertices() == 0) return {};
  VertexSet best = MaxCliqueSearch(graph).run();
  std::sort(best.begin(), best.end());
  return best;
}

VertexSet maximum_independent_set(const Graph& graph) { return maximum_clique(graph.complement()); }

}  // namespace exlab
