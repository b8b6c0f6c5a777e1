#include "exlab/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "exlab/cliques.hpp"
#include "exlab/error.hpp"

namespace exlab {

namespace {

std::string set_to_string(const VertexSet& vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vertices[i]);
  }
  return out + "}";
}

void check_range(std::size_t n_vertices, const VertexSet& vertices) {
  for (const auto v : vertices) {
    if (v >= n_vertices) {
      throw Error("vertex " + std::to_string(v) + " out of range for complex on " +
                  std::to_string(n_vertices) + " vertices");
    }
  }
}

void check_labels(std::size_t n_vertices, const std::vector<std::string>& labels) {
  if (labels.empty()) return;
  if (labels.size() != n_vertices) {
    throw Error("complex has " + std::to_string(labels.size()) + " labels for " +
                std::to_string(n_vertices) + " vertices");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) throw Error("duplicate label '" + label + "'");
  }
}

// Keeps only the inclusion-maximal sets; input sets must be normalised.
std::vector<VertexSet> antichain_reduce(std::vector<VertexSet> sets, std::size_t n_vertices) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  std::vector<VertexSet> kept;
  std::vector<std::vector<std::size_t>> containing(n_vertices);
  for (auto& candidate : sets) {
    if (candidate.empty()) continue;
    // Any superset must contain the candidate's rarest vertex.
    const std::size_t pivot = *std::min_element(
        candidate.begin(), candidate.end(),
        [&](std::size_t a, std::size_t b) { return containing[a].size() < containing[b].size(); });
    const bool dominated = std::any_of(
        containing[pivot].begin(), containing[pivot].end(), [&](std::size_t index) {
          const VertexSet& other = kept[index];
          return other.size() > candidate.size() &&
                 std::includes(other.begin(), other.end(), candidate.begin(), candidate.end());
        });
    if (dominated) continue;
    for (const auto v : candidate) containing[v].push_back(kept.size());
    kept.push_back(std::move(candidate));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

VertexSet normalize(VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t n_vertices, std::vector<VertexSet> facets,
                                                 std::vector<std::string> labels) {
  check_labels(n_vertices, labels);
  std::vector<bool> covered(n_vertices, false);
  for (auto& facet : facets) {
    facet = normalize(std::move(facet));
    check_range(n_vertices, facet);
    for (const auto v : facet) covered[v] = true;
  }
  for (std::size_t v = 0; v < n_vertices; ++v) {
    if (!covered[v]) facets.push_back({v});
  }
  SimplicialComplex out;
  out.n_vertices_ = n_vertices;
  out.facets_ = antichain_reduce(std::move(facets), n_vertices);
  out.labels_ = std::move(labels);
  return out;
}

SimplicialComplex SimplicialComplex::raw(std::size_t n_vertices, std::vector<VertexSet> facets,
                                         std::vector<std::string> labels) {
  for (auto& facet : facets) std::sort(facet.begin(), facet.end());
  std::sort(facets.begin(), facets.end());
  SimplicialComplex out;
  out.n_vertices_ = n_vertices;
  out.facets_ = std::move(facets);
  out.labels_ = std::move(labels);
  return out;
}

std::string SimplicialComplex::label(std::size_t v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

std::optional<std::size_t> SimplicialComplex::find_label(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool SimplicialComplex::contains_simplex(const VertexSet& vertices) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& facet) {
    return std::includes(facet.begin(), facet.end(), vertices.begin(), vertices.end());
  });
}

std::vector<std::string> validate(const SimplicialComplex& complex) {
  std::vector<std::string> defects;
  const std::size_t n = complex.n_vertices();
  const auto& facets = complex.facets();
  std::vector<bool> covered(n, false);

  for (const auto& facet : facets) {
    if (facet.empty()) {
      defects.push_back("empty facet");
      continue;
    }
    if (std::adjacent_find(facet.begin(), facet.end()) != facet.end()) {
      defects.push_back("facet " + set_to_string(facet) + " repeats a vertex");
    }
    for (const auto v : facet) {
      if (v >= n) {
        defects.push_back("facet " + set_to_string(facet) + " has out-of-range vertex " +
                          std::to_string(v) + " (n_vertices=" + std::to_string(n) + ")");
      } else {
        covered[v] = true;
      }
    }
  }
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = 0; b < facets.size(); ++b) {
      if (a == b) continue;
      const auto& inner = facets[a];
      const auto& outer = facets[b];
      if (inner == outer) {
        if (a < b) defects.push_back("duplicate facet " + set_to_string(inner));
      } else if (std::includes(outer.begin(), outer.end(), inner.begin(), inner.end())) {
        defects.push_back("nested facet " + set_to_string(inner) + " inside " + set_to_string(outer));
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!covered[v]) defects.push_back("vertex " + std::to_string(v) + " is in no facet");
  }

  const auto& labels = complex.labels();
  if (!labels.empty() && labels.size() != n) {
    defects.push_back(std::to_string(labels.size()) + " labels for " + std::to_string(n) + " vertices");
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) defects.push_back("duplicate label '" + label + "'");
  }
  return defects;
}

bool is_exclusive_set(const SimplicialComplex& complex, const VertexSet& vertices) {
  check_range(complex.n_vertices(), vertices);
  const VertexSet set = normalize(vertices);
  return set.size() >= 2 && complex.contains_simplex(set);
}

Graph skeleton(const SimplicialComplex& complex) {
  Graph graph(complex.n_vertices());
  for (const auto& facet : complex.facets()) {
    for (std::size_t a = 0; a < facet.size(); ++a) {
      for (std::size_t b = a + 1; b < facet.size(); ++b) graph.add_edge(facet[a], facet[b]);
    }
  }
  return graph;
}

SimplicialComplex clique_complex(const Graph& graph, std::vector<std::string> labels) {
  return SimplicialComplex::from_facets(graph.n_vertices(), maximal_cliques(graph), std::move(labels));
}

SimplicialComplex clique_complex(const SimplicialComplex& complex) {
  return clique_complex(skeleton(complex), complex.labels());
}

SimplicialComplex or_product(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::size_t na = a.n_vertices();
  const std::size_t nb = b.n_vertices();
  const std::size_t n = na * nb;
  std::vector<VertexSet> facets;

  // A facet F of one factor with |F| >= 2 yields, for every choice of
  // partner coordinate per element of F, a maximal joint exclusive set.
  const auto expand = [&](const SimplicialComplex& side, std::size_t other_size,
                          const std::function<std::size_t(std::size_t, std::size_t)>& index) {
    for (const auto& facet : side.facets()) {
      if (facet.size() < 2 || other_size == 0) continue;
      std::vector<std::size_t> choice(facet.size(), 0);
      while (true) {
        VertexSet joint(facet.size());
        for (std::size_t k = 0; k < facet.size(); ++k) joint[k] = index(facet[k], choice[k]);
        facets.push_back(normalize(std::move(joint)));
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == other_size) choice[k++] = 0;
        if (k == choice.size()) break;
      }
    }
  };
  expand(a, nb, [nb](std::size_t i, std::size_t j) { return i * nb + j; });
  expand(b, na, [nb](std::size_t j, std::size_t i) { return i * nb + j; });

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) labels.push_back(a.label(i) + "⊗" + b.label(j));
  }
  return SimplicialComplex::from_facets(n, std::move(facets), std::move(labels));
}

SimplicialComplex or_power(const SimplicialComplex& complex, std::size_t copies) {
  if (copies == 0) throw Error("OR power needs at least one copy");
  SimplicialComplex out = complex;
  for (std::size_t k = 1; k < copies; ++k) out = or_product(out, complex);
  return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const VertexSet& vertices) {
  check_range(complex.n_vertices(), vertices);
  const VertexSet kept = normalize(vertices);
  std::vector<std::size_t> new_index(complex.n_vertices(), complex.n_vertices());
  for (std::size_t k = 0; k < kept.size(); ++k) new_index[kept[k]] = k;

  std::vector<VertexSet> facets;
  for (const auto& facet : complex.facets()) {
    VertexSet restricted;
    for (const auto v : facet) {
      if (new_index[v] < kept.size()) restricted.push_back(new_index[v]);
    }
    if (!restricted.empty()) facets.push_back(std::move(restricted));
  }
  std::vector<std::string> labels;
  if (complex.has_labels()) {
    for (const auto v : kept) labels.push_back(complex.labels()[v]);
  }
  return SimplicialComplex::from_facets(kept.size(), std::move(facets), std::move(labels));
}

namespace {

class DisjointCliqueSearch {
 public:
  DisjointCliqueSearch(std::size_t n_vertices, std::vector<VertexSet> cliques, std::size_t count)
      : n_(n_vertices), cliques_(std::move(cliques)), count_(count), used_(n_vertices, false) {
    by_vertex_.resize(n_);
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      for (const auto v : cliques_[c]) by_vertex_[v].push_back(c);
    }
  }

  std::optional<std::vector<VertexSet>> partition() {
    if (cover_from(0)) return result();
    return std::nullopt;
  }

  std::optional<std::vector<VertexSet>> packing() {
    if (pack_from(0)) return result();
    return std::nullopt;
  }

 private:
  bool fits(const VertexSet& clique) const {
    return std::none_of(clique.begin(), clique.end(), [&](std::size_t v) { return used_[v]; });
  }
  void mark(const VertexSet& clique, bool value) {
    for (const auto v : clique) used_[v] = value;
  }

  // Exact cover: the lowest uncovered vertex must lie in the next clique.
  bool cover_from(std::size_t vertex) {
    while (vertex < n_ && used_[vertex]) ++vertex;
    if (vertex == n_) return chosen_.size() == count_;
    for (const auto c : by_vertex_[vertex]) {
      if (!fits(cliques_[c])) continue;
      mark(cliques_[c], true);
      chosen_.push_back(c);
      if (cover_from(vertex + 1)) return true;
      chosen_.pop_back();
      mark(cliques_[c], false);
    }
    return false;
  }

  bool pack_from(std::size_t start) {
    if (chosen_.size() == count_) return true;
    for (std::size_t c = start; c < cliques_.size(); ++c) {
      if (cliques_.size() - c < count_ - chosen_.size()) return false;
      if (!fits(cliques_[c])) continue;
      mark(cliques_[c], true);
      chosen_.push_back(c);
      if (pack_from(c + 1)) return true;
      chosen_.pop_back();
      mark(cliques_[c], false);
    }
    return false;
  }

  std::vector<VertexSet> result() const {
    std::vector<VertexSet> out;
    for (const auto c : chosen_) out.push_back(cliques_[c]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t n_;
  std::vector<VertexSet> cliques_;
  std::size_t count_;
  std::vector<bool> used_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<std::vector<VertexSet>> find_disjoint_cliques(const SimplicialComplex& complex,
                                                            std::size_t size, std::size_t count) {
  if (size == 0 || count == 0) throw Error("clique size and count must be at least 1");
  const std::size_t n = complex.n_vertices();
  if (size * count > n) return std::nullopt;
  DisjointCliqueSearch search(n, cliques_of_size(skeleton(complex), size), count);
  return size * count == n ? search.partition() : search.packing();
}

}  // namespace exlab
