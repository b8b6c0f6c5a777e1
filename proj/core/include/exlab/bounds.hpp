#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exlab/complex.hpp"
#include "exlab/rational.hpp"
#include "exlab/root_value.hpp"

namespace exlab {

/// Classes of probability assignments on a complex.
///   E     every exclusive set has total probability <= 1
///   CE    E applied to the clique complex
///   NCHV  mixtures of deterministic assignments with no exclusive set true
///   CEk   CE on the k-fold OR product, read back on one copy
enum class BoundClass { E, CE, NCHV, CEk };

std::string to_string(BoundClass bound_class);
/// Accepts "E", "CE", "NCHV" and "CEk". Throws exlab::Error otherwise.
BoundClass parse_bound_class(std::string_view text);

/// Per-vertex probabilities, each in [0, 1].
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Rational> values);
  static Assignment uniform(std::size_t n_vertices, const Rational& probability);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t v) const { return values_[v]; }
  const std::vector<Rational>& values() const { return values_; }

  Rational total() const;
  Rational total(const VertexSet& vertices) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Rational> values_;
};

/// Dual solution of the packing LP: a weight per constraint set and per
/// vertex upper bound. Every vertex must be covered with total weight
/// at least 1, and the weights must sum to the bound value.
struct PackingCertificate {
  std::vector<VertexSet> constraint_sets;
  std::vector<Rational> set_multipliers;
  std::vector<Rational> bound_multipliers;
};

struct BoundResult {
  BoundClass bound_class = BoundClass::E;
  Rational value;
  Assignment witness;
  std::optional<PackingCertificate> certificate;
};

/// Bound obtained from the clique complex of a k-fold OR product.
struct ProductBoundResult {
  RootValue value;
  std::size_t copies = 1;
  /// E bound on the clique complex of the joint complex.
  BoundResult joint;
};

/// A clique whose probabilities add up to more than 1.
struct Violation {
  VertexSet clique;
  Rational total;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Fractional packing number: max sum w subject to 0 <= w <= 1 and
/// sum_{i in F} w_i <= 1 for each facet F. Solved exactly, with witness and
/// dual certificate.
BoundResult e_bound(const SimplicialComplex& complex);

/// Independence number of the skeleton, witnessed by a maximum independent set.
BoundResult nchv_bound(const SimplicialComplex& complex);

/// e_bound of the clique complex.
BoundResult ce_bound(const SimplicialComplex& complex);

/// (e_bound(clique_complex(complex^{OR k})))^(1/k).
///
/// The value bounds sum_i P(i) for a single copy only under the premise
/// that joint probabilities are products, P(i_1,...,i_k) = P(i_1)...P(i_k),
/// and that this product assignment obeys CE on the joint complex. Then
/// (sum_i P(i))^k = sum over joint events <= joint bound. Throws
/// exlab::Error for copies <= 0.
ProductBoundResult ce_product_bound(const SimplicialComplex& complex, int copies);

enum class ModelClass { E, CE };

/// Facets (E) or maximal cliques (CE) whose total exceeds 1, in canonical
/// order. Throws exlab::Error when the assignment size differs from the
/// complex.
std::vector<Violation> check_assignment(const SimplicialComplex& complex, const Assignment& assignment,
                                        ModelClass model_class);

/// The maximal clique of largest total, if that total exceeds 1. The
/// assignment must already satisfy E; a breach throws exlab::Error.
std::optional<Violation> find_ce_violation(const SimplicialComplex& complex, const Assignment& assignment);

/// Checks an E or CE bound without trusting the solver: every constraint
/// set is a simplex of the complex (E) or a clique of its skeleton (CE), the
/// multipliers are non-negative and cover each vertex with weight >= 1,
/// they sum to the value, and the witness is feasible and attains it.
std::vector<std::string> verify_bound_certificate(const SimplicialComplex& complex, const BoundResult& result);

}  // namespace exlab
