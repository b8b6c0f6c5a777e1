#include "exlab/bounds.hpp"

#include <algorithm>

#include "exlab/cliques.hpp"
#include "exlab/error.hpp"
#include "exlab/lp.hpp"

namespace exlab {

std::string to_string(BoundClass bound_class) {
  switch (bound_class) {
    case BoundClass::E: return "E";
    case BoundClass::CE: return "CE";
    case BoundClass::NCHV: return "NCHV";
    case BoundClass::CEk: return "CEk";
  }
  return "?";
}

BoundClass parse_bound_class(std::string_view text) {
  if (text == "E") return BoundClass::E;
  if (text == "CE") return BoundClass::CE;
  if (text == "NCHV") return BoundClass::NCHV;
  if (text == "CEk") return BoundClass::CEk;
  throw Error("unknown bound class '" + std::string(text) + "'");
}

Assignment::Assignment(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (values_[v].sign() < 0 || values_[v] > Rational(1)) {
      throw Error("probability of vertex " + std::to_string(v) + " is " + values_[v].to_string() +
                  ", outside [0,1]");
    }
  }
}

Assignment Assignment::uniform(std::size_t n_vertices, const Rational& probability) {
  return Assignment(std::vector<Rational>(n_vertices, probability));
}

Rational Assignment::total() const {
  Rational sum;
  for (const auto& p : values_) sum += p;
  return sum;
}

Rational Assignment::total(const VertexSet& vertices) const {
  Rational sum;
  for (const auto v : vertices) sum += values_.at(v);
  return sum;
}

namespace {

BoundResult packing_bound(const SimplicialComplex& complex, BoundClass bound_class) {
  const std::size_t n = complex.n_vertices();
  LinearProgram program;
  program.objective.assign(n, Rational(1));
  program.unit_box = true;

  PackingCertificate certificate;
  for (const auto& facet : complex.facets()) {
    // Singleton facets only restate w_i <= 1.
    if (facet.size() < 2) continue;
    LinearConstraint row{std::vector<Rational>(n, Rational(0)), Rational(1)};
    for (const auto v : facet) row.row[v] = 1;
    program.constraints.push_back(std::move(row));
    certificate.constraint_sets.push_back(facet);
  }

  const LpSolution solution = lp_solve(program);
  if (solution.status != LpStatus::optimal) {
    throw Error("packing LP reported " + to_string(solution.status));
  }
  certificate.set_multipliers = solution.row_duals;
  certificate.bound_multipliers = solution.bound_duals;

  BoundResult result;
  result.bound_class = bound_class;
  result.value = solution.value;
  result.witness = Assignment(solution.primal);
  result.certificate = std::move(certificate);
  return result;
}

}  // namespace

BoundResult e_bound(const SimplicialComplex& complex) { return packing_bound(complex, BoundClass::E); }

BoundResult ce_bound(const SimplicialComplex& complex) {
  return packing_bound(clique_complex(complex), BoundClass::CE);
}

BoundResult nchv_bound(const SimplicialComplex& complex) {
  const VertexSet independent = maximum_independent_set(skeleton(complex));
  std::vector<Rational> witness(complex.n_vertices(), Rational(0));
  for (const auto v : independent) witness[v] = 1;

  BoundResult result;
  result.bound_class = BoundClass::NCHV;
  result.value = Rational(static_cast<std::int64_t>(independent.size()));
  result.witness = Assignment(std::move(witness));
  return result;
}

ProductBoundResult ce_product_bound(const SimplicialComplex& complex, int copies) {
  if (copies <= 0) throw Error("copies must be at least 1, got " + std::to_string(copies));
  const auto k = static_cast<std::size_t>(copies);
  ProductBoundResult result;
  result.copies = k;
  result.joint = e_bound(clique_complex(or_power(complex, k)));
  result.value = RootValue(result.joint.value, static_cast<unsigned>(k));
  return result;
}

std::vector<Violation> check_assignment(const SimplicialComplex& complex, const Assignment& assignment,
                                        ModelClass model_class) {
  if (assignment.size() != complex.n_vertices()) {
    throw Error("assignment has " + std::to_string(assignment.size()) + " values for " +
                std::to_string(complex.n_vertices()) + " vertices");
  }
  const std::vector<VertexSet> sets =
      model_class == ModelClass::E ? complex.facets() : maximal_cliques(skeleton(complex));
  std::vector<Violation> violations;
  for (const auto& set : sets) {
    Rational total = assignment.total(set);
    if (total > Rational(1)) violations.push_back({set, std::move(total)});
  }
  return violations;
}

std::optional<Violation> find_ce_violation(const SimplicialComplex& complex, const Assignment& assignment) {
  const auto breaches = check_assignment(complex, assignment, ModelClass::E);
  if (!breaches.empty()) {
    throw Error("assignment violates E on facet with total " + breaches.front().total.to_string());
  }
  std::optional<Violation> best;
  for (const auto& clique : maximal_cliques(skeleton(complex))) {
    Rational total = assignment.total(clique);
    if (total > Rational(1) && (!best || total > best->total)) best = Violation{clique, std::move(total)};
  }
  return best;
}

std::vector<std::string> verify_bound_certificate(const SimplicialComplex& complex, const BoundResult& result) {
  if (result.bound_class != BoundClass::E && result.bound_class != BoundClass::CE) {
    return {"only E and CE bounds carry packing certificates"};
  }
  if (!result.certificate) return {"missing certificate"};
  const auto& cert = *result.certificate;
  const std::size_t n = complex.n_vertices();
  std::vector<std::string> problems;
  if (cert.set_multipliers.size() != cert.constraint_sets.size() || cert.bound_multipliers.size() != n ||
      result.witness.size() != n) {
    return {"certificate dimensions do not match the complex"};
  }

  const Graph graph = skeleton(complex);
  Rational dual_value;
  std::vector<Rational> coverage(n, Rational(0));
  for (std::size_t s = 0; s < cert.constraint_sets.size(); ++s) {
    const VertexSet& set = cert.constraint_sets[s];
    const bool ok = std::all_of(set.begin(), set.end(), [n](std::size_t v) { return v < n; }) &&
                    (result.bound_class == BoundClass::E ? complex.contains_simplex(set) : graph.is_clique(set));
    if (!ok) problems.push_back("constraint set " + std::to_string(s) + " is not a valid exclusive set");
    const Rational& y = cert.set_multipliers[s];
    if (y.sign() < 0) problems.push_back("negative multiplier on constraint set " + std::to_string(s));
    dual_value += y;
    if (ok) {
      for (const auto v : set) coverage[v] += y;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Rational& z = cert.bound_multipliers[v];
    if (z.sign() < 0) problems.push_back("negative bound multiplier on vertex " + std::to_string(v));
    dual_value += z;
    if (coverage[v] + z < Rational(1)) problems.push_back("vertex " + std::to_string(v) + " is under-covered");
  }
  if (dual_value != result.value) {
    problems.push_back("dual objective " + dual_value.to_string() + " != value " + result.value.to_string());
  }

  const ModelClass model = result.bound_class == BoundClass::E ? ModelClass::E : ModelClass::CE;
  if (!check_assignment(complex, result.witness, model).empty()) problems.push_back("witness is infeasible");
  if (result.witness.total() != result.value) problems.push_back("witness does not attain the value");
  return problems;
}

}  // namespace exlab
