#include "exlab/paper_check.hpp"

#include <algorithm>
#include <functional>

#include "exlab/theta.hpp"

namespace exlab {

bool PaperReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

std::vector<VertexSet> induced_pentagons(const SimplicialComplex& complex) {
  std::vector<VertexSet> found;
  const std::size_t n = complex.n_vertices();
  VertexSet pick;
  const std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (pick.size() == 5) {
      const SimplicialComplex induced = induced_subcomplex(complex, pick);
      const bool edges_only = std::all_of(induced.facets().begin(), induced.facets().end(),
                                          [](const VertexSet& f) { return f.size() == 2; });
      if (!edges_only || induced.facets().size() != 5) return;
      const Graph graph = skeleton(induced);
      for (std::size_t v = 0; v < 5; ++v) {
        if (graph.degree(v) != 2) return;
      }
      // A 2-regular simple graph on five vertices is connected, hence C5.
      found.push_back(pick);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      pick.push_back(v);
      choose(v + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return found;
}

bool is_complete_graph_complex(const SimplicialComplex& complex) {
  const std::size_t n = complex.n_vertices();
  if (n < 2) return complex.facets().size() == n;
  return complex.facets().size() == n * (n - 1) / 2 &&
         std::all_of(complex.facets().begin(), complex.facets().end(),
                     [](const VertexSet& f) { return f.size() == 2; });
}

namespace {

class ReportBuilder {
 public:
  void add(std::string id, std::string description, std::string expected, std::string computed, bool pass) {
    report_.claims.push_back(
        {std::move(id), std::move(description), std::move(expected), std::move(computed), pass});
  }
  PaperReport take() { return std::move(report_); }

 private:
  PaperReport report_;
};

bool certified(const SimplicialComplex& complex, const BoundResult& result) {
  return verify_bound_certificate(complex, result).empty();
}

}  // namespace

PaperReport paper_check() {
  ReportBuilder report;
  const Rational half(1, 2);

  {
    const auto result = e_bound(pentagon());
    const bool halves = result.witness == Assignment::uniform(5, half);
    report.add("pentagon-E", "E bound of the pentagon, attained by P(i)=1/2", "5/2 with P=1/2",
               result.value.to_string() + (halves ? " with P=1/2" : " with another witness"),
               result.value == Rational(5, 2) && halves && certified(pentagon(), result));
  }
  {
    const auto pentagon_nchv = nchv_bound(pentagon());
    const auto pentagram_nchv = nchv_bound(pentagram());
    report.add("pentagon-NCHV", "NCHV bound of the pentagon", "2", pentagon_nchv.value.to_string(),
               pentagon_nchv.value == Rational(2));
    report.add("pentagram-NCHV", "NCHV bound of the pentagram", "1", pentagram_nchv.value.to_string(),
               pentagram_nchv.value == Rational(1));
  }
  {
    const auto result = e_bound(pentagram());
    const auto breaches = check_assignment(pentagram(), Assignment::uniform(5, half), ModelClass::E);
    report.add("pentagram-E", "E bound of the pentagram; P=1/2 satisfies E", "5/2, no violations",
               result.value.to_string() + ", " + std::to_string(breaches.size()) + " violations",
               result.value == Rational(5, 2) && breaches.empty() && certified(pentagram(), result));
  }
  {
    const auto pentachoron_e = e_bound(pentachoron());
    report.add("pentachoron-E", "E bound of the pentachoron", "1", pentachoron_e.value.to_string(),
               pentachoron_e.value == Rational(1) && certified(pentachoron(), pentachoron_e));
    const auto pentagram_ce = ce_bound(pentagram());
    report.add("pentagram-CE", "CE bound of the pentagram", "1", pentagram_ce.value.to_string(),
               pentagram_ce.value == Rational(1) && certified(clique_complex(pentagram()), pentagram_ce));
  }

  const SimplicialComplex product = or_product(pentagon(), pentagon());
  {
    const auto parts = find_disjoint_cliques(product, 5, 5);
    std::size_t pentagrams = 0;
    if (parts) {
      for (const auto& part : *parts) {
        if (is_complete_graph_complex(induced_subcomplex(product, part)) && !is_exclusive_set(product, part)) {
          ++pentagrams;
        }
      }
    }
    report.add("product-partition",
               "pentagon OR pentagon: 25 events split into five induced pentagrams (not pentachora)",
               "25 vertices, 5 pentagrams",
               std::to_string(product.n_vertices()) + " vertices, " + std::to_string(pentagrams) + " pentagrams",
               product.n_vertices() == 25 && parts && pentagrams == 5);
  }
  {
    const SimplicialComplex closure = clique_complex(product);
    const auto joint = e_bound(closure);
    report.add("product-CE", "E bound on the clique complex of pentagon OR pentagon", "5",
               joint.value.to_string(), joint.value == Rational(5) && certified(closure, joint));
    const auto kcbs = ce_product_bound(pentagon(), 2);
    const RootValue sqrt5(Rational(5), 2);
    report.add("pentagon-CE2", "KCBS bound from CE on two copies", sqrt5.to_string(), kcbs.value.to_string(),
               kcbs.value == sqrt5 && kcbs.value.base().pow(2) == Rational(25) &&
                   kcbs.value.base() == Rational(5));
  }
  {
    const HighPrecision theta = theta_odd_cycle(5);
    const HighPrecision error = boost::multiprecision::abs(theta * theta - 5);
    const bool exact = theta_equals(5, RootValue(Rational(5), 2));
    report.add("theta-C5", "Lovasz theta of C5 is sqrt 5", "2-th root of 5", format_decimal(theta, 30),
               error < HighPrecision("1e-25") && exact);
  }

  const Behavior pr = pr_box_behavior();
  {
    const auto defects = no_signaling_check(pr);
    const SimplicialComplex lo = lo_complex(pr, Support::nonzero);
    const Assignment p = assignment_from_behavior(lo, pr);
    std::size_t found = 0;
    for (const auto& cycle : induced_pentagons(lo)) {
      if (std::all_of(cycle.begin(), cycle.end(), [&](std::size_t v) { return p[v] == Rational(1, 2); })) ++found;
    }
    report.add("prbox-pentagon", "PR box is no-signalling and has an induced pentagon of P=1/2 events",
               "no-signalling, >= 1 pentagon",
               std::to_string(defects.size()) + " signalling defects, " + std::to_string(found) + " pentagons",
               defects.empty() && found > 0);
  }
  {
    const Behavior pair = product_behavior(pr, pr);
    const SimplicialComplex lo = lo_complex(pair, Support::nonzero);
    const Assignment p = assignment_from_behavior(lo, pair);
    const bool in_e = check_assignment(lo, p, ModelClass::E).empty();
    std::optional<Violation> violation;
    if (in_e) violation = find_ce_violation(lo, p);
    bool pentagram_not_pentachoron = false;
    std::string computed = in_e ? "no violation" : "assignment violates E";
    if (violation) {
      pentagram_not_pentachoron = is_complete_graph_complex(induced_subcomplex(lo, violation->clique));
      computed = std::to_string(violation->clique.size()) + "-clique, total " + violation->total.to_string() +
                 (pentagram_not_pentachoron ? ", pentagram" : ", not a pentagram");
    }
    report.add("two-prbox-CE", "two PR boxes satisfy E but violate CE on a five-event pentagram",
               "5-clique, total 5/4, pentagram", computed,
               in_e && violation && violation->clique.size() == 5 && violation->total == Rational(5, 4) &&
                   pentagram_not_pentachoron);
  }
  return report.take();
}

}  // namespace exlab
