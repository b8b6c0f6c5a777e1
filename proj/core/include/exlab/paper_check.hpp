#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exlab/bounds.hpp"
#include "exlab/complex.hpp"
#include "exlab/scenarios.hpp"

namespace exlab {

struct ClaimResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct PaperReport {
  std::vector<ClaimResult> claims;

  bool all_pass() const;
};

/// Recomputes every headline number for the pentagon, pentagram and
/// pentachoron, the two-pentagon OR product and the PR-box scenarios, and
/// compares each against its expected exact value.
PaperReport paper_check();

/// Five-vertex subsets whose induced subcomplex is exactly a 5-cycle (five
/// edges, no chords, nothing larger), lexicographically ordered.
std::vector<VertexSet> induced_pentagons(const SimplicialComplex& complex);

/// True iff `complex` is exactly the complete graph on its vertices: every
/// pair is exclusive and no triple is.
bool is_complete_graph_complex(const SimplicialComplex& complex);

}  // namespace exlab
