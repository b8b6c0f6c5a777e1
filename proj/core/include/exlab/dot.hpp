#pragma once

#include <optional>
#include <string>

#include "exlab/bounds.hpp"
#include "exlab/complex.hpp"

namespace exlab {

/// Graphviz rendering of the skeleton as a single `graph` block. Vertices
/// use the complex labels when present. With an assignment, each vertex is
/// shaded by its probability and the value is shown under the label.
std::string to_dot(const SimplicialComplex& complex, const std::optional<Assignment>& assignment = std::nullopt,
                   const std::string& name = "skeleton");

}  // namespace exlab
