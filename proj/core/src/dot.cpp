#include "exlab/dot.hpp"

#include <sstream>

#include "exlab/error.hpp"

namespace exlab {

namespace {

std::string escaped(const std::string& text) {
  std::string out;
  for (const char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string quoted(const std::string& text) { return "\"" + escaped(text) + "\""; }

}  // namespace

std::string to_dot(const SimplicialComplex& complex, const std::optional<Assignment>& assignment,
                   const std::string& name) {
  if (assignment && assignment->size() != complex.n_vertices()) {
    throw Error("assignment size does not match the complex");
  }
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < complex.n_vertices(); ++v) {
    out << "  " << v << " [label=";
    if (assignment) {
      const Rational& p = (*assignment)[v];
      out << '"' << escaped(complex.label(v)) << "\\n" << p.to_string() << '"';
      // Saturation tracks probability on a fixed blue hue.
      std::ostringstream colour;
      colour.precision(3);
      colour << std::fixed << "0.600 " << p.to_double() << " 1.000";
      out << ", style=filled, fillcolor=" << quoted(colour.str());
    } else {
      out << quoted(complex.label(v));
    }
    out << "];\n";
  }
  for (const auto& [u, v] : skeleton(complex).edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace exlab
