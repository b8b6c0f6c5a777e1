#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "exlab/bounds.hpp"
#include "exlab/complex.hpp"
#include "exlab/dot.hpp"
#include "exlab/error.hpp"
#include "exlab/io.hpp"
#include "exlab/paper_check.hpp"
#include "exlab/scenarios.hpp"
#include "exlab/theta.hpp"

namespace exlab::cli {

namespace {

struct Options {
  std::string format = "json";
  std::string out_path;
  std::string bound_class = "E";
  int copies = 2;
  std::string support = "all";
  std::string assignment;
  std::string vertices;
  std::vector<std::string> inputs;
  int cycle_length = 5;
};

/// Complex plus, for behaviours, the behaviour and its derived assignment.
struct Input {
  SimplicialComplex complex;
  std::optional<Behavior> behavior;
  std::optional<Assignment> assignment;
};

std::size_t parse_size(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      text.size() > 6) {
    throw Error(what + ": expected a small non-negative integer, got '" + text + "'");
  }
  return std::stoul(text);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::optional<SimplicialComplex> builtin_complex(const std::string& name) {
  if (name == "pentagon") return pentagon();
  if (name == "pentagram") return pentagram();
  if (name == "pentachoron") return pentachoron();
  const auto colon = name.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string family = name.substr(0, colon);
  if (family != "cycle" && family != "complete" && family != "simplex") return std::nullopt;
  const std::size_t n = parse_size(name.substr(colon + 1), "builtin '" + name + "'");
  if (family == "cycle") return cycle_complex(n);
  if (family == "complete") return complete_graph_complex(n);
  return full_simplex_complex(n);
}

bool looks_like_path(const std::string& source) {
  return std::filesystem::exists(source) || source.find('/') != std::string::npos ||
         source.find(".json") != std::string::npos;
}

std::optional<Behavior> try_behavior(const std::string& source, Json* loaded) {
  if (source == "prbox") return pr_box_behavior();
  if (!looks_like_path(source)) return std::nullopt;
  Json json = read_json_file(source);
  if (json.is_object() && json.contains("table")) return behavior_from_json(json);
  if (loaded) *loaded = std::move(json);
  return std::nullopt;
}

Behavior load_behavior(const std::string& source) {
  Json json;
  if (auto behavior = try_behavior(source, &json)) return *behavior;
  if (!looks_like_path(source)) throw Error("unknown builtin behaviour '" + source + "' (known: prbox)");
  throw Error("'" + source + "' is not a behaviour file (missing field 'table')");
}

Support parse_support(const std::string& text) { return text == "nonzero" ? Support::nonzero : Support::all; }

Input load_input(const std::string& source, const Options& options) {
  if (auto complex = builtin_complex(source)) return {*complex, std::nullopt, std::nullopt};
  Json json;
  if (auto behavior = try_behavior(source, &json)) {
    Input input{lo_complex(*behavior, parse_support(options.support)), *behavior, std::nullopt};
    input.assignment = assignment_from_behavior(input.complex, *behavior);
    return input;
  }
  if (!looks_like_path(source)) {
    throw Error("unknown builtin '" + source +
                "' (known: pentagon, pentagram, pentachoron, cycle:n, complete:n, simplex:n, prbox)");
  }
  if (!json.is_object() || !json.contains("facets")) {
    throw Error("'" + source + "' is neither a complex (field 'facets') nor a behaviour (field 'table')");
  }
  SimplicialComplex complex = complex_from_json(json);
  const auto defects = validate(complex);
  if (!defects.empty()) throw Error("'" + source + "' is not a valid complex: " + defects.front());
  return {std::move(complex), std::nullopt, std::nullopt};
}

Assignment load_assignment(const Options& options, const Input& input) {
  if (!options.assignment.empty()) {
    if (std::filesystem::exists(options.assignment)) return assignment_from_json(read_json_file(options.assignment));
    Json list = Json::array();
    std::stringstream ss(options.assignment);
    for (std::string item; std::getline(ss, item, ',');) list.push_back(item);
    return assignment_from_json(list);
  }
  if (input.assignment) return *input.assignment;
  throw Error("--assignment is required unless the input is a behaviour");
}

VertexSet parse_vertices(const std::string& text) {
  if (text.empty()) throw Error("--vertices is required");
  VertexSet out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_size(item, "--vertices"));
  return out;
}

std::string set_text(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) out += (k ? "," : "") + std::to_string(set[k]);
  return out + "}";
}

std::string join(const std::vector<std::string>& items, const std::string& separator = " ") {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? separator : "") + items[k];
  return out;
}

/// Two-column key/value rendering with aligned values.
class Table {
 public:
  Table& row(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  std::string str() const {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.first.size());
    std::ostringstream out;
    for (const auto& [key, value] : rows_) out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    return out.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string rationals_text(const std::vector<Rational>& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(v.to_string());
  return join(parts);
}

std::string complex_table(const SimplicialComplex& complex) {
  std::vector<std::string> facets;
  for (const auto& f : complex.facets()) facets.push_back(set_text(f));
  Table table;
  table.row("n_vertices", std::to_string(complex.n_vertices())).row("facets", join(facets));
  if (complex.has_labels()) table.row("labels", join(complex.labels()));
  return table.str();
}

std::string bound_table(const BoundResult& result) {
  Table table;
  table.row("class", to_string(result.bound_class))
      .row("value", result.value.to_string())
      .row("witness", rationals_text(result.witness.values()));
  if (result.certificate) {
    std::vector<std::string> used;
    for (std::size_t s = 0; s < result.certificate->constraint_sets.size(); ++s) {
      if (!result.certificate->set_multipliers[s].is_zero()) {
        used.push_back(result.certificate->set_multipliers[s].to_string() + "*" +
                       set_text(result.certificate->constraint_sets[s]));
      }
    }
    table.row("certificate", used.empty() ? "-" : join(used))
        .row("bound_multipliers", rationals_text(result.certificate->bound_multipliers));
  }
  return table.str();
}

std::string violations_table(const std::vector<Violation>& violations, const SimplicialComplex& complex) {
  if (violations.empty()) return "no violations\n";
  Table table;
  for (const auto& v : violations) {
    std::vector<std::string> labels;
    for (const auto u : v.clique) labels.push_back(complex.label(u));
    table.row(set_text(v.clique), "total " + v.total.to_string() + "  [" + join(labels, " ") + "]");
  }
  return table.str();
}

Json violations_json(const std::vector<Violation>& violations, const SimplicialComplex& complex) {
  Json list = Json::array();
  for (const auto& v : violations) list.push_back(to_json(v, complex));
  return list;
}

unsigned display_digits() {
  const char* env = std::getenv("EXLAB_PRECISION");
  if (!env || !*env) return 30;
  const std::size_t digits = parse_size(env, "EXLAB_PRECISION");
  return static_cast<unsigned>(std::min<std::size_t>(digits, kMaxThetaDigits));
}

/// Result of one verb: a payload per output format plus the exit status.
struct Output {
  Json json;
  std::string table;
  std::string dot;
  int status = kExitOk;
};

Output complex_output(const SimplicialComplex& complex) {
  return {to_json(complex), complex_table(complex), to_dot(complex)};
}

Output behavior_output(const Behavior& behavior) {
  Table table;
  for (const auto& [event, p] : behavior.table()) table.row(event_label(behavior.scenario(), event), p.to_string());
  return {to_json(behavior), table.str(), ""};
}

Output run_verb(const std::string& verb, const Options& options) {
  const auto input_at = [&](std::size_t k) { return load_input(options.inputs.at(k), options); };

  if (verb == "validate") {
    Json json;
    SimplicialComplex complex;
    if (auto builtin = builtin_complex(options.inputs[0])) {
      complex = *builtin;
    } else {
      Json loaded;
      if (auto behavior = try_behavior(options.inputs[0], &loaded)) {
        complex = lo_complex(*behavior, parse_support(options.support));
      } else if (looks_like_path(options.inputs[0])) {
        complex = complex_from_json(loaded);
      } else {
        throw Error("unknown builtin '" + options.inputs[0] + "'");
      }
    }
    const auto defects = validate(complex);
    Output out{{{"valid", defects.empty()}, {"defects", defects}},
               defects.empty() ? "valid\n" : join(defects, "\n") + "\n", ""};
    out.status = defects.empty() ? kExitOk : kExitDomainError;
    return out;
  }
  if (verb == "bounds") {
    const Input input = input_at(0);
    const BoundClass cls = parse_bound_class(options.bound_class);
    if (cls == BoundClass::CEk) {
      const auto result = ce_product_bound(input.complex, options.copies);
      Table table;
      table.row("class", "CEk")
          .row("copies", std::to_string(result.copies))
          .row("value", result.value.to_string())
          .row("joint_value", result.joint.value.to_string());
      return {to_json(result), table.str(), ""};
    }
    const BoundResult result = cls == BoundClass::E   ? e_bound(input.complex)
                               : cls == BoundClass::CE ? ce_bound(input.complex)
                                                       : nchv_bound(input.complex);
    return {to_json(result), bound_table(result), ""};
  }
  if (verb == "clique-complex") return complex_output(clique_complex(input_at(0).complex));
  if (verb == "or-product") return complex_output(or_product(input_at(0).complex, input_at(1).complex));
  if (verb == "induced") return complex_output(induced_subcomplex(input_at(0).complex, parse_vertices(options.vertices)));
  if (verb == "lo-complex") {
    return complex_output(lo_complex(load_behavior(options.inputs[0]), parse_support(options.support)));
  }
  if (verb == "pr-box") return behavior_output(pr_box_behavior());
  if (verb == "product") {
    return behavior_output(product_behavior(load_behavior(options.inputs[0]), load_behavior(options.inputs[1])));
  }
  if (verb == "check") {
    const Input input = input_at(0);
    const ModelClass cls = options.bound_class == "CE" ? ModelClass::CE : ModelClass::E;
    const auto violations = check_assignment(input.complex, load_assignment(options, input), cls);
    return {{{"class", options.bound_class},
             {"in_class", violations.empty()},
             {"violations", violations_json(violations, input.complex)}},
            violations_table(violations, input.complex),
            ""};
  }
  if (verb == "find-violation") {
    const Input input = input_at(0);
    const auto violation = find_ce_violation(input.complex, load_assignment(options, input));
    if (!violation) return {{{"violation", nullptr}}, "no CE violation\n", ""};
    return {{{"violation", to_json(*violation, input.complex)}}, violations_table({*violation}, input.complex), ""};
  }
  if (verb == "theta") {
    const unsigned digits = display_digits();
    const HighPrecision value = theta_odd_cycle(options.cycle_length);
    const auto exact = theta_odd_cycle_exact(options.cycle_length);
    Json json{{"n", options.cycle_length},
              {"digits", digits},
              {"value", format_decimal(value, digits)},
              {"exact", exact ? to_json(*exact) : Json(nullptr)}};
    Table table;
    table.row("n", std::to_string(options.cycle_length)).row("theta", format_decimal(value, digits));
    if (exact) table.row("exact", exact->to_string());
    return {json, table.str(), ""};
  }
  if (verb == "dot") {
    const Input input = input_at(0);
    std::optional<Assignment> assignment = input.assignment;
    if (!options.assignment.empty()) assignment = load_assignment(options, input);
    const std::string text = to_dot(input.complex, assignment);
    return {{{"dot", text}}, text, text};
  }
  if (verb == "paper-check") {
    const PaperReport report = paper_check();
    Json claims = Json::array();
    std::size_t id_width = 0;
    for (const auto& c : report.claims) id_width = std::max(id_width, c.id.size());
    std::ostringstream table;
    for (const auto& c : report.claims) {
      claims.push_back({{"id", c.id},
                        {"description", c.description},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"pass", c.pass}});
      table << (c.pass ? "PASS  " : "FAIL  ") << c.id << std::string(id_width - c.id.size() + 2, ' ')
            << "expected " << c.expected << "; computed " << c.computed << '\n';
    }
    Output out{{{"all_pass", report.all_pass()}, {"claims", std::move(claims)}}, table.str(), ""};
    out.status = report.all_pass() ? kExitOk : kExitDomainError;
    return out;
  }
  throw Error("unhandled verb '" + verb + "'");
}

void emit(const std::string& text, const Options& options, std::ostream& out) {
  if (options.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(options.out_path);
  if (!file) throw Error("cannot write '" + options.out_path + "'");
  file << text;
}

std::string render(const Output& output, const std::string& format) {
  if (format == "table") return output.table;
  if (format == "dot") {
    if (output.dot.empty()) throw Error("--format dot is only available for complexes");
    return output.dot;
  }
  return output.json.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Noncontextuality bounds on exclusivity complexes", "exlab"};
  app.require_subcommand(1, 1);
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"json", "table", "dot"}))
      ->capture_default_str();
  app.add_option("--out", options.out_path, "Write output to this file instead of stdout");

  const std::string input_help = "Complex/behaviour file or builtin (pentagon, pentagram, pentachoron, "
                                 "cycle:n, complete:n, simplex:n, prbox)";
  const auto add_class = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--class", options.bound_class, "Model class")->check(CLI::IsMember(allowed))->capture_default_str();
  };
  const auto add_support = [&](CLI::App* sub) {
    sub->add_option("--support", options.support, "Events of a behaviour to keep")
        ->check(CLI::IsMember({"nonzero", "all"}))
        ->capture_default_str();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Report defects of a complex");
  validate_cmd->add_option("input", options.inputs, input_help)->required()->expected(1);
  add_support(validate_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "Maximum of the sum of probabilities over a model class");
  bounds_cmd->add_option("input", options.inputs, input_help)->required()->expected(1);
  add_class(bounds_cmd, {"E", "CE", "NCHV", "CEk"});
  bounds_cmd->add_option("--copies", options.copies, "Number of copies for --class CEk")->capture_default_str();
  add_support(bounds_cmd);

  auto* clique_cmd = app.add_subcommand("clique-complex", "Clique complex of a complex's skeleton");
  clique_cmd->add_option("input", options.inputs, input_help)->required()->expected(1);
  add_support(clique_cmd);

  auto* product_complex_cmd = app.add_subcommand("or-product", "OR product of two complexes");
  product_complex_cmd->add_option("inputs", options.inputs, input_help)->required()->expected(2);
  add_support(product_complex_cmd);

  auto* induced_cmd = app.add_subcommand("induced", "Induced subcomplex on a vertex subset");
  induced_cmd->add_option("input", options.inputs, input_help)->required()->expected(1);
  induced_cmd->add_option("--vertices", options.vertices, "Comma-separated vertex indices")->required();
  add_support(induced_cmd);

  auto* lo_cmd = app.add_subcommand("lo-complex", "Local-orthogonality complex of a behaviour");
  lo_cmd->add_option("input", options.inputs, "Behaviour file or prbox")->required()->expected(1);
  add_support(lo_cmd);

  app.add_subcommand("pr-box", "The PR-box behaviour");

  auto* product_cmd = app.add_subcommand("product", "Behaviour of two independent boxes");
  product_cmd->add_option("inputs", options.inputs, "Behaviour files or prbox")->required()->expected(2);

  auto* check_cmd = app.add_subcommand("check", "Exclusive sets (E) or cliques (CE) with total above 1");
  check_cmd->add_option("input", options.inputs, input_help)->required()->expected(1);
  add_class(check_cmd, {"E", "CE"});
  check_cmd->add_option("--assignment", options.assignment, "JSON file or comma-separated probabilities");
  add_support(check_cmd);

  auto* violation_cmd = app.add_subcommand("find-violation", "Maximal clique with the largest total above 1");
  violation_cmd->add_option("input", options.inputs, input_help)->required()->expected(1);
  violation_cmd->add_option("--assignment", options.assignment, "JSON file or comma-separated probabilities");
  add_support(violation_cmd);

  auto* theta_cmd = app.add_subcommand("theta", "Lovasz theta of an odd cycle");
  theta_cmd->add_option("n", options.cycle_length, "Odd cycle length >= 3")->required();

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export of the skeleton");
  dot_cmd->add_option("input", options.inputs, input_help)->required()->expected(1);
  dot_cmd->add_option("--assignment", options.assignment, "Shade vertices by these probabilities");
  add_support(dot_cmd);

  app.add_subcommand("paper-check", "Recompute every reference number and compare");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "exlab: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  const std::string format = verb == "dot" && options.format == "json" ? "dot" : options.format;
  try {
    const Output output = run_verb(verb, options);
    emit(render(output, format), options, out);
    return output.status;
  } catch (const std::exception& e) {
    err << "exlab " << verb << ": " << e.what() << "\n";
    if (format == "json") out << Json{{"error", e.what()}}.dump() << "\n";
    return kExitDomainError;
  }
}

}  // namespace exlab::cli
