#include "exlab/scenarios.hpp"

#include <algorithm>
#include <numeric>

#include "exlab/error.hpp"

namespace exlab {

SimplicialComplex cycle_complex(std::size_t n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<VertexSet> facets;
  for (std::size_t i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex complete_graph_complex(std::size_t n) {
  std::vector<VertexSet> facets;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) facets.push_back({i, j});
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex full_simplex_complex(std::size_t n) {
  VertexSet all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return SimplicialComplex::from_facets(n, {all});
}

// ---------------------------------------------------------------------------

BoxScenario BoxScenario::uniform(std::size_t parties, std::size_t settings, std::size_t outcomes) {
  BoxScenario scenario;
  scenario.outcomes.assign(parties, std::vector<std::size_t>(settings, outcomes));
  scenario.box_sizes = {parties};
  scenario.check();
  return scenario;
}

std::vector<std::size_t> BoxScenario::settings_per_party() const {
  std::vector<std::size_t> out;
  for (const auto& per_setting : outcomes) out.push_back(per_setting.size());
  return out;
}

void BoxScenario::check() const {
  if (outcomes.empty()) throw Error("scenario needs at least one party");
  for (std::size_t p = 0; p < outcomes.size(); ++p) {
    if (outcomes[p].empty()) throw Error("party " + std::to_string(p) + " has no settings");
    for (std::size_t s = 0; s < outcomes[p].size(); ++s) {
      if (outcomes[p][s] == 0) {
        throw Error("party " + std::to_string(p) + " setting " + std::to_string(s) + " has no outcomes");
      }
    }
  }
  if (std::find(box_sizes.begin(), box_sizes.end(), 0) != box_sizes.end()) throw Error("empty box");
  if (std::accumulate(box_sizes.begin(), box_sizes.end(), std::size_t{0}) != outcomes.size()) {
    throw Error("box sizes do not add up to the number of parties");
  }
}

namespace {

std::string join_grouped(const BoxScenario& scenario, const std::vector<std::size_t>& values) {
  std::string out;
  std::size_t party = 0;
  for (std::size_t box = 0; box < scenario.box_sizes.size(); ++box) {
    if (box) out += ';';
    for (std::size_t k = 0; k < scenario.box_sizes[box]; ++k, ++party) {
      if (k) out += ',';
      out += std::to_string(values[party]);
    }
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(separator, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::vector<std::size_t> parse_grouped(const BoxScenario& scenario, std::string_view text,
                                       std::string_view whole) {
  const auto fail = [&](const std::string& why) {
    return Error("malformed event label '" + std::string(whole) + "': " + why);
  };
  const auto boxes = split(text, ';');
  if (boxes.size() != scenario.box_sizes.size()) throw fail("wrong number of boxes");
  std::vector<std::size_t> values;
  for (std::size_t box = 0; box < boxes.size(); ++box) {
    const auto fields = split(boxes[box], ',');
    if (fields.size() != scenario.box_sizes[box]) throw fail("wrong number of parties in a box");
    for (const auto field : fields) {
      const bool digits = !field.empty() && std::all_of(field.begin(), field.end(), [](char c) {
        return c >= '0' && c <= '9';
      });
      if (!digits || (field.size() > 1 && field.front() == '0') || field.size() > 9) {
        throw fail("bad index '" + std::string(field) + "'");
      }
      values.push_back(std::stoul(std::string(field)));
    }
  }
  return values;
}

void check_event(const BoxScenario& scenario, const BoxEvent& event) {
  if (event.settings.size() != scenario.parties() || event.outcomes.size() != scenario.parties()) {
    throw Error("event has the wrong number of parties");
  }
  for (std::size_t p = 0; p < scenario.parties(); ++p) {
    if (event.settings[p] >= scenario.outcomes[p].size()) {
      throw Error("setting " + std::to_string(event.settings[p]) + " out of range for party " +
                  std::to_string(p));
    }
    if (event.outcomes[p] >= scenario.outcomes[p][event.settings[p]]) {
      throw Error("outcome " + std::to_string(event.outcomes[p]) + " out of range for party " +
                  std::to_string(p));
    }
  }
}

// Mixed-radix increment; returns false after the last tuple.
bool next_tuple(std::vector<std::size_t>& tuple, const std::vector<std::size_t>& radix) {
  for (std::size_t k = tuple.size(); k-- > 0;) {
    if (++tuple[k] < radix[k]) return true;
    tuple[k] = 0;
  }
  return false;
}

std::vector<std::size_t> outcome_radix(const BoxScenario& scenario, const std::vector<std::size_t>& settings) {
  std::vector<std::size_t> radix;
  for (std::size_t p = 0; p < scenario.parties(); ++p) radix.push_back(scenario.outcomes[p][settings[p]]);
  return radix;
}

}  // namespace

std::string event_label(const BoxScenario& scenario, const BoxEvent& event) {
  return join_grouped(scenario, event.outcomes) + "|" + join_grouped(scenario, event.settings);
}

std::string context_label(const BoxScenario& scenario, const std::vector<std::size_t>& settings) {
  return join_grouped(scenario, settings);
}

BoxEvent parse_event_label(const BoxScenario& scenario, std::string_view label) {
  const auto halves = split(label, '|');
  if (halves.size() != 2) throw Error("malformed event label '" + std::string(label) + "': expected one '|'");
  BoxEvent event{parse_grouped(scenario, halves[1], label), parse_grouped(scenario, halves[0], label)};
  check_event(scenario, event);
  return event;
}

std::vector<std::vector<std::size_t>> contexts(const BoxScenario& scenario) {
  const auto radix = scenario.settings_per_party();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> tuple(radix.size(), 0);
  do {
    out.push_back(tuple);
  } while (next_tuple(tuple, radix));
  return out;
}

std::vector<BoxEvent> all_events(const BoxScenario& scenario) {
  std::vector<BoxEvent> out;
  for (const auto& settings : contexts(scenario)) {
    const auto radix = outcome_radix(scenario, settings);
    std::vector<std::size_t> outcomes(radix.size(), 0);
    do {
      out.push_back({settings, outcomes});
    } while (next_tuple(outcomes, radix));
  }
  return out;
}

// ---------------------------------------------------------------------------

Behavior::Behavior(BoxScenario scenario, const std::map<BoxEvent, Rational>& table)
    : scenario_(std::move(scenario)) {
  scenario_.check();
  std::map<std::vector<std::size_t>, Rational> context_sums;
  for (const auto& [event, p] : table) {
    check_event(scenario_, event);
    if (p.sign() < 0 || p > Rational(1)) {
      throw Error("probability " + p.to_string() + " of " + event_label(scenario_, event) + " outside [0,1]");
    }
    context_sums[event.settings] += p;
    if (!p.is_zero()) table_.emplace(event, p);
  }
  for (const auto& settings : contexts(scenario_)) {
    const auto it = context_sums.find(settings);
    const Rational sum = it == context_sums.end() ? Rational(0) : it->second;
    if (sum != Rational(1)) {
      throw Error("context " + context_label(scenario_, settings) + " sums to " + sum.to_string() + ", not 1");
    }
  }
}

Rational Behavior::probability(const BoxEvent& event) const {
  const auto it = table_.find(event);
  return it == table_.end() ? Rational(0) : it->second;
}

std::vector<BoxEvent> Behavior::support() const {
  std::vector<BoxEvent> out;
  for (const auto& entry : table_) out.push_back(entry.first);
  return out;
}

Behavior pr_box_behavior() {
  BoxScenario scenario = BoxScenario::uniform(2, 2, 2);
  std::map<BoxEvent, Rational> table;
  for (const auto& event : all_events(scenario)) {
    const std::size_t a = event.outcomes[0], b = event.outcomes[1];
    const std::size_t x = event.settings[0], y = event.settings[1];
    if ((a ^ b) == (x & y)) table.emplace(event, Rational(1, 2));
  }
  return Behavior(std::move(scenario), table);
}

Behavior deterministic_behavior(const BoxScenario& scenario,
                                const std::vector<std::vector<std::size_t>>& response) {
  std::map<BoxEvent, Rational> table;
  for (const auto& settings : contexts(scenario)) {
    BoxEvent event{settings, {}};
    for (std::size_t p = 0; p < scenario.parties(); ++p) event.outcomes.push_back(response.at(p).at(settings[p]));
    table.emplace(std::move(event), Rational(1));
  }
  return Behavior(scenario, table);
}

Behavior mix_behaviors(const std::vector<Behavior>& behaviors, const std::vector<Rational>& weights) {
  if (behaviors.empty() || behaviors.size() != weights.size()) throw Error("need one weight per behaviour");
  std::map<BoxEvent, Rational> table;
  for (std::size_t k = 0; k < behaviors.size(); ++k) {
    if (weights[k].sign() < 0) throw Error("negative mixture weight");
    if (!(behaviors[k].scenario() == behaviors.front().scenario())) throw Error("mixing different scenarios");
    for (const auto& [event, p] : behaviors[k].table()) table[event] += weights[k] * p;
  }
  return Behavior(behaviors.front().scenario(), table);
}

std::vector<std::string> no_signaling_check(const Behavior& behavior) {
  const BoxScenario& scenario = behavior.scenario();
  // marginal[(party, context)][outcome]
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<Rational>> marginal;
  for (const auto& [event, p] : behavior.table()) {
    for (std::size_t party = 0; party < scenario.parties(); ++party) {
      auto& row = marginal[{party, event.settings}];
      row.resize(scenario.outcomes[party][event.settings[party]]);
      row[event.outcomes[party]] += p;
    }
  }

  std::vector<std::string> defects;
  const auto all_contexts = contexts(scenario);
  for (std::size_t party = 0; party < scenario.parties(); ++party) {
    for (std::size_t setting = 0; setting < scenario.outcomes[party].size(); ++setting) {
      const std::size_t n_outcomes = scenario.outcomes[party][setting];
      const std::vector<std::size_t>* reference = nullptr;
      std::vector<Rational> reference_row;
      bool reported = false;
      for (const auto& ctx : all_contexts) {
        if (ctx[party] != setting || reported) continue;
        std::vector<Rational> row = marginal[{party, ctx}];
        row.resize(n_outcomes);
        if (!reference) {
          reference = &ctx;
          reference_row = std::move(row);
          continue;
        }
        for (std::size_t o = 0; o < n_outcomes; ++o) {
          if (row[o] == reference_row[o]) continue;
          defects.push_back("party " + std::to_string(party) + " setting " + std::to_string(setting) +
                            " outcome " + std::to_string(o) + ": marginal " + reference_row[o].to_string() +
                            " in context " + context_label(scenario, *reference) + " but " +
                            row[o].to_string() + " in context " + context_label(scenario, ctx));
          reported = true;
          break;
        }
      }
    }
  }
  return defects;
}

bool locally_orthogonal(const BoxEvent& a, const BoxEvent& b) {
  for (std::size_t p = 0; p < a.settings.size() && p < b.settings.size(); ++p) {
    if (a.settings[p] == b.settings[p] && a.outcomes[p] != b.outcomes[p]) return true;
  }
  return false;
}

SimplicialComplex lo_complex(const BoxScenario& scenario, const std::optional<std::vector<BoxEvent>>& support) {
  scenario.check();
  std::vector<BoxEvent> events = support ? *support : all_events(scenario);
  for (const auto& event : events) check_event(scenario, event);
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<VertexSet> facets;
  std::map<std::vector<std::size_t>, VertexSet> by_context;
  for (std::size_t i = 0; i < events.size(); ++i) {
    by_context[events[i].settings].push_back(i);
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      // Same-context pairs are covered by the context facet below.
      if (events[i].settings != events[j].settings && locally_orthogonal(events[i], events[j])) {
        facets.push_back({i, j});
      }
    }
  }
  for (auto& [settings, members] : by_context) facets.push_back(std::move(members));

  std::vector<std::string> labels;
  for (const auto& event : events) labels.push_back(event_label(scenario, event));
  return SimplicialComplex::from_facets(events.size(), std::move(facets), std::move(labels));
}

SimplicialComplex lo_complex(const Behavior& behavior, Support support) {
  if (support == Support::all) return lo_complex(behavior.scenario());
  return lo_complex(behavior.scenario(), behavior.support());
}

BoxScenario joint_scenario(const BoxScenario& s1, const BoxScenario& s2) {
  BoxScenario out = s1;
  out.outcomes.insert(out.outcomes.end(), s2.outcomes.begin(), s2.outcomes.end());
  out.box_sizes.insert(out.box_sizes.end(), s2.box_sizes.begin(), s2.box_sizes.end());
  return out;
}

Behavior product_behavior(const Behavior& b1, const Behavior& b2) {
  std::map<BoxEvent, Rational> table;
  for (const auto& [e1, p1] : b1.table()) {
    for (const auto& [e2, p2] : b2.table()) {
      BoxEvent joint = e1;
      joint.settings.insert(joint.settings.end(), e2.settings.begin(), e2.settings.end());
      joint.outcomes.insert(joint.outcomes.end(), e2.outcomes.begin(), e2.outcomes.end());
      table.emplace(std::move(joint), p1 * p2);
    }
  }
  return Behavior(joint_scenario(b1.scenario(), b2.scenario()), table);
}

Assignment assignment_from_behavior(const SimplicialComplex& complex, const Behavior& behavior) {
  if (!complex.has_labels()) throw Error("complex has no event labels to resolve");
  std::vector<Rational> values;
  values.reserve(complex.n_vertices());
  for (const auto& label : complex.labels()) {
    values.push_back(behavior.probability(parse_event_label(behavior.scenario(), label)));
  }
  return Assignment(std::move(values));
}

}  // namespace exlab
