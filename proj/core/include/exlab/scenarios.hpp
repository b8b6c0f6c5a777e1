#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exlab/bounds.hpp"
#include "exlab/complex.hpp"
#include "exlab/rational.hpp"

namespace exlab {

// ---------------------------------------------------------------------------
// Five-event examples and their families.

/// Facets {i, i+1 mod n}. Throws exlab::Error for n < 3.
SimplicialComplex cycle_complex(std::size_t n);
/// Every pair of the n vertices is exclusive, nothing larger.
SimplicialComplex complete_graph_complex(std::size_t n);
/// The single facet {0, ..., n-1}.
SimplicialComplex full_simplex_complex(std::size_t n);

inline SimplicialComplex pentagon() { return cycle_complex(5); }
inline SimplicialComplex pentagram() { return complete_graph_complex(5); }
inline SimplicialComplex pentachoron() { return full_simplex_complex(5); }

// ---------------------------------------------------------------------------
// Bell-type box scenarios.

/// Parties grouped into boxes; outcomes[p][s] is the number of outcomes of
/// party p under setting s. Box grouping only affects event labels.
struct BoxScenario {
  std::vector<std::vector<std::size_t>> outcomes;
  std::vector<std::size_t> box_sizes;

  /// Every party with the same number of settings and outcomes, in one box.
  static BoxScenario uniform(std::size_t parties, std::size_t settings, std::size_t outcomes);

  std::size_t parties() const { return outcomes.size(); }
  std::vector<std::size_t> settings_per_party() const;

  /// Throws exlab::Error if any count is zero or the box sizes do not add
  /// up to the number of parties.
  void check() const;

  friend bool operator==(const BoxScenario&, const BoxScenario&) = default;
};

/// One fine-grained event: a setting and an outcome for every party.
struct BoxEvent {
  std::vector<std::size_t> settings;
  std::vector<std::size_t> outcomes;

  friend auto operator<=>(const BoxEvent&, const BoxEvent&) = default;
};

/// Label "o1,o2;o3,o4|s1,s2;s3,s4": ',' separates parties within a box,
/// ';' separates boxes, outcomes come before the stroke.
std::string event_label(const BoxScenario& scenario, const BoxEvent& event);
/// Strict inverse of event_label. Throws exlab::Error on any deviation.
BoxEvent parse_event_label(const BoxScenario& scenario, std::string_view label);
/// The settings part of a label, e.g. "0,1;1,0".
std::string context_label(const BoxScenario& scenario, const std::vector<std::size_t>& settings);

/// All settings tuples, lexicographic with party 0 most significant.
std::vector<std::vector<std::size_t>> contexts(const BoxScenario& scenario);
/// All events, ordered by settings tuple then outcome tuple.
std::vector<BoxEvent> all_events(const BoxScenario& scenario);

/// Conditional outcome table P(outcomes | settings). Only non-zero entries
/// are stored.
class Behavior {
 public:
  Behavior() = default;
  /// Throws exlab::Error for events outside the scenario, entries outside
  /// [0,1], or a context whose probabilities do not sum to exactly 1.
  Behavior(BoxScenario scenario, const std::map<BoxEvent, Rational>& table);

  const BoxScenario& scenario() const { return scenario_; }
  const std::map<BoxEvent, Rational>& table() const { return table_; }
  Rational probability(const BoxEvent& event) const;
  /// Events with non-zero probability, in canonical order.
  std::vector<BoxEvent> support() const;

  friend bool operator==(const Behavior&, const Behavior&) = default;

 private:
  BoxScenario scenario_;
  std::map<BoxEvent, Rational> table_;
};

/// P(a, b | x, y) = 1/2 if a xor b = x and y, else 0.
Behavior pr_box_behavior();

/// Local deterministic box: party p answers response[p][s] to setting s.
Behavior deterministic_behavior(const BoxScenario& scenario,
                                const std::vector<std::vector<std::size_t>>& response);
/// Convex combination; weights must be non-negative and sum to 1.
Behavior mix_behaviors(const std::vector<Behavior>& behaviors, const std::vector<Rational>& weights);

/// One entry per (party, setting) whose outcome marginal depends on the
/// other parties' settings; empty iff the behaviour is no-signalling.
std::vector<std::string> no_signaling_check(const Behavior& behavior);

/// Some party uses the same setting in both events with different outcomes.
bool locally_orthogonal(const BoxEvent& a, const BoxEvent& b);

/// Exclusivity complex from local orthogonality: all LO pairs plus, per
/// context, the set of its outcome events. Vertices are the support events
/// (all events by default) in canonical order, labelled by event_label.
SimplicialComplex lo_complex(const BoxScenario& scenario,
                             const std::optional<std::vector<BoxEvent>>& support = std::nullopt);

enum class Support { all, nonzero };
SimplicialComplex lo_complex(const Behavior& behavior, Support support);

/// Parties (and boxes) of s1 followed by those of s2.
BoxScenario joint_scenario(const BoxScenario& s1, const BoxScenario& s2);
/// Two independent boxes: entries are products.
Behavior product_behavior(const Behavior& b1, const Behavior& b2);

/// Reads each vertex label as an event and looks up its probability.
/// Throws exlab::Error for an unlabelled complex or an unparsable label.
Assignment assignment_from_behavior(const SimplicialComplex& complex, const Behavior& behavior);

}  // namespace exlab
