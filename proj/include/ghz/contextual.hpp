// Setting-dependent hidden-variable models over a shared assignment space:
// the singular escape construction, the equivalence contradiction check, the
// minimax-fluctuation linear program and reproducible sampling.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ghz/hv.hpp"
#include "ghz/measure.hpp"
#include "json.hpp"

namespace ghz {

// One probability distribution over assignments per setting tuple. All
// distributions live on one shared assignment space (the sets of possible
// microstates do not depend on the settings).
class ContextualModel {
 public:
  // Settings are stored sorted; distributions follow their setting. Throws
  // on duplicate settings, non-probability weights or malformed keys.
  ContextualModel(std::vector<std::vector<double>> settings,
                  std::vector<DiscreteSignedMeasure> distributions);

  const AssignmentSpace& space() const { return space_; }
  const std::vector<std::vector<double>>& settings() const { return settings_; }
  std::size_t setting_index(const std::vector<double>& setting) const;  // throws if unknown
  const DiscreteSignedMeasure& distribution(const std::vector<double>& setting) const;
  const DiscreteSignedMeasure& distribution_at(std::size_t i) const { return dists_[i]; }

 private:
  AssignmentSpace space_;
  std::vector<std::vector<double>> settings_;
  std::vector<DiscreteSignedMeasure> dists_;
};

// Distribution of the induced outcome tuple at `setting` (keys like "+-+").
std::map<std::string, double> outcome_pushforward(const ContextualModel& m,
                                                  const std::vector<double>& setting);

// Mutually singular model: for each constraint, a uniform distribution over
// 2^(n-1) assignments that satisfy it, realize each admissible outcome tuple
// at the constraint's own setting exactly once, and carry a constraint-
// specific tag on the off-setting pairs so supports are pairwise disjoint.
// Off-pair tag rule: +1 iff the constraint is the lowest-indexed one having
// that pair off its own settings. Throws if disjointness cannot be achieved.
ContextualModel build_singular_contextual_model(const std::vector<Constraint>& family);

struct EquivalenceCheck {
  std::vector<double> own_probs;   // P_s(sat_s) per constraint, family order
  bool premise_holds = false;      // every +1 constraint holds w.p. 1 under its own distribution
  double sigma_plus_prob = 0.0;    // Sigma+ probability under the -1 constraint's distribution
  bool contradiction = false;          // premise holds and a -1 constraint is forced below 1
  std::size_t failing_constraint = 0;  // family index of the failing constraint, or family.size()
  double gap = 0.0;                // 1 - own_probs[failing_constraint]
};

// Common-support ("equivalent") models cannot satisfy the whole family: if
// every +1 constraint holds with probability 1, the shared support lies in
// Sigma+ and the -1 constraint's probability is pinned by it. Throws
// std::invalid_argument unless all distributions have identical support
// (the precondition of the statement) or if the family has no -1 constraint.
EquivalenceCheck check_equivalence_theorem(const ContextualModel& m,
                                           const std::vector<Constraint>& family);

struct FluctuationBound {
  double epsilon_star = 0.0;
  ContextualModel witness;
};

// Minimize the max pairwise TV distance over families {P_s} with each P_s a
// probability measure supported in constraint s's satisfier set. Dense
// simplex; objective reliable to 1e-9 at this size.
FluctuationBound lp_min_fluctuation(const std::vector<Constraint>& family);

struct SampleResult {
  std::map<std::string, std::uint64_t> assignment_counts;
  std::map<std::string, std::uint64_t> outcome_counts;
};

// n i.i.d. draws from the distribution at `setting`; deterministic given
// (model, setting, n, seed). Draws are made in fixed-size chunks with
// per-chunk derived streams, so chunk-parallel execution cannot change the
// result. Throws on unknown setting or n = 0.
SampleResult sample(const ContextualModel& m, const std::vector<double>& setting,
                    std::uint64_t n, std::uint64_t seed);

// {"settings": [[...], ...], "distributions": [{"<key>": prob, ...}, ...]}
nlohmann::json to_json(const ContextualModel& m);
ContextualModel model_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EquivalenceCheck& c);
nlohmann::json to_json(const FluctuationBound& b);

}  // namespace ghz
