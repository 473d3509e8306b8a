// Deterministic hidden-variable assignments and the exhaustive no-go search.
//
// A constraint family references finitely many (party, setting) pairs; the
// hidden-variable space is quotiented to the deterministic +-1 response
// values at exactly those pairs, so every claim about the family can be
// checked by enumerating all 2^k assignments.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ghz/measure.hpp"
#include "json.hpp"

namespace ghz {

// Product constraint A(phi_1)...Z(phi_n) = required_sign over n parties.
struct Constraint {
  std::vector<double> settings;  // phase per party, reduced mod 2*pi
  int required_sign = +1;        // +1 or -1

  Constraint() = default;
  Constraint(std::vector<double> phase_settings, int sign);

  std::size_t parties() const { return settings.size(); }
};

// The four GHZ product constraints:
// (pi/2,0,0)->+1, (0,pi/2,0)->+1, (0,0,pi/2)->+1, (pi/2,pi/2,pi/2)->-1.
std::vector<Constraint> ghz_constraints();

// One (party, setting) response slot.
struct PairKey {
  int party = 0;
  double setting = 0.0;

  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

// Deterministic +-1 response per (party, setting) pair.
struct Assignment {
  std::map<PairKey, int> values;

  // Throws std::out_of_range if the pair is absent.
  int value(int party, double setting) const;
  // Sign string in the order of `pairs`, e.g. "++-+-+".
  std::string key(const std::vector<PairKey>& pairs) const;
};

// Distinct (party, setting) pairs of a family, sorted by (party, setting).
// Assignment enumeration order: index bit i flips pairs()[i], bit 0 handled
// first; index 0 is the all-(+1) assignment.
class AssignmentSpace {
 public:
  // Throws std::invalid_argument on an empty family or more than 24 pairs.
  explicit AssignmentSpace(const std::vector<Constraint>& family);
  // Same, from bare setting tuples (party k at tuple[k]).
  explicit AssignmentSpace(const std::vector<std::vector<double>>& setting_tuples);

  const std::vector<PairKey>& pairs() const { return pairs_; }
  std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }
  Assignment assignment(std::uint64_t index) const;
  std::string key(std::uint64_t index) const;
  // Index of an assignment given by its sign string. Throws on bad keys.
  std::uint64_t index_of_key(const std::string& key) const;

  bool satisfies_index(std::uint64_t index, const Constraint& c) const;

 private:
  std::vector<PairKey> pairs_;
};

// All 2^k assignments over the family's distinct pairs.
std::vector<Assignment> enumerate_assignments(const std::vector<Constraint>& family);

// True iff the product of a's values at c's settings equals c.required_sign.
// Throws if a is missing a referenced pair.
bool satisfies(const Assignment& a, const Constraint& c);

struct NoGoReport {
  std::uint64_t total_assignments = 0;
  std::vector<std::uint64_t> per_constraint_satisfiers;
  std::uint64_t all_constraints_satisfiers = 0;
  int max_simultaneous = 0;
  std::uint64_t max_achiever_count = 0;
  std::vector<std::string> witnesses;  // keys of max achievers, capped
};

inline constexpr std::size_t kNoGoWitnessCap = 64;

// Counts, for every assignment, how many constraints it satisfies.
NoGoReport exhaustive_no_go(const std::vector<Constraint>& family);

// Probability, under p (a probability measure keyed by `space` assignment
// strings), of the event "every constraint in cs is satisfied".
double satisfier_probability(const DiscreteSignedMeasure& p, const AssignmentSpace& space,
                             const std::vector<Constraint>& cs);

// p(Sigma+), where Sigma+ is the intersection of the satisfier sets of the
// family's +1-sign constraints, inside the family's full assignment space.
double noncontextual_sigma_plus(const DiscreteSignedMeasure& p,
                                const std::vector<Constraint>& family);

nlohmann::json to_json(const NoGoReport& r);
nlohmann::json to_json(const Constraint& c);
Constraint constraint_from_json(const nlohmann::json& j);
std::vector<Constraint> constraints_from_json(const nlohmann::json& j);

}  // namespace ghz
