// Ensemble-fluctuation machinery: the probability invariant of a state
// (sup of pairwise TV distances over the realizing distributions), the
// term-by-term audit of the inequality chain that yields epsilon >= 1/3,
// and the N*delta discrete perturbation example.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ghz/contextual.hpp"
#include "ghz/measure.hpp"
#include "json.hpp"

namespace ghz {

// Probability distributions realizing one quantum state, on a common finite
// space. Nonempty; every member a probability measure.
struct DistributionFamily {
  std::vector<DiscreteSignedMeasure> members;

  explicit DistributionFamily(std::vector<DiscreteSignedMeasure> ms);
};

// epsilon = sup over pairs of tv_distance; 0 iff all members coincide (a
// singleton family realizes ensemble reproducibility).
double epsilon_invariant(const DistributionFamily& f);

// One record per quantity in the chain
//   P_m(Sigma+) = 1 - P_m(~Sigma+)
//               >= 1 - sum_i P_m(~Sat_i)
//               >= 1 - sum_i P_i(~Sat_i) - k*epsilon,
// where i ranges over the family's +1 constraints, m is the -1 constraint
// and k the number of +1 constraints. The |P(E) - Q(E)| <= epsilon step uses
// the TV norm as-is; the tighter event-distance variant is reported as a
// diagnostic only.
struct EpsilonChainAudit {
  double epsilon = 0.0;        // sup pairwise TV across the model's constraint distributions
  double epsilon_event = 0.0;  // diagnostic: sup pairwise event distance (= TV/2)
  std::vector<double> own_probs;                // P_s(Sat_s), family order
  double sigma_plus_prob = 0.0;                 // P_m(Sigma+)
  std::vector<double> minus_complement_probs;   // P_m(~Sat_i) per +1 constraint
  std::vector<double> own_complement_probs;     // P_i(~Sat_i) per +1 constraint
  double union_lower_bound = 0.0;               // 1 - sum P_m(~Sat_i)
  double chain_lower_bound = 0.0;               // 1 - sum P_i(~Sat_i) - k*epsilon
  bool chain_holds = false;                     // both inequalities verified numerically
  double epsilon_floor = 0.0;  // (1 - P_m(Sigma+) - sum P_i(~Sat_i)) / k; equals 1/3
                               // whenever the model satisfies all four constraints
  bool epsilon_bound_holds = false;             // epsilon >= epsilon_floor
  bool all_constraints_prob_one = false;
};

// Requires the model to carry a distribution for every family setting and
// the family to contain exactly one -1 constraint.
EpsilonChainAudit ghz_epsilon_chain(const ContextualModel& m,
                                    const std::vector<Constraint>& family);

struct DiscretePerturbationVerdict {
  double rho = 0.0;          // N * delta
  bool ghz_blocked = false;  // delta >= 1/(3N)
};

// Uniform P on N points vs P' = P +- delta alternating. Feasible iff delta
// is 0, or N is even with 0 <= delta <= 1/N; throws otherwise.
DiscretePerturbationVerdict discrete_perturbation_verdict(std::uint64_t n_points, double delta);

// The (P, P') pair behind the verdict, for direct TV verification.
std::pair<DiscreteSignedMeasure, DiscreteSignedMeasure> alternating_pair(std::uint64_t n_points,
                                                                         double delta);

nlohmann::json to_json(const EpsilonChainAudit& a);
nlohmann::json to_json(const DiscretePerturbationVerdict& v);

}  // namespace ghz
