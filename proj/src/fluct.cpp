#include "ghz/fluct.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ghz {

DistributionFamily::DistributionFamily(std::vector<DiscreteSignedMeasure> ms)
    : members(std::move(ms)) {
  if (members.empty()) throw std::invalid_argument("distribution family is empty");
  for (const auto& m : members) {
    if (!m.is_probability()) {
      throw std::invalid_argument("distribution family members must be probability measures");
    }
  }
}

double epsilon_invariant(const DistributionFamily& f) {
  double eps = 0.0;
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    for (std::size_t j = i + 1; j < f.members.size(); ++j) {
      eps = std::max(eps, tv_distance(f.members[i], f.members[j]));
    }
  }
  return eps;
}

EpsilonChainAudit ghz_epsilon_chain(const ContextualModel& m,
                                    const std::vector<Constraint>& family) {
  std::vector<Constraint> plus;
  std::size_t minus_index = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].required_sign == +1) {
      plus.push_back(family[i]);
    } else if (minus_index == family.size()) {
      minus_index = i;
    } else {
      throw std::invalid_argument("epsilon chain needs exactly one -1 constraint");
    }
  }
  if (minus_index == family.size() || plus.empty()) {
    throw std::invalid_argument("epsilon chain needs +1 constraints and one -1 constraint");
  }

  std::vector<DiscreteSignedMeasure> dists;
  for (const Constraint& c : family) dists.push_back(m.distribution(c.settings));
  const DiscreteSignedMeasure& minus_dist = dists[minus_index];

  EpsilonChainAudit out;
  out.epsilon = epsilon_invariant(DistributionFamily(dists));
  for (std::size_t i = 0; i < dists.size(); ++i) {
    for (std::size_t j = i + 1; j < dists.size(); ++j) {
      out.epsilon_event = std::max(out.epsilon_event, max_event_distance(dists[i], dists[j]));
    }
  }

  out.all_constraints_prob_one = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    out.own_probs.push_back(satisfier_probability(dists[i], m.space(), {family[i]}));
    if (out.own_probs[i] < 1.0 - kProbTol) out.all_constraints_prob_one = false;
  }
  out.sigma_plus_prob = satisfier_probability(minus_dist, m.space(), plus);

  double minus_complement_sum = 0.0, own_complement_sum = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].required_sign != +1) continue;
    const double pm = 1.0 - satisfier_probability(minus_dist, m.space(), {family[i]});
    const double po = 1.0 - out.own_probs[i];
    out.minus_complement_probs.push_back(pm);
    out.own_complement_probs.push_back(po);
    minus_complement_sum += pm;
    own_complement_sum += po;
  }
  const double k = static_cast<double>(plus.size());
  out.union_lower_bound = 1.0 - minus_complement_sum;
  out.chain_lower_bound = 1.0 - own_complement_sum - k * out.epsilon;

  bool steps_ok = out.sigma_plus_prob >= out.union_lower_bound - kProbTol &&
                  out.union_lower_bound >= out.chain_lower_bound - kProbTol;
  for (std::size_t i = 0; i < out.minus_complement_probs.size(); ++i) {
    if (out.minus_complement_probs[i] >
        out.own_complement_probs[i] + out.epsilon + kProbTol) {
      steps_ok = false;
    }
  }
  out.chain_holds = steps_ok;
  out.epsilon_floor = (1.0 - out.sigma_plus_prob - own_complement_sum) / k;
  out.epsilon_bound_holds = out.epsilon >= out.epsilon_floor - kProbTol;
  return out;
}

DiscretePerturbationVerdict discrete_perturbation_verdict(std::uint64_t n_points, double delta) {
  if (n_points < 1) throw std::invalid_argument("need at least one point");
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("delta must be finite and >= 0");
  }
  const double n = static_cast<double>(n_points);
  if (delta > 0.0) {
    if (n_points % 2 != 0) {
      throw std::invalid_argument("alternating construction needs an even number of points");
    }
    if (delta > 1.0 / n) {
      throw std::invalid_argument("delta > 1/N leaves negative probabilities");
    }
  }
  DiscretePerturbationVerdict out;
  out.rho = n * delta;
  out.ghz_blocked = delta >= 1.0 / (3.0 * n);
  return out;
}

std::pair<DiscreteSignedMeasure, DiscreteSignedMeasure> alternating_pair(std::uint64_t n_points,
                                                                         double delta) {
  discrete_perturbation_verdict(n_points, delta);  // feasibility gate
  std::map<std::string, double> p, q;
  const double base = 1.0 / static_cast<double>(n_points);
  for (std::uint64_t j = 0; j < n_points; ++j) {
    // Zero-padded labels keep map order equal to point order.
    std::string label = std::to_string(j);
    label.insert(0, std::to_string(n_points - 1).size() - label.size(), '0');
    p[label] = base;
    q[label] = (j % 2 == 0) ? base + delta : base - delta;
  }
  return {DiscreteSignedMeasure(std::move(p)), DiscreteSignedMeasure(std::move(q))};
}

nlohmann::json to_json(const EpsilonChainAudit& a) {
  return nlohmann::json{{"epsilon", a.epsilon},
                        {"epsilon_event", a.epsilon_event},
                        {"own_probs", a.own_probs},
                        {"sigma_plus_prob", a.sigma_plus_prob},
                        {"minus_complement_probs", a.minus_complement_probs},
                        {"own_complement_probs", a.own_complement_probs},
                        {"union_lower_bound", a.union_lower_bound},
                        {"chain_lower_bound", a.chain_lower_bound},
                        {"chain_holds", a.chain_holds},
                        {"epsilon_floor", a.epsilon_floor},
                        {"epsilon_bound_holds", a.epsilon_bound_holds},
                        {"all_constraints_prob_one", a.all_constraints_prob_one}};
}

nlohmann::json to_json(const DiscretePerturbationVerdict& v) {
  return nlohmann::json{{"rho", v.rho}, {"ghz_blocked", v.ghz_blocked}};
}

}  // namespace ghz
