#include "ghz/hv.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ghz/quantum.hpp"

namespace ghz {

namespace {

constexpr double kHalfPi = 1.5707963267948966192313216916398;

}  // namespace

Constraint::Constraint(std::vector<double> phase_settings, int sign)
    : settings(std::move(phase_settings)), required_sign(sign) {
  if (required_sign != +1 && required_sign != -1) {
    throw std::invalid_argument("constraint sign must be +1 or -1");
  }
  if (settings.size() < 2) {
    throw std::invalid_argument("constraint needs at least 2 parties");
  }
  for (double& s : settings) s = reduce_phase(s);
}

std::vector<Constraint> ghz_constraints() {
  return {Constraint({kHalfPi, 0.0, 0.0}, +1), Constraint({0.0, kHalfPi, 0.0}, +1),
          Constraint({0.0, 0.0, kHalfPi}, +1), Constraint({kHalfPi, kHalfPi, kHalfPi}, -1)};
}

int Assignment::value(int party, double setting) const {
  auto it = values.find(PairKey{party, reduce_phase(setting)});
  if (it == values.end()) {
    throw std::out_of_range("assignment has no value for party " + std::to_string(party) +
                            " at setting " + std::to_string(setting));
  }
  return it->second;
}

std::string Assignment::key(const std::vector<PairKey>& pairs) const {
  std::string k;
  k.reserve(pairs.size());
  for (const PairKey& p : pairs) {
    auto it = values.find(p);
    if (it == values.end()) throw std::out_of_range("assignment missing a pair for its key");
    k += (it->second > 0 ? '+' : '-');
  }
  return k;
}

AssignmentSpace::AssignmentSpace(const std::vector<Constraint>& family) {
  if (family.empty()) throw std::invalid_argument("constraint family is empty");
  std::set<PairKey> pairs;
  for (const Constraint& c : family) {
    for (std::size_t k = 0; k < c.settings.size(); ++k) {
      pairs.insert(PairKey{static_cast<int>(k), c.settings[k]});
    }
  }
  if (pairs.size() > 24) {
    throw std::invalid_argument("constraint family references more than 24 (party, setting) pairs");
  }
  pairs_.assign(pairs.begin(), pairs.end());
}

AssignmentSpace::AssignmentSpace(const std::vector<std::vector<double>>& setting_tuples) {
  if (setting_tuples.empty()) throw std::invalid_argument("no setting tuples");
  std::set<PairKey> pairs;
  for (const auto& tuple : setting_tuples) {
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      pairs.insert(PairKey{static_cast<int>(k), reduce_phase(tuple[k])});
    }
  }
  if (pairs.size() > 24) {
    throw std::invalid_argument("setting tuples reference more than 24 (party, setting) pairs");
  }
  pairs_.assign(pairs.begin(), pairs.end());
}

Assignment AssignmentSpace::assignment(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("assignment index out of range");
  Assignment a;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    a.values[pairs_[i]] = ((index >> i) & 1) ? -1 : +1;
  }
  return a;
}

std::string AssignmentSpace::key(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("assignment index out of range");
  std::string k;
  k.reserve(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    k += ((index >> i) & 1) ? '-' : '+';
  }
  return k;
}

std::uint64_t AssignmentSpace::index_of_key(const std::string& key) const {
  if (key.size() != pairs_.size()) {
    throw std::invalid_argument("assignment key length does not match pair count");
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] == '-') {
      index |= std::uint64_t{1} << i;
    } else if (key[i] != '+') {
      throw std::invalid_argument("assignment key must consist of '+' and '-'");
    }
  }
  return index;
}

bool AssignmentSpace::satisfies_index(std::uint64_t index, const Constraint& c) const {
  int prod = 1;
  for (std::size_t k = 0; k < c.settings.size(); ++k) {
    PairKey want{static_cast<int>(k), c.settings[k]};
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), want);
    if (it == pairs_.end() || *it != want) {
      throw std::out_of_range("constraint references a pair outside the assignment space");
    }
    std::size_t i = static_cast<std::size_t>(it - pairs_.begin());
    prod *= ((index >> i) & 1) ? -1 : +1;
  }
  return prod == c.required_sign;
}

std::vector<Assignment> enumerate_assignments(const std::vector<Constraint>& family) {
  AssignmentSpace space(family);
  std::vector<Assignment> out;
  out.reserve(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.assignment(i));
  return out;
}

bool satisfies(const Assignment& a, const Constraint& c) {
  int prod = 1;
  for (std::size_t k = 0; k < c.settings.size(); ++k) {
    prod *= a.value(static_cast<int>(k), c.settings[k]);
  }
  return prod == c.required_sign;
}

NoGoReport exhaustive_no_go(const std::vector<Constraint>& family) {
  AssignmentSpace space(family);
  NoGoReport r;
  r.total_assignments = space.size();
  r.per_constraint_satisfiers.assign(family.size(), 0);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    int hits = 0;
    for (std::size_t c = 0; c < family.size(); ++c) {
      if (space.satisfies_index(i, family[c])) {
        ++r.per_constraint_satisfiers[c];
        ++hits;
      }
    }
    if (hits == static_cast<int>(family.size())) ++r.all_constraints_satisfiers;
    if (hits > r.max_simultaneous) {
      r.max_simultaneous = hits;
      r.max_achiever_count = 0;
      r.witnesses.clear();
    }
    if (hits == r.max_simultaneous) {
      ++r.max_achiever_count;
      if (r.witnesses.size() < kNoGoWitnessCap) r.witnesses.push_back(space.key(i));
    }
  }
  return r;
}

double satisfier_probability(const DiscreteSignedMeasure& p, const AssignmentSpace& space,
                             const std::vector<Constraint>& cs) {
  if (!p.is_probability()) {
    throw std::invalid_argument("satisfier_probability requires a probability measure");
  }
  double total = 0.0;
  for (const auto& [key, w] : p.atoms()) {
    std::uint64_t idx = space.index_of_key(key);
    bool all = true;
    for (const Constraint& c : cs) {
      if (!space.satisfies_index(idx, c)) {
        all = false;
        break;
      }
    }
    if (all) total += w;
  }
  return total;
}

double noncontextual_sigma_plus(const DiscreteSignedMeasure& p,
                                const std::vector<Constraint>& family) {
  AssignmentSpace space(family);
  std::vector<Constraint> plus;
  for (const Constraint& c : family) {
    if (c.required_sign == +1) plus.push_back(c);
  }
  return satisfier_probability(p, space, plus);
}

nlohmann::json to_json(const NoGoReport& r) {
  return nlohmann::json{{"total_assignments", r.total_assignments},
                        {"per_constraint_satisfiers", r.per_constraint_satisfiers},
                        {"all_constraints_satisfiers", r.all_constraints_satisfiers},
                        {"max_simultaneous", r.max_simultaneous},
                        {"max_achiever_count", r.max_achiever_count},
                        {"witnesses", r.witnesses}};
}

nlohmann::json to_json(const Constraint& c) {
  return nlohmann::json{{"settings", c.settings}, {"sign", c.required_sign}};
}

Constraint constraint_from_json(const nlohmann::json& j) {
  if (!j.contains("settings") || !j.contains("sign")) {
    throw std::invalid_argument("constraint JSON needs \"settings\" and \"sign\"");
  }
  return Constraint(j.at("settings").get<std::vector<double>>(), j.at("sign").get<int>());
}

std::vector<Constraint> constraints_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("constraint family JSON must be an array");
  std::vector<Constraint> out;
  for (const auto& item : j) out.push_back(constraint_from_json(item));
  if (out.empty()) throw std::invalid_argument("constraint family is empty");
  return out;
}

}  // namespace ghz
