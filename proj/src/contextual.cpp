#include "ghz/contextual.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ghz/quantum.hpp"
#include "ghz/rng.hpp"
#include "ghz/simplex.hpp"

namespace ghz {

namespace {

std::vector<double> reduce_tuple(const std::vector<double>& tuple) {
  std::vector<double> out(tuple.size());
  for (std::size_t k = 0; k < tuple.size(); ++k) out[k] = reduce_phase(tuple[k]);
  return out;
}

}  // namespace

ContextualModel::ContextualModel(std::vector<std::vector<double>> settings,
                                 std::vector<DiscreteSignedMeasure> distributions)
    : space_(settings) {
  if (settings.size() != distributions.size()) {
    throw std::invalid_argument("settings and distributions must align");
  }
  std::vector<std::size_t> order(settings.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (auto& s : settings) s = reduce_tuple(s);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return settings[a] < settings[b]; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (settings[order[i]] == settings[order[i + 1]]) {
      throw std::invalid_argument("duplicate setting tuple in contextual model");
    }
  }
  for (std::size_t i : order) {
    const DiscreteSignedMeasure& d = distributions[i];
    if (!d.is_probability()) {
      throw std::invalid_argument("contextual model distributions must be probability measures");
    }
    for (const auto& [key, w] : d.atoms()) space_.index_of_key(key);  // validates
    settings_.push_back(std::move(settings[i]));
    dists_.push_back(std::move(distributions[i]));
  }
}

std::size_t ContextualModel::setting_index(const std::vector<double>& setting) const {
  std::vector<double> s = reduce_tuple(setting);
  for (std::size_t i = 0; i < settings_.size(); ++i) {
    if (settings_[i] == s) return i;
  }
  throw std::out_of_range("setting tuple not present in contextual model");
}

const DiscreteSignedMeasure& ContextualModel::distribution(
    const std::vector<double>& setting) const {
  return dists_[setting_index(setting)];
}

std::map<std::string, double> outcome_pushforward(const ContextualModel& m,
                                                  const std::vector<double>& setting) {
  const std::size_t si = m.setting_index(setting);
  const std::vector<double> s = reduce_tuple(setting);
  std::map<std::string, double> out;
  for (const auto& [key, w] : m.distribution_at(si).atoms()) {
    const std::uint64_t idx = m.space().index_of_key(key);
    const Assignment a = m.space().assignment(idx);
    std::string outcome;
    outcome.reserve(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      outcome += (a.value(static_cast<int>(k), s[k]) > 0 ? '+' : '-');
    }
    out[outcome] += w;
  }
  return out;
}

ContextualModel build_singular_contextual_model(const std::vector<Constraint>& family) {
  AssignmentSpace space(family);
  const auto& pairs = space.pairs();

  // Off-pair tag: +1 iff this constraint is the lowest-indexed one for which
  // the pair is off-setting.
  auto is_on_pair = [&](const Constraint& c, const PairKey& q) {
    return q.party < static_cast<int>(c.settings.size()) &&
           c.settings[q.party] == q.setting;
  };
  auto min_off_holder = [&](const PairKey& q) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!is_on_pair(family[i], q)) return i;
    }
    return family.size();
  };

  std::vector<std::vector<double>> settings;
  std::vector<DiscreteSignedMeasure> dists;
  std::vector<std::set<std::string>> supports;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Constraint& c = family[i];
    const std::size_t n = c.parties();
    std::map<std::string, double> atoms;
    std::set<std::string> support;
    // One support assignment per admissible outcome tuple (product = sign).
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
      int prod = 1;
      for (std::size_t k = 0; k < n; ++k) prod *= ((t >> k) & 1) ? -1 : +1;
      if (prod != c.required_sign) continue;
      Assignment a;
      for (const PairKey& q : pairs) {
        if (is_on_pair(c, q)) {
          a.values[q] = ((t >> q.party) & 1) ? -1 : +1;
        } else {
          a.values[q] = (min_off_holder(q) == i) ? +1 : -1;
        }
      }
      if (!satisfies(a, c)) {
        throw std::logic_error("singular model support assignment violates its constraint");
      }
      const std::string key = a.key(pairs);
      support.insert(key);
      atoms[key] = 1.0 / static_cast<double>(std::uint64_t{1} << (n - 1));
    }
    for (const auto& other : supports) {
      for (const auto& key : support) {
        if (other.count(key)) {
          throw std::invalid_argument(
              "cannot build disjoint supports for this constraint family");
        }
      }
    }
    supports.push_back(std::move(support));
    settings.push_back(c.settings);
    dists.emplace_back(std::move(atoms));
  }
  return ContextualModel(std::move(settings), std::move(dists));
}

EquivalenceCheck check_equivalence_theorem(const ContextualModel& m,
                                           const std::vector<Constraint>& family) {
  if (family.empty()) throw std::invalid_argument("constraint family is empty");
  // Precondition: identical supports, i.e. mutual absolute continuity on a
  // finite space.
  auto support_of = [](const DiscreteSignedMeasure& d) {
    std::set<std::string> s;
    for (const auto& [key, w] : d.atoms()) s.insert(key);
    return s;
  };
  const std::set<std::string> ref = support_of(m.distribution_at(0));
  for (std::size_t i = 1; i < m.settings().size(); ++i) {
    if (support_of(m.distribution_at(i)) != ref) {
      throw std::invalid_argument(
          "equivalence check requires identical supports across distributions");
    }
  }

  EquivalenceCheck out;
  out.failing_constraint = family.size();
  std::vector<Constraint> plus;
  std::size_t minus_index = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    out.own_probs.push_back(
        satisfier_probability(m.distribution(family[i].settings), m.space(), {family[i]}));
    if (family[i].required_sign == +1) {
      plus.push_back(family[i]);
    } else if (minus_index == family.size()) {
      minus_index = i;
    }
  }
  if (minus_index == family.size()) {
    throw std::invalid_argument("equivalence check needs a -1 constraint in the family");
  }
  out.premise_holds = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].required_sign == +1 && out.own_probs[i] < 1.0 - kProbTol) {
      out.premise_holds = false;
    }
  }
  out.sigma_plus_prob =
      satisfier_probability(m.distribution(family[minus_index].settings), m.space(), plus);
  if (out.premise_holds) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].required_sign == -1 && out.own_probs[i] < 1.0 - kProbTol) {
        out.contradiction = true;
        out.failing_constraint = i;
        out.gap = 1.0 - out.own_probs[i];
        break;
      }
    }
  }
  return out;
}

FluctuationBound lp_min_fluctuation(const std::vector<Constraint>& family) {
  AssignmentSpace space(family);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].settings == family[j].settings) {
        throw std::invalid_argument("duplicate setting tuples in LP constraint family");
      }
    }
  }

  std::vector<std::vector<std::uint64_t>> sat(family.size());
  for (std::size_t s = 0; s < family.size(); ++s) {
    for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
      if (space.satisfies_index(idx, family[s])) sat[s].push_back(idx);
    }
    if (sat[s].empty()) {
      throw std::invalid_argument("LP infeasible: a constraint has an empty satisfier set");
    }
  }

  std::vector<std::vector<double>> settings;
  for (const Constraint& c : family) settings.push_back(c.settings);

  if (family.size() == 1) {
    std::map<std::string, double> atoms;
    for (std::uint64_t idx : sat[0]) atoms[space.key(idx)] = 1.0 / sat[0].size();
    std::vector<DiscreteSignedMeasure> dists;
    dists.emplace_back(std::move(atoms));
    return {0.0, ContextualModel(std::move(settings), std::move(dists))};
  }

  // Variables: p_{s,a} for a in sat[s]; d_{st,a} >= |p_s(a) - p_t(a)| per
  // pair on the union of supports; epsilon last. Minimize epsilon subject to
  // sum_a d_{st,a} <= epsilon and sum_a p_{s,a} = 1.
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> pvar;
  std::size_t nvar = 0;
  for (std::size_t s = 0; s < family.size(); ++s) {
    for (std::uint64_t idx : sat[s]) pvar[{s, idx}] = nvar++;
  }
  struct PairBlock {
    std::size_t s, t;
    std::vector<std::uint64_t> atoms;
    std::size_t dbase;
  };
  std::vector<PairBlock> blocks;
  for (std::size_t s = 0; s < family.size(); ++s) {
    for (std::size_t t = s + 1; t < family.size(); ++t) {
      PairBlock blk{s, t, {}, 0};
      std::set<std::uint64_t> u(sat[s].begin(), sat[s].end());
      u.insert(sat[t].begin(), sat[t].end());
      blk.atoms.assign(u.begin(), u.end());
      blk.dbase = nvar;
      nvar += blk.atoms.size();
      blocks.push_back(std::move(blk));
    }
  }
  const std::size_t eps_var = nvar++;

  std::vector<std::vector<double>> a;
  std::vector<double> b;
  auto add_row = [&]() -> std::vector<double>& {
    a.emplace_back(nvar, 0.0);
    return a.back();
  };
  for (const PairBlock& blk : blocks) {
    for (std::size_t k = 0; k < blk.atoms.size(); ++k) {
      const std::uint64_t atom = blk.atoms[k];
      auto ps = pvar.find({blk.s, atom});
      auto pt = pvar.find({blk.t, atom});
      for (int sign : {+1, -1}) {
        auto& row = add_row();
        if (ps != pvar.end()) row[ps->second] = sign;
        if (pt != pvar.end()) row[pt->second] = -sign;
        row[blk.dbase + k] = -1.0;
        b.push_back(0.0);
      }
    }
    auto& row = add_row();
    for (std::size_t k = 0; k < blk.atoms.size(); ++k) row[blk.dbase + k] = 1.0;
    row[eps_var] = -1.0;
    b.push_back(0.0);
  }
  for (std::size_t s = 0; s < family.size(); ++s) {
    auto& up = add_row();
    for (std::uint64_t idx : sat[s]) up[pvar[{s, idx}]] = 1.0;
    b.push_back(1.0);
    auto& down = add_row();
    for (std::uint64_t idx : sat[s]) down[pvar[{s, idx}]] = -1.0;
    b.push_back(-1.0);
  }
  std::vector<double> c(nvar, 0.0);
  c[eps_var] = -1.0;  // maximize -epsilon

  SimplexSolver solver(std::move(a), std::move(b), std::move(c));
  std::vector<double> x;
  double objective = 0.0;
  if (solver.solve(x, objective) != SimplexSolver::Status::Optimal) {
    throw std::runtime_error("fluctuation LP did not reach an optimum");
  }

  std::vector<DiscreteSignedMeasure> dists;
  for (std::size_t s = 0; s < family.size(); ++s) {
    std::map<std::string, double> atoms;
    double mass = 0.0;
    for (std::uint64_t idx : sat[s]) {
      double w = std::max(0.0, x[pvar[{s, idx}]]);
      if (w > 0.0) atoms[space.key(idx)] = w;
      mass += w;
    }
    if (std::abs(mass - 1.0) > 1e-6) {
      throw std::runtime_error("LP witness distribution mass is off");
    }
    for (auto& [key, w] : atoms) w /= mass;
    dists.emplace_back(std::move(atoms));
  }
  return {-objective, ContextualModel(std::move(settings), std::move(dists))};
}

namespace {

constexpr std::uint64_t kSampleChunk = 1 << 16;

}  // namespace

SampleResult sample(const ContextualModel& m, const std::vector<double>& setting,
                    std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample count must be >= 1");
  const std::size_t si = m.setting_index(setting);
  const std::vector<double> s = reduce_tuple(setting);
  const DiscreteSignedMeasure& dist = m.distribution_at(si);

  std::vector<std::string> keys;
  std::vector<std::string> outcomes;
  std::vector<double> cumulative;
  double total = 0.0;
  for (const auto& [key, w] : dist.atoms()) {
    total += w;
    keys.push_back(key);
    cumulative.push_back(total);
    const Assignment a = m.space().assignment(m.space().index_of_key(key));
    std::string outcome;
    for (std::size_t k = 0; k < s.size(); ++k) {
      outcome += (a.value(static_cast<int>(k), s[k]) > 0 ? '+' : '-');
    }
    outcomes.push_back(std::move(outcome));
  }

  std::vector<std::uint64_t> counts(keys.size(), 0);
  const std::uint64_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
    auto eng = make_engine(derive_stream(seed, si, chunk));
    const std::uint64_t lo = chunk * kSampleChunk;
    const std::uint64_t hi = std::min(n, lo + kSampleChunk);
    for (std::uint64_t draw = lo; draw < hi; ++draw) {
      const double u = uniform01(eng) * total;
      const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u,
                                       [](double cum, double v) { return cum <= v; });
      const std::size_t pick =
          std::min(static_cast<std::size_t>(it - cumulative.begin()), keys.size() - 1);
      ++counts[pick];
    }
  }

  SampleResult out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (counts[i] == 0) continue;
    out.assignment_counts[keys[i]] += counts[i];
    out.outcome_counts[outcomes[i]] += counts[i];
  }
  return out;
}

nlohmann::json to_json(const ContextualModel& m) {
  nlohmann::json settings = nlohmann::json::array();
  nlohmann::json dists = nlohmann::json::array();
  for (std::size_t i = 0; i < m.settings().size(); ++i) {
    settings.push_back(m.settings()[i]);
    nlohmann::json d = nlohmann::json::object();
    for (const auto& [key, w] : m.distribution_at(i).atoms()) d[key] = w;
    dists.push_back(std::move(d));
  }
  return nlohmann::json{{"settings", settings}, {"distributions", dists}};
}

ContextualModel model_from_json(const nlohmann::json& j) {
  if (!j.contains("settings") || !j.contains("distributions")) {
    throw std::invalid_argument("model JSON needs \"settings\" and \"distributions\"");
  }
  auto settings = j.at("settings").get<std::vector<std::vector<double>>>();
  std::vector<DiscreteSignedMeasure> dists;
  for (const auto& d : j.at("distributions")) {
    std::map<std::string, double> atoms;
    for (const auto& [key, w] : d.items()) atoms[key] = w.get<double>();
    dists.emplace_back(std::move(atoms));
  }
  return ContextualModel(std::move(settings), std::move(dists));
}

nlohmann::json to_json(const EquivalenceCheck& c) {
  nlohmann::json j{{"own_probs", c.own_probs},
                   {"premise_holds", c.premise_holds},
                   {"sigma_plus_prob", c.sigma_plus_prob},
                   {"contradiction", c.contradiction},
                   {"gap", c.gap}};
  if (c.contradiction) j["failing_constraint"] = c.failing_constraint;
  return j;
}

nlohmann::json to_json(const FluctuationBound& b) {
  return nlohmann::json{{"epsilon_star", b.epsilon_star}, {"witness", to_json(b.witness)}};
}

}  // namespace ghz
