#include "ghz/dichotomy.hpp"

#include <cmath>
#include <stdexcept>

namespace ghz {

PowerLawSeq::PowerLawSeq(double coeff, double expon, std::map<int, double> ov)
    : c(coeff), p(expon), overrides(std::move(ov)) {
  if (!(c >= 0.0) || !std::isfinite(c) || !std::isfinite(p)) {
    throw std::invalid_argument("power-law sequence needs finite c >= 0 and finite p");
  }
  for (const auto& [j, v] : overrides) {
    if (j < 1) throw std::invalid_argument("override index must be >= 1");
    if (!std::isfinite(v)) throw std::invalid_argument("override value must be finite");
  }
}

double PowerLawSeq::term(int j) const {
  if (j < 1) throw std::out_of_range("sequence index must be >= 1");
  auto it = overrides.find(j);
  if (it != overrides.end()) return it->second;
  if (c == 0.0) return 0.0;
  return c * std::pow(static_cast<double>(j), -p);
}

bool PowerLawSeq::is_zero() const {
  if (c != 0.0) return false;
  for (const auto& [j, v] : overrides) {
    if (v != 0.0) return false;
  }
  return true;
}

bool series_diverges(const PowerLawSeq& s) { return s.c > 0.0 && s.p <= 1.0; }

std::string to_string(Verdict v) {
  return v == Verdict::Singular ? "singular" : "equivalent";
}

void GaussianPerturbation::validate() const {
  if (base_variances.c <= 0.0) {
    throw std::invalid_argument("base variances must be strictly positive");
  }
  if (base_variances.p <= 1.0) {
    throw std::invalid_argument("base variances must be summable (exponent > 1)");
  }
  for (const auto& [j, v] : base_variances.overrides) {
    if (v <= 0.0) throw std::invalid_argument("base variance override must be > 0");
  }
}

namespace {

Classification classify_by_rate(const PowerLawSeq& rate, bool had_overrides) {
  Classification out;
  out.coefficient = rate.c;
  out.exponent = rate.p;
  out.overrides_ignored = had_overrides;
  out.verdict = series_diverges(rate) ? Verdict::Singular : Verdict::Equivalent;
  return out;
}

bool any_overrides(const GaussianPerturbation& g) {
  return !g.base_variances.overrides.empty() || !g.mean_shift.overrides.empty() ||
         !g.variance_shift.overrides.empty();
}

}  // namespace

Classification classify_mean_shift(const GaussianPerturbation& g) {
  g.validate();
  if (!g.variance_shift.is_zero()) {
    throw std::invalid_argument("mean-shift classification requires db identically zero");
  }
  // (da_j)^2 / b_j = (c_a^2 / c_b) * j^-(2 p_a - p_b)
  PowerLawSeq rate(g.mean_shift.c * g.mean_shift.c / g.base_variances.c,
                   2.0 * g.mean_shift.p - g.base_variances.p);
  return classify_by_rate(rate, any_overrides(g));
}

Classification classify_variance_shift(const GaussianPerturbation& g) {
  g.validate();
  if (!g.mean_shift.is_zero()) {
    throw std::invalid_argument("variance-shift classification requires da identically zero");
  }
  for (const auto& [j, v] : g.variance_shift.overrides) {
    if (v < 0.0) throw std::invalid_argument("variance perturbation must be >= 0");
  }
  // (db_j)^2 / b_j^2 = (c_db / c_b)^2 * j^-2(p_db - p_b)
  const double ratio = g.variance_shift.c / g.base_variances.c;
  PowerLawSeq rate(ratio * ratio, 2.0 * (g.variance_shift.p - g.base_variances.p));
  return classify_by_rate(rate, any_overrides(g));
}

double hellinger_affinity_1d(double mean1, double var1, double mean2, double var2) {
  if (!(var1 > 0.0) || !(var2 > 0.0)) {
    throw std::invalid_argument("hellinger_affinity_1d requires positive variances");
  }
  const double s1 = std::sqrt(var1), s2 = std::sqrt(var2);
  const double d = mean1 - mean2;
  return std::sqrt(2.0 * s1 * s2 / (var1 + var2)) * std::exp(-d * d / (4.0 * (var1 + var2)));
}

Classification kakutani_classify(const GaussianPerturbation& g) {
  g.validate();
  const bool mean_nonzero = !g.mean_shift.is_zero();
  const bool var_nonzero = !g.variance_shift.is_zero();
  if (mean_nonzero && var_nonzero) {
    throw std::invalid_argument("at most one of da, db may be nonzero per classification");
  }
  if (!mean_nonzero && !var_nonzero) {
    // affinity_j = 1 for every component
    return classify_by_rate(PowerLawSeq(0.0, 0.0), any_overrides(g));
  }
  if (mean_nonzero) {
    // Equal variances: -log affinity_j = (da_j)^2 / (8 b_j), exactly.
    PowerLawSeq rate(g.mean_shift.c * g.mean_shift.c / (8.0 * g.base_variances.c),
                     2.0 * g.mean_shift.p - g.base_variances.p);
    return classify_by_rate(rate, any_overrides(g));
  }
  for (const auto& [j, v] : g.variance_shift.overrides) {
    if (v < 0.0) throw std::invalid_argument("variance perturbation must be >= 0");
  }
  // r_j = db_j / b_j; -log affinity_j = r_j^2/16 + O(r_j^3) as r_j -> 0.
  // The second-order rate decides divergence on the whole power-law family:
  // if r_j does not decay (p_r <= 0) both it and the true -log affinity
  // series diverge.
  const double c_r = g.variance_shift.c / g.base_variances.c;
  const double p_r = g.variance_shift.p - g.base_variances.p;
  PowerLawSeq rate(c_r * c_r / 16.0, 2.0 * p_r);
  return classify_by_rate(rate, any_overrides(g));
}

namespace {

nlohmann::json seq_to_json(const PowerLawSeq& s) {
  nlohmann::json j{{"c", s.c}, {"p", s.p}};
  if (!s.overrides.empty()) {
    nlohmann::json ov = nlohmann::json::object();
    for (const auto& [idx, v] : s.overrides) ov[std::to_string(idx)] = v;
    j["overrides"] = ov;
  }
  return j;
}

PowerLawSeq seq_from_json(const nlohmann::json& j) {
  if (j.is_null()) return PowerLawSeq();
  std::map<int, double> ov;
  if (j.contains("overrides")) {
    for (const auto& [key, v] : j.at("overrides").items()) {
      ov[std::stoi(key)] = v.get<double>();
    }
  }
  return PowerLawSeq(j.value("c", 0.0), j.value("p", 0.0), std::move(ov));
}

}  // namespace

nlohmann::json to_json(const GaussianPerturbation& g) {
  return nlohmann::json{{"b", seq_to_json(g.base_variances)},
                        {"da", seq_to_json(g.mean_shift)},
                        {"db", seq_to_json(g.variance_shift)}};
}

GaussianPerturbation perturbation_from_json(const nlohmann::json& j) {
  GaussianPerturbation g;
  if (!j.contains("b")) throw std::invalid_argument("perturbation JSON needs a \"b\" entry");
  g.base_variances = seq_from_json(j.at("b"));
  if (j.contains("da")) g.mean_shift = seq_from_json(j.at("da"));
  if (j.contains("db")) g.variance_shift = seq_from_json(j.at("db"));
  g.validate();
  return g;
}

nlohmann::json to_json(const Classification& c) {
  return nlohmann::json{{"verdict", to_string(c.verdict)},
                        {"coefficient", c.coefficient},
                        {"exponent", c.exponent},
                        {"overrides_ignored", c.overrides_ignored}};
}

}  // namespace ghz
