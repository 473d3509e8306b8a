// Singular-vs-equivalent classification for Gaussian product measures on an
// infinite-dimensional sequence space. Mean-shift and variance-shift
// criteria decide by divergence of (da_j)^2/b_j resp. (db_j)^2/b_j^2; the
// Kakutani route decides by divergence of -log of the componentwise
// Hellinger affinity. All convergence decisions are symbolic power-law
// exponent comparisons, never numeric partial sums: truncation cannot tell
// sum 1/j from sum 1/j^1.001. Finite overrides never affect a verdict.

#pragma once

#include <map>
#include <string>

#include "json.hpp"

namespace ghz {

// t_j = c * j^(-p) for j >= 1, with optional finite per-index overrides.
// c = 0 with no overrides is the identically-zero sequence.
struct PowerLawSeq {
  double c = 0.0;                   // coefficient, >= 0
  double p = 0.0;                   // decay exponent
  std::map<int, double> overrides;  // 1-based index -> value, finitely many

  PowerLawSeq() = default;
  PowerLawSeq(double coeff, double expon, std::map<int, double> ov = {});

  double term(int j) const;
  bool is_zero() const;  // c == 0 and every override zero
};

// True iff sum_j t_j = inf: c > 0 and p <= 1 (overrides are finite and
// cannot change convergence).
bool series_diverges(const PowerLawSeq& s);

enum class Verdict { Singular, Equivalent };

std::string to_string(Verdict v);

// Verdict plus the decisive series' power-law rate coefficient * j^(-exponent).
struct Classification {
  Verdict verdict;
  double coefficient = 0.0;
  double exponent = 0.0;
  bool overrides_ignored = false;  // inputs carried finite overrides
};

// Diagonal Gaussian pair spec: base variances b_j (eigenvalues of the
// covariance operator, all > 0 and summable), mean perturbation da_j,
// variance perturbation db_j. At most one of da, db may be nonzero per
// classification call.
struct GaussianPerturbation {
  PowerLawSeq base_variances;   // b, requires c > 0 and exponent > 1 (nuclear)
  PowerLawSeq mean_shift;       // da
  PowerLawSeq variance_shift;   // db

  // Throws std::invalid_argument on non-positive b terms or a non-nuclear b.
  void validate() const;
};

// Decides by divergence of sum (da_j)^2 / b_j. Requires db identically zero.
Classification classify_mean_shift(const GaussianPerturbation& g);

// Decides by divergence of sum (db_j)^2 / b_j^2. Requires da identically
// zero and every represented db_j >= 0.
Classification classify_variance_shift(const GaussianPerturbation& g);

// Integral of sqrt(p q) for two univariate Gaussian densities:
// sqrt(2 s1 s2 / (s1^2 + s2^2)) * exp(-(m1-m2)^2 / (4 (s1^2 + s2^2))).
// In (0, 1]; equals 1 iff the distributions coincide. Throws on
// non-positive variance.
double hellinger_affinity_1d(double mean1, double var1, double mean2, double var2);

// Product-measure dichotomy: singular iff sum_j -log(affinity_j) diverges,
// decided from the analytic power-law rate of -log affinity per component.
Classification kakutani_classify(const GaussianPerturbation& g);

// JSON: {"b": {"c":..., "p":...}, "da": {...}, "db": {...}}, overrides as an
// optional object keyed by index.
nlohmann::json to_json(const GaussianPerturbation& g);
GaussianPerturbation perturbation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Classification& c);

}  // namespace ghz
