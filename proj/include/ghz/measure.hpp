// Signed measures on finite labeled sample spaces, Jordan decomposition and
// the total-variation metric. The TV norm here is sum_j |mu(lambda_j)| with
// no 1/2 factor; the event-probability distance (which does carry the 1/2)
// is exposed separately as max_event_distance.

#pragma once

#include <map>
#include <string>
#include <utility>

#include "json.hpp"

namespace ghz {

// Absolute tolerance for probability-measure checks (mass, nonnegativity).
inline constexpr double kProbTol = 1e-12;

// Finitely supported signed measure. Atoms map point labels to real weights.
// Immutable after construction; exact-zero weights are dropped so the stored
// map is the support.
class DiscreteSignedMeasure {
 public:
  DiscreteSignedMeasure() = default;
  explicit DiscreteSignedMeasure(std::map<std::string, double> atoms);

  const std::map<std::string, double>& atoms() const { return atoms_; }
  // Weight at a label, zero if the label is not an atom.
  double weight(const std::string& label) const;
  double total_mass() const;
  // All weights >= -tol and total mass within tol of 1.
  bool is_probability(double tol = kProbTol) const;

 private:
  std::map<std::string, double> atoms_;
};

// Minimal Jordan decomposition: disjointly supported nonnegative parts with
// positive_part - negative_part equal to the decomposed measure.
struct JordanPair {
  DiscreteSignedMeasure positive_part;
  DiscreteSignedMeasure negative_part;
};

JordanPair jordan_decompose(const DiscreteSignedMeasure& m);

// ||mu|| = mu+(Omega) + mu-(Omega) = sum_j |mu(lambda_j)|.
double total_variation_norm(const DiscreteSignedMeasure& m);

// rho(p, q) = ||p - q||, measures compared on the union of supports.
double tv_distance(const DiscreteSignedMeasure& p, const DiscreteSignedMeasure& q);

// sup_E |p(E) - q(E)| over all events E; equals tv_distance / 2 for
// probability measures. Throws std::invalid_argument unless both inputs are
// probability measures.
double max_event_distance(const DiscreteSignedMeasure& p, const DiscreteSignedMeasure& q);

// Per-atom comparison on the union of supports.
bool approx_equal(const DiscreteSignedMeasure& a, const DiscreteSignedMeasure& b,
                  double tol = kProbTol);

// JSON form: {"atoms": {"label": weight, ...}}.
nlohmann::json to_json(const DiscreteSignedMeasure& m);
DiscreteSignedMeasure measure_from_json(const nlohmann::json& j);

}  // namespace ghz
