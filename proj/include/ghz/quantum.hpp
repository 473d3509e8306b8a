// Quantum predictions for the three-photon interference experiment.
//
// Reference convention: state (|000> + i|111>)/sqrt(2), per-party observable
// sigma(phi) = cos(phi) sigma_x + sin(phi) sigma_y with +-1 eigenvectors
// (|0> + a e^{i phi} |1>)/sqrt(2). This yields E[ABC] = sin(phi1+phi2+phi3)
// and per-outcome probabilities (1 + abc sin(phi1+phi2+phi3))/8.

#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include "json.hpp"

namespace ghz {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Reduce an angle into [0, 2*pi).
double reduce_phase(double phi);

// Three phase-shift settings, stored reduced mod 2*pi into [0, 2*pi).
struct PhaseTriple {
  double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0;

  PhaseTriple() = default;
  PhaseTriple(double a, double b, double c)
      : phi1(reduce_phase(a)), phi2(reduce_phase(b)), phi3(reduce_phase(c)) {}

  double sum() const { return phi1 + phi2 + phi3; }
};

// Normalized three-qubit state. Basis index packs the party bits as
// 4*b_A + 2*b_B + b_C, so amplitude(0) is |000> and amplitude(7) is |111>.
class StateVector {
 public:
  // Throws std::invalid_argument unless sum |amp|^2 = 1 within 1e-12.
  explicit StateVector(std::array<std::complex<double>, 8> amplitudes);

  const std::complex<double>& amplitude(int basis_index) const { return amp_[basis_index]; }

 private:
  std::array<std::complex<double>, 8> amp_;
};

// (|000> + i|111>)/sqrt(2).
StateVector ghz_state();

// Probability per outcome triple (a, b, c) in {+1, -1}^3.
class OutcomeDistribution {
 public:
  // Throws unless all probabilities >= 0 and sum = 1 within 1e-12.
  explicit OutcomeDistribution(std::array<double, 8> probabilities);

  double probability(int a, int b, int c) const { return p_[index(a, b, c)]; }
  // Probability that the product abc equals sign (+1 or -1).
  double product_probability(int sign) const;

  // Keys are sign strings in party order, e.g. "+-+".
  std::map<std::string, double> as_map() const;

  static int index(int a, int b, int c) {
    return ((a < 0) << 2) | ((b < 0) << 1) | (c < 0);
  }
  static std::string outcome_key(int a, int b, int c);

 private:
  std::array<double, 8> p_;
};

// Born probabilities: for party k the observable is
// cos(phi_k) sigma_x + sin(phi_k) sigma_y, measured by projecting psi onto
// tensor products of the +-1 eigenvectors.
OutcomeDistribution outcome_distribution(const StateVector& psi, const PhaseTriple& phases);

// E[A B C] = sum_{abc} abc p(a,b,c).
double product_expectation(const StateVector& psi, const PhaseTriple& phases);

// p(a,b,c) = (1 + abc sin(phi1+phi2+phi3)) / 8, the closed form of the
// reference convention. Used as the target outcome law for model builders.
OutcomeDistribution closed_form_distribution(const PhaseTriple& phases);

// {"+++": p, "++-": p, ...}
nlohmann::json to_json(const OutcomeDistribution& d);

}  // namespace ghz
