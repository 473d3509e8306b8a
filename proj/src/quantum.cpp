#include "ghz/quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace ghz {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440084436210485;

// Eigenvector of cos(phi) sigma_x + sin(phi) sigma_y for eigenvalue a:
// (|0> + a e^{i phi} |1>)/sqrt(2). Returns component for qubit bit value.
std::complex<double> eigvec_component(double phi, int a, int bit) {
  if (bit == 0) return {kSqrtHalf, 0.0};
  return static_cast<double>(a) * std::polar(kSqrtHalf, phi);
}

}  // namespace

double reduce_phase(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r == kTwoPi) r = 0.0;
  return r;
}

StateVector::StateVector(std::array<std::complex<double>, 8> amplitudes)
    : amp_(amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amp_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector ghz_state() {
  std::array<std::complex<double>, 8> amp{};
  amp[0] = {kSqrtHalf, 0.0};
  amp[7] = {0.0, kSqrtHalf};
  return StateVector(amp);
}

OutcomeDistribution::OutcomeDistribution(std::array<double, 8> probabilities)
    : p_(probabilities) {
  double sum = 0.0;
  for (double p : p_) {
    if (p < -1e-12) throw std::invalid_argument("negative outcome probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("outcome probabilities do not sum to 1");
  }
}

double OutcomeDistribution::product_probability(int sign) const {
  double s = 0.0;
  for (int a : {+1, -1})
    for (int b : {+1, -1})
      for (int c : {+1, -1})
        if (a * b * c == sign) s += probability(a, b, c);
  return s;
}

std::string OutcomeDistribution::outcome_key(int a, int b, int c) {
  std::string key;
  for (int v : {a, b, c}) key += (v > 0 ? '+' : '-');
  return key;
}

std::map<std::string, double> OutcomeDistribution::as_map() const {
  std::map<std::string, double> m;
  for (int a : {+1, -1})
    for (int b : {+1, -1})
      for (int c : {+1, -1}) m[outcome_key(a, b, c)] = probability(a, b, c);
  return m;
}

OutcomeDistribution outcome_distribution(const StateVector& psi, const PhaseTriple& phases) {
  std::array<double, 8> p{};
  const double phi[3] = {phases.phi1, phases.phi2, phases.phi3};
  for (int a : {+1, -1}) {
    for (int b : {+1, -1}) {
      for (int c : {+1, -1}) {
        // <v_a x v_b x v_c | psi>
        std::complex<double> amp = 0.0;
        for (int basis = 0; basis < 8; ++basis) {
          int bits[3] = {(basis >> 2) & 1, (basis >> 1) & 1, basis & 1};
          std::complex<double> v = eigvec_component(phi[0], a, bits[0]) *
                                   eigvec_component(phi[1], b, bits[1]) *
                                   eigvec_component(phi[2], c, bits[2]);
          amp += std::conj(v) * psi.amplitude(basis);
        }
        p[OutcomeDistribution::index(a, b, c)] = std::norm(amp);
      }
    }
  }
  return OutcomeDistribution(p);
}

double product_expectation(const StateVector& psi, const PhaseTriple& phases) {
  OutcomeDistribution d = outcome_distribution(psi, phases);
  double e = 0.0;
  for (int a : {+1, -1})
    for (int b : {+1, -1})
      for (int c : {+1, -1}) e += a * b * c * d.probability(a, b, c);
  return e;
}

OutcomeDistribution closed_form_distribution(const PhaseTriple& phases) {
  const double s = std::sin(phases.sum());
  std::array<double, 8> p{};
  for (int a : {+1, -1})
    for (int b : {+1, -1})
      for (int c : {+1, -1})
        p[OutcomeDistribution::index(a, b, c)] = (1.0 + a * b * c * s) / 8.0;
  return OutcomeDistribution(p);
}

nlohmann::json to_json(const OutcomeDistribution& d) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, p] : d.as_map()) j[key] = p;
  return j;
}

}  // namespace ghz
