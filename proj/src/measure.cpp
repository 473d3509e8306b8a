#include "ghz/measure.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace ghz {

DiscreteSignedMeasure::DiscreteSignedMeasure(std::map<std::string, double> atoms)
    : atoms_(std::move(atoms)) {
  for (auto it = atoms_.begin(); it != atoms_.end();) {
    if (!std::isfinite(it->second)) {
      throw std::invalid_argument("measure weight at '" + it->first + "' is not finite");
    }
    if (it->second == 0.0) {
      it = atoms_.erase(it);
    } else {
      ++it;
    }
  }
}

double DiscreteSignedMeasure::weight(const std::string& label) const {
  auto it = atoms_.find(label);
  return it == atoms_.end() ? 0.0 : it->second;
}

double DiscreteSignedMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& [label, w] : atoms_) s += w;
  return s;
}

bool DiscreteSignedMeasure::is_probability(double tol) const {
  for (const auto& [label, w] : atoms_) {
    if (w < -tol) return false;
  }
  return std::abs(total_mass() - 1.0) <= tol;
}

JordanPair jordan_decompose(const DiscreteSignedMeasure& m) {
  std::map<std::string, double> pos, neg;
  for (const auto& [label, w] : m.atoms()) {
    if (w > 0.0) {
      pos[label] = w;
    } else if (w < 0.0) {
      neg[label] = -w;
    }
  }
  return {DiscreteSignedMeasure(std::move(pos)), DiscreteSignedMeasure(std::move(neg))};
}

double total_variation_norm(const DiscreteSignedMeasure& m) {
  double s = 0.0;
  for (const auto& [label, w] : m.atoms()) s += std::abs(w);
  return s;
}

double tv_distance(const DiscreteSignedMeasure& p, const DiscreteSignedMeasure& q) {
  double s = 0.0;
  auto ip = p.atoms().begin(), iq = q.atoms().begin();
  while (ip != p.atoms().end() || iq != q.atoms().end()) {
    if (iq == q.atoms().end() || (ip != p.atoms().end() && ip->first < iq->first)) {
      s += std::abs(ip->second);
      ++ip;
    } else if (ip == p.atoms().end() || iq->first < ip->first) {
      s += std::abs(iq->second);
      ++iq;
    } else {
      s += std::abs(ip->second - iq->second);
      ++ip;
      ++iq;
    }
  }
  return s;
}

double max_event_distance(const DiscreteSignedMeasure& p, const DiscreteSignedMeasure& q) {
  if (!p.is_probability() || !q.is_probability()) {
    throw std::invalid_argument("max_event_distance requires two probability measures");
  }
  // The maximizing event is {lambda : p(lambda) > q(lambda)}.
  double s = 0.0;
  auto ip = p.atoms().begin(), iq = q.atoms().begin();
  while (ip != p.atoms().end() || iq != q.atoms().end()) {
    if (iq == q.atoms().end() || (ip != p.atoms().end() && ip->first < iq->first)) {
      if (ip->second > 0.0) s += ip->second;
      ++ip;
    } else if (ip == p.atoms().end() || iq->first < ip->first) {
      ++iq;
    } else {
      if (ip->second > iq->second) s += ip->second - iq->second;
      ++ip;
      ++iq;
    }
  }
  return s;
}

bool approx_equal(const DiscreteSignedMeasure& a, const DiscreteSignedMeasure& b, double tol) {
  std::set<std::string> labels;
  for (const auto& [label, w] : a.atoms()) labels.insert(label);
  for (const auto& [label, w] : b.atoms()) labels.insert(label);
  for (const auto& label : labels) {
    if (std::abs(a.weight(label) - b.weight(label)) > tol) return false;
  }
  return true;
}

nlohmann::json to_json(const DiscreteSignedMeasure& m) {
  nlohmann::json atoms = nlohmann::json::object();
  for (const auto& [label, w] : m.atoms()) atoms[label] = w;
  return nlohmann::json{{"atoms", atoms}};
}

DiscreteSignedMeasure measure_from_json(const nlohmann::json& j) {
  if (!j.contains("atoms") || !j.at("atoms").is_object()) {
    throw std::invalid_argument("measure JSON must be an object with an \"atoms\" object");
  }
  std::map<std::string, double> atoms;
  for (const auto& [label, w] : j.at("atoms").items()) {
    atoms[label] = w.get<double>();
  }
  return DiscreteSignedMeasure(std::move(atoms));
}

}  // namespace ghz
