#include "ghz/phase_parse.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ghz {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

double parse_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty phase token");
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + s.size()) {
    throw std::invalid_argument("cannot parse phase token '" + s + "'");
  }
  return v;
}

}  // namespace

double parse_phase(const std::string& token) {
  std::string s = token;
  double sign = 1.0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') sign = -1.0;
    s = s.substr(1);
  }
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return sign * parse_decimal(s);

  const std::string coef_str = s.substr(0, pi_pos);
  std::string rest = s.substr(pi_pos + 2);
  double coef = coef_str.empty() ? 1.0 : parse_decimal(coef_str);
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/') throw std::invalid_argument("cannot parse phase token '" + token + "'");
    denom = parse_decimal(rest.substr(1));
    if (denom == 0.0) throw std::invalid_argument("zero denominator in phase token");
  }
  return sign * coef * kPi / denom;
}

std::vector<double> parse_phase_list(const std::string& csv) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    out.push_back(parse_phase(csv.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ghz
