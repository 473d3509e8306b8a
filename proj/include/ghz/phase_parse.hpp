// Phase arguments for the CLI. Symbolic multiples of pi ("pi/2", "3pi/2",
// "-pi/4") are parsed exactly so constraint surfaces are hit without decimal
// truncation; anything else goes through strtod.

#pragma once

#include <string>
#include <vector>

namespace ghz {

// Accepts "<decimal>", "[k]pi", "[k]pi/<d>" with optional sign, e.g.
// "0", "1.5707", "pi", "-pi/2", "3pi/2". Throws std::invalid_argument.
double parse_phase(const std::string& token);

// Comma-separated phases, e.g. "pi/2,0,0".
std::vector<double> parse_phase_list(const std::string& csv);

}  // namespace ghz
