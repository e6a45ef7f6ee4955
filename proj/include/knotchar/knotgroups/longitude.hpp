#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotchar/knotgroups/presentation.hpp"

namespace knotchar {

struct LongitudeChoice {
  Word word;
  std::string candidate;  // name of the candidate that passed
};

/// Candidates tried in order: "standard" (reverse(w) w a^-2e), "inverse",
/// "swapped" (standard with a and b exchanged in w), "negated" (w with
/// exponents negated).
std::vector<std::pair<std::string, Word>> longitude_candidates(const TwoBridgeSpec& spec);

/// First candidate that is null-homologous and commutes with rho(a) modulo
/// the Riley polynomial. Raises LONGITUDE_CHECK_FAILED if none passes.
LongitudeChoice longitude_two_bridge(const TwoBridgeSpec& spec);

}  // namespace knotchar
