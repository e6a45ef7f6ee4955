#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotchar/cli/knot_spec.hpp"

namespace knotchar {

struct SuiteReport {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool passed() const { return failures == 0 && cases > 0; }
};

/// Names in run order: resultant, squarefree, cayley_hamilton, alexander,
/// riley_degree, mirror, torus_path, tau_independence.
const std::vector<std::string>& selftest_suite_names();

/// Raises INVALID_ARGUMENT for an unknown name. Deterministic in seed.
SuiteReport run_selftest_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteReport> run_selftests(std::uint64_t seed);

/// Two-bridge knots b(p, q), p odd in [3, 13], q odd, 0 < q < p, gcd 1.
std::vector<TwoBridgeSpec> two_bridge_catalog();
std::vector<TorusSpec> torus_catalog();
/// Two-bridge, torus and the bundled external A-polynomial.
std::vector<KnotSpec> prime_catalog();

}  // namespace knotchar
