#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hitchin/cs_family.hpp"

#include "json.hpp"

namespace hitchin {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

struct VerifyOptions {
  Grid grid;
  std::uint64_t seed = 1;
  int pairs = 100;
  std::map<std::string, double> tol_overrides;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool overall_pass = true;
  std::map<std::string, double> timing_ms;
};

// Identity suites over seeded random band-limited fields: quaternion
// algebra, metric compatibility, identity (4), the complex-form sum, the
// exactness of theta1/theta2, the metric equivalence chain, gauge
// invariance, and the lambda-family identities. Deterministic given seed.
VerifyReport run_verify_suite(const VerifyOptions& opts);

// Report JSON including environment; timing lives under the single key
// "timing_ms" so consumers can strip it before byte comparisons.
nlohmann::json to_json(const VerifyReport& rep, const VerifyOptions& opts);

// Seeded helpers shared with the test-suites.
TangentVector random_tangent(const Grid& g, std::uint64_t seed, int cutoff);
Configuration random_configuration(const Grid& g, std::uint64_t seed, int cutoff, double amplitude);

// Band-limited gauge transform exp(scale * psi) with psi anti-Hermitian at
// the given cutoff; amplitude controls the spectral tail (see tests).
GaugeTransform random_gauge(const Grid& g, std::uint64_t seed, int cutoff, double scale);

}  // namespace hitchin
