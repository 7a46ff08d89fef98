#pragma once

// Randomized verification of the structural map properties: order
// preservation, subhomogeneity, declared homogeneity degrees.  Reports carry
// witnesses instead of throwing.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conejsr/map_expr.hpp"

namespace conejsr {

struct PropertyViolation {
  std::string property;
  std::string witness;
};

struct PropertyReport {
  std::size_t samples_run = 0;
  std::vector<PropertyViolation> violations;
  /// Diagnostics fitted from the samples (e.g. observed growth prefactors).
  std::map<std::string, double> fitted;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

struct CheckConfig {
  std::size_t samples = 256;
  std::uint64_t seed = 0;
  double rel_slack = 1e-10;
  /// Sample magnitudes are log-uniform over [mag_lo, mag_hi] to exercise both
  /// scaling regimes.
  double mag_lo = 1e-3;
  double mag_hi = 1e3;
  /// Probability of zeroing a coordinate, exercising boundary semantics.
  double boundary_prob = 0.1;
};

PropertyReport check_properties(const MapExpr& f, std::size_t samples, std::uint64_t seed);
PropertyReport check_properties(const MapExpr& f, const CheckConfig& cfg);

/// Random interior or boundary cone point with log-uniform magnitudes.
PointVec sample_cone_point(std::size_t dim, std::uint64_t& state, const CheckConfig& cfg);

/// Splitmix-style generator step used by all samplers; deterministic per seed.
std::uint64_t split_next(std::uint64_t& state);
double uniform01(std::uint64_t& state);

}  // namespace conejsr
