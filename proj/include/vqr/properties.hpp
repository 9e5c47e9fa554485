#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqr/metrics.hpp"

namespace vqr {

enum class DistanceProperty { PositiveDefiniteness, UnitaryInvariance, Metric, JointConvexity, Contractivity };

std::string to_string(DistanceProperty property);

/// Outcome of one property over `trials` random instances. Trial t draws from
/// Rng(seed + t); example_seed is the trial seed of the worst violation.
struct PropertyReport {
  DistanceKind kind;
  DistanceProperty property = DistanceProperty::PositiveDefiniteness;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst_case = 0.0;
  std::optional<std::uint64_t> example_seed;

  bool holds() const { return violations == 0; }
};

/// Tabulated expectation: true where the property is known to hold.
bool expected_property(const DistanceKind& kind, DistanceProperty property);

/// Runs positive definiteness, unitary invariance, joint convexity and
/// contractivity for `kind`. The metric axioms (symmetry, triangle
/// inequality) are included only for exponent 1.
///
/// Joint-convexity trials alternate between generic random pairs and pairs
/// sharing a common first component with pure second components at weight
/// 1/2. Contractivity trials cycle through random Stinespring channels
/// (environment dimension 2), partial trace of rho x 1/2, and Phi_A.
std::vector<PropertyReport> check_distance_properties(const DistanceKind& kind, std::size_t trials,
                                                      std::uint64_t seed);

}  // namespace vqr
