#pragma once

// Machine-checked identities linking the three families, the integral
// representation and the closed special values.

#include <string>
#include <vector>

#include "superzeta/superzeta.hpp"

namespace superzeta {

struct IdentityCheck {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct IdentityReport {
  std::string primary_id;
  double cache_height = 0.0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
  /// Largest deviation among checks whose name starts with `prefix`.
  double max_deviation(const std::string& prefix) const;
};

/// Fixed tolerance of the battery. Checks routed through truncated sums also
/// accept deviations within 1e-8 plus the reported error estimates.
inline constexpr double kIdentityTol = 1e-6;

/// Battery: ZSN, ZSK, OV, Z2X, LIZ/ZIL round trip, FPV, Z10, REZ (n = 1, 2),
/// cross-method agreement, continuity across s = 1 and the pole residue.
/// Failures are reported, not thrown.
IdentityReport identity_suite(const PrimaryFunction& P, const ZeroCache& cache);

}  // namespace superzeta
