#pragma once

// Generalized Stieltjes cumulants g_n of a primary function, defined by
//   log[(x-1)^q L(x)] = sum_{n>=0} (-1)^{n-1} g_n (x-1)^n / n!.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superzeta/primary.hpp"

namespace superzeta {

enum class Provenance { closed_form, numeric, unavailable };

struct CumulantSequence {
  std::string primary_id;
  std::vector<double> g;
  std::vector<Provenance> provenance;
};

inline constexpr int kMaxCumulantOrder = 12;
inline constexpr double kCumulantRadius = 0.4;

/// g_0..g_N from a Cauchy circle about x = 1.
CumulantSequence cumulants_numeric(const PrimaryFunction& P, int N, double radius = kCumulantRadius);

/// Closed forms: g_0 always, g_1 where known; other entries unavailable.
CumulantSequence cumulants_closed(const PrimaryFunction& P);

/// Closed (g_0, g_1) computed from the character data alone; used while a
/// PrimaryFunction is being assembled.
std::pair<std::optional<double>, std::optional<double>> closed_cumulant_values(const PrimaryFunction& P);

}  // namespace superzeta
