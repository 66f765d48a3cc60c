#pragma once

// Ordinates of the nontrivial zeros on the critical line: location by sign
// changes of the Hardy function, completeness by the argument principle,
// a smooth tail model for truncated zero sums, and a text cache.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "superzeta/primary.hpp"

namespace superzeta {

struct ZeroCache {
  std::string primary_id;
  std::vector<std::pair<double, double>> enclosures;  // (lo, hi), disjoint and increasing
  double T_max = 0.0;
  double width_bound = 0.0;

  std::size_t size() const { return enclosures.size(); }
  /// Midpoints of the enclosures.
  std::vector<double> ordinates() const;
};

inline constexpr double kZeroScanStep = 0.05;
inline constexpr double kZeroWidth = 1e-9;

/// Encloses every zero 1/2 + i tau with 0 < tau <= T_max. The scan step is
/// halved until the enclosure count matches the argument-principle count.
ZeroCache locate_zeros(const PrimaryFunction& P, double T_max, double step = kZeroScanStep);

/// (Im F(1/2 + iT) + arg L(1/2 + iT)) / pi with arg L continued from x = 2;
/// an integer (the zero count up to T) whenever T is not an ordinate.
double counting_function(const PrimaryFunction& P, double T);

/// The smooth part Im F(1/2 + iT) / pi of the counting function.
double smooth_counting_function(const PrimaryFunction& P, double T);

struct CountCertificate {
  bool ok = false;
  long expected = 0;  // from the argument principle
  long found = 0;     // enclosures in the cache
  double phase_count = 0.0;
  std::vector<std::string> failures;
};

/// Completeness and consistency check of a cache. Never throws on mismatch;
/// callers inspect `ok`.
CountCertificate verify_count(const PrimaryFunction& P, const ZeroCache& cache);

struct TailEstimate {
  cplx estimate;
  double bound;
};

/// Model of sum over tau > T of tau^{-s}: the smooth density
/// (a1/pi)(log tau + b1/a1) integrated from T, minus T^{-s} S(T).
TailEstimate tail_sum_estimate(const PrimaryFunction& P, cplx s, double T);

void write_zero_cache(std::ostream& out, const ZeroCache& cache);
ZeroCache read_zero_cache(std::istream& in);

/// Cache file for P inside dir.
std::filesystem::path zero_cache_path(const std::filesystem::path& dir, const std::string& primary_id);

/// Zeros up to T_max, served from SUPERZETA_CACHE_DIR when a cache there
/// reaches T_max, otherwise located and (if the variable is set) stored.
ZeroCache cached_zeros(const PrimaryFunction& P, double T_max);
/// Same with an explicit cache directory.
ZeroCache cached_zeros(const PrimaryFunction& P, double T_max, const std::filesystem::path& dir);

/// Restriction of a cache to ordinates <= T.
ZeroCache truncate(const ZeroCache& cache, double T);

}  // namespace superzeta
