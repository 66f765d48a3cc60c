#pragma once

// Special values of the three families as tables of closed forms, each row
// paired with an independent numerical route.
//   1: Z1 at a general x          2: Z2 at a general v
//   3: Z2 at v = 0 and v = 1/4    4, 5: Dirichlet, Z1 at x = 1 and x = 1/2
//   6, 7: Dedekind (zeta included), Z1 at x = 1 and x = 1/2

#include <optional>
#include <string>
#include <vector>

#include "superzeta/superzeta.hpp"

namespace superzeta {

struct TableRow {
  std::string marker;  // minus_n:<n>, zero, deriv0, fp1, plus_n:<n> (minus_m/plus_m for Z2)
  int n = 0;
  cplx closed;
  std::optional<EvalResult> check;
  double tolerance = 0.0;
  bool pass = true;
  std::string note;
};

struct SpecialValueTable {
  int table = 0;
  std::string primary_id;
  cplx parameter;  // x for table 1, v for tables 2 and 3
  std::vector<TableRow> rows;
  bool all_pass() const;
};

/// Tolerances of the second routes.
inline constexpr double kTolIntegral = 1e-6;
inline constexpr double kTolDirect = 1e-4;
inline constexpr double kTolAlgebraic = 1e-9;

/// Rows for n = 1..n_max. Tables 4, 5 need a Dirichlet primary, tables 6, 7
/// the Riemann or a Dedekind primary. The cache feeds the direct-sum checks.
SpecialValueTable special_value_table(const PrimaryFunction& P, const ZeroCache& cache, int table, int n_max = 4,
                                      cplx parameter = 0.0);

}  // namespace superzeta
