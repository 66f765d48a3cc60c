#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "superzeta/zeros.hpp"

using namespace superzeta;

namespace {

// Reference ordinates (30 digit evaluations of L on the critical line).
const std::vector<double> kZeta{14.134725141734695, 21.022039638771556, 25.01085758014569, 30.424876125859512,
                                32.93506158773919};
const std::vector<double> kChi4{6.020948904697597, 10.243770304166555, 12.988098012312422, 16.342607104587223,
                                18.291993196123535};
const std::vector<double> kChi3{8.039737155681467, 11.249206207772936, 15.704619176721625, 18.261997495693127};
const std::vector<double> kChi5{6.648453344727715,  9.83144443288667,   11.958845626083514,
                                16.033821128384236, 17.566994292325557, 19.540732622784752};

void check_against(const ZeroCache& c, const std::vector<double>& ref, double T) {
  std::vector<double> expect;
  for (double t : ref)
    if (t <= T) expect.push_back(t);
  REQUIRE(c.size() == expect.size());
  for (std::size_t k = 0; k < expect.size(); ++k) {
    CHECK(c.enclosures[k].first <= expect[k] + 1e-12);
    CHECK(c.enclosures[k].second >= expect[k] - 1e-12);
    CHECK(c.enclosures[k].second - c.enclosures[k].first <= kZeroWidth);
  }
}

}  // namespace

TEST_CASE("low zeros of the shipped instances") {
  const auto riemann = build_riemann();
  const auto z = locate_zeros(riemann, 30.0);
  check_against(z, kZeta, 30.0);
  CHECK(z.size() == 3);
  check_against(locate_zeros(build_dirichlet(-4), 12.0), kChi4, 12.0);
  check_against(locate_zeros(build_dirichlet(-4), 19.0), kChi4, 19.0);
  check_against(locate_zeros(build_dirichlet(-3), 19.0), kChi3, 19.0);
  check_against(locate_zeros(build_dirichlet(5), 20.0), kChi5, 20.0);
}

TEST_CASE("quadratic Dedekind zeros are the merged lists") {
  for (long D : {-4L, 5L}) {
    const auto K = build_dedekind_quadratic(D);
    const double T = 25.0;
    std::vector<double> merged;
    for (double t : kZeta)
      if (t <= T) merged.push_back(t);
    for (double t : (D == -4 ? kChi4 : kChi5))
      if (t <= T) merged.push_back(t);
    std::sort(merged.begin(), merged.end());
    const auto c = locate_zeros(K, 19.0);
    check_against(c, merged, 19.0);
    // union of the separately located caches
    const auto a = locate_zeros(build_riemann(), 19.0);
    const auto b = locate_zeros(build_dirichlet(D), 19.0);
    auto u = a.ordinates();
    for (double t : b.ordinates()) u.push_back(t);
    std::sort(u.begin(), u.end());
    const auto o = c.ordinates();
    REQUIRE(o.size() == u.size());
    for (std::size_t k = 0; k < u.size(); ++k) CHECK(std::abs(o[k] - u[k]) < 2 * kZeroWidth);
  }
  const auto gi = locate_zeros(build_dedekind_quadratic(-4), 15.0).ordinates();
  REQUIRE(gi.size() == 4);
  CHECK(gi[0] == doctest::Approx(6.0209).epsilon(1e-4));
  CHECK(gi[3] == doctest::Approx(14.1347).epsilon(1e-4));
}

TEST_CASE("counting function and certificates") {
  const auto riemann = build_riemann();
  CHECK(counting_function(riemann, 30.0) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(counting_function(riemann, 14.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(counting_function(riemann, 100.0) == doctest::Approx(29.0).epsilon(1e-9));
  const auto chi4 = build_dirichlet(-4);
  CHECK(counting_function(chi4, 12.0) == doctest::Approx(2.0).epsilon(1e-9));

  const auto cache = locate_zeros(riemann, 30.0);
  const auto cert = verify_count(riemann, cache);
  CHECK(cert.ok);
  CHECK(cert.expected == 3);

  ZeroCache empty;
  empty.primary_id = riemann.id;
  empty.T_max = 5.0;
  const auto ce = verify_count(riemann, empty);
  CHECK(ce.ok);
  CHECK(ce.expected == 0);

  ZeroCache missing = cache;
  missing.enclosures.pop_back();
  const auto cm = verify_count(riemann, missing);
  CHECK_FALSE(cm.ok);
  CHECK(cm.expected == 3);
  CHECK(cm.found == 2);

  ZeroCache bogus = cache;
  bogus.enclosures[1] = {22.0, 22.5};
  CHECK_FALSE(verify_count(riemann, bogus).ok);

  CHECK_THROWS_AS(locate_zeros(riemann, 5.0), DomainError);
}

TEST_CASE("scan density does not change the count") {
  for (const auto& P : {build_riemann(), build_dirichlet(-3)}) {
    const auto a = locate_zeros(P, 60.0, 0.05);
    const auto b = locate_zeros(P, 60.0, 0.025);
    CHECK(a.size() == b.size());
    CHECK(verify_count(P, a).ok);
  }
}

TEST_CASE("zero cache file round trip") {
  const auto P = build_dirichlet(-4);
  const auto c = locate_zeros(P, 40.0);
  std::stringstream ss;
  write_zero_cache(ss, c);
  const std::string text = ss.str();
  CHECK(text.rfind("superzeta-zeros v1 dirichlet:-4 40 ", 0) == 0);
  const auto back = read_zero_cache(ss);
  CHECK(back.primary_id == c.primary_id);
  CHECK(back.T_max == c.T_max);
  REQUIRE(back.size() == c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    CHECK(back.enclosures[k].first == c.enclosures[k].first);
    CHECK(back.enclosures[k].second == c.enclosures[k].second);
  }
  std::stringstream again;
  write_zero_cache(again, back);
  CHECK(again.str() == text);

  std::istringstream bad1("superzeta-zeros v2 riemann 30 0\n");
  CHECK_THROWS_AS(read_zero_cache(bad1), DomainError);
  std::istringstream bad2("superzeta-zeros v1 riemann 30 2\n1 14.1 14.2\n");
  CHECK_THROWS_AS(read_zero_cache(bad2), DomainError);
  std::istringstream bad3("superzeta-zeros v1 riemann 30 1\n1 14.1 x\n");
  CHECK_THROWS_AS(read_zero_cache(bad3), DomainError);
}

TEST_CASE("cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "superzeta-test-cache";
  std::filesystem::remove_all(dir);
  ::setenv("SUPERZETA_CACHE_DIR", dir.c_str(), 1);
  const auto P = build_riemann();
  const auto first = cached_zeros(P, 50.0);
  const auto path = zero_cache_path(dir, P.id);
  CHECK(std::filesystem::exists(path));
  // a lower height is served from the file, truncated
  const auto lower = cached_zeros(P, 26.0);
  CHECK(lower.size() == 3);
  CHECK(lower.enclosures[0] == first.enclosures[0]);
  // a corrupt file is replaced
  { std::ofstream(path) << "garbage\n"; }
  const auto redo = cached_zeros(P, 26.0);
  CHECK(redo.size() == 3);
  std::ifstream in(path);
  CHECK(read_zero_cache(in).size() == 3);
  ::unsetenv("SUPERZETA_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST_CASE("tail estimates") {
  const auto P = build_riemann();
  CHECK_THROWS_AS(tail_sum_estimate(P, 1.0, 100.0), DomainError);
  CHECK(std::abs(tail_sum_estimate(P, 3.0, 1e8).estimate) < 1e-14);
  CHECK(tail_sum_estimate(P, 2.0, 200.0).estimate.real() < tail_sum_estimate(P, 2.0, 100.0).estimate.real());

  // Sum over 100 < tau <= 1000 from the located zeros against the model.
  const auto c = locate_zeros(P, 1000.0);
  CHECK(c.size() == 649);
  for (cplx s : {cplx(2.0, 0.0), cplx(1.5, 0.0), cplx(2.5, 3.0)}) {
    cplx direct = 0.0;
    for (double t : c.ordinates())
      if (t > 100.0) direct += std::pow(t, -s);
    const auto hi = tail_sum_estimate(P, s, 100.0);
    const auto lo = tail_sum_estimate(P, s, 1000.0);
    const double err = std::abs(direct - (hi.estimate - lo.estimate));
    CHECK(err <= hi.bound + lo.bound);
    CHECK(err < 0.05 * std::abs(direct));
  }
}
