#include <random>
#include <vector>

#include "doctest.h"
#include "superzeta/kernels.hpp"

using namespace superzeta;
namespace kn = superzeta::kernels;

TEST_CASE("single-term power sums") {
  const std::vector<double> b{2.0};
  CHECK(std::abs(kn::scalar::power_sum_real(b, 1.0, 0) - 0.5) < 1e-16);
  CHECK(std::abs(kn::scalar::power_sum_real(b, 1.0, 1) + 0.5 * std::log(2.0)) < 1e-16);
  const std::vector<double> re{0.0}, im{2.0};
  // (2i)^{-1} = -i/2
  CHECK(std::abs(kn::scalar::power_sum_complex(re, im, 1.0) - cplx(0.0, -0.5)) < 1e-16);
}

TEST_CASE("avx2 kernels match the scalar reference") {
  if (!kn::isa_available(kn::Isa::avx2)) {
    MESSAGE("AVX2 not available; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> base(0.05, 500.0);
  std::uniform_real_distribution<double> sre(-3.0, 6.0), sim(-700.0, 700.0);
  std::uniform_real_distribution<double> cre(-5.0, 5.0), cim(-600.0, 600.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 37;
    std::vector<double> b(n), re(n), im(n);
    for (std::size_t k = 0; k < n; ++k) {
      b[k] = base(rng);
      re[k] = cre(rng);
      im[k] = cim(rng);
    }
    const cplx s(sre(rng), sim(rng) * (trial % 2));
    for (int m = 0; m <= 2; ++m) {
      const cplx a = kn::scalar::power_sum_real(b, s, m);
      const cplx v = kn::avx2::power_sum_real(b, s, m);
      double scale = 0.0;
      for (double x : b) scale += std::pow(x, -s.real()) * std::pow(std::abs(std::log(x)), m);
      CHECK(std::abs(a - v) <= 1e-13 * scale);
    }
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = cre(rng);
    {
      const cplx a = kn::scalar::weighted_power_sum(b, w, s, 1);
      const cplx v = kn::avx2::weighted_power_sum(b, w, s, 1);
      double scale = 0.0;
      for (std::size_t k = 0; k < n; ++k) scale += std::abs(w[k]) * std::pow(b[k], -s.real()) * std::abs(std::log(b[k]));
      CHECK(std::abs(a - v) <= 1e-13 * scale);
    }
    // Keep |t arg z| moderate so the complex powers stay finite.
    const cplx sc(s.real(), s.imag() / 10.0);
    const cplx a = kn::scalar::power_sum_complex(re, im, sc);
    const cplx v = kn::avx2::power_sum_complex(re, im, sc);
    double scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) scale += std::abs(std::pow(cplx(re[k], im[k]), -sc));
    CHECK(std::abs(a - v) <= 1e-12 * scale);
  }
}

TEST_CASE("dispatch honours the selected isa") {
  const auto saved = kn::active_isa();
  kn::set_active_isa(kn::Isa::scalar);
  CHECK(kn::active_isa() == kn::Isa::scalar);
  const std::vector<double> b{1.5, 2.5, 3.5, 4.5, 5.5};
  const cplx ref = kn::scalar::power_sum_real(b, cplx(0.5, 14.0), 0);
  CHECK(kn::power_sum_real(b, cplx(0.5, 14.0)) == ref);
  const std::vector<double> ones(b.size(), 1.0);
  CHECK(std::abs(kn::weighted_power_sum(b, ones, cplx(0.5, 14.0)) - ref) < 1e-14);
  CHECK_THROWS_AS(kn::weighted_power_sum(b, std::vector<double>{1.0}, 2.0), DomainError);
  kn::set_active_isa(saved);
  CHECK(kn::isa_name(kn::Isa::scalar) == "scalar");
}
