#include "doctest.h"
#include "superzeta/characters.hpp"
#include "superzeta/errors.hpp"

using namespace superzeta;

namespace {

// Legendre symbol by Euler's criterion, p odd prime.
int legendre(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  long r = 1, b = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("shipped small characters") {
  const auto c4 = kronecker_character(-4);
  CHECK(c4.modulus == 4);
  CHECK(c4.parity == 1);
  CHECK(c4(1) == 1);
  CHECK(c4(3) == -1);
  CHECK(c4(2) == 0);
  const auto c3 = kronecker_character(-3);
  CHECK(c3.modulus == 3);
  CHECK(c3(1) == 1);
  CHECK(c3(2) == -1);
  CHECK(c3.parity == 1);
  const auto c5 = kronecker_character(5);
  CHECK(c5.parity == 0);
  CHECK(c5(1) == 1);
  CHECK(c5(4) == 1);
  CHECK(c5(2) == -1);
  CHECK(c5(3) == -1);
  CHECK(c5(-1) == 1);
}

TEST_CASE("Kronecker symbol agrees with Legendre for odd prime moduli") {
  // For p = 1 mod 4 the character of D = p is the Legendre symbol mod p;
  // for p = 3 mod 4 the same holds with D = -p.
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
    const long D = (p % 4 == 1) ? p : -p;
    const auto chi = kronecker_character(D);
    for (long n = 0; n < p; ++n) CHECK(chi(n) == legendre(n, p));
  }
}

TEST_CASE("fundamental discriminants") {
  CHECK(is_fundamental_discriminant(-4));
  CHECK(is_fundamental_discriminant(-3));
  CHECK(is_fundamental_discriminant(5));
  CHECK(is_fundamental_discriminant(8));
  CHECK(is_fundamental_discriminant(-8));
  CHECK(is_fundamental_discriminant(12));
  CHECK_FALSE(is_fundamental_discriminant(1));
  CHECK_FALSE(is_fundamental_discriminant(-1));
  CHECK_FALSE(is_fundamental_discriminant(4));
  CHECK_FALSE(is_fundamental_discriminant(-16));
  CHECK_FALSE(is_fundamental_discriminant(9));
  CHECK_FALSE(is_fundamental_discriminant(3));
  CHECK_FALSE(is_fundamental_discriminant(-7 * 9));
  CHECK_THROWS_AS(kronecker_character(12 * 4), DomainError);
  CHECK_THROWS_AS(kronecker_character(2), DomainError);
}

TEST_CASE("every fundamental discriminant up to 200 validates") {
  int count = 0;
  for (long D = -200; D <= 200; ++D) {
    if (std::labs(D) <= 1 || !is_fundamental_discriminant(D)) continue;
    const auto chi = kronecker_character(D);
    const auto cert = validate(chi);
    INFO("D = " << D);
    CHECK(cert.ok);
    CHECK(cert.gauss_sum_deviation < 1e-10);
    CHECK(chi.parity == (D > 0 ? 0 : 1));
    ++count;
  }
  CHECK(count > 100);
}

TEST_CASE("validate reports broken tables") {
  auto chi = kronecker_character(-4);
  chi.values[2] = 1;
  const auto cert = validate(chi);
  CHECK_FALSE(cert.ok);
  bool saw = false;
  for (const auto& f : cert.failures) saw = saw || f.find("zero-on-noncoprime") != std::string::npos;
  CHECK(saw);

  // The principal-like table mod 4 is imprimitive and has the wrong sum.
  RealPrimitiveCharacter bad{-4, 4, 1, {0, 1, 0, 1}};
  CHECK_FALSE(validate(bad).ok);
}
