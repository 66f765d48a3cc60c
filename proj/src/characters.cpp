#include "superzeta/characters.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "superzeta/errors.hpp"

namespace superzeta {

namespace {

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(long a, long n) {
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

int kronecker_symbol(long D, long n) {
  if (n < 0) throw DomainError("kronecker_symbol: n must be >= 0");
  if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
  int result = 1;
  // Factor of 2: (D/2) = 0 if D even, +1 if D = +-1 mod 8, -1 if D = +-3 mod 8.
  while (n % 2 == 0) {
    n /= 2;
    if (D % 2 == 0) return 0;
    const long r = ((D % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(D, n);
}

bool is_squarefree(long m) {
  m = std::labs(m);
  if (m == 0) return false;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

bool is_fundamental_discriminant(long D) {
  if (D == 0 || D == 1) return false;
  const long r = ((D % 4) + 4) % 4;
  if (r == 1) return is_squarefree(D);
  if (r != 0) return false;
  const long m = D / 4;
  const long rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

RealPrimitiveCharacter kronecker_character(long D) {
  if (std::labs(D) <= 1 || !is_fundamental_discriminant(D))
    throw DomainError("kronecker_character: " + std::to_string(D) + " is not a fundamental discriminant");
  RealPrimitiveCharacter chi;
  chi.discriminant = D;
  chi.modulus = std::labs(D);
  chi.parity = D > 0 ? 0 : 1;
  chi.values.resize(static_cast<std::size_t>(chi.modulus));
  for (long n = 0; n < chi.modulus; ++n) chi.values[n] = kronecker_symbol(D, n);
  return chi;
}

CharacterCertificate validate(const RealPrimitiveCharacter& chi) {
  CharacterCertificate cert;
  auto fail = [&](const std::string& what) {
    cert.ok = false;
    cert.failures.push_back(what);
  };
  const long d = chi.modulus;
  if (d <= 1 || static_cast<long>(chi.values.size()) != d) {
    fail("table size does not match modulus");
    return cert;
  }
  for (long n = 0; n < d; ++n) {
    const int v = chi.values[n];
    if (v < -1 || v > 1) fail("value out of {-1,0,1} at n=" + std::to_string(n));
    const bool coprime = std::gcd(n, d) == 1;
    if (coprime != (v != 0)) fail("zero-on-noncoprime violated at n=" + std::to_string(n));
  }
  for (long m = 0; m < d; ++m)
    for (long n = m; n < d; ++n)
      if (chi.values[(m * n) % d] != chi.values[m] * chi.values[n]) {
        fail("multiplicativity violated at (" + std::to_string(m) + ", " + std::to_string(n) + ")");
        m = d;
        break;
      }
  const int expected_sign = chi.parity == 0 ? 1 : -1;
  if (chi.values[d - 1] != expected_sign) fail("parity mismatch: chi(d-1) != (-1)^a");
  long total = 0;
  for (int v : chi.values) total += v;
  if (total != 0) fail("character sum over residues is nonzero");
  // A real character is primitive iff it is not induced from a proper divisor.
  for (long e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    bool induced = true;
    for (long n = 0; n < d && induced; ++n)
      for (long k = n + e; k < d; k += e)
        if (std::gcd(n, d) == 1 && std::gcd(k, d) == 1 && chi.values[n] != chi.values[k]) {
          induced = false;
          break;
        }
    if (induced) {
      fail("not primitive: induced from modulus " + std::to_string(e));
      break;
    }
  }
  std::complex<double> g = 0.0;
  for (long n = 1; n < d; ++n) g += double(chi.values[n]) * std::polar(1.0, 2.0 * M_PI * double(n) / double(d));
  const std::complex<double> phase = chi.parity == 0 ? 1.0 : std::complex<double>(0.0, -1.0);
  cert.gauss_sum_deviation = std::abs(phase * g / std::sqrt(double(d)) - 1.0);
  if (!(cert.gauss_sum_deviation <= 1e-10)) fail("Gaussian sum certificate != 1");
  return cert;
}

}  // namespace superzeta
