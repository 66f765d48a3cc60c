#pragma once

// Real primitive Dirichlet characters given by Kronecker symbols (D/n) for
// fundamental discriminants D.

#include <string>
#include <vector>

namespace superzeta {

struct RealPrimitiveCharacter {
  long discriminant = 0;  // D, fundamental
  long modulus = 0;       // d = |D|
  int parity = 0;         // a: chi(-1) = (-1)^a
  std::vector<int> values;  // chi(n) for n = 0..d-1

  int operator()(long n) const {
    const long r = ((n % modulus) + modulus) % modulus;
    return values[static_cast<std::size_t>(r)];
  }
};

/// Kronecker symbol (D/n) for n >= 0.
int kronecker_symbol(long D, long n);

bool is_squarefree(long m);
bool is_fundamental_discriminant(long D);

/// Throws DomainError unless D is a fundamental discriminant with |D| > 1.
RealPrimitiveCharacter kronecker_character(long D);

struct CharacterCertificate {
  bool ok = true;
  std::vector<std::string> failures;  // one entry per violated invariant
  double gauss_sum_deviation = 0.0;   // |(-i)^a d^{-1/2} sum chi(n) e(n/d) - 1|
};

/// Checks all character invariants plus the normalized Gaussian sum = 1.
CharacterCertificate validate(const RealPrimitiveCharacter& chi);

}  // namespace superzeta
