#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace superzeta {

using cplx = std::complex<double>;

enum class ErrorKind {
  domain,        // parameters outside an operation's domain
  pole,          // evaluation exactly at a pole
  numeric,       // quadrature / convergence / radius-check failure
  verification,  // a certificate or identity check failed
};

/// Base of every error thrown by the library. The message names the
/// operation and its parameters.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorKind::pole, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(ErrorKind::numeric, what) {}
};

class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& what)
      : Error(ErrorKind::verification, what) {}
};

std::string format_complex(cplx z);

// Signals instead of letting NaN/inf escape.
inline cplx require_finite(cplx z, const char* op) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw NumericError(std::string(op) + ": non-finite result " + format_complex(z));
  return z;
}

}  // namespace superzeta
