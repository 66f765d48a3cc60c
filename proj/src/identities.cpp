#include "superzeta/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "superzeta/errors.hpp"
#include "superzeta/specfun.hpp"

namespace superzeta {

namespace {

constexpr double kPi = std::numbers::pi;
const std::vector<double> kSteps{0.08, 0.04, 0.02, 0.01, 0.005};

class Battery {
 public:
  explicit Battery(IdentityReport& r) : r_(r) {}

  void run(const std::string& name, double tol, const std::function<void(IdentityCheck&)>& body) {
    IdentityCheck c;
    c.name = name;
    c.tolerance = tol;
    try {
      body(c);
      c.pass = c.deviation <= c.tolerance;
    } catch (const std::exception& e) {
      c.deviation = INFINITY;
      c.pass = false;
      c.detail = std::string("error: ") + e.what();
    }
    r_.checks.push_back(std::move(c));
  }

 private:
  IdentityReport& r_;
};

// `err` is the summed error estimate of the routes behind `lhs` and `rhs`.
void compare(IdentityCheck& c, cplx lhs, cplx rhs, double err = 0.0) {
  c.deviation = std::abs(lhs - rhs);
  c.tolerance = std::max(c.tolerance, 1e-8 + err);
  std::ostringstream os;
  os.precision(15);
  os << "lhs " << lhs.real();
  if (lhs.imag() != 0.0) os << (lhs.imag() < 0 ? "" : "+") << lhs.imag() << "i";
  os << " rhs " << rhs.real();
  if (rhs.imag() != 0.0) os << (rhs.imag() < 0 ? "" : "+") << rhs.imag() << "i";
  c.detail = os.str();
}

// Closed forms only: no error-estimate allowance.
void compare_exact(IdentityCheck& c, cplx lhs, cplx rhs) {
  const double tol = c.tolerance;
  compare(c, lhs, rhs);
  c.tolerance = tol;
}

cplx z1_plus(const PrimaryFunction& P, int n, cplx x) { return z1_closed(P, Z1Marker::plus_n, x, n).value; }

// Z2(m, v) from Z1(1..m, x), v = (x - 1/2)^2.
std::vector<cplx> z2_from_z1(const std::vector<cplx>& z1, cplx x) {
  const cplx w = 2.0 * x - 1.0;
  std::vector<cplx> out(z1.size());
  for (int m = 1; m <= int(z1.size()); ++m)
    for (int l = 0; l < m; ++l)
      out[m - 1] += specfun::binomial(m + l - 1, m - 1) * std::pow(w, -m - l) * z1[m - l - 1];
  return out;
}

// Z1(n, x) from Z2(1..n, v).
std::vector<cplx> z1_from_z2(const std::vector<cplx>& z2, cplx x) {
  const cplx w = 2.0 * x - 1.0;
  std::vector<cplx> out(z2.size());
  for (int n = 1; n <= int(z2.size()); ++n) {
    cplx acc = 0.0;
    for (int l = 0; 2 * l <= n; ++l)
      acc += (l % 2 ? -1.0 : 1.0) * specfun::binomial(n - l, l) * std::pow(w, n - 2 * l) * z2[n - l - 1] /
             double(n - l);
    out[n - 1] = double(n) * acc;
  }
  return out;
}

}  // namespace

bool IdentityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

double IdentityReport::max_deviation(const std::string& prefix) const {
  double m = 0.0;
  for (const auto& c : checks)
    if (c.name.rfind(prefix, 0) == 0) m = std::max(m, c.deviation);
  return m;
}

IdentityReport identity_suite(const PrimaryFunction& P, const ZeroCache& cache) {
  IdentityReport report;
  report.primary_id = P.id;
  report.cache_height = cache.T_max;
  Battery b(report);
  const auto& st = P.stirling;

  for (int n : {2, 3}) {
    b.run("ZSN closed n=" + std::to_string(n) + " x=2", kIdentityTol, [&](IdentityCheck& c) {
      compare(c, z1_plus(P, n, 2.0), (n % 2 ? -1.0 : 1.0) * z1_plus(P, n, -1.0));
    });
    b.run("ZSN direct n=" + std::to_string(n) + " x=2", kIdentityTol, [&](IdentityCheck& c) {
      const auto a = z1_direct(P, cache, double(n), 2.0);
      const auto m = z1_direct(P, cache, double(n), -1.0);
      compare(c, a.value, (n % 2 ? -1.0 : 1.0) * m.value, a.err_est + m.err_est);
    });
  }

  b.run("ZSK k=1 x=0.6 closed", kIdentityTol, [&](IdentityCheck& c) {
    const cplx x = 0.6;
    const auto z = z1_positive_integers(P, x, 40);
    cplx sum = 0.0;
    for (int l = 2; l <= 40; ++l) sum += std::pow(2.0 * x - 1.0, l - 1) * z[l - 1];
    compare(c, z1_plus(P, 1, x), -0.5 * sum);
  });
  b.run("ZSK k=1 x=0.6 direct", kIdentityTol, [&](IdentityCheck& c) {
    const cplx x = 0.6;
    const auto lhs = z1_direct(P, cache, 1.0, x);
    cplx sum = 0.0;
    double err = lhs.err_est;
    for (int l = 2; l <= 12; ++l) {
      const auto t = z1_direct(P, cache, double(l), x);
      const double w = std::pow(0.2, l - 1);
      sum += w * t.value;
      err += 0.5 * w * t.err_est;
    }
    compare(c, lhs.value, -0.5 * sum, err);
  });

  b.run("OV sigma=2", kIdentityTol, [&](IdentityCheck& c) {
    const auto z2 = z2_direct(P, cache, 2.0, 0.0);
    compare(c, z2.value, 0.5 * z1_plus(P, 4, 0.5), z2.err_est);
  });
  b.run("OV sigma=1.75", kIdentityTol, [&](IdentityCheck& c) {
    const auto z2 = z2_direct(P, cache, 1.75, 0.0);
    const auto z1 = z1_direct(P, cache, 3.5, 0.5);
    compare(c, z2.value, z1.value / (2.0 * std::cos(1.75 * kPi)), z2.err_est + z1.err_est / std::sqrt(2.0));
  });

  b.run("Z2X s=0.7 t=0.4", kIdentityTol, [&](IdentityCheck& c) {
    const double s = 0.7, t = 0.4;
    const auto lhs = z1_eval(P, &cache, s, 0.5 + t);
    const auto up = z3_eval(P, cache, 0.5 * s, cplx(0.0, t));
    const auto dn = z3_eval(P, cache, 0.5 * s, cplx(0.0, -t));
    const cplx e = std::exp(cplx(0.0, kPi * s / 2.0));
    compare(c, lhs.value, e * up.value + std::conj(e) * dn.value, lhs.err_est + up.err_est + dn.err_est);
  });

  b.run("LIZ/ZIL round trip x=2", 1e-10, [&](IdentityCheck& c) {
    const cplx x = 2.0;
    std::vector<cplx> z1;
    for (int n = 1; n <= 4; ++n) z1.push_back(z1_plus(P, n, x));
    const auto back = z1_from_z2(z2_from_z1(z1, x), x);
    double dev = 0.0;
    for (int n = 0; n < 4; ++n) dev = std::max(dev, std::abs(back[n] - z1[n]) / std::max(1.0, std::abs(z1[n])));
    c.deviation = dev;
    c.detail = "max relative deviation over n <= 4";
  });
  b.run("ZIL vs direct Z2 x=2", kIdentityTol, [&](IdentityCheck& c) {
    const cplx x = 2.0, v = (x - 0.5) * (x - 0.5);
    std::vector<cplx> z1;
    for (int n = 1; n <= 4; ++n) z1.push_back(z1_plus(P, n, x));
    const auto z2 = z2_from_z1(z1, x);
    double dev = 0.0, err = 0.0;
    for (int m = 1; m <= 4; ++m) {
      const auto d = z2_direct(P, cache, double(m), v);
      dev = std::max(dev, std::abs(d.value - z2[m - 1]));
      err = std::max(err, d.err_est);
    }
    c.deviation = dev;
    c.tolerance = std::max(c.tolerance, 1e-8 + err);
    c.detail = "max over m <= 4";
  });

  b.run("FPV x=2", kIdentityTol, [&](IdentityCheck& c) {
    const auto fp = z1_fp1_extrapolated(P, 2.0);
    compare(c, z1_plus(P, 1, 2.0) - fp.value, st.b1, fp.err_est);
  });
  b.run("FPV direct x=2", kIdentityTol, [&](IdentityCheck& c) {
    const auto fp = z1_fp1_extrapolated(P, 2.0);
    const auto d = z1_direct(P, cache, 1.0, 2.0);
    compare(c, d.value - fp.value, st.b1, fp.err_est + d.err_est);
  });

  for (int n : {3, 5}) {
    b.run("Z10 closed n=" + std::to_string(n), 1e-12,
          [&](IdentityCheck& c) { compare_exact(c, z1_plus(P, n, 0.5), 0.0); });
    b.run("Z10 direct n=" + std::to_string(n), kIdentityTol, [&](IdentityCheck& c) {
      const auto d = z1_direct(P, cache, double(n), 0.5);
      compare(c, d.value, 0.0, d.err_est);
    });
  }

  for (int n : {1, 2}) {
    b.run("REZ n=" + std::to_string(n) + " x=2", kIdentityTol, [&](IdentityCheck& c) {
      const cplx x = 2.0;
      std::vector<cplx> f;
      for (double h : kSteps) f.push_back(-h * jay_integral(P, double(n) - h, x, n - 1).value);
      const auto [res, err] = extrapolate_to_zero(kSteps, f);
      compare(c, res, -log_l_derivative(P, x, n) / specfun::factorial(n - 1), err);
    });
  }

  b.run("pole residue s=1 x=2", kIdentityTol, [&](IdentityCheck& c) {
    const auto r = z1_residue_extrapolated(P, 2.0);
    compare(c, r.value, -st.a1, r.err_est);
  });

  // Regular part g(s) = Z1(s) + a1/(s-1): the integral route at 1-h and 1-3h
  // extrapolates linearly to 1+h, where the direct route takes over.
  b.run("continuity across s=1 x=2", 1e-4, [&](IdentityCheck& c) {
    const double h = 1e-3;
    const auto l1 = z1_integral(P, 1.0 - h, 2.0);
    const auto l3 = z1_integral(P, 1.0 - 3.0 * h, 2.0);
    const auto right = z1_direct(P, cache, 1.0 + h, 2.0);
    const cplx g1 = l1.value - st.a1 / h, g3 = l3.value - st.a1 / (3.0 * h);
    compare(c, 2.0 * g1 - g3, right.value + st.a1 / h, 3.0 * l1.err_est + l3.err_est + right.err_est);
  });

  for (double x : {1.0, 0.5, 2.0}) {
    for (int s : {2, 3, 4}) {
      std::ostringstream name;
      name << "cross-method s=" << s << " x=" << x;
      b.run(name.str(), 0.0, [&](IdentityCheck& c) {
        const auto d = z1_direct(P, cache, double(s), x);
        compare(c, d.value, z1_plus(P, s, x), d.err_est);
      });
    }
  }

  return report;
}

}  // namespace superzeta
