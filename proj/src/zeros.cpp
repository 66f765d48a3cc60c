#include "superzeta/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "superzeta/specfun.hpp"

namespace superzeta {

using specfun::kPi;

namespace {

constexpr const char* kCacheMagic = "superzeta-zeros";
constexpr const char* kCacheVersion = "v1";
constexpr double kTailPhaseLimit = 1e4;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Hardy-function samples on a uniform grid, split across threads.
std::vector<double> sample_hardy(const PrimaryFunction& P, const std::vector<double>& ts) {
  std::vector<double> out(ts.size());
  const std::size_t workers = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
  const std::size_t chunk = (ts.size() + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < ts.size(); begin += chunk) {
    const std::size_t end = std::min(ts.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) out[i] = hardy(P, ts[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

std::pair<double, double> bisect(const PrimaryFunction& P, double lo, double hi, double flo) {
  while (hi - lo > kZeroWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = hardy(P, mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

// Continuous change of arg L along the segment a -> b, refined until the
// increments are small.
double arg_increment(const PrimaryFunction& P, cplx a, cplx b, cplx La, cplx Lb, int depth) {
  const double d = std::arg(Lb / La);
  if (std::fabs(d) < kPi / 4) return d;
  if (depth > 40) throw NumericError("counting_function: phase tracking failed near x=" + format_complex(b));
  const cplx m = 0.5 * (a + b);
  const cplx Lm = l_value(P, m);
  return arg_increment(P, a, m, La, Lm, depth + 1) + arg_increment(P, m, b, Lm, Lb, depth + 1);
}

}  // namespace

std::vector<double> ZeroCache::ordinates() const {
  std::vector<double> out;
  out.reserve(enclosures.size());
  for (const auto& e : enclosures) out.push_back(0.5 * (e.first + e.second));
  return out;
}

double smooth_counting_function(const PrimaryFunction& P, double T) {
  if (T <= 0.0) return 0.0;
  return smooth_log_factor(P, cplx(0.5, T)).imag() / kPi;
}

double counting_function(const PrimaryFunction& P, double T) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("counting_function: T must be finite and >= 0");
  if (T == 0.0) return 0.0;
  // arg L on Re x = 2 stays within (-pi/2, pi/2) since |L - 1| < 1 there for
  // zeta and L_chi, and the Dedekind case is the sum of two such arguments.
  const cplx start(2.0, T);
  double arg = std::arg(l_value(P, start));
  if (P.kind == PrimaryKind::dedekind_quadratic) {
    const cplx z = specfun::riemann_zeta(start);
    arg = std::arg(z) + std::arg(l_value(P, start) / z);
  }
  constexpr int kSegments = 48;
  cplx a = start;
  cplx La = l_value(P, a);
  for (int j = 1; j <= kSegments; ++j) {
    const cplx b(2.0 - 1.5 * j / kSegments, T);
    const cplx Lb = l_value(P, b);
    arg += arg_increment(P, a, b, La, Lb, 0);
    a = b;
    La = Lb;
  }
  return (smooth_log_factor(P, cplx(0.5, T)).imag() + arg) / kPi;
}

namespace {

// Sign-change brackets of the Hardy function on a uniform grid over [a, b].
std::vector<std::pair<double, double>> scan_brackets(const PrimaryFunction& P, double a, double b, double step,
                                                     std::vector<double>* values = nullptr) {
  const long n = std::max(1L, static_cast<long>(std::ceil((b - a) / step)));
  std::vector<double> ts(n + 1);
  for (long j = 0; j <= n; ++j) ts[j] = j == n ? b : a + j * (b - a) / n;
  const auto fs = sample_hardy(P, ts);
  std::vector<std::pair<double, double>> out;
  for (long j = 0; j < n; ++j)
    if ((fs[j] < 0.0) != (fs[j + 1] < 0.0)) {
      out.emplace_back(ts[j], ts[j + 1]);
      if (values) values->push_back(fs[j]);
    }
  return out;
}

long count_in(const std::vector<std::pair<double, double>>& br, double a, double b) {
  return std::count_if(br.begin(), br.end(), [&](const auto& e) { return e.first >= a && e.second <= b; });
}

// Counting function at a height near h where it is close to an integer.
std::pair<double, long> integral_count_near(const PrimaryFunction& P, double h, double nudge) {
  for (int k = 0; k < 8; ++k, h += nudge) {
    const double c = counting_function(P, h);
    if (std::fabs(c - std::round(c)) < 0.25) return {h, std::lround(c)};
  }
  throw NumericError("locate_zeros: counting function not near an integer around T=" + fmt17(h));
}

}  // namespace

ZeroCache locate_zeros(const PrimaryFunction& P, double T_max, double step) {
  if (!(T_max >= 10.0) || !std::isfinite(T_max))
    throw DomainError("locate_zeros: T_max must be >= 10 (got " + fmt17(T_max) + ")");
  if (!(step > 0.0)) throw DomainError("locate_zeros: scan step must be positive");
  const long expected = std::lround(counting_function(P, T_max));
  auto brackets = scan_brackets(P, 0.0, T_max, step);

  if (static_cast<long>(brackets.size()) != expected) {
    // Localize the missing sign changes with the argument principle on
    // blocks and rescan only the blocks that disagree.
    constexpr double kBlock = 10.0;
    constexpr int kRefinements = 12;
    std::vector<std::pair<double, long>> ends{{0.0, 0L}};
    for (double h = kBlock; h < T_max - 0.5 * kBlock; h += kBlock) {
      // block ends must avoid bracket interiors
      double e = h;
      for (const auto& br : brackets)
        if (br.first < e && e < br.second) e = br.second;
      const auto [hh, c] = integral_count_near(P, e, 0.37 * step);
      if (hh > ends.back().first) ends.emplace_back(hh, c);
    }
    ends.emplace_back(T_max, expected);
    std::vector<std::pair<double, double>> refined;
    for (std::size_t b = 0; b + 1 < ends.size(); ++b) {
      const double lo = ends[b].first, hi = ends[b + 1].first;
      const long want = ends[b + 1].second - ends[b].second;
      std::vector<std::pair<double, double>> local;
      for (const auto& br : brackets)
        if (br.first >= lo && br.second <= hi) local.push_back(br);
      double h = step;
      for (int k = 0; static_cast<long>(local.size()) != want; ++k) {
        if (k == kRefinements)
          throw VerificationError("locate_zeros: count mismatch for " + P.id + " on [" + fmt17(lo) + ", " +
                                  fmt17(hi) + "]: argument principle gives " + std::to_string(want) +
                                  " but sign changes stay " + std::to_string(local.size()) + " down to step " +
                                  fmt17(h));
        h *= 0.5;
        local = scan_brackets(P, lo, hi, h);
      }
      refined.insert(refined.end(), local.begin(), local.end());
    }
    brackets = std::move(refined);
    if (static_cast<long>(brackets.size()) != expected || count_in(brackets, 0.0, T_max) != expected)
      throw VerificationError("locate_zeros: block counts do not add up for " + P.id);
  }

  ZeroCache cache;
  cache.primary_id = P.id;
  cache.T_max = T_max;
  cache.enclosures.resize(brackets.size());
  const std::size_t workers = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> runners;
  for (std::size_t w = 0; w < workers; ++w)
    runners.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < brackets.size(); i += workers)
        cache.enclosures[i] = bisect(P, brackets[i].first, brackets[i].second, hardy(P, brackets[i].first));
    }));
  for (auto& r : runners) r.get();
  for (const auto& e : cache.enclosures) cache.width_bound = std::max(cache.width_bound, e.second - e.first);
  return cache;
}

CountCertificate verify_count(const PrimaryFunction& P, const ZeroCache& cache) {
  CountCertificate cert;
  cert.found = static_cast<long>(cache.size());
  cert.phase_count = counting_function(P, cache.T_max);
  cert.expected = std::lround(cert.phase_count);
  if (cache.primary_id != P.id) cert.failures.push_back("cache belongs to " + cache.primary_id + ", not " + P.id);
  if (std::fabs(cert.phase_count - cert.expected) > 0.25)
    cert.failures.push_back("phase count " + fmt17(cert.phase_count) + " is not near an integer");
  if (cert.expected != cert.found)
    cert.failures.push_back("expected " + std::to_string(cert.expected) + " zeros up to T=" + fmt17(cache.T_max) +
                            ", found " + std::to_string(cert.found));
  double prev_hi = 0.0;
  for (std::size_t k = 0; k < cache.size(); ++k) {
    const auto [lo, hi] = cache.enclosures[k];
    const std::string tag = "enclosure " + std::to_string(k + 1);
    if (!(lo > prev_hi) || !(hi > lo)) cert.failures.push_back(tag + " out of order");
    if (hi > cache.T_max + kZeroWidth) cert.failures.push_back(tag + " lies above T_max");
    if ((hardy(P, lo) < 0.0) == (hardy(P, hi) < 0.0)) cert.failures.push_back(tag + " shows no sign change");
    prev_hi = hi;
  }
  cert.ok = cert.failures.empty();
  return cert;
}

namespace {

// S(T) = N(T) - Im F(1/2+iT)/pi, memoized per primary and height.
double oscillatory_count(const PrimaryFunction& P, double T) {
  static std::mutex mu;
  static std::map<std::pair<std::string, double>, double> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    const auto it = memo.find({P.id, T});
    if (it != memo.end()) return it->second;
  }
  const double S = double(std::lround(counting_function(P, T))) - smooth_counting_function(P, T);
  std::lock_guard<std::mutex> lock(mu);
  memo[{P.id, T}] = S;
  return S;
}

}  // namespace

TailEstimate tail_sum_estimate(const PrimaryFunction& P, cplx s, double T) {
  if (!(s.real() > 1.0)) throw DomainError("tail_sum_estimate: requires Re s > 1 (s=" + format_complex(s) + ")");
  if (!(T > 1.0) || !std::isfinite(T)) throw DomainError("tail_sum_estimate: T must be > 1");
  const double a1 = P.stirling.a1;
  const double c = P.stirling.b1 / a1;
  const double lT = std::log(T);
  const cplx sm1 = s - 1.0;
  const cplx Ts1 = std::exp(-sm1 * lT);  // T^{1-s}
  const cplx smooth = a1 / kPi * Ts1 * (lT / sm1 + 1.0 / (sm1 * sm1) + c / sm1);
  const cplx Ts = std::exp(-s * lT);
  TailEstimate out;
  // S(T) needs L on the line at height T; above kTailPhaseLimit it is left
  // out of the estimate and covered by the bound instead.
  double s_unresolved = 0.0;
  if (T <= kTailPhaseLimit) {
    const double S = oscillatory_count(P, T);
    out.estimate = smooth - Ts * S;
  } else {
    out.estimate = smooth;
    s_unresolved = std::abs(Ts) * lT;
  }

  // Exact smooth density at T minus the model density, as a 1/T^2 term.
  const cplx x(0.5, T);
  const cplx Fp = -log_trivial_factor(P, x, 1) + (P.q == 1 ? 1.0 / (x - 1.0) : cplx(0.0));
  const double delta = std::fabs(Fp.real() / kPi - a1 / kPi * (lT + c));
  const double sigma = s.real();
  const double smooth_omitted = delta * T * T * std::pow(T, -sigma - 1.0) / (sigma + 1.0);
  // Oscillatory remainder s * int S(t) t^{-s-1} dt after one more
  // integration by parts against a running mean of S growing like log t.
  const double osc = std::abs(s) * std::pow(T, -sigma - 1.0) * lT * (1.0 + std::abs(s + 1.0) / (sigma + 1.0));
  out.bound = 2.0 * smooth_omitted + osc + s_unresolved;
  return out;
}

void write_zero_cache(std::ostream& out, const ZeroCache& cache) {
  out << kCacheMagic << ' ' << kCacheVersion << ' ' << cache.primary_id << ' ' << fmt17(cache.T_max) << ' '
      << cache.size() << '\n';
  for (std::size_t k = 0; k < cache.size(); ++k)
    out << (k + 1) << ' ' << fmt17(cache.enclosures[k].first) << ' ' << fmt17(cache.enclosures[k].second) << '\n';
}

ZeroCache read_zero_cache(std::istream& in) {
  auto malformed = [](const std::string& why) { return DomainError("read_zero_cache: malformed cache (" + why + ")"); };
  std::string line;
  if (!std::getline(in, line)) throw malformed("missing header");
  std::istringstream hs(line);
  std::string magic, version, id, tmax;
  long count = -1;
  if (!(hs >> magic >> version >> id >> tmax >> count) || magic != kCacheMagic) throw malformed("bad header");
  if (version != kCacheVersion) throw malformed("unsupported version " + version);
  if (count < 0) throw malformed("negative count");
  auto parse = [&](const std::string& tok) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0' || !std::isfinite(v)) throw malformed("bad number '" + tok + "'");
    return v;
  };
  ZeroCache cache;
  cache.primary_id = id;
  cache.T_max = parse(tmax);
  for (long k = 1; k <= count; ++k) {
    if (!std::getline(in, line)) throw malformed("expected " + std::to_string(count) + " zeros");
    std::istringstream ls(line);
    long idx = 0;
    std::string lo, hi, extra;
    if (!(ls >> idx >> lo >> hi) || (ls >> extra) || idx != k) throw malformed("bad line " + std::to_string(k));
    cache.enclosures.emplace_back(parse(lo), parse(hi));
    cache.width_bound = std::max(cache.width_bound, cache.enclosures.back().second - cache.enclosures.back().first);
  }
  return cache;
}

std::filesystem::path zero_cache_path(const std::filesystem::path& dir, const std::string& primary_id) {
  std::string name = primary_id;
  std::replace(name.begin(), name.end(), ':', '_');
  return dir / (name + ".zeros");
}

ZeroCache truncate(const ZeroCache& cache, double T) {
  ZeroCache out = cache;
  out.T_max = std::min(cache.T_max, T);
  out.enclosures.clear();
  out.width_bound = 0.0;
  for (const auto& e : cache.enclosures)
    if (e.second <= out.T_max) {
      out.enclosures.push_back(e);
      out.width_bound = std::max(out.width_bound, e.second - e.first);
    }
  return out;
}

ZeroCache cached_zeros(const PrimaryFunction& P, double T_max) {
  const char* env = std::getenv("SUPERZETA_CACHE_DIR");
  if (env == nullptr || *env == '\0') return locate_zeros(P, T_max);
  return cached_zeros(P, T_max, env);
}

ZeroCache cached_zeros(const PrimaryFunction& P, double T_max, const std::filesystem::path& dir) {
  const std::filesystem::path path = zero_cache_path(dir, P.id);
  {
    std::ifstream in(path);
    if (in) {
      try {
        const ZeroCache c = read_zero_cache(in);
        if (c.primary_id == P.id && c.T_max >= T_max) return truncate(c, T_max);
      } catch (const DomainError&) {
        // unreadable cache: recompute and overwrite
      }
    }
  }
  ZeroCache fresh = locate_zeros(P, T_max);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (out) write_zero_cache(out, fresh);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return fresh;
}

}  // namespace superzeta
