#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "superzeta/cumulants.hpp"
#include "superzeta/identities.hpp"
#include "superzeta/superzeta.hpp"
#include "superzeta/tables.hpp"
#include "superzeta/zeros.hpp"

namespace superzeta::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct HelpRequest {
  std::string text;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(cplx z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + fmt(std::fabs(z.imag())) + "i";
}

// Signed zeros print as 0.
ojson cjson(cplx z) { return ojson{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

cplx cfrom(const ojson& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

const char* point_name(const std::string& family) {
  if (family == "z2") return "v";
  if (family == "z3") return "y";
  return "x";
}

const char* arg_name(const std::string& family) { return family == "z1" ? "s" : "sigma"; }

// Short names accepted next to the EvalResult method names.
std::optional<Method> method_from(const std::string& name) {
  if (name == "direct") return Method::direct_sum;
  if (name == "integral") return Method::integral_rep;
  if (name == "closed") return Method::closed_form;
  return parse_method(name);
}

bool is_integer(cplx s) { return s.imag() == 0.0 && std::nearbyint(s.real()) == s.real(); }

void validate(CommandConfig& c) {
  auto fail = [&](const std::string& msg) { throw DomainError(c.command + ": " + msg); };
  if (c.primary_spec.empty()) fail("--primary is required");
  if (!(c.T_max > 0.0) || c.T_max > 1e5) fail("--tmax must be in (0, 1e5], got " + fmt(c.T_max));
  if (c.format != "text" && c.format != "json" && c.format != "csv") fail("unknown --format " + c.format);
  if (c.tolerance && !(*c.tolerance > 0.0)) fail("--tolerance must be positive");
  if (c.command == "eval") {
    if (c.family != "z1" && c.family != "z2" && c.family != "z3") fail("--family must be z1, z2 or z3");
    if (!c.point) fail(std::string("--") + point_name(c.family) + " is required for " + c.family);
    if (c.method != "auto" && !method_from(c.method)) fail("unknown --method " + c.method);
    const auto m = method_from(c.method);
    if (!c.marker.empty()) {
      if (c.marker != "deriv0" && c.marker != "fp1") fail("--marker must be deriv0 or fp1");
      if (c.family == "z3") fail("z3 has no markers");
      if (c.family == "z2" && c.marker == "fp1") fail("fp1 is a z1 marker");
      if (c.s) fail("give either --s or --marker");
      if (m && *m != Method::closed_form && !(c.family == "z1" && *m == Method::integral_rep))
        fail("--marker needs method closed" + std::string(c.family == "z1" ? " or integral" : ""));
    } else if (!c.s) {
      fail(std::string("--") + arg_name(c.family) + " is required");
    }
    if (m) {
      const bool ok = c.family == "z1"   ? (*m == Method::direct_sum || *m == Method::integral_rep ||
                                          *m == Method::closed_form)
                      : c.family == "z2" ? *m != Method::integral_rep
                                         : (*m == Method::direct_sum || *m == Method::expansion);
      if (!ok) fail("method " + c.method + " is not a route for " + c.family);
    }
  } else if (c.command == "table") {
    if (c.table < 1 || c.table > 7) fail("--which must be table1..table7");
    if (c.n_max < 1 || c.n_max > 10) fail("--nmax must be in 1..10");
    if (!c.parameter) {
      if (c.table == 1) c.parameter = 2.0;
      if (c.table == 2) c.parameter = 2.25;
      if (c.table == 3) c.parameter = 0.25;
    }
    if (c.table == 3 && *c.parameter != 0.0 && *c.parameter != 0.25) fail("table3 takes --param 0 or 0.25");
  } else if (c.command == "cumulants") {
    if (c.cumulant_order < 0 || c.cumulant_order > kMaxCumulantOrder)
      fail("--order must be in 0.." + std::to_string(kMaxCumulantOrder));
  } else if (c.command != "zeros" && c.command != "verify") {
    fail("unknown command");
  }
}

ZeroCache zeros_for(const PrimaryFunction& P, const CommandConfig& c) {
  if (!c.cache_dir.empty()) return cached_zeros(P, c.T_max, c.cache_dir);
  return cached_zeros(P, c.T_max);
}

// ---- eval -------------------------------------------------------------------

Z1Marker z1_marker_for(cplx s, int& n) {
  if (!is_integer(s)) throw DomainError("eval: closed form needs an integer s or a marker, got s=" + fmt(s));
  n = int(s.real());
  if (n < 0) {
    n = -n;
    return Z1Marker::minus_n;
  }
  return n == 0 ? Z1Marker::zero : Z1Marker::plus_n;
}

Z2Marker z2_marker_for(cplx s, int& m) {
  if (!is_integer(s)) throw DomainError("eval: closed form needs an integer sigma or a marker, got sigma=" + fmt(s));
  m = int(s.real());
  if (m < 0) {
    m = -m;
    return Z2Marker::minus_m;
  }
  return m == 0 ? Z2Marker::zero : Z2Marker::plus_m;
}

EvalResult eval_z1(const PrimaryFunction& P, const CommandConfig& c) {
  const cplx x = *c.point;
  const auto m = method_from(c.method);
  if (!c.marker.empty()) {
    const auto mk = c.marker == "deriv0" ? Z1Marker::deriv0 : Z1Marker::fp1;
    if (m == Method::integral_rep) return mk == Z1Marker::deriv0 ? z1_integral_deriv0(P, x) : z1_fp1_extrapolated(P, x);
    return z1_closed(P, mk, x);
  }
  const cplx s = *c.s;
  if (!m) {
    if (s.real() > 1.0 || s == 1.0) {
      const auto cache = zeros_for(P, c);
      return z1_eval(P, &cache, s, x);
    }
    return z1_eval(P, nullptr, s, x);
  }
  switch (*m) {
    case Method::direct_sum: return z1_direct(P, zeros_for(P, c), s, x);
    case Method::integral_rep: return z1_integral(P, s, x);
    default: {
      int n = 0;
      const auto mk = z1_marker_for(s, n);
      return z1_closed(P, mk, x, n);
    }
  }
}

EvalResult eval_z2(const PrimaryFunction& P, const CommandConfig& c) {
  const cplx v = *c.point;
  const auto m = method_from(c.method);
  if (!c.marker.empty()) return z2_closed(P, Z2Marker::deriv0, v);
  const cplx sigma = *c.s;
  if (m == Method::closed_form) {
    int k = 0;
    const auto mk = z2_marker_for(sigma, k);
    return z2_closed(P, mk, v, k);
  }
  const auto cache = zeros_for(P, c);
  if (m == Method::direct_sum) return z2_direct(P, cache, sigma, v);
  return z2_eval(P, cache, sigma, v, m);
}

EvalResult eval_z3(const PrimaryFunction& P, const CommandConfig& c) {
  const auto cache = zeros_for(P, c);
  const auto m = method_from(c.method);
  if (m == Method::direct_sum) return z3_direct(P, cache, *c.s, *c.point);
  return z3_eval(P, cache, *c.s, *c.point, m);
}

int cmd_eval(const PrimaryFunction& P, const CommandConfig& c, std::ostream& out) {
  const EvalResult r = c.family == "z1" ? eval_z1(P, c) : c.family == "z2" ? eval_z2(P, c) : eval_z3(P, c);
  const char* pn = point_name(c.family);
  if (c.format == "json") {
    ojson params{{"primary", P.id}};
    if (c.s) params[arg_name(c.family)] = cjson(*c.s);
    if (!c.marker.empty()) params["marker"] = c.marker;
    params[pn] = cjson(*c.point);
    params["T_max"] = c.T_max;
    const ojson j{{"family", c.family},         {"parameters", params},   {"method", method_name(r.method)},
                  {"value", cjson(r.value)},    {"err_est", r.err_est},   {"zeros_used", r.zeros_used}};
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "family,primary,method,re,im,err_est,zeros_used\n";
    out << c.family << "," << P.id << "," << method_name(r.method) << "," << fmt(r.value.real()) << ","
        << fmt(r.value.imag()) << "," << fmt(r.err_est) << "," << r.zeros_used << "\n";
  } else {
    out << c.family << "(" << (c.s ? fmt(*c.s) : c.marker) << ", " << pn << "=" << fmt(*c.point) << ") [" << P.id
        << "] = " << fmt(r.value) << "\n";
    out << "method " << method_name(r.method) << "  err_est " << fmt(r.err_est) << "  zeros_used " << r.zeros_used
        << "\n";
  }
  return kOk;
}

// ---- table ------------------------------------------------------------------

int cmd_table(const PrimaryFunction& P, const CommandConfig& c, std::ostream& out) {
  const auto cache = zeros_for(P, c);
  auto tab = special_value_table(P, cache, c.table, c.n_max, c.parameter.value_or(0.0));
  if (c.tolerance) {
    for (auto& row : tab.rows) {
      row.tolerance = *c.tolerance;
      if (row.check) row.pass = std::abs(row.closed - row.check->value) <= row.tolerance;
    }
  }
  if (c.format == "json") {
    ojson rows = ojson::array();
    for (const auto& row : tab.rows) {
      ojson r{{"marker", row.marker}, {"closed", cjson(row.closed)}};
      if (row.check) {
        r["check"] = cjson(row.check->value);
        r["method"] = method_name(row.check->method);
        r["err_est"] = row.check->err_est;
        r["abs_diff"] = std::abs(row.closed - row.check->value);
      }
      r["tolerance"] = row.tolerance;
      r["pass"] = row.pass;
      if (!row.note.empty()) r["note"] = row.note;
      rows.push_back(r);
    }
    const ojson j{{"table", tab.table}, {"primary", tab.primary_id}, {"parameter", cjson(tab.parameter)},
                  {"T_max", c.T_max},   {"rows", rows}};
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "marker,closed_form_value,direct_value,abs_diff,tolerance,pass\n";
    for (const auto& row : tab.rows) {
      out << row.marker << "," << fmt(row.closed) << ",";
      if (row.check) out << fmt(row.check->value) << "," << fmt(std::abs(row.closed - row.check->value));
      else out << ",";
      out << "," << fmt(row.tolerance) << "," << (row.pass ? "true" : "false") << "\n";
    }
  } else {
    out << "table" << tab.table << "  " << tab.primary_id << "  parameter " << fmt(tab.parameter) << "\n";
    for (const auto& row : tab.rows) {
      char line[256];
      std::snprintf(line, sizeof line, "%-10s %22.15g", row.marker.c_str(), row.closed.real());
      out << line;
      if (row.closed.imag() != 0.0) out << " (im " << fmt(row.closed.imag()) << ")";
      if (row.check) {
        std::snprintf(line, sizeof line, "  check %22.15g  diff %.2e  tol %.0e  %-12s", row.check->value.real(),
                      std::abs(row.closed - row.check->value), row.tolerance,
                      method_name(row.check->method).c_str());
        out << line << (row.pass ? " ok" : " FAIL");
      }
      if (!row.note.empty()) out << "  [" << row.note << "]";
      out << "\n";
    }
  }
  return tab.all_pass() ? kOk : kVerificationFailure;
}

// ---- zeros, cumulants -------------------------------------------------------

int cmd_zeros(const PrimaryFunction& P, const CommandConfig& c, std::ostream& out) {
  const auto cache = zeros_for(P, c);
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path);
    if (!f) throw DomainError("zeros: cannot write " + c.out_path);
    write_zero_cache(f, cache);
  }
  const auto cert = verify_count(P, cache);
  const auto ords = cache.ordinates();
  if (c.format == "json") {
    const ojson j{{"primary", P.id},
                  {"T_max", cache.T_max},
                  {"count", cache.size()},
                  {"width_bound", cache.width_bound},
                  {"certificate", {{"ok", cert.ok}, {"expected", cert.expected}, {"found", cert.found}}},
                  {"ordinates", ords}};
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "k,lo,hi\n";
    for (std::size_t k = 0; k < cache.size(); ++k)
      out << k + 1 << "," << fmt(cache.enclosures[k].first) << "," << fmt(cache.enclosures[k].second) << "\n";
  } else {
    out << P.id << ": " << cache.size() << " zeros with 0 < tau <= " << fmt(cache.T_max) << ", certificate "
        << (cert.ok ? "ok" : "FAILED") << " (expected " << cert.expected << ")\n";
    for (std::size_t k = 0; k < ords.size(); ++k) {
      char line[64];
      std::snprintf(line, sizeof line, "%6zu %.12f\n", k + 1, ords[k]);
      out << line;
    }
    for (const auto& f : cert.failures) out << "  " << f << "\n";
  }
  return cert.ok ? kOk : kVerificationFailure;
}

int cmd_cumulants(const PrimaryFunction& P, const CommandConfig& c, std::ostream& out) {
  const auto num = cumulants_numeric(P, c.cumulant_order);
  const auto closed = cumulants_closed(P);
  auto closed_at = [&](std::size_t n) -> std::optional<double> {
    if (n < closed.g.size() && closed.provenance[n] == Provenance::closed_form) return closed.g[n];
    return std::nullopt;
  };
  if (c.format == "json") {
    ojson rows = ojson::array();
    for (std::size_t n = 0; n < num.g.size(); ++n) {
      ojson r{{"n", n}, {"numeric", num.g[n]}};
      if (auto v = closed_at(n)) r["closed"] = *v;
      rows.push_back(r);
    }
    out << ojson{{"primary", P.id}, {"cumulants", rows}}.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "n,numeric,closed\n";
    for (std::size_t n = 0; n < num.g.size(); ++n) {
      out << n << "," << fmt(num.g[n]) << ",";
      if (auto v = closed_at(n)) out << fmt(*v);
      out << "\n";
    }
  } else {
    out << "cumulants g_n of " << P.id << "\n";
    for (std::size_t n = 0; n < num.g.size(); ++n) {
      char line[128];
      std::snprintf(line, sizeof line, "g_%-2zu %24.16g", n, num.g[n]);
      out << line;
      if (auto v = closed_at(n)) {
        std::snprintf(line, sizeof line, "  closed %24.16g  diff %.1e", *v, std::fabs(*v - num.g[n]));
        out << line;
      }
      out << "\n";
    }
  }
  return kOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyLine {
  std::string name;
  double deviation;
  double tolerance;
  bool pass;
};

int cmd_verify(const PrimaryFunction& P, const CommandConfig& c, std::ostream& out) {
  const auto cache = zeros_for(P, c);
  std::vector<VerifyLine> lines;
  const auto cert = verify_count(P, cache);
  lines.push_back({"zero count", std::fabs(double(cert.expected - cert.found)), 0.0, cert.ok});
  for (const auto& k : identity_suite(P, cache).checks) {
    const double tol = c.tolerance.value_or(k.tolerance);
    lines.push_back({k.name, k.deviation, tol, k.deviation <= tol});
  }
  std::vector<std::pair<int, cplx>> tables{{1, 2.0}, {2, 2.25}, {3, 0.0}, {3, 0.25}};
  if (P.kind == PrimaryKind::dirichlet) {
    tables.push_back({4, 1.0});
    tables.push_back({5, 0.5});
  } else {
    tables.push_back({6, 1.0});
    tables.push_back({7, 0.5});
  }
  for (const auto& [t, par] : tables) {
    const auto tab = special_value_table(P, cache, t, c.n_max, par);
    for (const auto& row : tab.rows) {
      if (!row.check) continue;
      const double dev = std::abs(row.closed - row.check->value);
      const double tol = c.tolerance.value_or(row.tolerance);
      lines.push_back({"table" + std::to_string(t) + (t == 3 ? "@" + fmt(par) : "") + " " + row.marker, dev, tol,
                       dev <= tol});
    }
  }
  bool all = true;
  for (const auto& l : lines) all = all && l.pass;
  if (c.format == "json") {
    ojson checks = ojson::array();
    for (const auto& l : lines)
      checks.push_back({{"name", l.name}, {"deviation", l.deviation}, {"tolerance", l.tolerance}, {"pass", l.pass}});
    out << ojson{{"primary", P.id}, {"T_max", c.T_max}, {"pass", all}, {"checks", checks}}.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "check,deviation,tolerance,pass\n";
    for (const auto& l : lines)
      out << l.name << "," << fmt(l.deviation) << "," << fmt(l.tolerance) << "," << (l.pass ? "true" : "false")
          << "\n";
  } else {
    for (const auto& l : lines) {
      char line[160];
      std::snprintf(line, sizeof line, "%-4s %-36s dev %.2e  tol %.1e\n", l.pass ? "ok" : "FAIL", l.name.c_str(),
                    l.deviation, l.tolerance);
      out << line;
    }
    out << P.id << " at T=" << fmt(c.T_max) << ": " << (all ? "all checks pass" : "FAILURES") << "\n";
  }
  return all ? kOk : kVerificationFailure;
}

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t.push_back(ch);
  auto bad = [&]() { return DomainError("parse_complex: cannot read '" + text + "'"); };
  if (t.empty()) throw bad();
  auto number = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != part.size()) throw bad();
    return v;
  };
  if (t.back() != 'i' && t.back() != 'j') return number(t);
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(t)};
  return {number(t.substr(0, split)), number(t.substr(split))};
}

CommandConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"superzeta: zeta functions over the zeros of L-functions", "superzeta"};
  app.require_subcommand(1);
  CommandConfig c;
  std::string s_text, x_text, v_text, y_text, param_text, which;
  double tol = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--primary", c.primary_spec, "riemann, dirichlet:<D> or dedekind:<D>")->required();
    sub->add_option("--tmax", c.T_max, "height of the zero cache")->capture_default_str();
    sub->add_option("--cache-dir", c.cache_dir, "zero cache directory (default $SUPERZETA_CACHE_DIR)");
    sub->add_option("--format", c.format, "text, json or csv")->capture_default_str();
  };
  auto* zeros = app.add_subcommand("zeros", "locate zeros and build or extend the cache");
  common(zeros);
  zeros->add_option("--out", c.out_path, "also write the cache file here");

  auto* eval = app.add_subcommand("eval", "evaluate one value of a family");
  common(eval);
  eval->add_option("--family", c.family, "z1, z2 or z3")->required();
  eval->add_option("--s,--sigma", s_text, "s for z1, sigma for z2 and z3");
  eval->add_option("--x", x_text, "z1 point");
  eval->add_option("--v", v_text, "z2 point");
  eval->add_option("--y", y_text, "z3 point");
  eval->add_option("--marker", c.marker, "deriv0 or fp1 instead of --s");
  eval->add_option("--method", c.method, "auto, direct, integral, closed, expansion or relation")
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "special-value table with a second route per row");
  common(table);
  table->add_option("--which", which, "table1..table7")->required();
  table->add_option("--param", param_text, "x for table1, v for table2 and table3");
  table->add_option("--nmax", c.n_max, "largest |n|")->capture_default_str();
  auto* table_tol = table->add_option("--tolerance", tol, "override every row tolerance");

  auto* cum = app.add_subcommand("cumulants", "Stieltjes cumulants g_n");
  common(cum);
  cum->add_option("--order", c.cumulant_order, "largest n")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "identity battery, tables and zero count");
  common(verify);
  verify->add_option("--nmax", c.n_max, "largest |n| in the tables")->capture_default_str();
  auto* verify_tol = verify->add_option("--tolerance", tol, "override every tolerance");

  std::vector<const char*> argv{"superzeta"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    throw HelpRequest{os.str()};
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    throw HelpRequest{os.str()};
  } catch (const CLI::ParseError& e) {
    throw DomainError(std::string("arguments: ") + e.what());
  }

  c.command = app.get_subcommands().front()->get_name();
  if (!s_text.empty()) c.s = parse_complex(s_text);
  const std::string& point = c.family == "z2" ? v_text : c.family == "z3" ? y_text : x_text;
  for (const auto* other : {&x_text, &v_text, &y_text})
    if (other != &point && !other->empty())
      throw DomainError("eval: --" + std::string(other == &x_text ? "x" : other == &v_text ? "v" : "y") +
                        " does not belong to family " + c.family);
  if (!point.empty()) c.point = parse_complex(point);
  if (!param_text.empty()) c.parameter = parse_complex(param_text);
  if (!which.empty()) {
    const std::string digits = which.rfind("table", 0) == 0 ? which.substr(5) : which;
    try {
      c.table = std::stoi(digits);
    } catch (const std::exception&) {
      throw DomainError("table: unknown --which " + which);
    }
  }
  if (table_tol->count() > 0 || verify_tol->count() > 0) c.tolerance = tol;
  validate(c);
  return c;
}

std::string to_json(const CommandConfig& c) {
  ojson j{{"command", c.command},     {"primary", c.primary_spec},   {"family", c.family},
          {"marker", c.marker},       {"T_max", c.T_max},            {"method", c.method},
          {"format", c.format},       {"cache_dir", c.cache_dir},    {"out", c.out_path},
          {"table", c.table},         {"n_max", c.n_max},            {"cumulant_order", c.cumulant_order}};
  j["s"] = c.s ? cjson(*c.s) : ojson(nullptr);
  j["point"] = c.point ? cjson(*c.point) : ojson(nullptr);
  j["parameter"] = c.parameter ? cjson(*c.parameter) : ojson(nullptr);
  j["tolerance"] = c.tolerance ? ojson(*c.tolerance) : ojson(nullptr);
  return j.dump();
}

CommandConfig config_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw DomainError(std::string("config_from_json: ") + e.what());
  }
  CommandConfig c;
  c.command = j.at("command");
  c.primary_spec = j.at("primary");
  c.family = j.at("family");
  c.marker = j.at("marker");
  c.T_max = j.at("T_max");
  c.method = j.at("method");
  c.format = j.at("format");
  c.cache_dir = j.at("cache_dir");
  c.out_path = j.at("out");
  c.table = j.at("table");
  c.n_max = j.at("n_max");
  c.cumulant_order = j.at("cumulant_order");
  if (!j.at("s").is_null()) c.s = cfrom(j["s"]);
  if (!j.at("point").is_null()) c.point = cfrom(j["point"]);
  if (!j.at("parameter").is_null()) c.parameter = cfrom(j["parameter"]);
  if (!j.at("tolerance").is_null()) c.tolerance = j["tolerance"].get<double>();
  return c;
}

int run(const CommandConfig& c, std::ostream& out) {
  const PrimaryFunction P = build_primary(c.primary_spec);
  if (c.command == "zeros") return cmd_zeros(P, c, out);
  if (c.command == "eval") return cmd_eval(P, c, out);
  if (c.command == "table") return cmd_table(P, c, out);
  if (c.command == "cumulants") return cmd_cumulants(P, c, out);
  return cmd_verify(P, c, out);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_args(args), out);
  } catch (const HelpRequest& h) {
    out << h.text;
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::domain:
      case ErrorKind::pole: return kDomainError;
      case ErrorKind::verification: return kVerificationFailure;
      case ErrorKind::numeric: return kNumericFailure;
    }
    return kNumericFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
}

}  // namespace superzeta::cli
