#include "hyperlp/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hyperlp/curves.hpp"
#include "hyperlp/errors.hpp"
#include "hyperlp/harness.hpp"
#include "hyperlp/jensen.hpp"
#include "hyperlp/roots.hpp"
#include "hyperlp/specfun.hpp"

namespace hyperlp::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

mpq_class parse_decimal(const std::string& s) {
  if (s.empty()) throw UsageError("empty number");
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw UsageError("not a number: " + s);
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw UsageError("not a number: " + s);
    const std::string tail = s.substr(i + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(tail, &used);
    } catch (const std::exception&) {
      throw UsageError("bad exponent in " + s);
    }
    if (used != tail.size() || std::abs(e) > 100000) throw UsageError("bad exponent in " + s);
    exponent += e;
  }
  mpz_class num(digits, 10), scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  mpq_class q = exponent >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

// Single factor: number, pi, pi2, pi^2, e, or a numeric multiple of one of them.
Real parse_factor(std::string s, int bits) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  Real constant(1, bits);
  std::string coeff = s;
  for (const char* name : {"pi^2", "pi2", "pi", "e"}) {
    const std::string n(name);
    if (s.size() >= n.size() && s.compare(s.size() - n.size(), n.size(), n) == 0) {
      std::string prefix = s.substr(0, s.size() - n.size());
      if (n == "pi^2" || n == "pi2") {
        constant = sqr(Real::pi(bits));
      } else if (n == "pi") {
        constant = Real::pi(bits);
      } else {
        constant = exp(Real(1, bits));
      }
      if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
      coeff = prefix;
      break;
    }
  }
  Real value = constant;
  if (coeff != s) {
    if (!coeff.empty()) value = Real::from_rational(parse_decimal(coeff), bits) * constant;
  } else {
    value = Real::from_rational(parse_decimal(s), bits);
  }
  return negative ? -value : value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  const std::string s = trim(text);
  const auto parts = split(s, '/');
  if (parts.size() == 1) return parse_decimal(parts[0]);
  if (parts.size() != 2) throw UsageError("not a rational: " + s);
  const mpq_class den = parse_decimal(parts[1]);
  if (den == 0) throw UsageError("zero denominator: " + s);
  mpq_class q = parse_decimal(parts[0]) / den;
  q.canonicalize();
  return q;
}

Real parse_value(std::string_view text, int precision) {
  const std::string s = trim(text);
  if (s.find("±") != std::string::npos || s.find("+/-") != std::string::npos) return parse_ball(s, precision);
  const auto parts = split(s, '/');
  if (parts.size() == 1) return parse_factor(parts[0], precision);
  if (parts.size() != 2) throw UsageError("cannot parse value: " + s);
  const Real den = parse_factor(parts[1], precision);
  if (den.contains_zero()) throw UsageError("zero denominator: " + s);
  return parse_factor(parts[0], precision) / den;
}

int default_precision() {
  if (const char* env = std::getenv("HYPERLP_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64 && v <= kMaxPrecision) return static_cast<int>(v);
  }
  return kDefaultPrecision;
}

namespace {

struct Context {
  int precision = kDefaultPrecision;
  int max_precision = kMaxPrecision;
  std::string format = "plain";
  std::string out_path;
  std::optional<std::uint64_t> seed;
  int jobs = 0;
  bool serial = false;

  int digits() const { return static_cast<int>(precision * 0.30103) + 1; }
  HarnessOptions harness() const { return {precision, max_precision, !serial, jobs}; }
};

std::vector<Real> parse_values(const std::vector<std::string>& items, int bits) {
  std::vector<Real> out;
  for (const auto& s : items) out.push_back(parse_value(s, bits));
  return out;
}

std::vector<mpq_class> parse_rationals(const std::vector<std::string>& items) {
  std::vector<mpq_class> out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

Json roots_json(const std::vector<IsolatedRoot>& roots, int digits) {
  Json arr = Json::array();
  for (const auto& r : roots) {
    Json e;
    e["value"] = to_string(r.enclosure, digits);
    e["multiplicity"] = r.multiplicity;
    arr.push_back(std::move(e));
  }
  return arr;
}

Json poly_json(const std::vector<Real>& coeffs, int digits) {
  Json arr = Json::array();
  for (const auto& c : coeffs) arr.push_back(to_string(c, digits));
  return arr;
}

std::string render(const Json& j, const Context& ctx) {
  if (ctx.format == "json") return j.dump(2) + "\n";
  std::ostringstream out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out << it.key() << ": ";
    if (it->is_string()) {
      out << it->get<std::string>();
    } else if (it->is_array()) {
      bool first = true;
      for (const auto& v : *it) {
        out << (first ? "" : "; ") << (v.is_string() ? v.get<std::string>() : v.dump());
        first = false;
      }
    } else {
      out << it->dump();
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string nu = "1/2", t, alpha = "1", z;
  long n = 0;
};

std::string run_eval(const std::string& fn, const EvalArgs& a, const Context& ctx) {
  const int bits = ctx.precision;
  Json j;
  j["function"] = fn;
  if (fn == "bessel-clifford") {
    if (a.t.empty()) throw UsageError("eval bessel-clifford needs --t");
    j["nu"] = a.nu;
    j["t"] = a.t;
    j["value"] = to_string(bessel_clifford(parse_value(a.nu, bits), parse_value(a.t, bits)), ctx.digits());
  } else if (fn == "r-alpha") {
    j["alpha"] = a.alpha;
    j["n"] = a.n;
    j["value"] = to_string(r_alpha(parse_rational(a.alpha), a.n, bits), ctx.digits());
  } else if (fn == "gamma") {
    if (a.z.empty()) throw UsageError("eval gamma needs --z");
    const GammaPair g = gamma_and_reciprocal(parse_value(a.z, bits));
    j["z"] = a.z;
    j["value"] = g.gamma ? to_string(*g.gamma, ctx.digits()) : std::string("pole");
    j["reciprocal"] = to_string(g.reciprocal, ctx.digits());
  } else if (fn == "partition") {
    if (a.n < 0) throw UsageError("--n must be nonnegative");
    j["n"] = a.n;
    j["value"] = partition_integers(a.n)[a.n].get_str();
  } else if (fn == "frac-partition") {
    if (a.n < 0) throw UsageError("--n must be nonnegative");
    j["alpha"] = a.alpha;
    j["n"] = a.n;
    j["value"] = fractional_partition(parse_rational(a.alpha), a.n).values[a.n].get_str();
  } else {
    throw UsageError("unknown function for eval: " + fn);
  }
  return render(j, ctx);
}

struct JensenArgs {
  std::vector<std::string> values;
  std::string source;  // partition | r-alpha | frac-partition
  std::string alpha = "1";
  long n = 0;
  int d = 2;
};

std::string run_jensen(const JensenArgs& a, const Context& ctx) {
  const int bits = ctx.precision;
  SequenceWindow w;
  w.n = a.n;
  if (!a.values.empty()) {
    if (!a.source.empty()) throw UsageError("use either --values or --sequence");
    w.values = parse_values(a.values, bits);
  } else if (a.source == "partition") {
    const auto p = partition_integers(a.n + a.d);
    for (int k = 0; k <= a.d; ++k) w.values.push_back(Real::from_integer(p[a.n + k], bits));
  } else if (a.source == "frac-partition") {
    const auto p = fractional_partition(parse_rational(a.alpha), a.n + a.d);
    for (int k = 0; k <= a.d; ++k) w.values.push_back(Real::from_rational(p.values[a.n + k], bits));
  } else if (a.source == "r-alpha") {
    const mpq_class alpha = parse_rational(a.alpha);
    for (int k = 0; k <= a.d; ++k) w.values.push_back(r_alpha(alpha, a.n + k, bits));
  } else {
    throw UsageError("jensen needs --values or --sequence partition|frac-partition|r-alpha");
  }
  if (w.values.empty()) throw UsageError("empty window");
  const IntervalPolynomial j = jensen_poly(w);
  const HyperbolicityReport rep = certify_hyperbolic(j, RootSign::Any);
  Json out;
  out["n"] = a.n;
  out["d"] = w.degree();
  out["coefficients"] = poly_json(j.coefficients(), ctx.digits());
  out["verdict"] = to_string(rep.verdict);
  out["roots"] = roots_json(rep.roots.intervals, ctx.digits());
  if (!rep.reason.empty()) out["reason"] = rep.reason;
  return render(out, ctx);
}

struct DeltaAppellArgs {
  std::string delta = "1";
  std::vector<std::string> values;
  std::string min_sep;
};

std::string run_delta_appell(const DeltaAppellArgs& a, const Context& ctx) {
  if (a.values.empty()) throw UsageError("delta-appell needs --values");
  auto build = [&](int bits) {
    SampleWindow w;
    w.delta = parse_value(a.delta, bits);
    w.values = parse_values(a.values, bits);
    return delta_appell_poly(w);
  };
  const ExpPolynomial e = build(ctx.precision);
  std::optional<Real> sep;
  if (!a.min_sep.empty()) sep = parse_value(a.min_sep, ctx.precision);
  const ExpRootReport rep = certify_exp_polynomial_adaptive(build, sep, {ctx.precision, ctx.max_precision});
  Json out;
  out["delta"] = to_string(e.delta(), ctx.digits());
  out["coefficients"] = poly_json(e.coefficients(), ctx.digits());
  out["verdict"] = to_string(rep.verdict);
  out["roots_x"] = roots_json(rep.roots, ctx.digits());
  if (rep.min_separation) out["min_separation"] = to_string(*rep.min_separation, ctx.digits());
  if (!rep.reason.empty()) out["reason"] = rep.reason;
  return render(out, ctx);
}

struct CertifyArgs {
  std::vector<std::string> coeffs;
  std::string sign = "any";
  std::string min_sep;
};

std::string run_certify(const CertifyArgs& a, const Context& ctx, int& code) {
  if (a.coeffs.empty()) throw UsageError("certify needs --coeffs");
  RootSign sign = RootSign::Any;
  if (a.sign == "negative") sign = RootSign::AllNegative;
  else if (a.sign == "positive") sign = RootSign::AllPositive;
  else if (a.sign != "any") throw UsageError("--sign must be any, negative or positive");
  std::optional<Real> sep;
  if (!a.min_sep.empty()) sep = parse_value(a.min_sep, ctx.precision);
  const HyperbolicityReport rep = certify_hyperbolic_adaptive(
      [&](int bits) { return IntervalPolynomial(parse_values(a.coeffs, bits)); }, sign, sep,
      {ctx.precision, ctx.max_precision});
  Json out;
  out["degree"] = rep.degree;
  out["verdict"] = to_string(rep.verdict);
  out["precision_bits"] = rep.precision_bits;
  out["roots"] = roots_json(rep.roots.intervals, ctx.digits());
  if (rep.min_separation) out["min_separation"] = to_string(*rep.min_separation, ctx.digits());
  if (!rep.reason.empty()) out["reason"] = rep.reason;
  if (rep.verdict == Verdict::Undetermined) code = kPrecisionExhausted;
  return render(out, ctx);
}

struct TraceArgs {
  std::vector<std::string> roots;
  int laguerre_d = -1;
  std::string laguerre_nu = "0";
  std::string laguerre_scale = "5";
  std::string delta = "1";
  int appell_d = 1;
  int points = 48;
  double inner = 0.05;
  double outer = 10.0;
  bool check = false;
};

std::string run_trace(const TraceArgs& a, const Context& ctx, std::ostream& err, int& code) {
  const int bits = ctx.precision;
  std::vector<Real> roots;
  if (!a.roots.empty()) {
    if (a.laguerre_d >= 0) throw UsageError("use either --roots or --laguerre-d");
    roots = parse_values(a.roots, bits);
    std::sort(roots.begin(), roots.end(), [](const Real& x, const Real& y) { return certainly_greater(x, y); });
  } else if (a.laguerre_d >= 1) {
    roots = laguerre_root_set(a.laguerre_d, parse_value(a.laguerre_nu, bits), parse_value(a.laguerre_scale, bits), bits);
  } else {
    throw UsageError("trace needs --roots or --laguerre-d >= 1");
  }
  TraceOptions opts;
  opts.precision = bits;
  opts.parallel = !ctx.serial;
  opts.grid.points_per_side = a.points;
  opts.grid.inner = a.inner;
  opts.grid.outer = a.outer;
  const Real delta = parse_value(a.delta, bits);
  const CurveFamily fam = trace_root_curves(roots, delta, a.appell_d, opts);
  if (a.check && a.appell_d >= 1) {
    const CurveFamily lower = trace_root_curves(roots, delta, a.appell_d - 1, opts);
    const InterlacingReport il = check_interlacing(fam, lower);
    const LimitReport lim = check_limits(fam, Real::from_double(a.outer, bits) / delta, Real::from_double(1e-3, bits));
    long bad_limits = 0;
    for (const auto& e : lim.entries) bad_limits += e.pass ? 0 : 1;
    err << "interlacing: checked " << il.checked << ", unresolved " << il.unresolved << ", violations "
        << il.violations.size() << "\nlimits: " << lim.entries.size() << " entries, " << bad_limits << " failing\n";
    if (!il.ok() || !lim.ok()) code = kVerificationFailed;
  }
  std::ostringstream out;
  write_curves_csv(fam, out);
  return out.str();
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  long trials = 1000;
  int max_degree = 10;
  std::vector<std::string> deltas;
  bool no_edges = false;
  std::vector<std::string> alphas;
  long n_max = 50;
  int d_max = -1;
  std::string function = "bessel-clifford";
  std::string param;
  std::string t0 = "0";
  std::string beta = "1/2";
  int points = 20;
  std::string nu;
  std::vector<std::string> nus;
  int count = 20;
};

SuiteReport run_suite(const std::string& which, const VerifyArgs& a, const Context& ctx) {
  const HarnessOptions ho = ctx.harness();
  if (which == "delta-difference") {
    DeltaDifferenceConfig c;
    c.trials = a.trials;
    c.max_degree = a.max_degree;
    if (!a.deltas.empty()) c.deltas = parse_rationals(a.deltas);
    if (ctx.seed) c.seed = *ctx.seed;
    c.edge_cases = !a.no_edges;
    if (c.trials < 1) throw UsageError("--trials must be at least 1");
    return suite_delta_difference(c, ho);
  }
  if (which == "ono") {
    OnoGridConfig c;
    if (!a.alphas.empty()) c.alphas = parse_rationals(a.alphas);
    c.n_max = a.n_max;
    if (a.d_max >= 0) c.d_max = a.d_max;
    return suite_ono_grid(c, ho);
  }
  if (which == "lp-embed") {
    LpEmbeddingConfig c;
    if (a.function == "bessel-clifford") c.function = LpFunction::BesselClifford;
    else if (a.function == "gaussian") c.function = LpFunction::Gaussian;
    else if (a.function == "reciprocal-gamma") c.function = LpFunction::ReciprocalGamma;
    else throw UsageError("--function must be bessel-clifford, gaussian or reciprocal-gamma");
    if (!a.param.empty()) c.parameter = parse_rational(a.param);
    c.t0 = parse_rational(a.t0);
    if (!a.deltas.empty()) c.delta = parse_rational(a.deltas.front());
    if (a.d_max >= 0) c.d_max = a.d_max;
    return suite_lp_embedding(c, ho);
  }
  if (which == "gaussian") {
    GaussianConfig c;
    c.beta = parse_rational(a.beta);
    if (a.d_max >= 0) c.d_max = a.d_max;
    c.recursion_points = a.points;
    if (ctx.seed) c.seed = *ctx.seed;
    return suite_gaussian(c, ho);
  }
  if (which == "laguerre") {
    LaguerreDeltaConfig c;
    if (!a.nu.empty()) c.nu = parse_rational(a.nu);
    if (!a.deltas.empty()) c.deltas = parse_rationals(a.deltas);
    if (a.d_max >= 0) c.d_max = a.d_max;
    return suite_laguerre_delta(c, ho);
  }
  if (which == "zeros") {
    ZerosConfig c;
    if (!a.nus.empty()) c.nus = parse_rationals(a.nus);
    c.count = a.count;
    return suite_zeros(c, ho);
  }
  throw UsageError("unknown suite: " + which);
}

void emit(const std::string& text, const Context& ctx, std::ostream& out) {
  if (ctx.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(ctx.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + ctx.out_path);
  file << text;
  if (!file) throw UsageError("cannot write " + ctx.out_path);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified hyperbolicity checks for Jensen and delta-Appell polynomials", "hyperlp"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  ctx.precision = default_precision();
  std::uint64_t seed = 0;
  app.add_option("--precision", ctx.precision, "working precision in bits (env HYPERLP_PRECISION)");
  app.add_option("--max-precision", ctx.max_precision, "precision cap for adaptive retries");
  app.add_option("--format", ctx.format, "plain or json (trace always writes CSV, verify JSON)")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", ctx.out_path, "write the result to this file");
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--jobs", ctx.jobs, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--serial", ctx.serial, "use the serial reference path");

  auto* eval = app.add_subcommand("eval", "evaluate a special function");
  EvalArgs ea;
  std::string eval_fn;
  eval->add_option("function", eval_fn, "bessel-clifford | r-alpha | gamma | partition | frac-partition")->required();
  eval->add_option("--nu", ea.nu);
  eval->add_option("--t", ea.t);
  eval->add_option("--alpha", ea.alpha);
  eval->add_option("--z", ea.z);
  eval->add_option("--n", ea.n);

  auto* jensen = app.add_subcommand("jensen", "Jensen polynomial of a sequence window");
  JensenArgs ja;
  jensen->add_option("--values", ja.values, "a_n, ..., a_{n+d}")->delimiter(',');
  jensen->add_option("--sequence", ja.source, "partition | frac-partition | r-alpha");
  jensen->add_option("--alpha", ja.alpha);
  jensen->add_option("--n", ja.n)->check(CLI::NonNegativeNumber);
  jensen->add_option("--d", ja.d)->check(CLI::NonNegativeNumber);

  auto* appell = app.add_subcommand("delta-appell", "delta-Appell polynomial from samples f(t0 + k delta)");
  DeltaAppellArgs da;
  appell->add_option("--delta", da.delta);
  appell->add_option("--values", da.values)->delimiter(',')->required();
  appell->add_option("--min-sep", da.min_sep);

  auto* certify = app.add_subcommand("certify", "certify hyperbolicity of a polynomial");
  CertifyArgs ca;
  certify->add_option("--coeffs", ca.coeffs, "ascending coefficients")->delimiter(',')->required();
  certify->add_option("--sign", ca.sign, "any | negative | positive");
  certify->add_option("--min-sep", ca.min_sep);

  auto* trace = app.add_subcommand("trace", "trace delta-Appell root curves to CSV");
  TraceArgs ta;
  trace->add_option("--roots", ta.roots)->delimiter(',');
  trace->add_option("--laguerre-d", ta.laguerre_d);
  trace->add_option("--laguerre-nu", ta.laguerre_nu);
  trace->add_option("--laguerre-scale", ta.laguerre_scale);
  trace->add_option("--delta", ta.delta);
  trace->add_option("--appell-d", ta.appell_d)->check(CLI::NonNegativeNumber);
  trace->add_option("--points", ta.points)->check(CLI::PositiveNumber);
  trace->add_option("--inner", ta.inner)->check(CLI::PositiveNumber);
  trace->add_option("--outer", ta.outer)->check(CLI::PositiveNumber);
  trace->add_flag("--check", ta.check, "also check interlacing and limits");

  auto* verify = app.add_subcommand("verify", "run a verification suite, JSON report");
  VerifyArgs va;
  std::string suite;
  verify->add_option("suite", suite, "delta-difference | ono | lp-embed | gaussian | laguerre | zeros")->required();
  verify->add_option("--trials", va.trials);
  verify->add_option("--max-deg", va.max_degree)->check(CLI::PositiveNumber);
  verify->add_option("--delta", va.deltas)->delimiter(',');
  verify->add_flag("--no-edge-cases", va.no_edges);
  verify->add_option("--alpha", va.alphas)->delimiter(',');
  verify->add_option("--n-max", va.n_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--d-max", va.d_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--function", va.function);
  verify->add_option("--param", va.param);
  verify->add_option("--t0", va.t0);
  verify->add_option("--beta", va.beta);
  verify->add_option("--points", va.points)->check(CLI::NonNegativeNumber);
  verify->add_option("--nu", va.nus)->delimiter(',');
  verify->add_option("--count", va.count)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  if (*seed_opt) ctx.seed = seed;
  if (ctx.precision < 64 || ctx.precision > ctx.max_precision || ctx.max_precision > kMaxPrecision) {
    err << "error: need 64 <= --precision <= --max-precision <= " << kMaxPrecision << "\n";
    return kUsage;
  }

  int code = kOk;
  try {
    std::string text;
    if (eval->parsed()) {
      text = run_eval(eval_fn, ea, ctx);
    } else if (jensen->parsed()) {
      text = run_jensen(ja, ctx);
    } else if (appell->parsed()) {
      text = run_delta_appell(da, ctx);
    } else if (certify->parsed()) {
      text = run_certify(ca, ctx, code);
    } else if (trace->parsed()) {
      text = run_trace(ta, ctx, err, code);
    } else if (verify->parsed()) {
      // the laguerre suite takes a single nu
      if (suite == "laguerre" && !va.nus.empty()) {
        if (va.nus.size() != 1) throw UsageError("laguerre takes one --nu");
        va.nu = va.nus.front();
      }
      const SuiteReport r = run_suite(suite, va, ctx);
      text = r.dump(2) + "\n";
      if (r.failed() > 0) code = kVerificationFailed;
      else if (r.undetermined() > 0) code = kPrecisionExhausted;
      err << r.suite_id << ": run " << r.run() << ", passed " << r.passed() << ", undetermined "
          << r.undetermined() << ", failed " << r.failed() << "\n";
    }
    emit(text, ctx, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SignChangeDetected& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PrecisionExhausted& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return kPrecisionExhausted;
  } catch (const AmbiguousDegree& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return kPrecisionExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return code;
}

}  // namespace hyperlp::cli
