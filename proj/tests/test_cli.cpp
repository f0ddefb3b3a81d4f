#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hyperlp/cli.hpp"
#include "hyperlp/specfun.hpp"

using namespace hyperlp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string field(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(name + ": ", 0) == 0) return line.substr(name.size() + 2);
  }
  return {};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("rational and value parsing") {
  CHECK(cli::parse_rational("3/2") == mpq_class(3, 2));
  CHECK(cli::parse_rational("-0.25") == mpq_class(-1, 4));
  CHECK(cli::parse_rational("1.49") == mpq_class(149, 100));
  CHECK(cli::parse_rational("1e-3") == mpq_class(1, 1000));
  CHECK(cli::parse_rational("1.5e2/7") == mpq_class(150, 7));
  CHECK_THROWS(cli::parse_rational("abc"));
  CHECK_THROWS(cli::parse_rational("1/0"));

  const Real pi = Real::pi(256);
  CHECK(cli::parse_value("pi2/6", 256).overlaps(sqr(pi) / Real(6, 256)));
  CHECK(cli::parse_value("pi^2/4", 256).overlaps(sqr(pi) / Real(4, 256)));
  CHECK(cli::parse_value("2pi", 256).overlaps(Real(2, 256) * pi));
  CHECK(cli::parse_value("-pi/3", 256).overlaps(-pi / Real(3, 256)));
  CHECK(cli::parse_value("e", 256).overlaps(exp(Real(1, 256))));
  CHECK(cli::parse_value("-5.047", 256).contains(Real::from_rational(mpq_class(-5047, 1000), 256)));
  CHECK(cli::parse_value("pi2/6", 256).width().to_double() < 1e-70);
}

TEST_CASE("printed values re-parse inside their own radius") {
  for (int bits : {64, 128, 300}) {
    const std::vector<Real> values{Real::pi(bits), exp(Real(-40, bits)), Real::from_double(-1e30, bits),
                                   bessel_clifford(Real::from_double(1.5, bits), Real::from_double(-5.047, bits)),
                                   Real::between(Real(1, bits), Real::from_double(1.001, bits))};
    for (const auto& v : values) {
      for (int digits : {5, 17, static_cast<int>(bits * 0.30103) + 1}) {
        const Real back = parse_ball(to_string(v, digits), bits + 64);
        CHECK(back.contains(v));
        CHECK(cli::parse_value(to_string(v, digits), bits + 64).contains(v));
      }
    }
  }
}

TEST_CASE("eval subcommands") {
  const Run bc = run({"eval", "bessel-clifford", "--nu", "1.5", "--t", "-5.047"});
  CHECK(bc.code == cli::kOk);
  const Real want = bessel_clifford(Real::from_double(1.5), Real::from_rational(mpq_class(-5047, 1000)));
  CHECK(parse_ball(field(bc.out, "value")).overlaps(want));
  CHECK(field(bc.out, "value").find(" ± ") != std::string::npos);

  CHECK(field(run({"eval", "partition", "--n", "200"}).out, "value") == "3972999029388");
  CHECK(field(run({"eval", "frac-partition", "--alpha", "2", "--n", "2"}).out, "value") == "5");
  CHECK(field(run({"eval", "gamma", "--z", "-3"}).out, "value") == "pole");
  CHECK(parse_ball(field(run({"eval", "gamma", "--z", "1/2"}).out, "value")).overlaps(sqrt(Real::pi())));
  const Run ra = run({"--format", "json", "eval", "r-alpha", "--alpha", "1", "--n", "24"});
  CHECK(ra.code == 0);
  CHECK(ra.out.find("\"value\"") != std::string::npos);
}

TEST_CASE("jensen, delta-appell and certify") {
  const Run j24 = run({"jensen", "--sequence", "partition", "--n", "24", "--d", "2"});
  CHECK(j24.code == 0);
  CHECK(field(j24.out, "verdict") == "NotHyperbolic");
  CHECK(field(run({"jensen", "--sequence", "partition", "--n", "25", "--d", "2"}).out, "verdict") == "Hyperbolic");
  CHECK(field(run({"jensen", "--values", "1,1,1"}).out, "verdict") == "Hyperbolic");  // (1 + x)^2

  // samples of t + 1: 2 e^x - 1, zero at -log 2
  const Run da = run({"delta-appell", "--delta", "1", "--values", "1,2", "--min-sep", "1"});
  CHECK(da.code == 0);
  CHECK(field(da.out, "verdict") == "Hyperbolic");
  const std::string root = field(da.out, "roots_x");
  CHECK(std::stod(root.substr(root.find(':') + 2)) == doctest::Approx(-std::log(2.0)));
  CHECK(field(run({"delta-appell", "--values", "0,1"}).out, "verdict") == "NotHyperbolic");  // e^x

  const Run c = run({"certify", "--coeffs", "6,-5,1", "--sign", "positive", "--min-sep", "1/2"});
  CHECK(c.code == 0);
  CHECK(field(c.out, "verdict") == "Hyperbolic");
  CHECK(field(run({"certify", "--coeffs", "1,0,1"}).out, "verdict") == "NotHyperbolic");
  // A gap exactly equal to the requested separation cannot be decided by intervals.
  const Run tight = run({"--max-precision", "256", "certify", "--coeffs", "2,-3,1", "--min-sep", "1"});
  CHECK(tight.code == cli::kPrecisionExhausted);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"verify", "nonsense"}).code == cli::kUsage);
  CHECK(run({"--precision", "32", "eval", "partition", "--n", "3"}).code == cli::kUsage);
  CHECK(run({"eval", "bessel-clifford", "--nu", "-2", "--t", "1"}).code == cli::kUsage);
  CHECK(run({"eval", "r-alpha", "--alpha", "0", "--n", "3"}).code == cli::kUsage);
  CHECK(run({"verify", "ono", "--alpha", "-1", "--n-max", "2"}).code == cli::kUsage);
  const Run sign = run({"verify", "lp-embed", "--param", "1/2", "--t0", "-3", "--d-max", "3"});
  CHECK(sign.code == cli::kUsage);
  CHECK(sign.err.find("sign") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("precision from the environment") {
  ::setenv("HYPERLP_PRECISION", "256", 1);
  CHECK(cli::default_precision() == 256);
  ::setenv("HYPERLP_PRECISION", "12", 1);
  CHECK(cli::default_precision() == kDefaultPrecision);
  ::unsetenv("HYPERLP_PRECISION");
  CHECK(cli::default_precision() == kDefaultPrecision);
}

TEST_CASE("verify runs are byte-identical under a fixed seed") {
  const auto a = temp("hyperlp_cli_a.json"), b = temp("hyperlp_cli_b.json"), c = temp("hyperlp_cli_c.json");
  const std::vector<std::string> base{"verify", "delta-difference", "--trials", "25", "--max-deg", "6"};
  auto with = [&](std::vector<std::string> pre, const std::filesystem::path& p) {
    pre.insert(pre.end(), base.begin(), base.end());
    pre.push_back("--out");
    pre.push_back(p.string());
    return run(pre).code;
  };
  CHECK(with({"--seed", "5"}, a) == 0);
  CHECK(with({"--seed", "5", "--serial"}, b) == 0);
  CHECK(with({"--seed", "6", "--jobs", "1"}, c) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) != slurp(c));
  CHECK(slurp(a).find("\"seed\": 5") != std::string::npos);
  for (const auto& p : {a, b, c}) std::filesystem::remove(p);
}

TEST_CASE("verify suites report through exit codes") {
  CHECK(run({"verify", "gaussian", "--beta", "1/10", "--d-max", "4", "--points", "5"}).code == 0);
  CHECK(run({"verify", "laguerre", "--nu", "1/2", "--delta", "1/2", "--d-max", "5"}).code == 0);
  CHECK(run({"verify", "zeros", "--nu", "1/2", "--count", "4"}).code == 0);
  CHECK(run({"verify", "lp-embed", "--function", "reciprocal-gamma", "--t0", "2", "--d-max", "5"}).code == 0);
  const Run ono = run({"verify", "ono", "--alpha", "1,151/100", "--n-max", "2", "--d-max", "3"});
  CHECK(ono.code == 0);
  CHECK(ono.out.find("\"verdict\": \"recorded\"") != std::string::npos);
}

TEST_CASE("trace writes the curve CSV") {
  const auto p = temp("hyperlp_cli_trace.csv");
  const Run t = run({"trace", "--roots", "3,1,-2", "--delta", "1", "--appell-d", "2", "--points", "12", "--check", "--out",
                     p.string()});
  CHECK(t.code == 0);
  CHECK(t.err.find("violations 0") != std::string::npos);
  const std::string csv = slurp(p);
  CHECK(csv.rfind("x,branch_k,t,d\n", 0) == 0);
  std::filesystem::remove(p);
  CHECK(run({"trace", "--delta", "1"}).code == cli::kUsage);
  CHECK(run({"trace", "--roots", "1,0.5", "--delta", "1"}).code == cli::kUsage);  // gap below delta
}
