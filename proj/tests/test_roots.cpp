#include <random>
#include <vector>

#include "doctest.h"
#include "hyperlp/errors.hpp"
#include "hyperlp/roots.hpp"
#include "support/sturm_oracle.hpp"

using namespace hyperlp;

namespace {

IntervalPolynomial ints(std::vector<long> c, int prec = 128) { return IntervalPolynomial::from_integers(c, prec); }

const Real kWidth20 = mul_2exp(Real(1, 128), -20);

}  // namespace

TEST_CASE("x^2 - 1 isolates two roots") {
  const RootIsolation iso = isolate_real_roots(ints({-1, 0, 1}), kWidth20);
  REQUIRE(iso.status == IsolationStatus::Complete);
  REQUIRE(iso.intervals.size() == 2);
  CHECK(iso.certified_count == 2);
  CHECK(iso.intervals[0].enclosure.contains(Real(-1, 128)));
  CHECK(iso.intervals[1].enclosure.contains(Real(1, 128)));
  for (const auto& r : iso.intervals) CHECK(certainly_less_equal(r.enclosure.width(), kWidth20));
}

TEST_CASE("x^2 + 1 has no real roots") {
  const RootIsolation iso = isolate_real_roots(ints({1, 0, 1}), kWidth20);
  CHECK(iso.status == IsolationStatus::Complete);
  CHECK(iso.intervals.empty());
  CHECK(iso.certified_count == 0);
}

TEST_CASE("J_2 of the partition numbers at n = 24 has no real roots") {
  // p(24), p(25), p(26) = 1575, 1958, 2436; the exact discriminant is negative.
  const mpz_class disc = mpz_class(3916) * 3916 - mpz_class(4) * 2436 * 1575;
  CHECK(disc < 0);
  const RootIsolation iso = isolate_real_roots(ints({1575, 3916, 2436}), kWidth20);
  CHECK(iso.status == IsolationStatus::Complete);
  CHECK(iso.certified_count == 0);
  CHECK(certify_hyperbolic(ints({1575, 3916, 2436}), RootSign::Any).verdict == Verdict::NotHyperbolic);
}

TEST_CASE("J_2 of the partition numbers at n = 25 is hyperbolic with negative roots") {
  CHECK(mpz_class(4872) * 4872 - mpz_class(4) * 3010 * 1958 == 162064);
  const auto report = certify_hyperbolic(ints({1958, 4872, 3010}), RootSign::AllNegative);
  CHECK(report.verdict == Verdict::Hyperbolic);
  CHECK(report.roots.certified_count == 2);
  CHECK(report.roots.status == IsolationStatus::Complete);
  REQUIRE(report.min_separation.has_value());
  CHECK(report.min_separation->is_positive());
}

TEST_CASE("double root") {
  const IntervalPolynomial p = ints({1, -2, 1});
  SUBCASE("is not delta-hyperbolic") {
    CHECK(certify_hyperbolic(p, RootSign::Any, Real::from_decimal("0.1")).verdict == Verdict::NotHyperbolic);
  }
  SUBCASE("counts with multiplicity through the exact path") {
    const auto report = certify_hyperbolic(p, RootSign::Any);
    CHECK(report.verdict == Verdict::Hyperbolic);
    REQUIRE(report.roots.intervals.size() == 1);
    CHECK(report.roots.intervals[0].multiplicity == 2);
    CHECK(report.roots.intervals[0].enclosure.contains(Real(1, 128)));
  }
  SUBCASE("is undetermined without exact multiplicity") {
    CertifyOptions opts;
    opts.isolation.exact_multiplicity = false;
    CHECK(certify_hyperbolic(p, RootSign::Any, std::nullopt, opts).verdict == Verdict::Undetermined);
    // A cluster of width < delta that must hold both roots violates the
    // delta criterion even on the interval path.
    CHECK(certify_hyperbolic(p, RootSign::Any, Real::from_decimal("0.1"), opts).verdict == Verdict::NotHyperbolic);
  }
}

TEST_CASE("degenerate polynomials are vacuously hyperbolic") {
  CHECK(certify_hyperbolic(ints({5}), RootSign::Any).verdict == Verdict::Hyperbolic);
  CHECK(certify_hyperbolic(ints({0, 0}), RootSign::AllPositive, Real(1, 64)).verdict == Verdict::Hyperbolic);
}

TEST_CASE("ambiguous degree") {
  IntervalPolynomial p({Real(1, 64), Real::between(Real(-1, 64), Real(1, 64))});
  CHECK_THROWS_AS(isolate_real_roots(p, kWidth20), AmbiguousDegree);
  CHECK_THROWS_AS(certify_hyperbolic(p, RootSign::Any), AmbiguousDegree);
}

TEST_CASE("exact zero roots are counted with multiplicity") {
  // x^3 (x - 2)
  const auto iso = isolate_real_roots(ints({0, 0, 0, -2, 1}), kWidth20);
  REQUIRE(iso.intervals.size() == 2);
  CHECK(iso.intervals[0].enclosure.is_exact_zero());
  CHECK(iso.intervals[0].multiplicity == 3);
  CHECK(iso.certified_count == 4);
  CHECK(certify_hyperbolic(ints({0, 0, 0, -2, 1}), RootSign::AllPositive).verdict == Verdict::NotHyperbolic);
}

TEST_CASE("root sign requirements") {
  // (x - 1)(x + 2)
  const IntervalPolynomial p = ints({-2, 1, 1});
  CHECK(certify_hyperbolic(p, RootSign::Any).verdict == Verdict::Hyperbolic);
  CHECK(certify_hyperbolic(p, RootSign::AllNegative).verdict == Verdict::NotHyperbolic);
  CHECK(certify_hyperbolic(p, RootSign::AllPositive).verdict == Verdict::NotHyperbolic);
}

TEST_CASE("refine_root") {
  SUBCASE("sqrt 2") {
    const Real target = mul_2exp(Real(1, 128), -40);
    const Real r = refine_root(ints({-2, 0, 1}), Real::between(Real(1, 128), Real(2, 128)), target);
    CHECK(certainly_less_equal(r.width(), target));
    CHECK(r.contains(sqrt(Real(2, 256))));
  }
  SUBCASE("pi^2 / 4") {
    const Real c = sqr(Real::pi(128)) / Real(4, 128);
    IntervalPolynomial p({-c, Real(1, 128)});
    const Real r = refine_root(p, Real::between(Real(2, 128), Real(3, 128)), kWidth20);
    CHECK(r.overlaps(c));
    CHECK(r.lower_double() < 2.4674011002723397);
    CHECK(r.upper_double() > 2.4674011002723397);
  }
  SUBCASE("linear closed form") {
    const IntervalPolynomial p = ints({3, 7});  // 3 + 7x
    const Real r = refine_root(p, Real::between(Real(-1, 128), Real(0, 128)), kWidth20);
    CHECK(r.contains(Real::from_rational(mpq_class(-3, 7), 128)));
  }
  SUBCASE("bracket without sign change") {
    CHECK_THROWS_AS(refine_root(ints({-2, 0, 1}), Real::between(Real(2, 128), Real(3, 128)), kWidth20),
                    DomainError);
  }
}

TEST_CASE("prescribed roots with gaps above delta certify delta-hyperbolic") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> start(-5.0, 5.0);
  const double delta = 0.5;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<Real> roots;
    double t = start(rng);
    for (int k = 0; k < n; ++k) {
      roots.push_back(Real::from_double(t));
      t += delta + 1e-6 + std::abs(gauss(rng));
    }
    const auto p = IntervalPolynomial::from_roots(roots, Real(trial % 2 ? -3 : 2, 128));
    const auto report = certify_hyperbolic(p, RootSign::Any, Real::from_double(delta));
    CHECK(report.verdict == Verdict::Hyperbolic);
    REQUIRE(report.min_separation.has_value());
    CHECK(report.min_separation->lower_double() > 0.0);
  }
  // Two roots 0.4 apart are certified too close for delta = 0.5.
  std::vector<Real> close{Real::from_double(1.0), Real::from_double(1.4), Real::from_double(3.0)};
  const auto p = IntervalPolynomial::from_roots(close, Real(1, 128));
  CHECK(certify_hyperbolic(p, RootSign::Any, Real::from_double(0.5)).verdict == Verdict::NotHyperbolic);
}

TEST_CASE("certified root counts agree with exact Sturm counts") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = deg(rng);
    std::vector<long> c(d + 1);
    for (auto& v : c) v = coef(rng);
    if (c.back() == 0) c.back() = 1;
    testing::QPoly q(c.begin(), c.end());
    const int expected = testing::sturm_distinct_real_roots(q);
    const auto iso = isolate_real_roots(ints(c), kWidth20);
    CHECK(iso.status == IsolationStatus::Complete);
    CHECK(static_cast<int>(iso.intervals.size()) == expected);
  }
}

TEST_CASE("doubling precision never flips a decided verdict") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mpq_class> c;
    for (int k = 0; k < 6; ++k) c.emplace_back(coef(rng), 3 + trial % 5);
    if (c.back() == 0) c.back() = 1;
    Verdict previous = Verdict::Undetermined;
    for (int bits : {64, 128, 256}) {
      const auto v = certify_hyperbolic(IntervalPolynomial::from_rationals(c, bits), RootSign::Any).verdict;
      if (previous != Verdict::Undetermined) CHECK(v == previous);
      if (v != Verdict::Undetermined) previous = v;
    }
  }
}

TEST_CASE("adaptive certification reaches a verdict on a tight pair") {
  // Roots 1 and 1 + 2^-150 cannot be split at 128 bits.
  auto build = [](int bits) {
    std::vector<Real> roots{Real(1, bits), Real(1, bits) + mul_2exp(Real(1, bits), -150)};
    return IntervalPolynomial::from_roots(roots, Real(1, bits)).with_precision(bits);
  };
  CertifyOptions opts;
  opts.isolation.exact_multiplicity = false;
  opts.root_width = 0x1p-200;
  const auto report = certify_hyperbolic_adaptive(build, RootSign::AllPositive, std::nullopt, {}, opts);
  CHECK(report.verdict == Verdict::Hyperbolic);
  CHECK(report.precision_bits >= 256);
}

TEST_CASE("rational coefficients resolve repeated non-dyadic roots") {
  // (x - 1/3)^2 (x + 2/7) (x - 5/2)
  testing::QPoly q{mpq_class(1)};
  for (const mpq_class& r : {mpq_class(1, 3), mpq_class(1, 3), mpq_class(-2, 7), mpq_class(5, 2)}) {
    testing::QPoly next(q.size() + 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      next[i + 1] += q[i];
      next[i] -= r * q[i];
    }
    q = next;
  }
  for (auto& c : q) c *= mpq_class(3, 11);
  const auto iso = isolate_real_roots(q, Real::from_double(0x1p-40));
  REQUIRE(iso.status == IsolationStatus::Complete);
  REQUIRE(iso.intervals.size() == 3);
  CHECK(iso.certified_count == 4);
  CHECK(iso.intervals[1].multiplicity == 2);
  CHECK(iso.intervals[1].enclosure.contains(Real::from_rational(mpq_class(1, 3), 256)));
  CHECK(static_cast<int>(iso.intervals.size()) == testing::sturm_distinct_real_roots(q));
  // the interval route alone cannot split the double root
  CHECK(isolate_real_roots(IntervalPolynomial::from_rationals(q), Real::from_double(0x1p-40)).status ==
        IsolationStatus::Incomplete);
}
