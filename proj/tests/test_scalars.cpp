// Exact phase-scalar arithmetic: Laurent polynomials in the unit phases
// q_ij = exp((i/2) theta^{ij}) with rational coefficients.  The oracle for
// every algebraic check is independent arithmetic on the exponent maps; the
// numeric oracle is direct evaluation of exp((i/2) sum e_ij theta^{ij}).

#include <cmath>
#include <complex>

#include <doctest.h>

#include "qtoric/scalars.hpp"

using namespace qtoric::scalars;

TEST_CASE("unit phases are antisymmetric in their indices") {
  // q_ji = q_ij^{-1} and q_ii = 1, so every unit normalizes to i < j.
  CHECK(PhaseScalar::unit(2, 1) == PhaseScalar::unit(1, 2, -1));
  CHECK(PhaseScalar::unit(3, 3) == PhaseScalar::one());
  CHECK(PhaseScalar::unit(1, 2) * PhaseScalar::unit(2, 1) == PhaseScalar::one());
}

TEST_CASE("ring arithmetic on phase polynomials") {
  PhaseScalar q = PhaseScalar::unit(1, 2);
  PhaseScalar a = PhaseScalar::one() + q;
  PhaseScalar b = PhaseScalar::one() - q;
  CHECK(a * b == PhaseScalar::one() - q * q);
  CHECK(a - a == PhaseScalar::zero());
  CHECK((a * PhaseScalar::zero()).is_zero());
  // Rational coefficients combine exactly.
  PhaseScalar half = PhaseScalar::from_rational(Rational(1) / 2);
  CHECK(half + half == PhaseScalar::one());
}

TEST_CASE("inverse and integer powers") {
  PhaseScalar m = PhaseScalar::unit(1, 2, 3) * PhaseScalar::unit(1, 3, -1);
  CHECK(m * m.inv() == PhaseScalar::one());
  CHECK(m.pow(0) == PhaseScalar::one());
  CHECK(m.pow(-2) == m.inv() * m.inv());
  CHECK(m.pow(4) == m * m * m * m);
  PhaseScalar s = PhaseScalar::one() + PhaseScalar::unit(1, 2);
  CHECK(s.pow(2) == s * s);
  CHECK_THROWS_AS((void)s.inv(), std::domain_error);   // not a monomial
  CHECK_THROWS_AS((void)s.pow(-1), std::domain_error);
  CHECK_THROWS_AS((void)PhaseScalar::zero().inv(), std::domain_error);
}

TEST_CASE("monomial constructor validates exponent keys") {
  PairExp good{{{1, 2}, 2}, {{1, 3}, -1}};
  CHECK(PhaseScalar::monomial(good) ==
        PhaseScalar::unit(1, 2, 2) * PhaseScalar::unit(1, 3, -1));
  CHECK(PhaseScalar::monomial(PairExp{{{1, 2}, 0}}) == PhaseScalar::one());
  CHECK_THROWS_AS(PhaseScalar::monomial(PairExp{{{2, 1}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PhaseScalar::monomial(PairExp{{{2, 2}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PhaseScalar::monomial(PairExp{{{0, 1}, 1}}), std::invalid_argument);
}

TEST_CASE("canonical text rendering") {
  CHECK(PhaseScalar::zero().str() == "0");
  CHECK(PhaseScalar::one().str() == "1");
  CHECK(PhaseScalar::unit(1, 2).str() == "q12");
  CHECK(PhaseScalar::unit(1, 2, -1).str() == "q12^-1");
  PhaseScalar m = PhaseScalar::monomial(PairExp{{{1, 2}, 2}, {{1, 3}, -1}},
                                        Rational(-3) / 2);
  CHECK(m.str() == "-3/2*q12^2*q13^-1");
  PhaseScalar s = PhaseScalar::one() + PhaseScalar::unit(1, 2) -
                  PhaseScalar::unit(1, 3);
  CHECK(s.str() == "1 + q12 - q13");
  // Indices beyond one digit switch to the bracketed form.
  CHECK(PhaseScalar::unit(2, 10).str() == "q[2,10]");
}

TEST_CASE("numeric specialization matches direct evaluation") {
  // theta = [[0, 0.7], [-0.7, 0]]: q12 evaluates to exp(0.35 i).
  ThetaSpec t = ThetaSpec::numeric(2, {0.0, 0.7, -0.7, 0.0});
  std::complex<double> q = PhaseScalar::unit(1, 2).specialize(t);
  CHECK(std::abs(q - std::exp(std::complex<double>(0.0, 0.35))) < 1e-14);
  // Sums specialize term by term.
  PhaseScalar s = PhaseScalar::from_rational(2) + PhaseScalar::unit(1, 2, -3);
  std::complex<double> expect = 2.0 + std::exp(std::complex<double>(0.0, -3 * 0.35));
  CHECK(std::abs(s.specialize(t) - expect) < 1e-14);
  // Unit phases have modulus 1 for any real theta.
  ThetaSpec r = ThetaSpec::random(4, 11);
  CHECK(std::abs(std::abs(PhaseScalar::unit(2, 4, 5).specialize(r)) - 1.0) < 1e-12);
}

TEST_CASE("theta specifications") {
  ThetaSpec r = ThetaSpec::random(3, 7);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CHECK(std::abs(r.theta(i, j) + r.theta(j, i)) < 1e-15);  // skew
      CHECK(std::abs(r.q(i, j) * r.q(j, i) - 1.0) < 1e-14);
    }
  // Same seed, same matrix; different seed, different matrix.
  CHECK(std::abs(ThetaSpec::random(3, 7).theta(1, 2) - r.theta(1, 2)) == 0.0);
  CHECK(std::abs(ThetaSpec::random(3, 8).theta(1, 2) - r.theta(1, 2)) > 0.0);

  ThetaSpec parsed = ThetaSpec::from_json_text(
      R"({"n": 2, "theta": [[0, 0.5], [-0.5, 0]]})");
  CHECK(std::abs(parsed.theta(1, 2) - 0.5) < 1e-15);
  ThetaSpec reparsed = ThetaSpec::from_json_text(parsed.to_json_text());
  CHECK(std::abs(reparsed.theta(1, 2) - parsed.theta(1, 2)) == 0.0);

  // Non-skew input is rejected.
  CHECK_THROWS(ThetaSpec::numeric(2, {0.0, 0.7, 0.7, 0.0}));
}

TEST_CASE("exact and numeric phase contexts share one interface") {
  ExactCtx ec;
  CHECK(ec.residual(ec.unit(1, 2, 1) * ec.inv(ec.unit(1, 2, 1)) - ec.one()) == 0.0);
  NumericCtx nc{ThetaSpec::random(3, 5)};
  CHECK(nc.residual(nc.unit(1, 2, 1) * nc.inv(nc.unit(1, 2, 1)) - nc.one()) < 1e-14);
  CHECK(nc.residual(nc.rational(1, 2) + nc.rational(1, 2) - nc.one()) < 1e-14);
}
