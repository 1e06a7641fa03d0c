// Deformed torus characters and chart algebras.  The load-bearing oracle:
// every chart-level computation (normal form, products, binomial phases,
// differential calculus) must agree with the bilinear star product of
// lattice characters, which is defined independently by the exponent
// pairing p_i q_j - p_j q_i.

#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "qtoric/fans.hpp"
#include "qtoric/scalars.hpp"
#include "qtoric/torus.hpp"

using namespace qtoric;
using namespace qtoric::torus;
using scalars::PhaseScalar;
using scalars::ThetaSpec;

namespace {

Vec rand_vec(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Vec v(std::size_t(n), 0);
  for (auto& x : v) x = d(rng);
  return v;
}

// Realize a word in chart generators as a Laurent element, one star
// multiplication per letter — the from-first-principles oracle.
LaurentElement realize_word(const ChartAlgebra& a,
                            const std::vector<std::pair<int, long long>>& word) {
  const int n = a.cone.ambient();
  LaurentElement acc = LaurentElement::monomial(n, Vec(std::size_t(n), 0));
  for (const auto& [g, m] : word) {
    Vec p = a.gens[std::size_t(g)];
    for (auto& x : p) x *= m;
    acc = star(acc, LaurentElement::monomial(n, p));
  }
  return acc;
}

}  // namespace

TEST_CASE("star phase of basis characters") {
  // t1 * t2 = q12 t^(1,1) while t2 * t1 = q12^{-1} t^(1,1).
  CHECK(star_phase({1, 0}, {0, 1}) == PhaseScalar::unit(1, 2));
  CHECK(star_phase({0, 1}, {1, 0}) == PhaseScalar::unit(1, 2, -1));
  CHECK(star_phase({1, 0}, {1, 0}) == PhaseScalar::one());
  // Inverse characters flip the phase.
  CHECK(star_phase({1, 0}, {0, -1}) == PhaseScalar::unit(1, 2, -1));
  // Three dimensions: phase collects all ordered pairs.
  CHECK(star_phase({1, 1, 0}, {0, 0, 1}) ==
        PhaseScalar::unit(1, 3) * PhaseScalar::unit(2, 3));
}

TEST_CASE("star product is associative (exact, random elements)") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentElement a(3), b(3), c(3);
    for (int t = 0; t < 3; ++t) {
      a += LaurentElement::monomial(3, rand_vec(rng, 3, -3, 3));
      b += LaurentElement::monomial(3, rand_vec(rng, 3, -3, 3));
      c += LaurentElement::monomial(3, rand_vec(rng, 3, -3, 3));
    }
    CHECK(star(star(a, b), c) == star(a, star(b, c)));
  }
}

TEST_CASE("star commutation and numeric agreement") {
  std::mt19937_64 rng(7);
  ThetaSpec t = ThetaSpec::random(3, 99);
  for (int trial = 0; trial < 50; ++trial) {
    Vec p = rand_vec(rng, 3, -4, 4), q = rand_vec(rng, 3, -4, 4);
    // chi_p * chi_q = phase(p,q)^2 chi_q * chi_p.
    CHECK(star_phase(p, q) == star_phase(p, q).pow(2) * star_phase(q, p));
    // Exact phase specializes to the direct numeric contraction.
    std::complex<double> d =
        star_phase(p, q).specialize(t) - star_phase_numeric(t, p, q);
    CHECK(std::abs(d) < 1e-12);
  }
}

TEST_CASE("quantum affine chart of the quadrant") {
  ChartAlgebra a = chart_algebra(fans::Cone::from_rays(2, {{1, 0}, {0, 1}}));
  REQUIRE(a.size() == 2);
  CHECK(a.gens == Mat{{1, 0}, {0, 1}});
  REQUIRE(a.pres.commutation.size() == 1);
  // x1 x2 = q12^2 x2 x1.
  CHECK(a.pres.commutation[0].phase2 == PhaseScalar::unit(1, 2, 2));
  CHECK(a.pres.binomials.empty());
  CHECK(a.monomial_weight({2, 3}) == Vec{2, 3});
}

TEST_CASE("orbifold chart: phases and binomial relation") {
  // Cone(e1, e1+2e2); dual semigroup generated by (2,-1),(1,0),(0,1) with
  // the single relation m1 + m3 = 2 m2.
  ChartAlgebra a = chart_algebra(fans::Cone::from_rays(2, {{1, 0}, {1, 2}}));
  REQUIRE(a.size() == 3);
  CHECK(a.gens == Mat{{2, -1}, {1, 0}, {0, 1}});
  CHECK(a.qcheck(0, 1) == PhaseScalar::unit(1, 2));
  CHECK(a.qcheck(0, 2) == PhaseScalar::unit(1, 2, 2));
  CHECK(a.qcheck(1, 2) == PhaseScalar::unit(1, 2));
  REQUIRE(a.pres.binomials.size() == 1);
  // x1 x3 = q12^2 x2^2: the deformed cousin of the A_1 singularity equation.
  CHECK(a.pres.binomials[0].p == Vec{1, 0, 1});
  CHECK(a.pres.binomials[0].r == Vec{0, 2, 0});
  CHECK(a.pres.binomials[0].phase == PhaseScalar::unit(1, 2, 2));
}

TEST_CASE("localized chart of a ray keeps the inverse generator") {
  // Dual of the ray e1 is a half-plane; x2 x3 = 1 witnesses t2 t2^{-1}.
  ChartAlgebra a = chart_algebra(fans::Cone::from_rays(2, {{1, 0}}));
  CHECK(a.gens == Mat{{1, 0}, {0, 1}, {0, -1}});
  REQUIRE(a.pres.binomials.size() == 1);
  CHECK(a.pres.binomials[0].p == Vec{0, 1, 1});
  CHECK(a.pres.binomials[0].r == Vec{0, 0, 0});
  CHECK(a.pres.binomials[0].phase == PhaseScalar::one());
}

TEST_CASE("chart relations are weight-homogeneous") {
  for (const auto& rays : {Mat{{1, 0}, {1, 2}}, Mat{{1, 0}}, Mat{}}) {
    ChartAlgebra a = chart_algebra(fans::Cone::from_rays(2, rays));
    for (const auto& b : a.pres.binomials)
      CHECK(a.monomial_weight(b.p) == a.monomial_weight(b.r));
  }
}

TEST_CASE("normal form agrees with the star realization") {
  ChartAlgebra orb = chart_algebra(fans::Cone::from_rays(2, {{1, 0}, {1, 2}}));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> gen_d(0, 2), pow_d(0, 3), len_d(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::pair<int, long long>> word;
    int len = len_d(rng);
    for (int k = 0; k < len; ++k) word.push_back({gen_d(rng), pow_d(rng)});
    auto [phase, expo] = normal_form(orb, word);
    auto [rphase, rvec] = orb.realize(expo);
    // word == phase * x^expo must hold in the Laurent algebra.
    LaurentElement expect =
        LaurentElement::monomial(2, rvec, phase * rphase);
    CHECK(realize_word(orb, word) == expect);
  }
  CHECK_THROWS_AS(normal_form(orb, {{0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(normal_form(orb, {{5, 1}}), std::invalid_argument);
}

TEST_CASE("monomial products: realization equals bubble normal form") {
  ChartAlgebra orb = chart_algebra(fans::Cone::from_rays(2, {{1, 0}, {1, 2}}));
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    Vec e = rand_vec(rng, 3, 0, 3), f = rand_vec(rng, 3, 0, 3);
    auto [mp, s] = orb.mul_monomials(e, f);
    // Concatenated word e-letters then f-letters, then bubble sort.
    std::vector<std::pair<int, long long>> word;
    for (int g = 0; g < 3; ++g) word.push_back({g, e[std::size_t(g)]});
    for (int g = 0; g < 3; ++g) word.push_back({g, f[std::size_t(g)]});
    auto [nphase, nexpo] = normal_form(orb, word);
    CHECK(s == nexpo);
    CHECK(mp == nphase);
  }
}

TEST_CASE("chart algebra rejects cones with lines") {
  CHECK_THROWS_AS(chart_algebra(fans::Cone::from_rays(2, {{1, 0}, {-1, 0}})),
                  fans::FanError);
}

TEST_CASE("gluing a chart with itself is the identity") {
  fans::Cone quadrant = fans::Cone::from_rays(2, {{1, 0}, {0, 1}});
  GluingData g = gluing_relations(quadrant, quadrant);
  CHECK(g.tau == quadrant);
  CHECK(g.combined.generators.size() == 4);
  // The identifications x_a = y_a appear as phase-one binomials.
  REQUIRE(g.combined.binomials.size() == 2);
  CHECK(g.combined.binomials[0].p == Vec{1, 0, 0, 0});
  CHECK(g.combined.binomials[0].r == Vec{0, 0, 1, 0});
  CHECK(g.combined.binomials[0].phase == PhaseScalar::one());
  CHECK(g.combined.binomials[1].p == Vec{0, 1, 0, 0});
  CHECK(g.combined.binomials[1].r == Vec{0, 0, 0, 1});
  CHECK(g.combined.binomials[1].phase == PhaseScalar::one());
}

TEST_CASE("gluing two projective-plane charts over their common ray") {
  fans::Cone s3 = fans::Cone::from_rays(2, {{1, 0}, {0, 1}});
  fans::Cone s1 = fans::Cone::from_rays(2, {{0, 1}, {-1, -1}});
  GluingData g = gluing_relations(s3, s1);
  CHECK(g.tau == fans::Cone::from_rays(2, {{0, 1}}));
  CHECK(g.chart1.size() == 2);
  CHECK(g.chart2.size() == 2);
  CHECK(g.overlap.gens == Mat{{1, 0}, {0, 1}, {-1, 0}});
  // Every combined binomial must be weight-homogeneous and its phase must
  // match the star realization over the combined generator list.
  Mat all = g.chart1.gens;
  all.insert(all.end(), g.chart2.gens.begin(), g.chart2.gens.end());
  for (const auto& b : g.combined.binomials) {
    Vec wl(2, 0), wr(2, 0);
    for (std::size_t a = 0; a < all.size(); ++a)
      for (int i = 0; i < 2; ++i) {
        wl[std::size_t(i)] += b.p[a] * all[a][std::size_t(i)];
        wr[std::size_t(i)] += b.r[a] * all[a][std::size_t(i)];
      }
    CHECK(wl == wr);
  }
  // Disjoint interiors but non-face intersection must be rejected.
  fans::Cone bad = fans::Cone::from_rays(2, {{1, 1}, {-1, 1}});
  CHECK_THROWS_AS(gluing_relations(s3, bad), fans::FanError);
}

TEST_CASE("first-order calculus: relations and differential") {
  ChartAlgebra a = chart_algebra(fans::Cone::from_rays(2, {{1, 0}, {0, 1}}));
  auto pres = kaehler_relations(a);
  CHECK(pres.generators.size() == 4);  // x1,x2,dx1,dx2
  CHECK(pres.commutation.size() == 5);  // one x-x pair + four x-dx pairs
  // dx2 carries the weight of x2: x1 dx2 = q12^2 dx2 x1.
  bool found = false;
  for (const auto& c : pres.commutation)
    if (c.a == 0 && c.b == 3) {
      CHECK(c.phase2 == PhaseScalar::unit(1, 2, 2));
      found = true;
    }
  CHECK(found);

  // d(x^(2,3)) = 2 q12^6 x^(1,3) dx1 + 3 x^(2,2) dx2.
  OmegaElement d = differential(a, {2, 3});
  REQUIRE(d.terms.size() == 2);
  CHECK(d.terms.at({0, Vec{1, 3}}) ==
        PhaseScalar::from_rational(2) * PhaseScalar::unit(1, 2, 6));
  CHECK(d.terms.at({1, Vec{2, 2}}) == PhaseScalar::from_rational(3));
  // d annihilates constants.
  CHECK(differential(a, {0, 0}).is_zero());

  // The binomial guard: no free first-order calculus on singular charts.
  ChartAlgebra orb = chart_algebra(fans::Cone::from_rays(2, {{1, 0}, {1, 2}}));
  CHECK_THROWS_AS(kaehler_relations(orb), std::domain_error);
}

TEST_CASE("the differential satisfies the deformed Leibniz rule") {
  // Quantum affine chart, exhaustive small exponents.
  ChartAlgebra a = chart_algebra(fans::Cone::from_rays(2, {{1, 0}, {0, 1}}));
  for (long long e1 = 0; e1 <= 2; ++e1)
    for (long long e2 = 0; e2 <= 2; ++e2)
      for (long long f1 = 0; f1 <= 2; ++f1)
        for (long long f2 = 0; f2 <= 2; ++f2)
          CHECK(leibniz_holds(a, {e1, e2}, {f1, f2}));

  // Three-dimensional quantum affine chart, random exponents.
  ChartAlgebra a3 =
      chart_algebra(fans::Cone::from_rays(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial)
    CHECK(leibniz_holds(a3, rand_vec(rng, 3, 0, 4), rand_vec(rng, 3, 0, 4)));

  // Orbifold chart: the rule holds on normal forms (commutation only).
  ChartAlgebra orb = chart_algebra(fans::Cone::from_rays(2, {{1, 0}, {1, 2}}));
  for (int trial = 0; trial < 25; ++trial)
    CHECK(leibniz_holds(orb, rand_vec(rng, 3, 0, 3), rand_vec(rng, 3, 0, 3)));
}

TEST_CASE("omega actions satisfy the bimodule axioms") {
  // Associativity of the right and left actions and their compatibility;
  // each equality compares two different composition orders, with the
  // monomial product phases supplying the independent cross-check.
  ChartAlgebra a =
      chart_algebra(fans::Cone::from_rays(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Vec e = rand_vec(rng, 3, 0, 3), f = rand_vec(rng, 3, 0, 3),
        g = rand_vec(rng, 3, 0, 3), base = rand_vec(rng, 3, 0, 3);
    OmegaElement w = differential(a, base);
    auto [pef, ef] = a.mul_monomials(e, f);
    // (w . x^e) . x^f == phase(e,f) * (w . x^{e+f})
    CHECK(omega_mul_right(a, omega_mul_right(a, w, e), f) ==
          omega_mul_right(a, w, ef).scaled(pef));
    // x^e . (x^f . w) == phase(e,f) * (x^{e+f} . w)
    CHECK(omega_mul_left(a, e, omega_mul_left(a, f, w)) ==
          omega_mul_left(a, ef, w).scaled(pef));
    // (x^g . w) . x^f == x^g . (w . x^f)
    CHECK(omega_mul_right(a, omega_mul_left(a, g, w), f) ==
          omega_mul_left(a, g, omega_mul_right(a, w, f)));
  }
}
