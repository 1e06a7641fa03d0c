// Homogeneous coordinate algebras: grading, quadratic dual, Frobenius
// pairing, Ore localization and the chart isomorphism, monomial ideals, and
// quotient varieties.
#include <complex>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "qtoric/fans.hpp"
#include "qtoric/grassmann.hpp"
#include "qtoric/projective.hpp"
#include "qtoric/torus.hpp"

using namespace qtoric;
using projective::HomogeneousAlgebra;
using projective::WPoly;
using scalars::PhaseScalar;
using scalars::ThetaSpec;
using fans::Vec;

namespace {

PhaseScalar u(int i, int j, long long e = 1) { return PhaseScalar::unit(i, j, e); }

Vec e_vec(int N, int k, long long v = 1) {
  Vec out(size_t(N), 0);
  out[size_t(k)] = v;
  return out;
}

// Coefficients of (sum_k s^k)^m through degree deg: the free graded
// dimensions computed by direct series convolution, independent of any
// binomial formula.
std::vector<long long> geometric_power(int m, int deg) {
  std::vector<long long> acc(size_t(deg) + 1, 0);
  acc[0] = 1;
  for (int t = 0; t < m; ++t) {
    std::vector<long long> next(size_t(deg) + 1, 0);
    for (int a = 0; a <= deg; ++a) {
      if (acc[size_t(a)] == 0) continue;
      for (int b = a; b <= deg; ++b) next[size_t(b)] += acc[size_t(a)];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("homogeneous algebra: exchange phases and the character product") {
  const auto A = projective::projective_space(3);
  REQUIRE(A.size() == 4);
  CHECK(A.names[0] == "w1");
  CHECK(A.weights[0] == Vec{1, 0, 0});
  CHECK(A.weights[3] == Vec{0, 0, 0});

  // w_i w_j = q_ij^2 w_j w_i for i, j <= n; the last generator is central.
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const WPoly ab = projective::word_to_poly(A, {a, b});
      const WPoly ba = projective::word_to_poly(A, {b, a});
      const PhaseScalar expected =
          (b < 3) ? u(a + 1, b + 1, 2) : PhaseScalar::one();
      CHECK(projective::wpoly_is_zero(
          [&] {
            WPoly d = ab;
            projective::wadd_inplace(d, projective::wscale(ba, PhaseScalar::zero() - expected));
            return d;
          }()));
      CHECK(A.exchange2(a, b) == expected);
    }

  // The reorder phase agrees with the torus star phase restricted to the
  // first n coordinates, exactly and numerically.
  const ThetaSpec th = ThetaSpec::random(3, 19);
  const Vec p{2, 0, 1, 3}, r{1, 4, 0, 2};
  const Vec ph(p.begin(), p.end() - 1), rh(r.begin(), r.end() - 1);
  CHECK(A.reorder_phase(p, r) == torus::star_phase(ph, rh));
  CHECK(std::abs(A.reorder_phase(p, r).specialize(th) -
                 torus::star_phase_numeric(th, ph, rh)) < 1e-12);

  // Associativity of the character product on a haphazard triple.
  const WPoly x = projective::wpoly_monomial(Vec{1, 2, 0, 1});
  const WPoly y = projective::wpoly_monomial(Vec{0, 1, 3, 0}, u(1, 2));
  const WPoly z = projective::wpoly_monomial(Vec{2, 0, 1, 1}, u(2, 3, -1));
  CHECK(projective::wmul(A, projective::wmul(A, x, y), z) ==
        projective::wmul(A, x, projective::wmul(A, y, z)));
}

TEST_CASE("graded dimensions of the free algebra match series convolution") {
  // n=2, k=2 -> 6 and k=0 -> 1.
  const auto A2 = projective::projective_space(2);
  CHECK(projective::graded_dimension(A2, 0) == 1);
  CHECK(projective::graded_dimension(A2, 2) == 6);
  CHECK(projective::degree_basis(3, 2).size() == 6);

  for (int n = 1; n <= 4; ++n) {
    const auto A = projective::projective_space(n);
    const auto dims = projective::hilbert_free(n, 10);
    const auto oracle = geometric_power(n + 1, 10);
    REQUIRE(dims.size() == oracle.size());
    for (int k = 0; k <= 10; ++k) {
      CHECK(dims[size_t(k)] == oracle[size_t(k)]);
      if (k <= 6)
        CHECK(projective::graded_dimension(A, k) ==
              (long long)projective::degree_basis(n + 1, k).size());
    }
  }
  CHECK(projective::graded_dimension(projective::projective_space(2), -1) == 0);
}

TEST_CASE("quadratic dual: dimensions, relations, Hilbert reciprocity") {
  // n=2 degree dimensions 1, 3, 3, 1.
  CHECK(projective::koszul_dims(2) == std::vector<long long>{1, 3, 3, 1});
  for (int n = 1; n <= 4; ++n) {
    const auto dims = projective::koszul_dims(n);
    for (int k = 0; k <= n + 1; ++k)
      CHECK((long long)projective::koszul_basis(n, k).size() == dims[size_t(k)]);
    CHECK(projective::koszul_basis(n, n + 2).empty());
    CHECK(projective::hilbert_product_is_one(n, 10));
  }

  // A letter squares to zero; distinct letters anticommute with the stated
  // phase (exchange factor -q_ij^2, trivial unit when one letter is last).
  const int n = 3;
  for (int i = 1; i <= n + 1; ++i)
    CHECK_FALSE(projective::koszul_mul(n, {i}, {i}).has_value());
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      const auto fwd = projective::koszul_mul(n, {i}, {j});
      const auto rev = projective::koszul_mul(n, {j}, {i});
      REQUIRE(fwd.has_value());
      REQUIRE(rev.has_value());
      CHECK(fwd->second == std::vector<int>{i, j});
      CHECK(rev->second == std::vector<int>{i, j});
      CHECK(fwd->first == PhaseScalar::one());
      const PhaseScalar expect = (j <= n)
                                     ? PhaseScalar::from_rational(-1) * u(i, j, -2)
                                     : PhaseScalar::from_rational(-1);
      CHECK(rev->first == expect);
    }

  // Associativity of the dual product on all disjoint letter triples.
  for (int a = 1; a <= n + 1; ++a)
    for (int b = 1; b <= n + 1; ++b)
      for (int c = 1; c <= n + 1; ++c) {
        if (a == b || b == c || a == c) continue;
        const auto ab = projective::koszul_mul(n, {a}, {b});
        const auto bc = projective::koszul_mul(n, {b}, {c});
        const auto lhs = projective::koszul_mul(n, ab->second, {c});
        const auto rhs = projective::koszul_mul(n, {a}, bc->second);
        REQUIRE(lhs.has_value());
        REQUIRE(rhs.has_value());
        CHECK(lhs->second == rhs->second);
        CHECK(ab->first * lhs->first == bc->first * rhs->first);
      }

  const auto kd = projective::koszul_dual(projective::projective_space(2));
  CHECK(kd.n == 2);
  CHECK(kd.pres.generators.size() == 3);
  CHECK(kd.pres.commutation.size() == 3);
  CHECK(kd.pres.relations.size() == 3);
  CHECK(kd.pres.commutation[0].phase2 ==
        PhaseScalar::from_rational(-1) * u(1, 2, 2));
  CHECK(kd.pres.commutation[2].phase2 == PhaseScalar::from_rational(-1));
  CHECK_THROWS_AS((void)projective::koszul_dual(projective::grassmann_ambient(2, 4)),
                  std::invalid_argument);
}

TEST_CASE("frobenius pairing has one survivor per row and full rank") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n + 1; ++k) {
      const auto M = projective::frobenius_pairing(n, k);
      const auto dims = projective::koszul_dims(n);
      REQUIRE((long long)M.size() == dims[size_t(k)]);
      for (const auto& row : M) {
        int nonzero = 0;
        for (const auto& entry : row)
          if (!entry.is_zero()) {
            ++nonzero;
            CHECK(entry.is_monomial());
          }
        // A row word pairs nontrivially only with its complement.
        CHECK(nonzero == 1);
      }
    }

  // Pinned ranks: k=0 -> 1; n=2,k=1 -> 3; n=3,k=2 -> 6.
  const ThetaSpec th2 = ThetaSpec::random(2, 23);
  const ThetaSpec th3 = ThetaSpec::random(3, 29);
  CHECK(projective::frobenius_pairing_rank(2, 0, th2) == 1);
  CHECK(projective::frobenius_pairing_rank(2, 1, th2) == 3);
  CHECK(projective::frobenius_pairing_rank(3, 2, th3) == 6);
  for (int k = 0; k <= 4; ++k)
    CHECK(projective::frobenius_pairing_rank(3, k, th3) ==
          projective::koszul_dims(3)[size_t(k)]);
  CHECK_THROWS_AS(projective::frobenius_pairing_rank(3, 5, th3), std::out_of_range);

  // Exact certificates for n <= 2: the determinant is a nonzero monomial.
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= n + 1; ++k) {
      const PhaseScalar det = projective::frobenius_pairing_det(n, k);
      CHECK_FALSE(det.is_zero());
      CHECK(det.is_monomial());
    }
  CHECK_THROWS_AS(projective::frobenius_pairing_det(3, 1), std::invalid_argument);
}

TEST_CASE("ore localization reproduces the derived chart phases") {
  // Closed-form oracle: y_k y_l = qt_ik^2 qt_il^-2 qt_kl^2 y_l y_k, derived
  // from the character product of the homogeneous algebra.
  for (int n = 2; n <= 4; ++n) {
    const auto A = projective::projective_space(n);
    for (int i = 1; i <= n + 1; ++i) {
      const auto loc = projective::localize_degree0(A, i);
      REQUIRE((int)loc.generators.size() == n);
      std::vector<int> letters;
      for (int k = 1; k <= n + 1; ++k)
        if (k != i) letters.push_back(k);
      for (const auto& cm : loc.commutation) {
        const int k = letters[size_t(cm.a)], l = letters[size_t(cm.b)];
        const PhaseScalar oracle = A.qtilde(i - 1, k - 1).pow(2) *
                                   A.qtilde(i - 1, l - 1).pow(-2) *
                                   A.qtilde(k - 1, l - 1).pow(2);
        CHECK(cm.phase2 == oracle);
      }
      // Weight equivariance of the generators.
      for (size_t t = 0; t < letters.size(); ++t) {
        Vec expect = A.weights[size_t(letters[t] - 1)];
        for (size_t c = 0; c < expect.size(); ++c)
          expect[c] -= A.weights[size_t(i - 1)][c];
        CHECK(loc.generators[t].vector == expect);
      }
    }
  }

  // Central localization i = n+1: y_k y_l = q_kl^2 y_l y_k.
  const auto A3 = projective::projective_space(3);
  const auto central = projective::localize_degree0(A3, 4);
  for (const auto& cm : central.commutation)
    CHECK(cm.phase2 == u(cm.a + 1, cm.b + 1, 2));

  // i=1, n=2: the sigma_1-chart phases.
  const auto A2 = projective::projective_space(2);
  const auto loc1 = projective::localize_degree0(A2, 1);
  REQUIRE(loc1.commutation.size() == 1);
  // y2 = w1^-1 w2, y3 = w1^-1 w3: y2 y3 = q_12^2 y3 y2.
  CHECK(loc1.commutation[0].phase2 == u(1, 2, 2));

  // n=1: a single commutative generator.
  const auto line = projective::localize_degree0(projective::projective_space(1), 2);
  CHECK(line.generators.size() == 1);
  CHECK(line.commutation.empty());

  // Associativity of the fraction product.
  const auto ya = projective::local_generator(A3, 2, 1);
  const auto yb = projective::local_generator(A3, 2, 3);
  const auto yc = projective::local_generator(A3, 2, 4);
  const auto lhs = projective::local_mul(A3, projective::local_mul(A3, ya, yb), yc);
  const auto rhs = projective::local_mul(A3, ya, projective::local_mul(A3, yb, yc));
  CHECK(lhs.m == rhs.m);
  CHECK(lhs.a == rhs.a);
  CHECK_THROWS_AS(projective::local_mul(A3, ya, projective::local_generator(A3, 3, 1)),
                  std::invalid_argument);
}

TEST_CASE("chart isomorphism holds on every maximal cone") {
  for (int n = 1; n <= 3; ++n) {
    const auto res = projective::chart_iso_check(n);
    CHECK(res.ok);
    REQUIRE((int)res.charts.size() == n + 1);
    for (const auto& ck : res.charts) {
      CHECK(ck.weights_match);
      CHECK(ck.phases_match);
      CHECK(ck.witness.empty());
    }
  }
  CHECK_THROWS_AS(projective::chart_iso_check(4), std::invalid_argument);

  // The last maximal cone is the positive orthant (its chart is the
  // central localization).
  const auto cone3 = projective::projective_fan_cone(2, 3);
  CHECK(cone3.rays() == fans::Mat{{1, 0}, {0, 1}});
  CHECK(cone3.is_smooth());

  // theta = 0 specializes every localized phase to 1 (the classical case).
  const std::vector<std::complex<double>> zeros(9, 0.0);
  const ThetaSpec flat = ThetaSpec::numeric(3, zeros);
  const auto loc = projective::localize_degree0(projective::projective_space(3), 1);
  for (const auto& cm : loc.commutation)
    CHECK(std::abs(cm.phase2.specialize(flat) - 1.0) < 1e-15);
}

TEST_CASE("face ideals: membership, closure, primality") {
  // Quadrant chart (the flat plane): the face spanned by e1 gives <t1>.
  const auto quad = fans::Cone::from_rays(2, {{1, 0}, {0, 1}});
  const auto ray1 = fans::Cone::from_rays(2, {{1, 0}});
  const auto I1 = projective::face_ideal(quad, ray1);
  CHECK(I1.in_ideal(Vec{1, 0}));
  CHECK(I1.in_ideal(Vec{2, 3}));
  CHECK_FALSE(I1.in_ideal(Vec{0, 1}));
  CHECK_FALSE(I1.in_ideal(Vec{0, 0}));
  CHECK(projective::ideal_property_ok(I1, 6));
  CHECK(projective::is_prime_monomial(I1, 6));

  // tau = sigma: the augmentation-style ideal of all nonzero characters.
  const auto Iall = projective::face_ideal(quad, quad);
  CHECK(Iall.in_ideal(Vec{0, 1}));
  CHECK(Iall.in_ideal(Vec{1, 0}));
  CHECK_FALSE(Iall.in_ideal(Vec{0, 0}));
  CHECK(projective::ideal_property_ok(Iall, 6));
  CHECK(projective::is_prime_monomial(Iall, 6));

  // tau = 0: the zero ideal (prime: the chart algebra is a domain).
  const auto Izero = projective::face_ideal(quad, fans::Cone::from_rays(2, {}));
  for (const auto& m : projective::dual_semigroup_box(quad, 4))
    CHECK_FALSE(Izero.in_ideal(m));
  CHECK(projective::ideal_property_ok(Izero, 6));
  CHECK(projective::is_prime_monomial(Izero, 6));

  // An interior ray is not a face.
  CHECK_THROWS_AS(projective::face_ideal(quad, fans::Cone::from_rays(2, {{1, 1}})),
                  std::invalid_argument);

  // Every face of a non-orthant chart cone passes both certificates.
  const auto slant = projective::projective_fan_cone(2, 1);
  for (const auto& face : slant.faces()) {
    const auto I = projective::face_ideal(slant, face);
    CHECK(projective::ideal_property_ok(I, 6));
    CHECK(projective::is_prime_monomial(I, 6));
  }
  CHECK(projective::dual_semigroup_box(slant, 1).size() == 3);

  // Engineered non-prime witness: multiples of the generator missing the
  // generator itself (the square of the coordinate).
  projective::MonomialIdeal sq(fans::Cone::from_rays(1, {{1}}));
  sq.in_ideal = [](const Vec& m) { return m[0] >= 2; };
  CHECK(projective::ideal_property_ok(sq, 8));
  CHECK_FALSE(projective::is_prime_monomial(sq, 8));
}

TEST_CASE("quotient varieties: validation, restriction, grassmannian image") {
  const auto A2 = projective::projective_space(2);

  // Zero relation list returns the algebra unchanged.
  const auto same = projective::quotient_variety(A2, {});
  CHECK(same.ideal.empty());
  CHECK(projective::graded_dimension(same, 3) == 10);

  // Quotient by the last (central) generator restricts to the smaller
  // projective space.
  for (int n = 2; n <= 3; ++n) {
    const auto A = projective::projective_space(n);
    const WPoly wlast = projective::wpoly_monomial(e_vec(n + 1, n));
    const auto Q = projective::quotient_variety(A, {wlast});
    for (int k = 0; k <= 5; ++k)
      CHECK(projective::graded_dimension(Q, k) ==
            (long long)projective::degree_basis(n, k).size());
  }

  // Inhomogeneous and weight-inhomogeneous relations are rejected.
  WPoly mixed = projective::wpoly_monomial(e_vec(3, 0));
  projective::wadd_inplace(mixed, projective::wpoly_monomial(Vec{1, 1, 0}));
  CHECK_THROWS_AS((void)projective::quotient_variety(A2, {mixed}), std::invalid_argument);
  WPoly skew = projective::wpoly_monomial(e_vec(3, 0));
  projective::wadd_inplace(skew,
                           projective::wscale(projective::wpoly_monomial(e_vec(3, 1)),
                                              PhaseScalar::from_rational(-1)));
  CHECK_THROWS_AS((void)projective::quotient_variety(A2, {skew}), std::invalid_argument);
  CHECK_THROWS_AS((void)projective::quotient_variety(A2, {WPoly{}}), std::invalid_argument);

  // The 2;4 grassmannian inside its ambient projective 5-space: the minor
  // relations are weight-homogeneous and carve out the classical graded
  // dimensions 1, 6, 20, 50 (a flat quadric quotient).
  const auto amb = projective::grassmann_ambient(2, 4);
  REQUIRE(amb.size() == 6);
  const auto fs = projective::grassmann_ideal(2, 4);
  REQUIRE(fs.size() == 4);
  const auto gr = projective::quotient_variety(amb, fs);
  const auto free6 = geometric_power(6, 4);
  CHECK(projective::graded_dimension(gr, 0) == 1);
  CHECK(projective::graded_dimension(gr, 1) == 6);
  CHECK(projective::graded_dimension(gr, 2) == free6[2] - free6[0]);  // 21 - 1
  CHECK(projective::graded_dimension(gr, 3) == free6[3] - free6[1]);  // 56 - 6
  CHECK(projective::graded_dimension(gr, 2) == 20);
  CHECK(projective::graded_dimension(gr, 3) == 50);

  // Ambient exchange phases agree with the presentation of the minor
  // algebra itself.
  const auto gp = grassmann::grassmannian_algebra(2, 4);
  for (const auto& cm : gp.commutation)
    CHECK(amb.exchange2(cm.a, cm.b) == cm.phase2);

  // Rendered presentation round-trips through the character basis.
  const auto pres = gr.pres();
  REQUIRE(pres.relations.size() == fs.size());
  for (size_t t = 0; t < fs.size(); ++t) {
    WPoly back;
    for (const auto& [coeff, word] : pres.relations[t].terms)
      projective::wadd_inplace(back, projective::word_to_poly(gr, word, coeff));
    CHECK(back == fs[t]);
  }
}
