// Tests for the deformed matrix algebra.  Hand-computed n=2 values pin the
// conventions (exchange phases, braided Levi-Civita symbols, determinant);
// the averaged minor formula is cross-checked against two independent
// Leibniz-ordered oracles; Laplace expansions, minor commutation,
// permutability, localization and the adjugate/antipode identities are
// verified exactly, with a numeric-context consistency check.

#include <doctest.h>

#include <complex>
#include <vector>

#include "qtoric/qmatrix.hpp"

using qtoric::qmatrix::Element;
using qtoric::qmatrix::GWord;
using qtoric::qmatrix::Side;
using qtoric::qmatrix::Tuple;
using qtoric::scalars::ExactCtx;
using qtoric::scalars::NumericCtx;
using qtoric::scalars::PhaseScalar;
using qtoric::scalars::ThetaSpec;

namespace qm = qtoric::qmatrix;

namespace {

const ExactCtx X{};

PhaseScalar u(int i, int j, long long e = 1) { return PhaseScalar::unit(i, j, e); }

Element<ExactCtx> gmono(std::vector<std::pair<int, int>> letters,
                        PhaseScalar c = PhaseScalar::one(), long long det_pow = 0) {
  return qm::monomial(X, std::move(letters), c, det_pow);
}

bool is_exact_zero(const Element<ExactCtx>& e) { return e.terms.empty(); }

}  // namespace

TEST_CASE("tuple utilities") {
  CHECK(qm::tuple_sign({1, 2, 3}) == 1);
  CHECK(qm::tuple_sign({2, 1, 3}) == -1);
  CHECK(qm::tuple_sign({3, 1, 2}) == 1);
  CHECK(qm::tuple_sign({1, 1, 2}) == 0);
  CHECK(qm::permutations(3).size() == 6);
  CHECK(qm::permutations(1) == std::vector<Tuple>{{1}});
  auto inc = qm::increasing_tuples(2, 4);
  CHECK(inc.size() == 6);
  CHECK(inc.front() == Tuple{1, 2});
  CHECK(inc.back() == Tuple{3, 4});
  CHECK(qm::erase_pos({5, 7, 9}, 2) == Tuple{5, 9});
}

TEST_CASE("word normalization implements the exchange rule") {
  // g21 g12 = q12^4 g12 g21 (the squared exchange coefficient for this pair)
  auto lhs = gmono({{2, 1}, {1, 2}});
  auto rhs = qm::scale(X, gmono({{1, 2}, {2, 1}}), u(1, 2, 4));
  CHECK(is_exact_zero(qm::sub(X, lhs, rhs)));
  // diagonal units commute: g22 g11 = g11 g22
  CHECK(is_exact_zero(qm::sub(X, gmono({{2, 2}, {1, 1}}), gmono({{1, 1}, {2, 2}}))));
  // three-letter word reduces consistently regardless of grouping
  auto a = gmono({{2, 3}});
  auto b = gmono({{1, 2}});
  auto c = gmono({{2, 1}});
  auto left = qm::mul(X, 3, qm::mul(X, 3, a, b), c);
  auto right = qm::mul(X, 3, a, qm::mul(X, 3, b, c));
  CHECK(is_exact_zero(qm::sub(X, left, right)));
}

TEST_CASE("braided Levi-Civita symbols at n=2") {
  CHECK(qm::epsilon_c(X, {1, 2}) == PhaseScalar::one());
  CHECK(qm::epsilon_r(X, {1, 2}) == PhaseScalar::one());
  PhaseScalar m1 = PhaseScalar::zero() - PhaseScalar::one();
  CHECK(qm::epsilon_c(X, {2, 1}) == m1 * u(1, 2, 2));
  CHECK(qm::epsilon_r(X, {2, 1}) == m1 * u(1, 2, -2));
  CHECK(qm::epsilon_c(X, {1, 1}).is_zero());
  CHECK(qm::epsilon_r(X, {2, 2}).is_zero());
}

TEST_CASE("Levi-Civita adjacent-swap law") {
  // eps_c(..a,b..) = -q_{ba}^2 eps_c(..b,a..), eps_r with the inverse phase
  PhaseScalar m1 = PhaseScalar::zero() - PhaseScalar::one();
  for (int n : {3, 4}) {
    for (const Tuple& t : qm::permutations(n)) {
      for (int pos = 0; pos + 1 < n; ++pos) {
        Tuple s = t;
        std::swap(s[std::size_t(pos)], s[std::size_t(pos + 1)]);
        int a = t[std::size_t(pos)], b = t[std::size_t(pos + 1)];
        CHECK(qm::epsilon_c(X, t) == m1 * u(b, a, 2) * qm::epsilon_c(X, s));
        CHECK(qm::epsilon_r(X, t) == m1 * u(a, b, 2) * qm::epsilon_r(X, s));
      }
    }
  }
}

TEST_CASE("determinant at n=2 matches the hand expansion") {
  auto det = qm::qdet(X, 2);
  PhaseScalar m1 = PhaseScalar::zero() - PhaseScalar::one();
  auto expected = qm::add(X, gmono({{1, 1}, {2, 2}}),
                          qm::scale(X, gmono({{1, 2}, {2, 1}}), m1 * u(1, 2, 2)));
  CHECK(is_exact_zero(qm::sub(X, det, expected)));
}

TEST_CASE("averaged determinant equals both Leibniz orderings") {
  for (int n : {2, 3, 4}) {
    Tuple full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    auto det = qm::qdet(X, n);
    CHECK(is_exact_zero(qm::sub(X, det, qm::minor_row_leibniz(X, full, full))));
    CHECK(is_exact_zero(qm::sub(X, det, qm::minor_col_leibniz(X, full, full))));
  }
}

TEST_CASE("minors equal the Leibniz oracles and vanish on repeats") {
  for (int n : {3, 4}) {
    for (int d : {2, 3}) {
      if (d > n) continue;
      for (const Tuple& I : qm::increasing_tuples(d, n)) {
        for (const Tuple& J : qm::increasing_tuples(d, n)) {
          auto m = qm::minor(X, I, J);
          CHECK(is_exact_zero(qm::sub(X, m, qm::minor_row_leibniz(X, I, J))));
          CHECK(is_exact_zero(qm::sub(X, m, qm::minor_col_leibniz(X, I, J))));
        }
      }
    }
  }
  CHECK(qm::minor(X, {1, 1}, {1, 2}).is_zero());
  CHECK(qm::minor(X, {1, 2}, {2, 2}).is_zero());
}

TEST_CASE("minor value depends only on the index sets") {
  // The averaged double sum ranges over all arrangements of each
  // multi-index, so relisting I or J (any transposition, adjacent or not)
  // leaves the value unchanged.
  auto swapped = [](Tuple t, int a, int b) {
    std::swap(t[std::size_t(a)], t[std::size_t(b)]);
    return t;
  };
  Tuple I{1, 2, 3}, J{1, 3, 4};
  auto base = qm::minor(X, I, J);
  CHECK(is_exact_zero(qm::sub(X, base, qm::minor(X, I, swapped(J, 0, 1)))));
  CHECK(is_exact_zero(qm::sub(X, base, qm::minor(X, I, swapped(J, 0, 2)))));
  CHECK(is_exact_zero(qm::sub(X, base, qm::minor(X, swapped(I, 1, 2), J))));
  CHECK(is_exact_zero(qm::sub(X, base, qm::minor(X, swapped(I, 0, 2), J))));
  Tuple K{2, 4};
  CHECK(is_exact_zero(qm::sub(X, qm::minor(X, {1, 3}, K), qm::minor(X, {3, 1}, K))));
}

TEST_CASE("Laplace expansions reproduce the minor") {
  for (int n : {3, 4}) {
    int d = n - 1;
    for (const Tuple& I : qm::increasing_tuples(d, n)) {
      for (const Tuple& J : qm::increasing_tuples(d, n)) {
        auto m = qm::minor(X, I, J);
        for (int k = 1; k <= d; ++k) {
          CHECK(is_exact_zero(qm::sub(X, m, qm::laplace_row(X, n, I, J, k, Side::left))));
          CHECK(is_exact_zero(qm::sub(X, m, qm::laplace_row(X, n, I, J, k, Side::right))));
          CHECK(is_exact_zero(qm::sub(X, m, qm::laplace_col(X, n, I, J, k, Side::left))));
          CHECK(is_exact_zero(qm::sub(X, m, qm::laplace_col(X, n, I, J, k, Side::right))));
        }
      }
    }
  }
  // full-size expansion of the determinant itself
  Tuple full{1, 2, 3};
  auto det = qm::qdet(X, 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(is_exact_zero(qm::sub(X, det, qm::laplace_row(X, 3, full, full, k, Side::left))));
    CHECK(is_exact_zero(qm::sub(X, det, qm::laplace_col(X, 3, full, full, k, Side::right))));
  }
}

TEST_CASE("minor commutation with the squared R coefficient") {
  for (const Tuple& I : qm::increasing_tuples(2, 3)) {
    for (const Tuple& J : qm::increasing_tuples(2, 3)) {
      for (const Tuple& Ip : qm::increasing_tuples(2, 3)) {
        for (const Tuple& Jp : qm::increasing_tuples(2, 3)) {
          CHECK(is_exact_zero(qm::minor_commutation_defect(X, 3, I, J, Ip, Jp)));
        }
      }
    }
  }
  // mixed sizes: a 1x1 minor against a 2x2 minor
  CHECK(is_exact_zero(qm::minor_commutation_defect(X, 3, {2}, {3}, {1, 3}, {1, 2})));
}

TEST_CASE("determinant permutability and localization") {
  for (int n : {2, 3}) {
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        CHECK(is_exact_zero(qm::permutability_defect(X, n, k, l)));
  }
  // localized crossing at n=2: g12 det^{-1} = q12^4 det^{-1} g12
  Element<ExactCtx> det_inv;
  det_inv.add(X, GWord{-1, {}}, PhaseScalar::one());
  auto lhs = qm::mul(X, 2, gmono({{1, 2}}), det_inv);
  auto rhs = qm::scale(X, qm::mul(X, 2, det_inv, gmono({{1, 2}})), u(1, 2, 4));
  CHECK(is_exact_zero(qm::sub(X, lhs, rhs)));
  // clearing det powers: det^{-1} * (det polynomial) reduces to 1
  Element<ExactCtx> one;
  one.add(X, GWord{0, {}}, PhaseScalar::one());
  auto prod = qm::mul(X, 2, det_inv, qm::qdet(X, 2));
  CHECK(is_exact_zero(qm::localized_defect(X, 2, prod, one)));
}

TEST_CASE("adjugate columns invert the generator matrix") {
  for (int n : {2, 3}) {
    auto det = qm::qdet(X, n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Element<ExactCtx> s;
        for (int k = 1; k <= n; ++k)
          s = qm::add(X, s, qm::mul(X, n, qm::adjugate(X, n, i, k), gmono({{k, j}})));
        if (i == j)
          CHECK(is_exact_zero(qm::sub(X, s, det)));
        else
          CHECK(is_exact_zero(s));
      }
    }
  }
}

TEST_CASE("antipode orthogonality on both sides") {
  for (int n : {2, 3}) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK(is_exact_zero(qm::antipode_defect(X, n, i, j, Side::left)));
        CHECK(is_exact_zero(qm::antipode_defect(X, n, i, j, Side::right)));
      }
    }
  }
}

TEST_CASE("numeric context agrees with the exact expansion") {
  ThetaSpec theta = ThetaSpec::random(3, 20240815u);
  NumericCtx N{theta};
  // determinant identity numerically
  Tuple full{1, 2, 3};
  auto d_minor = qm::qdet(N, 3);
  auto d_leib = qm::minor_row_leibniz(N, full, full);
  CHECK(qm::residual(N, qm::sub(N, d_minor, d_leib)) < 1e-12);
  // exact element specialized termwise equals the numeric element
  auto exact = qm::qdet(X, 3);
  double delta = 0.0;
  for (const auto& [w, c] : exact.terms) {
    auto it = d_minor.terms.find(w);
    REQUIRE(it != d_minor.terms.end());
    delta = std::max(delta, std::abs(c.specialize(theta) - it->second));
  }
  CHECK(delta < 1e-12);
  CHECK(exact.terms.size() == d_minor.terms.size());
}

TEST_CASE("classical limit at theta = 0") {
  std::vector<std::complex<double>> zero(16, {0.0, 0.0});
  ThetaSpec theta = ThetaSpec::numeric(4, zero);
  NumericCtx N{theta};
  auto det = qm::qdet(N, 3);
  // every coefficient is +1 or -1 and the 6 row-sorted permutation words appear
  CHECK(det.terms.size() == 6);
  for (const auto& [w, c] : det.terms) {
    CHECK(std::abs(std::abs(c.real()) - 1.0) < 1e-12);
    CHECK(std::abs(c.imag()) < 1e-12);
  }
  // alternation defect of the classical minor under column relisting is zero
  CHECK(qm::residual(N, qm::sub(N, qm::minor(N, {1, 2}, {2, 3}),
                                qm::minor(N, {1, 2}, {3, 2}))) < 1e-12);
}

TEST_CASE("centrality condition detects balanced column sums") {
  // theta with equal column sums mod 2 pi -> central determinant
  std::vector<std::complex<double>> flat = {
      {0, 0},  {1, 0},  {-1, 0},  //
      {-1, 0}, {0, 0},  {1, 0},   //
      {1, 0},  {-1, 0}, {0, 0}};
  ThetaSpec balanced = ThetaSpec::numeric(3, flat);
  CHECK(qm::centrality_condition(balanced));
  NumericCtx NB{balanced};
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      auto det = qm::qdet(NB, 3);
      auto g = qm::monomial(NB, {{k, l}}, NB.one());
      auto defect = qm::sub(NB, qm::mul(NB, 3, det, g), qm::mul(NB, 3, g, det));
      CHECK(qm::residual(NB, defect) < 1e-9);
    }
  }
  ThetaSpec generic = ThetaSpec::random(3, 7u);
  CHECK_FALSE(qm::centrality_condition(generic));
  NumericCtx NG{generic};
  auto det = qm::qdet(NG, 3);
  auto g = qm::monomial(NG, {{1, 2}}, NG.one());
  auto defect = qm::sub(NG, qm::mul(NG, 3, det, g), qm::mul(NG, 3, g, det));
  CHECK(qm::residual(NG, defect) > 1e-6);
}

TEST_CASE("rendering of localized words") {
  Element<ExactCtx> e;
  e.add(X, GWord{-1, {{1, 2}, {2, 1}}}, PhaseScalar::one());
  CHECK(qm::gword_text(e.terms.begin()->first) == "det^-1*g12*g21");
  GWord unit_word{0, {}};
  CHECK(qm::gword_text(unit_word) == "1");
  CHECK(qm::element_text(Element<ExactCtx>{}) == "0");
}
