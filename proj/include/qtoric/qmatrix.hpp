#pragma once
// Deformed matrix algebras.  The coordinate algebra of the deformed matrix
// variety is generated by matrix units g_ij subject to the exchange rule
//     g_ij g_kl = Q^2_{ij;kl} g_kl g_ij,     Q_{ij;kl} = q_ki q_jl,
// so every word has a canonical normal form (letters sorted, one Q^2 per
// transposition).  Determinants and minors are built from two braided
// Levi-Civita symbols (one for row indices, one for column indices) that
// absorb the Q-coefficients of the deformed Leibniz formula:
//     eps_c^{i_1..i_m} = sgn * prod_{k<m} prod_{s<=m-k} Q_{s+k, i_{s+k}; s, i_s},
//     eps_r^{j_1..j_m} = sgn * prod_{k<m} prod_{s<=m-k} Q_{j_{s+k}, s+k; j_s, s},
//     minor(I,J) = (1/d!) sum over arrangements A of I and B of J of
//                  eps_r^A eps_c^B g_{A_1 B_1} ... g_{A_d B_d}.
// The determinant is the full minor; it is permutable,
//     det g_kl = (prod_i Q^2_{ii;kl}) g_kl det,
// which lets the algebra be localized at det (words carry a det power) and
// yields an adjugate and antipode.  All operations are templated on a phase
// context (exact Laurent phases or complex numbers at a concrete theta).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/scalars.hpp"

namespace qtoric::qmatrix {

using Tuple = std::vector<int>;  // multi-index with 1-based entries

// 0 if the tuple has a repeated entry, otherwise the sign of the permutation
// that sorts it increasingly.
int tuple_sign(const Tuple& t);
// All permutations of (1..d) in lexicographic order.
std::vector<Tuple> permutations(int d);
// All strictly increasing d-tuples with entries in (1..n), lexicographic.
std::vector<Tuple> increasing_tuples(int d, int n);
// t with position k (1-based) removed.
Tuple erase_pos(const Tuple& t, int k);

// Normal-form word: det power (kept leftmost) times sorted letters g_ij.
struct GWord {
  long long det_pow = 0;
  std::vector<std::pair<int, int>> letters;
  bool operator==(const GWord& o) const {
    return det_pow == o.det_pow && letters == o.letters;
  }
  bool operator<(const GWord& o) const {
    if (det_pow != o.det_pow) return det_pow < o.det_pow;
    return letters < o.letters;
  }
};

std::string gword_text(const GWord& w);

template <class Ctx>
struct Element {
  using V = typename Ctx::value_type;
  std::map<GWord, V> terms;

  void add(const Ctx& ctx, GWord w, const V& c) {
    if (ctx.is_zero(c)) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(std::move(w), c);
    } else {
      it->second = it->second + c;
      if (ctx.is_zero(it->second)) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
};

// q_ij in the given context (indices in any order).
template <class Ctx>
typename Ctx::value_type q(const Ctx& ctx, int i, int j, long long e = 1) {
  return ctx.unit(i, j, e);
}

// Q_{ij;kl} = q_ki q_jl, optionally raised to an even power via e.
template <class Ctx>
typename Ctx::value_type Q(const Ctx& ctx, int i, int j, int k, int l, long long e = 1) {
  return ctx.unit(k, i, e) * ctx.unit(j, l, e);
}

// Phase accumulated when det^p crosses the single letter g_kl from right to
// left: g_kl det^p = (prod_i Q^2_{ii;kl})^{-p} det^p g_kl.
template <class Ctx>
typename Ctx::value_type det_cross_phase(const Ctx& ctx, int n, int k, int l, long long p) {
  auto acc = ctx.one();
  for (int i = 1; i <= n; ++i) acc = acc * Q(ctx, i, i, k, l, -2 * p);
  return acc;
}

// Sorts the letters of a word, accumulating one Q^2 per adjacent swap.
// Returns the phase; letters are sorted in place.
template <class Ctx>
typename Ctx::value_type normalize_letters(const Ctx& ctx,
                                           std::vector<std::pair<int, int>>& letters) {
  auto phase = ctx.one();
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
      if (letters[p + 1] < letters[p]) {
        // g_kl g_ij = Q^2_{kl;ij} g_ij g_kl with (k,l) before (i,j)
        auto [k, l] = letters[p];
        auto [i, j] = letters[p + 1];
        phase = phase * Q(ctx, k, l, i, j, 2);
        std::swap(letters[p], letters[p + 1]);
        moved = true;
      }
    }
  }
  return phase;
}

template <class Ctx>
Element<Ctx> monomial(const Ctx& ctx, std::vector<std::pair<int, int>> letters,
                      typename Ctx::value_type c, long long det_pow = 0) {
  auto phase = normalize_letters(ctx, letters);
  Element<Ctx> e;
  e.add(ctx, GWord{det_pow, std::move(letters)}, c * phase);
  return e;
}

template <class Ctx>
Element<Ctx> scale(const Ctx& ctx, const Element<Ctx>& a, const typename Ctx::value_type& c) {
  Element<Ctx> out;
  for (const auto& [w, v] : a.terms) out.add(ctx, w, v * c);
  return out;
}

template <class Ctx>
Element<Ctx> add(const Ctx& ctx, const Element<Ctx>& a, const Element<Ctx>& b) {
  Element<Ctx> out = a;
  for (const auto& [w, v] : b.terms) out.add(ctx, w, v);
  return out;
}

template <class Ctx>
Element<Ctx> sub(const Ctx& ctx, const Element<Ctx>& a, const Element<Ctx>& b) {
  Element<Ctx> out = a;
  for (const auto& [w, v] : b.terms) out.add(ctx, w, ctx.zero() - v);
  return out;
}

// Product in the localized algebra of n x n matrix units.
template <class Ctx>
Element<Ctx> mul(const Ctx& ctx, int n, const Element<Ctx>& a, const Element<Ctx>& b) {
  Element<Ctx> out;
  for (const auto& [wa, ca] : a.terms) {
    for (const auto& [wb, cb] : b.terms) {
      auto coeff = ca * cb;
      // move det^{wb.det_pow} left across the letters of wa
      if (wb.det_pow != 0) {
        for (const auto& [k, l] : wa.letters)
          coeff = coeff * det_cross_phase(ctx, n, k, l, wb.det_pow);
      }
      std::vector<std::pair<int, int>> letters = wa.letters;
      letters.insert(letters.end(), wb.letters.begin(), wb.letters.end());
      coeff = coeff * normalize_letters(ctx, letters);
      out.add(ctx, GWord{wa.det_pow + wb.det_pow, std::move(letters)}, coeff);
    }
  }
  return out;
}

// Largest coefficient residual; 0 exactly when the element is zero in the
// exact context, and the max |coefficient| numerically.
template <class Ctx>
double residual(const Ctx& ctx, const Element<Ctx>& e) {
  double r = 0.0;
  for (const auto& [w, v] : e.terms) r = std::max(r, ctx.residual(v));
  return r;
}

// Braided Levi-Civita symbol on column indices.
template <class Ctx>
typename Ctx::value_type epsilon_c(const Ctx& ctx, const Tuple& t) {
  int sgn = tuple_sign(t);
  if (sgn == 0) return ctx.zero();
  int m = int(t.size());
  auto acc = sgn > 0 ? ctx.one() : ctx.zero() - ctx.one();
  for (int k = 1; k <= m - 1; ++k)
    for (int s = 1; s <= m - k; ++s)
      acc = acc * Q(ctx, s + k, t[std::size_t(s + k - 1)], s, t[std::size_t(s - 1)]);
  return acc;
}

// Braided Levi-Civita symbol on row indices.
template <class Ctx>
typename Ctx::value_type epsilon_r(const Ctx& ctx, const Tuple& t) {
  int sgn = tuple_sign(t);
  if (sgn == 0) return ctx.zero();
  int m = int(t.size());
  auto acc = sgn > 0 ? ctx.one() : ctx.zero() - ctx.one();
  for (int k = 1; k <= m - 1; ++k)
    for (int s = 1; s <= m - k; ++s)
      acc = acc * Q(ctx, t[std::size_t(s + k - 1)], s + k, t[std::size_t(s - 1)], s);
  return acc;
}

// Minor on rows I, columns J: the (1/d!)-averaged double sum over
// arrangements, with one row symbol and one column symbol.  Zero when a
// multi-index has a repeat.
template <class Ctx>
Element<Ctx> minor(const Ctx& ctx, const Tuple& I, const Tuple& J) {
  if (I.size() != J.size()) throw std::invalid_argument("minor: |I| != |J|");
  int d = int(I.size());
  Element<Ctx> out;
  long long fact = 1;
  for (int k = 2; k <= d; ++k) fact *= k;
  auto perms = permutations(d);
  for (const Tuple& tau : perms) {
    Tuple A(std::size_t(d), 0);
    for (int m = 0; m < d; ++m) A[std::size_t(m)] = I[std::size_t(tau[std::size_t(m)] - 1)];
    auto er = epsilon_r(ctx, A);
    if (ctx.is_zero(er)) continue;
    for (const Tuple& sig : perms) {
      Tuple B(std::size_t(d), 0);
      for (int m = 0; m < d; ++m) B[std::size_t(m)] = J[std::size_t(sig[std::size_t(m)] - 1)];
      auto ec = epsilon_c(ctx, B);
      if (ctx.is_zero(ec)) continue;
      std::vector<std::pair<int, int>> letters(std::size_t(d), {0, 0});
      for (int m = 0; m < d; ++m) letters[std::size_t(m)] = {A[std::size_t(m)], B[std::size_t(m)]};
      auto phase = normalize_letters(ctx, letters);
      out.add(ctx, GWord{0, std::move(letters)},
              er * ec * phase * ctx.rational(1, fact));
    }
  }
  return out;
}

// Independent oracle for the same minor: the row-ordered Leibniz sum
//   sum_sigma sgn(sigma) (prod_{b>=1} prod_a Q_{i_{a+b} j_{sigma(a+b)}; i_a j_{sigma(a)}})
//   g_{i_1 j_{sigma(1)}} ... g_{i_d j_{sigma(d)}}.
template <class Ctx>
Element<Ctx> minor_row_leibniz(const Ctx& ctx, const Tuple& I, const Tuple& J) {
  if (I.size() != J.size()) throw std::invalid_argument("minor: |I| != |J|");
  int d = int(I.size());
  if (tuple_sign(I) == 0 || tuple_sign(J) == 0) return Element<Ctx>{};
  Element<Ctx> out;
  for (const Tuple& sig : permutations(d)) {
    int sgn = tuple_sign(sig);
    auto coeff = sgn > 0 ? ctx.one() : ctx.zero() - ctx.one();
    for (int b = 1; b <= d - 1; ++b)
      for (int a = 1; a <= d - b; ++a)
        coeff = coeff * Q(ctx, I[std::size_t(a + b - 1)],
                          J[std::size_t(sig[std::size_t(a + b - 1)] - 1)],
                          I[std::size_t(a - 1)], J[std::size_t(sig[std::size_t(a - 1)] - 1)]);
    std::vector<std::pair<int, int>> letters(std::size_t(d), {0, 0});
    for (int m = 0; m < d; ++m)
      letters[std::size_t(m)] = {I[std::size_t(m)], J[std::size_t(sig[std::size_t(m)] - 1)]};
    auto phase = normalize_letters(ctx, letters);  // identity when I is sorted
    out.add(ctx, GWord{0, std::move(letters)}, coeff * phase);
  }
  return out;
}

// Column-ordered Leibniz sum, the mirror oracle:
//   sum_sigma sgn(sigma) (prod Q_{i_{sigma(a+b)} j_{a+b}; i_{sigma(a)} j_a})
//   g_{i_{sigma(1)} j_1} ... g_{i_{sigma(d)} j_d}.
template <class Ctx>
Element<Ctx> minor_col_leibniz(const Ctx& ctx, const Tuple& I, const Tuple& J) {
  if (I.size() != J.size()) throw std::invalid_argument("minor: |I| != |J|");
  int d = int(I.size());
  if (tuple_sign(I) == 0 || tuple_sign(J) == 0) return Element<Ctx>{};
  Element<Ctx> out;
  for (const Tuple& sig : permutations(d)) {
    int sgn = tuple_sign(sig);
    auto coeff = sgn > 0 ? ctx.one() : ctx.zero() - ctx.one();
    for (int b = 1; b <= d - 1; ++b)
      for (int a = 1; a <= d - b; ++a)
        coeff = coeff * Q(ctx, I[std::size_t(sig[std::size_t(a + b - 1)] - 1)],
                          J[std::size_t(a + b - 1)],
                          I[std::size_t(sig[std::size_t(a - 1)] - 1)], J[std::size_t(a - 1)]);
    std::vector<std::pair<int, int>> letters(std::size_t(d), {0, 0});
    for (int m = 0; m < d; ++m)
      letters[std::size_t(m)] = {I[std::size_t(sig[std::size_t(m)] - 1)], J[std::size_t(m)]};
    auto phase = normalize_letters(ctx, letters);
    out.add(ctx, GWord{0, std::move(letters)}, coeff * phase);
  }
  return out;
}

// Quantum determinant of the n x n matrix.
template <class Ctx>
Element<Ctx> qdet(const Ctx& ctx, int n) {
  Tuple full(std::size_t(n), 0);
  for (int i = 1; i <= n; ++i) full[std::size_t(i - 1)] = i;
  return minor(ctx, full, full);
}

// Laplace expansion along row position k (1-based within I); side selects
// whether the extracted letter multiplies from the left or the right:
//   left : sum_a (-1)^{k+a} (prod_b Q_{I^k_b J^a_b; i_k j_a}) g_{i_k j_a} minor(I^k, J^a)
//   right: sum_a (-1)^{k+a} (prod_b Q_{i_k j_a; I^k_b J^a_b}) minor(I^k, J^a) g_{i_k j_a}
enum class Side { left, right };

template <class Ctx>
Element<Ctx> laplace_row(const Ctx& ctx, int n, const Tuple& I, const Tuple& J, int k,
                         Side side) {
  int d = int(I.size());
  Element<Ctx> out;
  Tuple Ik = erase_pos(I, k);
  for (int a = 1; a <= d; ++a) {
    Tuple Ja = erase_pos(J, a);
    auto coeff = ((k + a) % 2 == 0) ? ctx.one() : ctx.zero() - ctx.one();
    for (int b = 1; b <= d - 1; ++b) {
      if (side == Side::left)
        coeff = coeff * Q(ctx, Ik[std::size_t(b - 1)], Ja[std::size_t(b - 1)],
                          I[std::size_t(k - 1)], J[std::size_t(a - 1)]);
      else
        coeff = coeff * Q(ctx, I[std::size_t(k - 1)], J[std::size_t(a - 1)],
                          Ik[std::size_t(b - 1)], Ja[std::size_t(b - 1)]);
    }
    Element<Ctx> g = monomial(ctx, {{I[std::size_t(k - 1)], J[std::size_t(a - 1)]}}, coeff);
    Element<Ctx> m = minor(ctx, Ik, Ja);
    out = add(ctx, out, side == Side::left ? mul(ctx, n, g, m) : mul(ctx, n, m, g));
  }
  return out;
}

// Laplace expansion along column position k.  The extracted letter is
// g_{i_a j_k} and the residual minor drops row position a and column
// position k; the coefficient mirrors the row expansion with the roles of
// the surviving rows and columns exchanged:
//   left : sum_a (-1)^{k+a} (prod_b Q_{I^a_b J^k_b; i_a j_k}) g_{i_a j_k} minor(I^a, J^k)
//   right: sum_a (-1)^{k+a} (prod_b Q_{i_a j_k; I^a_b J^k_b}) minor(I^a, J^k) g_{i_a j_k}
template <class Ctx>
Element<Ctx> laplace_col(const Ctx& ctx, int n, const Tuple& I, const Tuple& J, int k,
                         Side side) {
  int d = int(I.size());
  Element<Ctx> out;
  Tuple Jk = erase_pos(J, k);
  for (int a = 1; a <= d; ++a) {
    Tuple Ia = erase_pos(I, a);
    auto coeff = ((k + a) % 2 == 0) ? ctx.one() : ctx.zero() - ctx.one();
    for (int b = 1; b <= d - 1; ++b) {
      if (side == Side::left)
        coeff = coeff * Q(ctx, Ia[std::size_t(b - 1)], Jk[std::size_t(b - 1)],
                          I[std::size_t(a - 1)], J[std::size_t(k - 1)]);
      else
        coeff = coeff * Q(ctx, I[std::size_t(a - 1)], J[std::size_t(k - 1)],
                          Ia[std::size_t(b - 1)], Jk[std::size_t(b - 1)]);
    }
    Element<Ctx> g = monomial(ctx, {{I[std::size_t(a - 1)], J[std::size_t(k - 1)]}}, coeff);
    Element<Ctx> m = minor(ctx, Ia, Jk);
    out = add(ctx, out, side == Side::left ? mul(ctx, n, g, m) : mul(ctx, n, m, g));
  }
  return out;
}

// Commutation coefficient between minors: R_{IJ;I'J'} = prod prod Q.
template <class Ctx>
typename Ctx::value_type r_coeff(const Ctx& ctx, const Tuple& I, const Tuple& J,
                                 const Tuple& Ip, const Tuple& Jp) {
  auto acc = ctx.one();
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = 0; b < Ip.size(); ++b)
      acc = acc * Q(ctx, I[a], J[a], Ip[b], Jp[b]);
  return acc;
}

// minor(I,J) minor(I',J') - R^2 minor(I',J') minor(I,J); zero iff the
// minor commutation rule holds for this pair.
template <class Ctx>
Element<Ctx> minor_commutation_defect(const Ctx& ctx, int n, const Tuple& I, const Tuple& J,
                                      const Tuple& Ip, const Tuple& Jp) {
  auto r2 = r_coeff(ctx, I, J, Ip, Jp);
  r2 = r2 * r2;
  Element<Ctx> a = minor(ctx, I, J);
  Element<Ctx> b = minor(ctx, Ip, Jp);
  return sub(ctx, mul(ctx, n, a, b), scale(ctx, mul(ctx, n, b, a), r2));
}

// det g_kl - (prod_i Q^2_{ii;kl}) g_kl det; zero iff det is permutable
// past g_kl with the stated phase.
template <class Ctx>
Element<Ctx> permutability_defect(const Ctx& ctx, int n, int k, int l) {
  Element<Ctx> det = qdet(ctx, n);
  Element<Ctx> g = monomial(ctx, {{k, l}}, ctx.one());
  auto phase = ctx.one();
  for (int i = 1; i <= n; ++i) phase = phase * Q(ctx, i, i, k, l, 2);
  return sub(ctx, mul(ctx, n, det, g), scale(ctx, mul(ctx, n, g, det), phase));
}

// Adjugate entry adj_{jm}: signed, phase-dressed complementary minor such
// that sum_m adj_{jm} g_{mj} = det and the off-diagonal sums vanish.
template <class Ctx>
Element<Ctx> adjugate(const Ctx& ctx, int n, int j, int m) {
  Tuple rows, cols;
  for (int r = 1; r <= n; ++r)
    if (r != m) rows.push_back(r);
  for (int c = 1; c <= n; ++c)
    if (c != j) cols.push_back(c);
  auto coeff = ((j + m) % 2 == 0) ? ctx.one() : ctx.zero() - ctx.one();
  for (int r : rows) coeff = coeff * q(ctx, r, m);
  for (int c : cols) coeff = coeff * q(ctx, j, c);
  return scale(ctx, minor(ctx, rows, cols), coeff);
}

// Antipode on generators: S(g_ij) = det^{-1} adj_{ij} in the localization.
template <class Ctx>
Element<Ctx> antipode(const Ctx& ctx, int n, int i, int j) {
  Element<Ctx> det_inv;
  det_inv.add(ctx, GWord{-1, {}}, ctx.one());
  return mul(ctx, n, det_inv, adjugate(ctx, n, i, j));
}

// Rewrites every term of e at the common det power p (p must not exceed any
// det power occurring in e) by replacing each excess det factor with the
// quantum determinant polynomial.  In the localization the det word and the
// determinant polynomial are equal, so two elements agree there iff their
// reductions to the common minimum power agree term by term.
template <class Ctx>
Element<Ctx> reduce_to_power(const Ctx& ctx, int n, const Element<Ctx>& e, long long p) {
  Element<Ctx> out;
  Element<Ctx> det = qdet(ctx, n);
  for (const auto& [w, c] : e.terms) {
    if (w.det_pow < p) throw std::invalid_argument("reduce_to_power: p too large");
    Element<Ctx> acc;
    acc.add(ctx, GWord{0, w.letters}, c);
    for (long long t = 0; t < w.det_pow - p; ++t) acc = mul(ctx, n, det, acc);
    for (const auto& [w2, c2] : acc.terms) out.add(ctx, GWord{p + w2.det_pow, w2.letters}, c2);
  }
  return out;
}

// a - b after reducing both to their common minimum det power; zero iff the
// two elements are equal in the localized algebra.
template <class Ctx>
Element<Ctx> localized_defect(const Ctx& ctx, int n, const Element<Ctx>& a,
                              const Element<Ctx>& b) {
  bool any = false;
  long long p = 0;
  for (const Element<Ctx>* e : {&a, &b}) {
    for (const auto& [w, c] : e->terms) {
      p = any ? std::min(p, w.det_pow) : w.det_pow;
      any = true;
    }
  }
  if (!any) return Element<Ctx>{};
  return sub(ctx, reduce_to_power(ctx, n, a, p), reduce_to_power(ctx, n, b, p));
}

// sum_k S(g_ik) g_kj - delta_ij (left) or sum_k g_ik S(g_kj) - delta_ij
// (right), reduced to a polynomial defect; zero iff the antipode inverts
// the matrix of generators on that side.
template <class Ctx>
Element<Ctx> antipode_defect(const Ctx& ctx, int n, int i, int j, Side side) {
  Element<Ctx> sum;
  for (int k = 1; k <= n; ++k) {
    Element<Ctx> s =
        antipode(ctx, n, side == Side::left ? i : k, side == Side::left ? k : j);
    Element<Ctx> g = monomial(
        ctx, {{side == Side::left ? k : i, side == Side::left ? j : k}}, ctx.one());
    sum = add(ctx, sum, side == Side::left ? mul(ctx, n, s, g) : mul(ctx, n, g, s));
  }
  Element<Ctx> delta;
  if (i == j) delta.add(ctx, GWord{0, {}}, ctx.one());
  return localized_defect(ctx, n, sum, delta);
}

std::string element_text(const Element<scalars::ExactCtx>& e);

// Column sums c_i = sum_k theta^{ki}; the determinant is central iff all
// c_i agree modulo 2 pi.
bool centrality_condition(const scalars::ThetaSpec& theta, double tol = 1e-9);

}  // namespace qtoric::qmatrix
