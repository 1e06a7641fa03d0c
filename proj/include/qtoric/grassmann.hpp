#pragma once
// Deformed grassmannians and flag varieties.  Homogeneous coordinates are
// the d x d minors L^J = minor((1..d), J) of the deformed matrix algebra;
// they commute up to the squared phase of Theta^{JJ'} = sum_{a,b}
// theta^{j_a j'_b} and obey one-row Young symmetry relations
//   sum_g (-1)^{g+1} (prod_m q_{i_g I^g_m}) (prod_v q_{i_g j_v})
//         L^{I^g} L^{(i_g, J)} = 0,     |I| = d+1, |J| = d'-1,
// which specialize to Pluecker relations at d = d'.  Relations over
// unordered multi-indices split into alternating / structure / pluecker
// classes by their surviving terms.  The module also provides the
// tautological-section relations in formal unknowns w_j, and the
// coinvariant projector matrix eta_ij = sum_{k<=d} S(g_ik) g_kj together
// with its commutation coefficient K_{ij;i'j'} = q_ii' q_j'i q_i'j q_jj'
// and the rescaled projectors eta^_ij = q_ij^{-1} eta_ij.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/presentation.hpp"
#include "qtoric/qmatrix.hpp"
#include "qtoric/scalars.hpp"

namespace qtoric::grassmann {

using qmatrix::Element;
using qmatrix::Tuple;

// The row multi-index (1, 2, ..., d).
Tuple standard_rows(int d);

// Phase monomial prod_{a,b} q_{j_a j'_b}; its exponent doubles to the
// commutation factor between the minors L^J and L^{J'}.
scalars::PhaseScalar theta_capital_phase(const Tuple& J, const Tuple& Jp);

// Numeric Theta^{JJ'} = sum_{a,b} theta^{j_a j'_b}.
double theta_capital_numeric(const scalars::ThetaSpec& theta, const Tuple& J,
                             const Tuple& Jp);

// Minor with rows (1..d) and column multi-index J.
template <class Ctx>
Element<Ctx> grass_minor(const Ctx& ctx, int d, const Tuple& J) {
  return qmatrix::minor(ctx, standard_rows(d), J);
}

// Minor of a listed (possibly unsorted) column tuple.  A relisting
// alternates in sign — first-column Laplace expansion of the listed tuple
// equals the permutation sign times the sorted minor — so this is the
// reading of out-of-order column tuples inside relation terms.
template <class Ctx>
Element<Ctx> listed_minor(const Ctx& ctx, int d, const Tuple& J) {
  int sgn = qmatrix::tuple_sign(J);
  if (sgn == 0) return Element<Ctx>{};
  Tuple S = J;
  std::sort(S.begin(), S.end());
  Element<Ctx> m = grass_minor(ctx, d, S);
  return sgn == 1 ? m : qmatrix::scale(ctx, m, ctx.zero() - ctx.one());
}

// ---------------------------------------------------------------------------
// Young symmetry / Pluecker relations

// Formal shape of one Young relation: surviving terms and the column
// multi-indices of their two minors, before any expansion.
struct YoungRelation {
  Tuple I, J;
  int d = 0, dp = 0;
  std::vector<int> survivors;  // 1-based positions g with both minors nonzero
  // (I^g listing, (i_g, J) listing) for each survivor
  std::vector<std::pair<Tuple, Tuple>> coords;
};

enum class RelationClass { trivial, alternating, structure, pluecker };

std::string relation_class_name(RelationClass c);

// Surviving-term structure of the relation for multi-indices I (length d+1)
// and J (length dp-1); entries may repeat and need not be sorted.
YoungRelation young_structure(const Tuple& I, const Tuple& J, int d, int dp);

// trivial: < 2 surviving terms; alternating: all survivors reference the
// same ordered pair of column sets (relistings of one coordinate product);
// structure: exactly 2 survivors with distinct coordinates; pluecker: >= 3.
RelationClass classify(const YoungRelation& rel);

// Expansion of the Young relation in the matrix-unit algebra; must be zero.
template <class Ctx>
Element<Ctx> young_expansion(const Ctx& ctx, int n, const Tuple& I, const Tuple& J,
                             int d, int dp) {
  if (int(I.size()) != d + 1 || int(J.size()) != dp - 1)
    throw std::invalid_argument("young_expansion: |I| != d+1 or |J| != d'-1");
  Element<Ctx> out;
  for (int g = 1; g <= d + 1; ++g) {
    int ig = I[std::size_t(g - 1)];
    Tuple Ig = qmatrix::erase_pos(I, g);
    if (qmatrix::tuple_sign(Ig) == 0) continue;
    Tuple igJ;
    igJ.push_back(ig);
    igJ.insert(igJ.end(), J.begin(), J.end());
    if (qmatrix::tuple_sign(igJ) == 0) continue;
    auto coeff = (g % 2 == 1) ? ctx.one() : ctx.zero() - ctx.one();  // (-1)^{g+1}
    for (int m = 0; m < d; ++m) coeff = coeff * ctx.unit(ig, Ig[std::size_t(m)], 1);
    for (int v = 0; v < dp - 1; ++v) coeff = coeff * ctx.unit(ig, J[std::size_t(v)], 1);
    auto term =
        qmatrix::mul(ctx, n, listed_minor(ctx, d, Ig), listed_minor(ctx, dp, igJ));
    out = qmatrix::add(ctx, out, qmatrix::scale(ctx, term, coeff));
  }
  return out;
}

// Pluecker relation: the equal-size case d = d'.
template <class Ctx>
Element<Ctx> pluecker_expansion(const Ctx& ctx, int n, const Tuple& I, const Tuple& J,
                                int d) {
  return young_expansion(ctx, n, I, J, d, d);
}

// ---------------------------------------------------------------------------
// Ambient projective space compatibility

// Solves Theta^{JJ'} = sum_{a,b} theta^{j_a j'_b} (mod 2 pi) for a skew
// n x n theta given the numeric Theta matrix over increasing d-subsets in
// lexicographic order.  Returns the recovered theta, or the witness pair of
// subset indices with the largest modular residual.
struct EmbeddingResult {
  std::optional<scalars::ThetaSpec> theta;
  std::pair<int, int> witness{-1, -1};
  double residual = 0.0;
};
EmbeddingResult embedding_compatible(const std::vector<std::vector<double>>& Theta,
                                     int d, int n, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Presentations

// Homogeneous coordinate algebra of the deformed grassmannian: generators
// L^J over increasing J with commutation phases Theta^2, quotient by the
// pluecker-class relations.
presentation::AlgebraPresentation grassmannian_algebra(int d, int n);

// Flag algebra for a composition gamma of n: generators of every size
// d_i = gamma_1 + ... + gamma_i (except n itself), cross-size commutation
// from the minor exchange rule, Young relations for all admissible pairs.
presentation::AlgebraPresentation flag_algebra(const std::vector<int>& gamma, int n);

// All compositions of n into parts >= 1 (flag types), lexicographic.
std::vector<std::vector<int>> compositions(int n);

// ---------------------------------------------------------------------------
// Tautological sections

// One relation sum_a (prod_b q_{j_a j^a_b}) (-1)^a L^{J^a} w_{j_a} = 0 over
// an increasing (d+1) multi-index J: term a carries the minor column tuple
// J^a and the unknown index j_a; the coefficient is sign * prod q^phase.
struct TautTerm {
  int sign = 1;
  scalars::PairExp phase;
  Tuple minor_cols;
  int w_index = 0;
};
struct TautRelation {
  Tuple J;
  std::vector<TautTerm> terms;
};
std::vector<TautRelation> taut_section_relations(int d, int n);

// Substitutes w_j := element map into the relation and expands.
template <class Ctx, class W>
Element<Ctx> taut_substitute(const Ctx& ctx, int n, int d, const TautRelation& rel,
                             W&& w_of) {
  Element<Ctx> out;
  for (const TautTerm& t : rel.terms) {
    auto term = qmatrix::mul(ctx, n, grass_minor(ctx, d, t.minor_cols),
                             w_of(t.w_index));
    typename Ctx::value_type c = ctx.rational(t.sign, 1);
    for (const auto& [key, e] : t.phase) c = c * ctx.unit(key.first, key.second, e);
    out = qmatrix::add(ctx, out, qmatrix::scale(ctx, term, c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coinvariant projectors

// K_{ij;i'j'} = q_ii' q_j'i q_i'j q_jj'.
template <class Ctx>
typename Ctx::value_type k_coeff(const Ctx& ctx, int i, int j, int ip, int jp) {
  return ctx.unit(i, ip, 1) * ctx.unit(jp, i, 1) * ctx.unit(ip, j, 1) *
         ctx.unit(j, jp, 1);
}

// eta_ij = sum_{k<=d} S(g_ik) g_kj in the det-localized algebra.
template <class Ctx>
Element<Ctx> eta(const Ctx& ctx, int n, int d, int i, int j) {
  Element<Ctx> out;
  for (int k = 1; k <= d; ++k) {
    auto s = qmatrix::antipode(ctx, n, i, k);
    auto g = qmatrix::monomial(ctx, {{k, j}}, ctx.one());
    out = qmatrix::add(ctx, out, qmatrix::mul(ctx, n, s, g));
  }
  return out;
}

// eta^perp_ij = delta_ij - eta_ij.
template <class Ctx>
Element<Ctx> eta_perp(const Ctx& ctx, int n, int d, int i, int j) {
  Element<Ctx> out;
  if (i == j) out.add(ctx, qmatrix::GWord{0, {}}, ctx.one());
  return qmatrix::sub(ctx, out, eta(ctx, n, d, i, j));
}

// Rescaled projector entries q_ij^{-1} eta_ij (resp. perp).
template <class Ctx>
Element<Ctx> eta_hat(const Ctx& ctx, int n, int d, int i, int j, bool perp) {
  auto base = perp ? eta_perp(ctx, n, d, i, j) : eta(ctx, n, d, i, j);
  return qmatrix::scale(ctx, base, ctx.unit(i, j, -1));
}

// Cocycle dressing of the module product on projector entries: the deformed
// product of eta_ij with eta_i'j' equals q_ii' q_j'i q_i'j q_jj' times their
// plain g-algebra product.  The plain product leaves eta idempotent; under
// the dressed product it is the rescaled entries eta_hat that become
// orthogonal projectors (the two statements coincide only at n = 2, where
// the cocycle collapses).
template <class Ctx>
typename Ctx::value_type eta_mul_phase(const Ctx& ctx, int i, int j, int ip, int jp) {
  return ctx.unit(i, ip, 1) * ctx.unit(jp, i, 1) * ctx.unit(ip, j, 1) * ctx.unit(j, jp, 1);
}

// Dressed product of two projector entries labelled (i,j) and (ip,jp).
template <class Ctx>
Element<Ctx> eta_dressed_mul(const Ctx& ctx, int n, int i, int j, int ip, int jp,
                             const Element<Ctx>& A, const Element<Ctx>& B) {
  return qmatrix::scale(ctx, qmatrix::mul(ctx, n, A, B), eta_mul_phase(ctx, i, j, ip, jp));
}

// Torus weight check: every word of eta_ij must have H_a-weight
// delta_aj - delta_ai, where a word's weight is its det power plus the
// number of letters in column a.
bool eta_weights_ok(int n, int d);

}  // namespace qtoric::grassmann
