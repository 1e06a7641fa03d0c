#pragma once
// Homogeneous coordinate algebras of deformed projective spaces and the
// projective varieties cut out inside them.
//
// The projective n-space algebra A has generators w_1, ..., w_{n+1} with
//     w_i w_j = q_ij^2 w_j w_i   (i, j <= n),        w_{n+1} central,
// i.e. the (n+1)-torus phase matrix is theta padded by a zero row and
// column.  A is graded by total degree with dim A_k = C(n+k, n), and by the
// torus weight lattice.  Inverting one generator and passing to degree zero
// recovers the chart algebra of the corresponding maximal cone of the
// projective fan (the chart isomorphism); products in the localization are
// computed by the left Ore fraction rules.  The quadratic dual algebra has
// generators wc_i with wc_i^2 = 0 and wc_i wc_j = -q_ij^2 wc_j wc_i, graded
// dimensions C(n+1, k), and a nondegenerate multiplication pairing into its
// top degree (a Frobenius algebra of index n+1); the Hilbert series of the
// pair multiply to 1.  Quotients by homogeneous, weight-homogeneous
// relations (e.g. the quantum Pluecker relations) present projective
// subvarieties; their graded dimensions are computed by exact normal-form
// span enumeration.  Torus-invariant monomial ideals of a chart algebra are
// described by their character support S inside the dual semigroup; a face
// tau of the cone contributes the orbit-closure ideal supported on the
// characters that pair strictly positively with tau, and primality is
// certified by sub-semigroup closure of the complement on a bounding box.

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/fans.hpp"
#include "qtoric/presentation.hpp"
#include "qtoric/scalars.hpp"

namespace qtoric::projective {

using fans::Vec;
using scalars::PhaseScalar;
using scalars::ThetaSpec;

// Element of a homogeneous algebra in the character basis: exact phase
// coefficients on normal-ordered exponent vectors over the generator list.
using WPoly = std::map<Vec, PhaseScalar>;

// A graded quasi-commutative polynomial algebra: generators with torus
// weights, pairwise exchange phases, and an optional homogeneous quotient
// ideal.  The generator exchange data is stored as the first-power phase
// qtilde_ab (so w_a w_b = qtilde_ab^2 w_b w_a); characters multiply as
//     chi_p chi_r = (prod_{a<b} qtilde_ab^{p_a r_b - p_b r_a}) chi_{p+r}.
struct HomogeneousAlgebra {
  std::string title;
  std::vector<std::string> names;
  std::vector<Vec> weights;
  // qt[a][b] for 0 <= a < b < size(): first-power exchange phase.
  std::vector<std::vector<PhaseScalar>> qt;
  std::vector<WPoly> ideal;
  int n = -1;  // torus rank when built by projective_space, else -1

  int size() const { return int(names.size()); }
  // Antisymmetric first-power phase (qtilde(a,b) * qtilde(b,a) = 1).
  PhaseScalar qtilde(int a, int b) const;
  // w_a w_b = exchange2(a,b) w_b w_a.
  PhaseScalar exchange2(int a, int b) const { return qtilde(a, b).pow(2); }
  // chi_p chi_r = reorder_phase(p, r) chi_{p+r}.
  PhaseScalar reorder_phase(const Vec& p, const Vec& r) const;
  // Phase of the ascending generator word w_1^{p_1} ... w_N^{p_N} relative
  // to the character chi_p.
  PhaseScalar normal_word_phase(const Vec& p) const;
  Vec monomial_weight(const Vec& p) const;
  // Generators, commutation phases, and the ideal rendered in the shared
  // presentation schema (ideal terms in the generator-word basis).
  presentation::AlgebraPresentation pres() const;
};

// Homogeneous coordinate algebra of the deformed projective n-space.
HomogeneousAlgebra projective_space(int n);

// --- character-basis arithmetic --------------------------------------------

WPoly wpoly_monomial(const Vec& expo, const PhaseScalar& c = PhaseScalar::one());
void wadd_inplace(WPoly& a, const WPoly& b);
WPoly wscale(const WPoly& a, const PhaseScalar& c);
WPoly wmul(const HomogeneousAlgebra& A, const WPoly& a, const WPoly& b);
bool wpoly_is_zero(const WPoly& a);
// Product of listed generators (0-based letters) times a coefficient.
WPoly word_to_poly(const HomogeneousAlgebra& A, const std::vector<int>& word,
                   const PhaseScalar& c = PhaseScalar::one());

// --- grading ----------------------------------------------------------------

// Exponent vectors of total degree k on N letters, lexicographic.
std::vector<Vec> degree_basis(int N, int k);

// Dimension of the degree-k graded piece.  Free case: the closed form
// C(N-1+k, N-1).  With a quotient ideal: the span of all normal-formed
// products (monomial) * f * (monomial) of degree k is row-reduced exactly
// after substituting distinct primes for the formal units; two disjoint
// prime assignments are used and must agree (deterministic generic
// specialization, desk scale).
long long graded_dimension(const HomogeneousAlgebra& A, int k);

// dim A_k = C(n+k, n) for k = 0..deg (free projective n-space).
std::vector<long long> hilbert_free(int n, int deg);
// dim of the quadratic dual in degree k = C(n+1, k), k = 0..n+1.
std::vector<long long> koszul_dims(int n);
// The truncated product H_A(s) * H_{A^!}(-s) equals 1 through degree deg.
bool hilbert_product_is_one(int n, int deg);

// --- quadratic dual ---------------------------------------------------------

struct KoszulDual {
  int n = 0;
  presentation::AlgebraPresentation pres;
};
// Quadratic dual of the free projective-space algebra (throws
// std::invalid_argument when A carries an ideal or was not built by
// projective_space).
KoszulDual koszul_dual(const HomogeneousAlgebra& A);

// Strictly increasing words of length k over {1..n+1}: the monomial basis
// of the dual in degree k, lexicographic.
std::vector<std::vector<int>> koszul_basis(int n, int k);
// Product of two basis words in the dual: nullopt when a letter repeats
// (the word dies), else the sorted word with its exact phase.
std::optional<std::pair<PhaseScalar, std::vector<int>>> koszul_mul(
    int n, const std::vector<int>& s, const std::vector<int>& t);

// Multiplication pairing dual_k x dual_{n+1-k} -> dual_{n+1} in the
// monomial bases; entry (S, T) is the coefficient on the top word.
std::vector<std::vector<PhaseScalar>> frobenius_pairing(int n, int k);
// Numeric rank of the pairing at a theta sample: singular values > tol.
// Throws std::out_of_range unless 0 <= k <= n+1.
int frobenius_pairing_rank(int n, int k, const ThetaSpec& theta,
                           double tol = 1e-6);
// Exact determinant of the pairing matrix by Leibniz expansion; guarded to
// n <= 2 (throws std::invalid_argument beyond).
PhaseScalar frobenius_pairing_det(int n, int k);

// --- Ore localization -------------------------------------------------------

// Left fraction w_i^{-m} a in A[w_i^{-1}].
struct LocalElement {
  int i = 1;        // 1-based inverted generator
  long long m = 0;  // power of the inverted prefix
  WPoly a;
};
// Product of left fractions: the right factor's denominator is relocated
// past the left numerator (a' s2 = s2 a1 solved exactly per character).
LocalElement local_mul(const HomogeneousAlgebra& A, const LocalElement& x,
                       const LocalElement& y);
// y_k = w_i^{-1} w_k (1-based i, k).
LocalElement local_generator(const HomogeneousAlgebra& A, int i, int k);

// Degree-0 subalgebra of A[w_i^{-1}]: generators y_k = w_i^{-1} w_k for
// k != i carrying weight(w_k) - weight(w_i), with commutation phases
// computed through local_mul.
presentation::AlgebraPresentation localize_degree0(const HomogeneousAlgebra& A,
                                                   int i);

// --- chart isomorphism ------------------------------------------------------

// Maximal cone sigma_i of the projective n-space fan: the fan has rays
// e_1..e_n and -(e_1+...+e_n), and sigma_i is spanned by all rays but the
// i-th (1-based, i = 1..n+1).
fans::Cone projective_fan_cone(int n, int i);

struct ChartCheck {
  int chart = 0;               // 1-based maximal cone index
  bool weights_match = false;  // chart generators biject with the y_k by weight
  bool phases_match = false;   // every commutation phase maps exactly
  std::string witness;         // first mismatch, when any
};
struct ChartIsoResult {
  int n = 0;
  std::vector<ChartCheck> charts;
  bool ok = false;
};
// For each maximal cone of the projective fan, matches the chart generators
// with the localized degree-0 generators by torus weight (the assignment
// x_k -> y_k, x_i -> y_{n+1}) and compares every commutation phase exactly.
ChartIsoResult chart_iso_check(int n);

// --- torus-invariant monomial ideals ----------------------------------------

struct MonomialIdeal {
  fans::Cone sigma;
  // Membership of a character exponent in the support set S; meaningful on
  // the dual semigroup of sigma.
  std::function<bool(const Vec&)> in_ideal;
  std::string note;

  explicit MonomialIdeal(fans::Cone s) : sigma(std::move(s)) {}
};

// Orbit-closure ideal of a face tau of sigma: supported on the characters
// of the dual semigroup that pair strictly positively with some ray of tau.
// tau = 0 gives the zero ideal, tau = sigma the augmentation-style ideal of
// all characters outside sigma-perp.  Throws std::invalid_argument when tau
// is not a face of sigma.
MonomialIdeal face_ideal(const fans::Cone& sigma, const fans::Cone& tau);

// Lattice points of the dual semigroup with max-norm <= box.
std::vector<Vec> dual_semigroup_box(const fans::Cone& sigma, long long box);
// S + (dual semigroup) stays inside S, checked on box-bounded summands.
bool ideal_property_ok(const MonomialIdeal& I, long long box = 8);
// The complement of S is closed under addition on the box (the primality
// certificate for torus-invariant monomial ideals).
bool is_prime_monomial(const MonomialIdeal& I, long long box = 8);

// --- quotient varieties ------------------------------------------------------

// Quotient of A by additional relations; each must be homogeneous in total
// degree and weight-homogeneous (throws std::invalid_argument otherwise).
HomogeneousAlgebra quotient_variety(const HomogeneousAlgebra& A,
                                    const std::vector<WPoly>& fs);

// Ambient projective space of the (d; n) quantum Grassmannian: one
// generator per increasing d-tuple of columns, exchange phases the pairwise
// minor phases, weights the column indicator vectors.
HomogeneousAlgebra grassmann_ambient(int d, int n);
// The quadratic minor relations of the (d; n) Grassmannian as elements of
// the ambient algebra's character basis.
std::vector<WPoly> grassmann_ideal(int d, int n);

}  // namespace qtoric::projective
