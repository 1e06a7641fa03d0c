#pragma once
// The quantum Laurent algebra and its deformed chart subalgebras.
//
// The deformed product of lattice characters is
//     chi_p * chi_q = (prod_{i<j} q_ij^{p_i q_j - p_j q_i}) chi_{p+q},
// so the torus coordinate algebra becomes a quasi-commutative Laurent
// algebra.  A strongly convex cone sigma selects the chart subalgebra
// spanned by the characters in the dual semigroup; its canonical generators
// x_a = t^{m_a} (Hilbert basis of the dual cone) obey
//     x_a x_b = qcheck_ab^2 x_b x_a,      qcheck_ab = chi-phase(m_a, m_b),
// together with binomial identities x^p = (prod_{a<b} qcheck_ab^{p_a p_b -
// r_a r_b}) x^r, one for each relation p - r in the kernel lattice of the
// generator matrix.  Gluing data over a common face and the first-order
// Kaehler calculus (dx_b carrying the torus weight of x_b) are derived from
// the same phases.

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtoric/fans.hpp"
#include "qtoric/presentation.hpp"
#include "qtoric/scalars.hpp"

namespace qtoric::torus {

using fans::Cone;
using fans::Mat;
using fans::Vec;
using scalars::PhaseScalar;
using scalars::ThetaSpec;

// Phase of chi_p * chi_q as an exact unit monomial.
PhaseScalar star_phase(const Vec& p, const Vec& q);
// The same phase computed numerically by direct contraction of theta
// (independent of the exact unit bookkeeping).
std::complex<double> star_phase_numeric(const ThetaSpec& theta, const Vec& p, const Vec& q);

// Finite sum of lattice characters with exact phase coefficients.
class LaurentElement {
 public:
  explicit LaurentElement(int rank) : rank_(rank) {}
  static LaurentElement monomial(int rank, const Vec& p,
                                 const PhaseScalar& c = PhaseScalar::one());

  int rank() const { return rank_; }
  const std::map<Vec, PhaseScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentElement& operator+=(const LaurentElement& o);
  LaurentElement& operator-=(const LaurentElement& o);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  LaurentElement scaled(const PhaseScalar& c) const;
  bool operator==(const LaurentElement& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }
  std::string str() const;

 private:
  int rank_;
  std::map<Vec, PhaseScalar> terms_;
};

// Deformed product, extended bilinearly from characters.
LaurentElement star(const LaurentElement& a, const LaurentElement& b);

// A deformed chart algebra together with its canonical presentation.
struct ChartAlgebra {
  Cone cone;  // the (strongly convex) primal cone
  Mat gens;   // Hilbert basis of the dual cone; gens[a] is the vector of x_{a+1}
  presentation::AlgebraPresentation pres;

  int size() const { return int(gens.size()); }
  // qcheck phase between generators a and b (0-based).
  PhaseScalar qcheck(int a, int b) const;
  // x^expo as an element of the Laurent algebra: (phase, lattice exponent).
  std::pair<PhaseScalar, Vec> realize(const Vec& expo) const;
  // Product of two normal-ordered chart monomials: (phase, expo_e + expo_f)
  // with x^e * x^f = phase * x^{e+f}; computed from the Laurent realization.
  std::pair<PhaseScalar, Vec> mul_monomials(const Vec& e, const Vec& f) const;
  // L*-weight of the monomial x^expo.
  Vec monomial_weight(const Vec& expo) const;
};

// Chart algebra of a strongly convex cone (throws on cones with lines).
ChartAlgebra chart_algebra(const Cone& c);

// Normal form of a word of (generator index, power >= 0) pairs: sorts the
// letters into index order, one q̌^2 phase per transposition.
std::pair<PhaseScalar, Vec> normal_form(const ChartAlgebra& a,
                                        const std::vector<std::pair<int, long long>>& word);

// Gluing of two charts over their common face.
struct GluingData {
  Cone tau;                  // the common face
  ChartAlgebra chart1;       // chart of sigma
  ChartAlgebra chart2;       // chart of sigma'
  ChartAlgebra overlap;      // chart of tau
  // Presentation over the combined generator list (x's then y's): cross
  // commutation phases and the binomial identifications between the two
  // generator sets, with exact phase coefficients.
  presentation::AlgebraPresentation combined;
};
GluingData gluing_relations(const Cone& s1, const Cone& s2);

// First-order differential calculus --------------------------------------

// Element of Omega^1 over a chart: sum of phase * x^expo * dx_a terms,
// normal form with the differential symbol rightmost.
struct OmegaElement {
  int size = 0;  // number of chart generators
  std::map<std::pair<int, Vec>, PhaseScalar> terms;  // key (a, expo)

  OmegaElement& operator+=(const OmegaElement& o);
  friend OmegaElement operator+(OmegaElement a, const OmegaElement& b) { return a += b; }
  OmegaElement scaled(const scalars::PhaseScalar& c) const;
  bool operator==(const OmegaElement& o) const {
    return size == o.size && terms == o.terms;
  }
  bool is_zero() const { return terms.empty(); }
  std::string str(const ChartAlgebra& a) const;
};

// Presentation of Omega^1 as a free bimodule: generators x_a and dx_a with
// x_a dx_b = qcheck_ab^2 dx_b x_a.  Requires a chart with no binomial
// relations (quantum affine space).
presentation::AlgebraPresentation kaehler_relations(const ChartAlgebra& a);

// d(phase * x^expo), by the Leibniz rule, in normal form.
OmegaElement differential(const ChartAlgebra& a, const Vec& expo,
                          const PhaseScalar& coeff = PhaseScalar::one());
// omega * x^expo and x^expo * omega in normal form.
OmegaElement omega_mul_right(const ChartAlgebra& a, const OmegaElement& w, const Vec& expo);
OmegaElement omega_mul_left(const ChartAlgebra& a, const Vec& expo, const OmegaElement& w);

// d(x^e * x^f) == d(x^e) * x^f + x^e * d(x^f), exactly.
bool leibniz_holds(const ChartAlgebra& a, const Vec& e, const Vec& f);

}  // namespace qtoric::torus
