#pragma once
// Exact coefficient arithmetic for multi-parameter phase deformations.
//
// A deformation is parametrised by a skew-symmetric matrix theta = (theta^{ij});
// the scalars that appear throughout the deformed algebras are Laurent
// polynomials, with rational coefficients, in the formal unit phases
//
//     q_ij = exp((i/2) theta^{ij}),        1 <= i < j <= n.
//
// Units with reversed or equal indices normalise away via q_ji = q_ij^{-1} and
// q_ii = 1, so a sparse exponent vector over the ordered pairs (i < j) is a
// canonical form and equality is decidable exactly.  A numeric specialisation
// at a concrete theta provides an independent floating-point evaluation of the
// same quantity, used by the cross-check suites.

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtoric::scalars {

using Rational = boost::multiprecision::cpp_rational;

// Deformation matrix.  Symbolic mode fixes only the size n (scalars remain
// formal Laurent polynomials); numeric mode carries complex skew-symmetric
// entries for floating-point evaluation.
class ThetaSpec {
 public:
  static ThetaSpec symbolic(int n);
  // entries is row-major n*n, and must be skew-symmetric to 1e-12.
  static ThetaSpec numeric(int n, std::vector<std::complex<double>> entries);
  // Deterministic pseudo-random real skew-symmetric matrix with entries in
  // (-3, 3); identical output for identical seeds on every platform.
  static ThetaSpec random(int n, std::uint64_t seed);
  // Parses {"n": int, "theta": [[re, im] | number, ...] (n*n)}.
  static ThetaSpec from_json_text(const std::string& text);

  int n() const { return n_; }
  bool is_numeric() const { return numeric_; }
  std::complex<double> theta(int i, int j) const;   // 1-based indices
  std::complex<double> q(int i, int j) const;       // exp((i/2) theta^{ij})
  std::string to_json_text() const;

 private:
  ThetaSpec(int n, bool numeric, std::vector<std::complex<double>> entries);
  int n_ = 0;
  bool numeric_ = false;
  std::vector<std::complex<double>> entries_;  // row-major, empty if symbolic
};

// Sparse exponent vector over the ordered index pairs (i < j); values nonzero.
using PairExp = std::map<std::pair<int, int>, long long>;

// Laurent polynomial in the unit phases q_ij with rational coefficients.
class PhaseScalar {
 public:
  PhaseScalar() = default;  // zero
  static PhaseScalar zero() { return PhaseScalar(); }
  static PhaseScalar one() { return from_rational(1); }
  static PhaseScalar from_rational(Rational c);
  // q_ij^e, normalised: unit(j,i,e) = unit(i,j,-e) and unit(i,i,e) = 1.
  static PhaseScalar unit(int i, int j, long long e = 1);
  // c * prod q_ij^{ex[i,j]}; keys must have i < j, zero exponents allowed.
  static PhaseScalar monomial(const PairExp& ex, Rational c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Exactly one term (a rational multiple of a single Laurent monomial)?
  bool is_monomial() const { return terms_.size() == 1; }

  PhaseScalar& operator+=(const PhaseScalar& o);
  PhaseScalar& operator-=(const PhaseScalar& o);
  PhaseScalar& operator*=(const PhaseScalar& o);
  friend PhaseScalar operator+(PhaseScalar a, const PhaseScalar& b) { return a += b; }
  friend PhaseScalar operator-(PhaseScalar a, const PhaseScalar& b) { return a -= b; }
  friend PhaseScalar operator*(PhaseScalar a, const PhaseScalar& b) { return a *= b; }
  PhaseScalar operator-() const;

  // Multiplicative inverse; defined only for monomials (throws otherwise).
  PhaseScalar inv() const;
  // Integer power; negative exponents require a monomial.
  PhaseScalar pow(long long k) const;

  bool operator==(const PhaseScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const PhaseScalar& o) const { return !(*this == o); }
  // Map ordering; gives every scalar a deterministic sort position.
  bool operator<(const PhaseScalar& o) const { return terms_ < o.terms_; }

  const std::map<PairExp, Rational>& terms() const { return terms_; }

  // Numeric evaluation at a concrete theta (theta must be numeric).
  std::complex<double> specialize(const ThetaSpec& theta) const;

  // Canonical text, e.g. "q12^2*q13^-1", "-1/2*q12", "q12^2 - q13^2", "0".
  std::string str() const;

 private:
  std::map<PairExp, Rational> terms_;  // no zero coefficients stored
};

// Phase-ring contexts. The algebra kernels are templated on one of these so
// that every identity can be expanded twice: exactly (formal units) and
// numerically (complex phases from a concrete theta).
struct ExactCtx {
  using value_type = PhaseScalar;
  PhaseScalar zero() const { return PhaseScalar::zero(); }
  PhaseScalar one() const { return PhaseScalar::one(); }
  PhaseScalar unit(int i, int j, long long e) const { return PhaseScalar::unit(i, j, e); }
  PhaseScalar rational(long long num, long long den) const {
    return PhaseScalar::from_rational(Rational(num) / den);
  }
  PhaseScalar inv(const PhaseScalar& v) const { return v.inv(); }
  bool is_zero(const PhaseScalar& v) const { return v.is_zero(); }
  // Residual used for pass/fail aggregation: exact zero or not.
  double residual(const PhaseScalar& v) const { return v.is_zero() ? 0.0 : 1.0; }
};

struct NumericCtx {
  ThetaSpec theta;
  using value_type = std::complex<double>;
  std::complex<double> zero() const { return {0.0, 0.0}; }
  std::complex<double> one() const { return {1.0, 0.0}; }
  std::complex<double> unit(int i, int j, long long e) const {
    return std::exp(std::complex<double>(0.0, 0.5) * theta.theta(i, j) * double(e));
  }
  std::complex<double> rational(long long num, long long den) const {
    return {double(num) / double(den), 0.0};
  }
  std::complex<double> inv(const std::complex<double>& v) const { return 1.0 / v; }
  bool is_zero(const std::complex<double>& v) const { return v == std::complex<double>(); }
  double residual(const std::complex<double>& v) const { return std::abs(v); }
};

}  // namespace qtoric::scalars
