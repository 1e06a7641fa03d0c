// Deformed torus characters, chart algebras, gluing data, and the
// first-order differential calculus.  See torus.hpp for the conventions.

#include "qtoric/torus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtoric::torus {

using presentation::AlgebraPresentation;
using presentation::Binomial;
using presentation::Commutation;
using presentation::Generator;
using scalars::PairExp;

PhaseScalar star_phase(const Vec& p, const Vec& q) {
  if (p.size() != q.size()) throw std::invalid_argument("star_phase: rank mismatch");
  PairExp ex;
  const int n = int(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long e = p[i] * q[j] - p[j] * q[i];
      if (e != 0) ex[{i + 1, j + 1}] += e;
    }
  return PhaseScalar::monomial(ex);
}

std::complex<double> star_phase_numeric(const ThetaSpec& theta, const Vec& p, const Vec& q) {
  if (int(p.size()) != theta.n() || p.size() != q.size())
    throw std::invalid_argument("star_phase_numeric: rank mismatch");
  std::complex<double> s = 0.0;
  for (int i = 1; i <= theta.n(); ++i)
    for (int j = 1; j <= theta.n(); ++j)
      s += double(p[i - 1]) * theta.theta(i, j) * double(q[j - 1]);
  return std::exp(std::complex<double>(0.0, 0.5) * s);
}

LaurentElement LaurentElement::monomial(int rank, const Vec& p, const PhaseScalar& c) {
  if (int(p.size()) != rank) throw std::invalid_argument("LaurentElement: rank mismatch");
  LaurentElement e(rank);
  if (!c.is_zero()) e.terms_[p] = c;
  return e;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("LaurentElement: rank mismatch");
  for (const auto& [p, c] : o.terms_) {
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) {
  LaurentElement neg(o.rank_);
  for (const auto& [p, c] : o.terms_) neg.terms_[p] = -c;
  return *this += neg;
}

LaurentElement LaurentElement::scaled(const PhaseScalar& c) const {
  LaurentElement out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [p, v] : terms_) out.terms_[p] = v * c;
  return out;
}

std::string LaurentElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*t^(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
  }
  return os.str();
}

LaurentElement star(const LaurentElement& a, const LaurentElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("star: rank mismatch");
  LaurentElement out(a.rank());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      Vec s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      out += LaurentElement::monomial(a.rank(), s, cp * cq * star_phase(p, q));
    }
  return out;
}

PhaseScalar ChartAlgebra::qcheck(int a, int b) const {
  return star_phase(gens[std::size_t(a)], gens[std::size_t(b)]);
}

// prod_{a<b} qcheck_ab^{e_a e_b}: the phase relating the normal-ordered word
// x^e to the character of its total weight.
static PhaseScalar ordered_word_phase(const Mat& gens, const Vec& e) {
  PairExp ex;
  const int k = int(gens.size());
  const int n = k ? int(gens[0].size()) : 0;
  for (int a = 0; a < k; ++a) {
    if (e[std::size_t(a)] == 0) continue;
    for (int b = a + 1; b < k; ++b) {
      long long w = e[std::size_t(a)] * e[std::size_t(b)];
      if (w == 0) continue;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          long long d = gens[std::size_t(a)][std::size_t(i)] * gens[std::size_t(b)][std::size_t(j)] -
                        gens[std::size_t(a)][std::size_t(j)] * gens[std::size_t(b)][std::size_t(i)];
          if (d != 0) ex[{i + 1, j + 1}] += w * d;
        }
    }
  }
  return PhaseScalar::monomial(ex);
}

static Vec total_weight(const Mat& gens, const Vec& e) {
  const int n = gens.empty() ? 0 : int(gens[0].size());
  Vec w(std::size_t(n), 0);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (int i = 0; i < n; ++i) w[std::size_t(i)] += e[a] * gens[a][std::size_t(i)];
  return w;
}

std::pair<PhaseScalar, Vec> ChartAlgebra::realize(const Vec& expo) const {
  if (int(expo.size()) != size()) throw std::invalid_argument("realize: wrong exponent length");
  for (long long e : expo)
    if (e < 0) throw std::invalid_argument("realize: negative exponent");
  return {ordered_word_phase(gens, expo), total_weight(gens, expo)};
}

std::pair<PhaseScalar, Vec> ChartAlgebra::mul_monomials(const Vec& e, const Vec& f) const {
  auto [pe, ve] = realize(e);
  auto [pf, vf] = realize(f);
  Vec s(e.size());
  for (std::size_t a = 0; a < e.size(); ++a) s[a] = e[a] + f[a];
  auto [ps, vs] = realize(s);
  (void)vs;
  return {pe * pf * star_phase(ve, vf) * ps.inv(), s};
}

Vec ChartAlgebra::monomial_weight(const Vec& expo) const { return total_weight(gens, expo); }

// Commutation and binomial relations of the semigroup algebra on the given
// weight vectors; shared by single charts and combined gluing presentations.
static AlgebraPresentation relations_for_generators(const Mat& gens,
                                                    const std::vector<std::string>& names,
                                                    const std::string& title) {
  AlgebraPresentation pres;
  pres.title = title;
  const int k = int(gens.size());
  for (int a = 0; a < k; ++a) pres.generators.push_back({names[std::size_t(a)], gens[std::size_t(a)]});
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      PhaseScalar ph = star_phase(gens[std::size_t(a)], gens[std::size_t(b)]).pow(2);
      pres.commutation.push_back({a, b, ph});
    }
  for (const Vec& rel : fans::relation_lattice(gens)) {
    Vec p(rel.size(), 0), r(rel.size(), 0);
    bool nontrivial = false;
    for (std::size_t a = 0; a < rel.size(); ++a) {
      if (rel[a] > 0) p[a] = rel[a];
      if (rel[a] < 0) r[a] = -rel[a];
      if (rel[a] != 0) nontrivial = true;
    }
    if (!nontrivial) continue;
    PhaseScalar ph = ordered_word_phase(gens, p) * ordered_word_phase(gens, r).inv();
    pres.binomials.push_back({p, r, ph});
  }
  return pres;
}

static std::vector<std::string> numbered(const std::string& stem, int k) {
  std::vector<std::string> names;
  for (int a = 1; a <= k; ++a) names.push_back(stem + std::to_string(a));
  return names;
}

ChartAlgebra chart_algebra(const Cone& c) {
  if (!c.is_pointed())
    throw fans::FanError("chart_algebra: cone must be strongly convex");
  ChartAlgebra alg{c, fans::hilbert_basis(c.dual()), {}};
  alg.pres = relations_for_generators(alg.gens, numbered("x", alg.size()), "chart");
  return alg;
}

std::pair<PhaseScalar, Vec> normal_form(const ChartAlgebra& a,
                                        const std::vector<std::pair<int, long long>>& word) {
  // Bubble sort of the letters; the adjacent swap x_b^m x_a^l -> x_a^l x_b^m
  // (b > a) contributes qcheck_ab^{-2 l m}.
  std::vector<std::pair<int, long long>> w;
  for (const auto& [g, m] : word) {
    if (g < 0 || g >= a.size()) throw std::invalid_argument("normal_form: bad generator");
    if (m < 0) throw std::invalid_argument("normal_form: negative power");
    if (m > 0) w.push_back({g, m});
  }
  PhaseScalar phase = PhaseScalar::one();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].first > w[i + 1].first) {
        phase *= a.qcheck(w[i + 1].first, w[i].first).pow(-2 * w[i].second * w[i + 1].second);
        std::swap(w[i], w[i + 1]);
        changed = true;
      }
    }
  }
  Vec expo(std::size_t(a.size()), 0);
  for (const auto& [g, m] : w) expo[std::size_t(g)] += m;
  return {phase, expo};
}

GluingData gluing_relations(const Cone& s1, const Cone& s2) {
  Cone tau = intersect(s1, s2);
  if (!s1.has_face(tau) || !s2.has_face(tau))
    throw fans::FanError("gluing_relations: intersection is not a common face");
  GluingData g{tau, chart_algebra(s1), chart_algebra(s2), chart_algebra(tau), {}};
  Mat combined = g.chart1.gens;
  combined.insert(combined.end(), g.chart2.gens.begin(), g.chart2.gens.end());
  std::vector<std::string> names = numbered("x", g.chart1.size());
  for (const std::string& s : numbered("y", g.chart2.size())) names.push_back(s);
  g.combined = relations_for_generators(combined, names, "gluing");
  return g;
}

// Kaehler calculus ---------------------------------------------------------

AlgebraPresentation kaehler_relations(const ChartAlgebra& a) {
  if (!a.pres.binomials.empty())
    throw std::domain_error(
        "kaehler_relations: first-order calculus implemented for charts with "
        "free semigroup (no binomial relations) only");
  AlgebraPresentation pres;
  pres.title = "kaehler";
  const int k = a.size();
  for (int i = 0; i < k; ++i) pres.generators.push_back({"x" + std::to_string(i + 1), a.gens[std::size_t(i)]});
  for (int i = 0; i < k; ++i) pres.generators.push_back({"dx" + std::to_string(i + 1), a.gens[std::size_t(i)]});
  // x_a x_b = qcheck^2 x_b x_a and x_a dx_b = qcheck^2 dx_b x_a: the
  // differential carries the same torus weight as its base coordinate.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      pres.commutation.push_back({i, j, a.qcheck(i, j).pow(2)});
  // x_i (index i) vs dx_j (index k + j); qcheck_ii = 1 covers i == j.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      pres.commutation.push_back({i, k + j, a.qcheck(i, j).pow(2)});
  return pres;
}

OmegaElement& OmegaElement::operator+=(const OmegaElement& o) {
  if (size != o.size) throw std::invalid_argument("OmegaElement: size mismatch");
  for (const auto& [key, c] : o.terms) {
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  return *this;
}

OmegaElement OmegaElement::scaled(const PhaseScalar& c) const {
  OmegaElement out;
  out.size = size;
  if (c.is_zero()) return out;
  for (const auto& [key, v] : terms) out.terms[key] = v * c;
  return out;
}

std::string OmegaElement::str(const ChartAlgebra& a) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    std::string mono = a.pres.monomial_text(key.second);
    if (mono != "1") os << "*" << mono;
    os << "*dx" << (key.first + 1);
  }
  return os.str();
}

static void add_term(OmegaElement& w, int gen, const Vec& expo, const PhaseScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(gen, expo);
  auto it = w.terms.find(key);
  if (it == w.terms.end()) {
    w.terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) w.terms.erase(it);
  }
}

OmegaElement differential(const ChartAlgebra& a, const Vec& expo, const PhaseScalar& coeff) {
  // d(x^e) = sum_a e_a (prod_{b>a} qcheck_ab^{2 e_b}) x^{e - delta_a} dx_a:
  // differentiate one letter of the normal-ordered word and push its dx to
  // the right through the later letters.
  if (int(expo.size()) != a.size()) throw std::invalid_argument("differential: wrong exponent length");
  OmegaElement out;
  out.size = a.size();
  for (int g = 0; g < a.size(); ++g) {
    long long eg = expo[std::size_t(g)];
    if (eg == 0) continue;
    if (eg < 0) throw std::invalid_argument("differential: negative exponent");
    PhaseScalar ph = coeff * PhaseScalar::from_rational(eg);
    for (int b = g + 1; b < a.size(); ++b)
      ph *= a.qcheck(g, b).pow(2 * expo[std::size_t(b)]);
    Vec rest = expo;
    rest[std::size_t(g)] -= 1;
    add_term(out, g, rest, ph);
  }
  return out;
}

OmegaElement omega_mul_right(const ChartAlgebra& a, const OmegaElement& w, const Vec& expo) {
  // (x^e dx_c) * x^f = (prod_b qcheck_cb^{2 f_b}) (x^e * x^f) dx_c.
  OmegaElement out;
  out.size = a.size();
  for (const auto& [key, c] : w.terms) {
    const auto& [gen, e] = key;
    PhaseScalar ph = c;
    for (int b = 0; b < a.size(); ++b) ph *= a.qcheck(gen, b).pow(2 * expo[std::size_t(b)]);
    auto [mp, s] = a.mul_monomials(e, expo);
    add_term(out, gen, s, ph * mp);
  }
  return out;
}

OmegaElement omega_mul_left(const ChartAlgebra& a, const Vec& expo, const OmegaElement& w) {
  OmegaElement out;
  out.size = a.size();
  for (const auto& [key, c] : w.terms) {
    const auto& [gen, e] = key;
    auto [mp, s] = a.mul_monomials(expo, e);
    add_term(out, gen, s, c * mp);
  }
  return out;
}

bool leibniz_holds(const ChartAlgebra& a, const Vec& e, const Vec& f) {
  auto [mp, s] = a.mul_monomials(e, f);
  OmegaElement lhs = differential(a, s, mp);
  OmegaElement rhs = omega_mul_right(a, differential(a, e), f);
  rhs += omega_mul_left(a, e, differential(a, f));
  return lhs == rhs;
}

}  // namespace qtoric::torus
