#include "qtoric/projective.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qtoric/grassmann.hpp"
#include "qtoric/qmatrix.hpp"
#include "qtoric/torus.hpp"

namespace qtoric::projective {

using scalars::PairExp;
using scalars::Rational;

namespace {

long long binom(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long t = 1; t <= b; ++t) r = r * (a - b + t) / t;
  return r;
}

Rational rational_power(long long base, long long e) {
  Rational r = 1;
  Rational b = base;
  if (e < 0) {
    b = Rational(1) / b;
    e = -e;
  }
  for (long long t = 0; t < e; ++t) r *= b;
  return r;
}

// Exact value of a phase scalar after substituting fixed rationals for the
// formal units.
Rational eval_at(const scalars::PhaseScalar& ps,
                 const std::map<std::pair<int, int>, long long>& primes) {
  Rational total = 0;
  for (const auto& [ex, c] : ps.terms()) {
    Rational v = c;
    for (const auto& [pr, e] : ex) v *= rational_power(primes.at(pr), e);
    total += v;
  }
  return total;
}

// Rank by forward Gaussian elimination over exact rationals.
int rational_rank(std::vector<std::vector<Rational>> rows, int cols) {
  int rank = 0;
  std::vector<int> pivot_col;
  std::vector<std::vector<Rational>> red;
  for (auto& row : rows) {
    for (size_t t = 0; t < red.size(); ++t) {
      Rational lead = row[pivot_col[t]];
      if (lead == 0) continue;
      for (int c = 0; c < cols; ++c) row[c] -= lead * red[t][c];
    }
    int pc = -1;
    for (int c = 0; c < cols; ++c)
      if (row[c] != 0) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    Rational lead = row[pc];
    for (int c = 0; c < cols; ++c) row[c] /= lead;
    red.push_back(row);
    pivot_col.push_back(pc);
    ++rank;
  }
  return rank;
}

long long dot(const fans::Vec& a, const fans::Vec& b) {
  long long s = 0;
  for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

}  // namespace

PhaseScalar HomogeneousAlgebra::qtilde(int a, int b) const {
  if (a == b) return PhaseScalar::one();
  if (a < b) return qt[size_t(a)][size_t(b)];
  return qt[size_t(b)][size_t(a)].inv();
}

PhaseScalar HomogeneousAlgebra::reorder_phase(const Vec& p, const Vec& r) const {
  PhaseScalar out = PhaseScalar::one();
  const int N = size();
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      long long e = p[size_t(a)] * r[size_t(b)] - p[size_t(b)] * r[size_t(a)];
      if (e != 0) out = out * qt[size_t(a)][size_t(b)].pow(e);
    }
  return out;
}

PhaseScalar HomogeneousAlgebra::normal_word_phase(const Vec& p) const {
  PhaseScalar out = PhaseScalar::one();
  const int N = size();
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      long long e = p[size_t(a)] * p[size_t(b)];
      if (e != 0) out = out * qt[size_t(a)][size_t(b)].pow(e);
    }
  return out;
}

Vec HomogeneousAlgebra::monomial_weight(const Vec& p) const {
  Vec w(weights.empty() ? 0 : weights.front().size(), 0);
  for (int a = 0; a < size(); ++a)
    for (size_t t = 0; t < w.size(); ++t) w[t] += p[size_t(a)] * weights[size_t(a)][t];
  return w;
}

presentation::AlgebraPresentation HomogeneousAlgebra::pres() const {
  presentation::AlgebraPresentation p;
  p.title = title;
  for (int a = 0; a < size(); ++a)
    p.generators.push_back({names[size_t(a)], weights[size_t(a)]});
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      p.commutation.push_back({a, b, exchange2(a, b)});
  int idx = 0;
  for (const auto& f : ideal) {
    presentation::PolyRelation rel;
    rel.label = "ideal[" + std::to_string(idx++) + "]";
    for (const auto& [expo, c] : f) {
      std::vector<int> word;
      for (int a = 0; a < size(); ++a)
        for (long long t = 0; t < expo[size_t(a)]; ++t) word.push_back(a);
      rel.terms.push_back({c * normal_word_phase(expo).inv(), word});
    }
    p.relations.push_back(std::move(rel));
  }
  p.notes.push_back("graded by total degree and by the torus weight lattice");
  return p;
}

HomogeneousAlgebra projective_space(int n) {
  if (n < 1) throw std::invalid_argument("projective_space: need n >= 1");
  HomogeneousAlgebra A;
  A.n = n;
  A.title = "CP^" + std::to_string(n) + " homogeneous coordinate algebra";
  const int N = n + 1;
  for (int k = 1; k <= N; ++k) {
    A.names.push_back("w" + std::to_string(k));
    Vec w(size_t(n), 0);
    if (k <= n) w[size_t(k - 1)] = 1;
    A.weights.push_back(std::move(w));
  }
  A.qt.assign(size_t(N), std::vector<PhaseScalar>(size_t(N), PhaseScalar::one()));
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      A.qt[size_t(a)][size_t(b)] =
          (b + 1 <= n) ? PhaseScalar::unit(a + 1, b + 1) : PhaseScalar::one();
  return A;
}

WPoly wpoly_monomial(const Vec& expo, const PhaseScalar& c) {
  WPoly p;
  if (!c.is_zero()) p[expo] = c;
  return p;
}

void wadd_inplace(WPoly& a, const WPoly& b) {
  for (const auto& [expo, c] : b) {
    auto it = a.find(expo);
    if (it == a.end()) {
      a.emplace(expo, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

WPoly wscale(const WPoly& a, const PhaseScalar& c) {
  WPoly out;
  if (c.is_zero()) return out;
  for (const auto& [expo, v] : a) out[expo] = v * c;
  return out;
}

WPoly wmul(const HomogeneousAlgebra& A, const WPoly& a, const WPoly& b) {
  WPoly out;
  for (const auto& [p, cp] : a)
    for (const auto& [r, cr] : b) {
      Vec s(p.size());
      for (size_t t = 0; t < p.size(); ++t) s[t] = p[t] + r[t];
      PhaseScalar c = cp * cr * A.reorder_phase(p, r);
      auto it = out.find(s);
      if (it == out.end()) {
        out.emplace(std::move(s), c);
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

bool wpoly_is_zero(const WPoly& a) { return a.empty(); }

WPoly word_to_poly(const HomogeneousAlgebra& A, const std::vector<int>& word,
                   const PhaseScalar& c) {
  WPoly out = wpoly_monomial(Vec(size_t(A.size()), 0), c);
  for (int letter : word) {
    Vec e(size_t(A.size()), 0);
    e[size_t(letter)] = 1;
    out = wmul(A, out, wpoly_monomial(e));
  }
  return out;
}

std::vector<Vec> degree_basis(int N, int k) {
  std::vector<Vec> out;
  if (N < 1 || k < 0) return out;
  Vec cur(size_t(N), 0);
  // Lexicographic enumeration of compositions of k into N nonnegative parts.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == N - 1) {
      cur[size_t(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[size_t(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, k);
  return out;
}

long long graded_dimension(const HomogeneousAlgebra& A, int k) {
  if (k < 0) return 0;
  const int N = A.size();
  long long free_dim = binom(N - 1 + k, N - 1);
  if (A.ideal.empty()) return free_dim;

  const auto basis = degree_basis(N, k);
  std::map<Vec, int> index;
  for (size_t t = 0; t < basis.size(); ++t) index.emplace(basis[t], int(t));

  // Span of the degree-k piece of the two-sided ideal: all normal-formed
  // monomial * f * monomial products.
  std::vector<WPoly> rows;
  for (const auto& f : A.ideal) {
    if (f.empty()) continue;
    long long df = 0;
    for (long long e : f.begin()->first) df += e;
    if (df > k) continue;
    for (int du = 0; du <= int(k - df); ++du) {
      int dv = int(k - df) - du;
      for (const auto& u : degree_basis(N, du))
        for (const auto& v : degree_basis(N, dv))
          rows.push_back(wmul(A, wmul(A, wpoly_monomial(u), f), wpoly_monomial(v)));
    }
  }

  std::set<std::pair<int, int>> unit_keys;
  for (const auto& row : rows)
    for (const auto& [expo, c] : row)
      for (const auto& [ex, coeff] : c.terms())
        for (const auto& [pr, e] : ex) unit_keys.insert(pr);

  static const long long table_a[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                      23, 29, 31, 37, 41, 43, 47, 53};
  static const long long table_b[] = {101, 103, 107, 109, 113, 127, 131, 137,
                                      139, 149, 151, 157, 163, 167, 173, 179};
  if (unit_keys.size() > std::size(table_a))
    throw std::runtime_error("graded_dimension: prime table exhausted");

  long long rank = 0;
  for (const long long* table : {table_a, table_b}) {
    std::map<std::pair<int, int>, long long> primes;
    size_t t = 0;
    for (const auto& pr : unit_keys) primes[pr] = table[t++];
    std::vector<std::vector<Rational>> mat;
    mat.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<Rational> r(basis.size(), Rational(0));
      for (const auto& [expo, c] : row) r[size_t(index.at(expo))] = eval_at(c, primes);
      mat.push_back(std::move(r));
    }
    rank = std::max(rank, (long long)rational_rank(std::move(mat), int(basis.size())));
  }
  return free_dim - rank;
}

std::vector<long long> hilbert_free(int n, int deg) {
  std::vector<long long> out;
  for (int k = 0; k <= deg; ++k) out.push_back(binom(n + k, n));
  return out;
}

std::vector<long long> koszul_dims(int n) {
  std::vector<long long> out;
  for (int k = 0; k <= n + 1; ++k) out.push_back(binom(n + 1, k));
  return out;
}

bool hilbert_product_is_one(int n, int deg) {
  for (int k = 0; k <= deg; ++k) {
    long long s = 0;
    for (int j = 0; j <= std::min(k, n + 1); ++j) {
      long long term = binom(n + 1, j) * binom(n + k - j, n);
      s += (j % 2 == 0) ? term : -term;
    }
    if (s != (k == 0 ? 1 : 0)) return false;
  }
  return true;
}

KoszulDual koszul_dual(const HomogeneousAlgebra& A) {
  if (A.n < 1 || !A.ideal.empty())
    throw std::invalid_argument("koszul_dual: need a free projective-space algebra");
  const int n = A.n;
  KoszulDual kd;
  kd.n = n;
  kd.pres.title = "quadratic dual of " + A.title;
  for (int a = 0; a < A.size(); ++a)
    kd.pres.generators.push_back({"wc" + std::to_string(a + 1), A.weights[size_t(a)]});
  for (int a = 0; a < A.size(); ++a)
    for (int b = a + 1; b < A.size(); ++b) {
      PhaseScalar ph = PhaseScalar::from_rational(-1);
      if (b + 1 <= n) ph = ph * PhaseScalar::unit(a + 1, b + 1, 2);
      kd.pres.commutation.push_back({a, b, ph});
    }
  for (int a = 0; a < A.size(); ++a) {
    presentation::PolyRelation rel;
    rel.label = kd.pres.generators[size_t(a)].name + "^2";
    rel.terms.push_back({PhaseScalar::one(), {a, a}});
    kd.pres.relations.push_back(std::move(rel));
  }
  std::ostringstream dims;
  dims << "degree dimensions:";
  for (long long d : koszul_dims(n)) dims << ' ' << d;
  kd.pres.notes.push_back(dims.str());
  kd.pres.notes.push_back("monomial basis: strictly increasing index words");
  return kd;
}

std::vector<std::vector<int>> koszul_basis(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n + 1) return out;
  for (const auto& t : qmatrix::increasing_tuples(k, n + 1)) out.push_back(t);
  return out;
}

std::optional<std::pair<PhaseScalar, std::vector<int>>> koszul_mul(
    int n, const std::vector<int>& s, const std::vector<int>& t) {
  std::vector<int> w = s;
  w.insert(w.end(), t.begin(), t.end());
  PhaseScalar phase = PhaseScalar::one();
  // Bubble the concatenation into increasing order; each adjacent swap of
  // letters a > b costs the exchange factor of the dual relations, and a
  // repeated letter kills the word.
  for (size_t pass = 0; pass + 1 < w.size() || pass == 0; ++pass) {
    bool moved = false;
    for (size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] == w[j + 1]) return std::nullopt;
      if (w[j] > w[j + 1]) {
        int a = w[j], b = w[j + 1];
        PhaseScalar f = PhaseScalar::from_rational(-1);
        if (a <= n && b <= n) f = f * PhaseScalar::unit(b, a, -2);
        phase = phase * f;
        std::swap(w[j], w[j + 1]);
        moved = true;
      }
    }
    if (!moved) break;
  }
  for (size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w[j + 1]) return std::nullopt;
  return std::make_pair(phase, w);
}

std::vector<std::vector<PhaseScalar>> frobenius_pairing(int n, int k) {
  const auto rows = koszul_basis(n, k);
  const auto cols = koszul_basis(n, n + 1 - k);
  std::vector<std::vector<PhaseScalar>> M(
      rows.size(), std::vector<PhaseScalar>(cols.size(), PhaseScalar::zero()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) {
      auto pr = koszul_mul(n, rows[r], cols[c]);
      if (pr) M[r][c] = pr->first;
    }
  return M;
}

int frobenius_pairing_rank(int n, int k, const ThetaSpec& theta, double tol) {
  if (k < 0 || k > n + 1)
    throw std::out_of_range("frobenius_pairing_rank: degree out of range");
  const auto M = frobenius_pairing(n, k);
  if (M.empty()) return 0;
  Eigen::MatrixXcd num(M.size(), M.front().size());
  for (size_t r = 0; r < M.size(); ++r)
    for (size_t c = 0; c < M.front().size(); ++c)
      num(long(r), long(c)) = M[r][c].specialize(theta);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(num);
  int rank = 0;
  for (long t = 0; t < svd.singularValues().size(); ++t)
    if (svd.singularValues()(t) > tol) ++rank;
  return rank;
}

PhaseScalar frobenius_pairing_det(int n, int k) {
  if (n > 2) throw std::invalid_argument("frobenius_pairing_det: guarded to n <= 2");
  if (k < 0 || k > n + 1)
    throw std::out_of_range("frobenius_pairing_det: degree out of range");
  const auto M = frobenius_pairing(n, k);
  const int m = int(M.size());
  std::vector<int> perm(static_cast<size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  PhaseScalar det = PhaseScalar::zero();
  do {
    int inversions = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (perm[size_t(a)] > perm[size_t(b)]) ++inversions;
    PhaseScalar term = PhaseScalar::from_rational(inversions % 2 == 0 ? 1 : -1);
    for (int a = 0; a < m; ++a) term = term * M[size_t(a)][size_t(perm[size_t(a)])];
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

LocalElement local_mul(const HomogeneousAlgebra& A, const LocalElement& x,
                       const LocalElement& y) {
  if (x.i != y.i) throw std::invalid_argument("local_mul: different localizations");
  // Relocate the right denominator past the left numerator: replace
  //   a1 * w_i^{-m2}   by   w_i^{-m2} * a1'
  // with a1' determined per character by the exact exchange phase.
  Vec s2(size_t(A.size()), 0);
  s2[size_t(x.i - 1)] = y.m;
  WPoly relocated;
  for (const auto& [p, c] : x.a)
    relocated[p] = c * A.reorder_phase(s2, p).pow(2);
  LocalElement out;
  out.i = x.i;
  out.m = x.m + y.m;
  out.a = wmul(A, relocated, y.a);
  return out;
}

LocalElement local_generator(const HomogeneousAlgebra& A, int i, int k) {
  Vec e(size_t(A.size()), 0);
  e[size_t(k - 1)] = 1;
  return LocalElement{i, 1, wpoly_monomial(e)};
}

presentation::AlgebraPresentation localize_degree0(const HomogeneousAlgebra& A,
                                                   int i) {
  if (i < 1 || i > A.size())
    throw std::invalid_argument("localize_degree0: generator index out of range");
  presentation::AlgebraPresentation p;
  p.title = A.title + ", degree-0 chart at " + A.names[size_t(i - 1)];
  std::vector<int> letters;
  for (int k = 1; k <= A.size(); ++k)
    if (k != i) letters.push_back(k);
  for (int k : letters) {
    Vec w = A.weights[size_t(k - 1)];
    for (size_t t = 0; t < w.size(); ++t) w[t] -= A.weights[size_t(i - 1)][t];
    p.generators.push_back({"y" + std::to_string(k), std::move(w)});
  }
  for (size_t a = 0; a < letters.size(); ++a)
    for (size_t b = a + 1; b < letters.size(); ++b) {
      LocalElement u = local_mul(A, local_generator(A, i, letters[a]),
                                 local_generator(A, i, letters[b]));
      LocalElement v = local_mul(A, local_generator(A, i, letters[b]),
                                 local_generator(A, i, letters[a]));
      const PhaseScalar& cu = u.a.begin()->second;
      const PhaseScalar& cv = v.a.begin()->second;
      p.commutation.push_back({int(a), int(b), cu * cv.inv()});
    }
  for (int k : letters)
    p.notes.push_back("y" + std::to_string(k) + " = " + A.names[size_t(i - 1)] +
                      "^-1 " + A.names[size_t(k - 1)]);
  return p;
}

fans::Cone projective_fan_cone(int n, int i) {
  if (n < 1 || i < 1 || i > n + 1)
    throw std::invalid_argument("projective_fan_cone: bad index");
  fans::Mat rays;
  for (int k = 1; k <= n + 1; ++k) {
    if (k == i) continue;
    Vec v(size_t(n), 0);
    if (k <= n) {
      v[size_t(k - 1)] = 1;
    } else {
      for (auto& t : v) t = -1;
    }
    rays.push_back(std::move(v));
  }
  return fans::Cone::from_rays(n, rays);
}

ChartIsoResult chart_iso_check(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("chart_iso_check: guarded to n <= 3");
  ChartIsoResult res;
  res.n = n;
  const HomogeneousAlgebra A = projective_space(n);
  for (int i = 1; i <= n + 1; ++i) {
    ChartCheck ck;
    ck.chart = i;
    const torus::ChartAlgebra chart = torus::chart_algebra(projective_fan_cone(n, i));
    const presentation::AlgebraPresentation loc = localize_degree0(A, i);

    // The chart generators must biject with the y_k by torus weight; this
    // realizes the assignment x_k -> y_k, x_i -> y_{n+1}.
    std::map<Vec, int> by_weight;
    bool bij = true;
    for (size_t t = 0; t < loc.generators.size(); ++t)
      if (!by_weight.emplace(loc.generators[t].vector, int(t)).second) bij = false;
    std::vector<int> match(size_t(chart.size()), -1);
    std::vector<bool> used(loc.generators.size(), false);
    for (int a = 0; a < chart.size() && bij; ++a) {
      auto it = by_weight.find(chart.gens[size_t(a)]);
      if (it == by_weight.end() || used[size_t(it->second)]) {
        bij = false;
        break;
      }
      match[size_t(a)] = it->second;
      used[size_t(it->second)] = true;
    }
    ck.weights_match = bij && chart.size() == int(loc.generators.size());

    if (ck.weights_match) {
      std::map<std::pair<int, int>, PhaseScalar> loc_phase;
      for (const auto& cm : loc.commutation) loc_phase[{cm.a, cm.b}] = cm.phase2;
      ck.phases_match = true;
      for (const auto& cm : chart.pres.commutation) {
        int pa = match[size_t(cm.a)], pb = match[size_t(cm.b)];
        PhaseScalar expect = (pa < pb) ? loc_phase.at({pa, pb})
                                       : loc_phase.at({pb, pa}).inv();
        if (!(cm.phase2 == expect)) {
          ck.phases_match = false;
          ck.witness = "chart " + std::to_string(i) + ": " +
                       chart.pres.generators[size_t(cm.a)].name + " " +
                       chart.pres.generators[size_t(cm.b)].name +
                       " commutation phase differs";
          break;
        }
      }
    } else {
      ck.witness = "chart " + std::to_string(i) + ": generator weights do not biject";
    }
    res.charts.push_back(std::move(ck));
  }
  res.ok = true;
  for (const auto& ck : res.charts)
    res.ok = res.ok && ck.weights_match && ck.phases_match;
  return res;
}

MonomialIdeal face_ideal(const fans::Cone& sigma, const fans::Cone& tau) {
  if (!sigma.has_face(tau))
    throw std::invalid_argument("face_ideal: tau is not a face of sigma");
  MonomialIdeal I(sigma);
  const fans::Mat rays = tau.rays();
  I.in_ideal = [rays](const Vec& m) {
    for (const auto& r : rays)
      if (dot(m, r) != 0) return true;
    return false;
  };
  std::ostringstream note;
  note << "orbit-closure ideal of the face with " << rays.size() << " ray(s)";
  I.note = note.str();
  return I;
}

std::vector<Vec> dual_semigroup_box(const fans::Cone& sigma, long long box) {
  const int r = sigma.ambient();
  std::vector<Vec> out;
  Vec m(size_t(r), -box);
  while (true) {
    bool inside = true;
    for (const auto& ray : sigma.rays())
      if (dot(m, ray) < 0) {
        inside = false;
        break;
      }
    if (inside) out.push_back(m);
    int pos = 0;
    while (pos < r && m[size_t(pos)] == box) m[size_t(pos++)] = -box;
    if (pos == r) break;
    ++m[size_t(pos)];
  }
  return out;
}

bool ideal_property_ok(const MonomialIdeal& I, long long box) {
  const auto pts = dual_semigroup_box(I.sigma, box);
  std::vector<const Vec*> support;
  for (const auto& m : pts)
    if (I.in_ideal(m)) support.push_back(&m);
  Vec s(pts.empty() ? 0 : pts.front().size());
  for (const Vec* a : support)
    for (const auto& c : pts) {
      for (size_t t = 0; t < s.size(); ++t) s[t] = (*a)[t] + c[t];
      if (!I.in_ideal(s)) return false;
    }
  return true;
}

bool is_prime_monomial(const MonomialIdeal& I, long long box) {
  const auto pts = dual_semigroup_box(I.sigma, box);
  std::vector<const Vec*> comp;
  for (const auto& m : pts)
    if (!I.in_ideal(m)) comp.push_back(&m);
  Vec s(pts.empty() ? 0 : pts.front().size());
  for (size_t a = 0; a < comp.size(); ++a)
    for (size_t b = a; b < comp.size(); ++b) {
      for (size_t t = 0; t < s.size(); ++t) s[t] = (*comp[a])[t] + (*comp[b])[t];
      if (I.in_ideal(s)) return false;
    }
  return true;
}

HomogeneousAlgebra quotient_variety(const HomogeneousAlgebra& A,
                                    const std::vector<WPoly>& fs) {
  HomogeneousAlgebra out = A;
  for (const auto& f : fs) {
    if (f.empty()) throw std::invalid_argument("quotient_variety: zero relation");
    long long deg = -1;
    Vec weight;
    for (const auto& [expo, c] : f) {
      long long d = 0;
      for (long long e : expo) {
        if (e < 0) throw std::invalid_argument("quotient_variety: negative exponent");
        d += e;
      }
      Vec w = A.monomial_weight(expo);
      if (deg < 0) {
        deg = d;
        weight = w;
      } else if (d != deg) {
        throw std::invalid_argument("quotient_variety: relation not homogeneous");
      } else if (w != weight) {
        throw std::invalid_argument("quotient_variety: relation not weight-homogeneous");
      }
    }
    out.ideal.push_back(f);
  }
  return out;
}

HomogeneousAlgebra grassmann_ambient(int d, int n) {
  const auto tuples = qmatrix::increasing_tuples(d, n);
  const auto pres = grassmann::grassmannian_algebra(d, n);
  HomogeneousAlgebra A;
  A.title = "CP^" + std::to_string(int(tuples.size()) - 1) +
            " ambient of " + pres.title;
  for (const auto& g : pres.generators) {
    A.names.push_back(g.name);
    A.weights.push_back(g.vector);
  }
  const int N = A.size();
  A.qt.assign(size_t(N), std::vector<PhaseScalar>(size_t(N), PhaseScalar::one()));
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      A.qt[size_t(a)][size_t(b)] =
          grassmann::theta_capital_phase(tuples[size_t(a)], tuples[size_t(b)]);
  return A;
}

std::vector<WPoly> grassmann_ideal(int d, int n) {
  const HomogeneousAlgebra amb = grassmann_ambient(d, n);
  std::vector<WPoly> out;
  for (const auto& rel : grassmann::grassmannian_algebra(d, n).relations) {
    WPoly f;
    for (const auto& [coeff, word] : rel.terms)
      wadd_inplace(f, word_to_poly(amb, word, coeff));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace qtoric::projective
