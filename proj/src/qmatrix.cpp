// Non-template utilities for the deformed matrix algebra: multi-index
// combinatorics, word/element rendering, and the numeric centrality test
// for the quantum determinant.

#include "qtoric/qmatrix.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qtoric::qmatrix {

int tuple_sign(const Tuple& t) {
  int sgn = 1;
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (t[a] == t[b]) return 0;
      if (t[a] > t[b]) sgn = -sgn;
    }
  }
  return sgn;
}

std::vector<Tuple> permutations(int d) {
  Tuple base(std::size_t(d), 0);
  std::iota(base.begin(), base.end(), 1);
  std::vector<Tuple> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<Tuple> increasing_tuples(int d, int n) {
  std::vector<Tuple> out;
  if (d < 0 || d > n) return out;
  Tuple cur(std::size_t(d), 0);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int pos = d - 1;
    while (pos >= 0 && cur[std::size_t(pos)] == n - (d - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[std::size_t(pos)];
    for (int p = pos + 1; p < d; ++p) cur[std::size_t(p)] = cur[std::size_t(p - 1)] + 1;
  }
  if (d == 0) out.assign(1, Tuple{});
  return out;
}

Tuple erase_pos(const Tuple& t, int k) {
  Tuple out;
  out.reserve(t.size() - 1);
  for (std::size_t p = 0; p < t.size(); ++p)
    if (int(p) != k - 1) out.push_back(t[p]);
  return out;
}

std::string gword_text(const GWord& w) {
  std::ostringstream os;
  bool first = true;
  if (w.det_pow != 0) {
    os << "det";
    if (w.det_pow != 1) os << '^' << w.det_pow;
    first = false;
  }
  for (const auto& [i, j] : w.letters) {
    if (!first) os << '*';
    first = false;
    if (i < 10 && j < 10)
      os << 'g' << i << j;
    else
      os << "g[" << i << ',' << j << ']';
  }
  if (first) os << '1';
  return os.str();
}

std::string element_text(const Element<scalars::ExactCtx>& e) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e.terms) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*" << gword_text(w);
  }
  return os.str();
}

bool centrality_condition(const scalars::ThetaSpec& theta, double tol) {
  int n = theta.n();
  std::vector<double> col(std::size_t(n), 0.0);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) col[std::size_t(i - 1)] += theta.theta(k, i).real();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double diff = col[std::size_t(i)] - col[std::size_t(j)];
      // reduce modulo 2 pi and compare to zero
      double r = std::remainder(diff, 2.0 * 3.14159265358979323846);
      if (std::abs(r) > tol) return false;
    }
  }
  return true;
}

}  // namespace qtoric::qmatrix
