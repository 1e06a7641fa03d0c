#include "qtoric/fans.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace qtoric::fans {

namespace {

using Rational = boost::multiprecision::cpp_rational;

Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_zero_row(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string vec_text(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string mat_text(const Mat& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ' ';
    os << vec_text(m[i]);
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Integer linear algebra

Vec primitive(Vec v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (long long& x : v) x /= g;
  }
  return v;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

Mat hnf(const Mat& a_in, Mat* u_out) {
  Mat a = a_in;
  int rows = int(a.size());
  int cols = rows ? int(a[0].size()) : 0;
  Mat u = identity(rows);
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    // gcd-eliminate the column below row r
    for (;;) {
      int best = -1;
      for (int k = r; k < rows; ++k) {
        if (a[k][col] != 0 &&
            (best < 0 || std::abs(a[k][col]) < std::abs(a[best][col]))) {
          best = k;
        }
      }
      if (best < 0) break;
      std::swap(a[best], a[r]);
      std::swap(u[best], u[r]);
      if (a[r][col] < 0) {
        for (auto& x : a[r]) x = -x;
        for (auto& x : u[r]) x = -x;
      }
      bool done = true;
      for (int k = r + 1; k < rows; ++k) {
        if (a[k][col] == 0) continue;
        long long q = a[k][col] / a[r][col];
        if (q != 0) {
          for (int j = 0; j < cols; ++j) a[k][j] -= q * a[r][j];
          for (int j = 0; j < rows; ++j) u[k][j] -= q * u[r][j];
        }
        if (a[k][col] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && a[r][col] != 0) {
      for (int k = 0; k < r; ++k) {
        long long q = floor_div(a[k][col], a[r][col]);
        if (q != 0) {
          for (int j = 0; j < cols; ++j) a[k][j] -= q * a[r][j];
          for (int j = 0; j < rows; ++j) u[k][j] -= q * u[r][j];
        }
      }
      ++r;
    }
  }
  if (u_out) *u_out = std::move(u);
  return a;
}

Mat left_kernel(const Mat& a) {
  if (a.empty()) return {};
  Mat u;
  Mat h = hnf(a, &u);
  Mat kernel;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (is_zero_row(h[i])) kernel.push_back(u[i]);
  }
  if (kernel.empty()) return {};
  Mat canon = hnf(kernel, nullptr);
  while (!canon.empty() && is_zero_row(canon.back())) canon.pop_back();
  return canon;
}

Mat right_kernel(const Mat& a, int cols) {
  if (a.empty()) return identity(cols);
  return left_kernel(transpose(a));
}

int rank(const Mat& a) {
  if (a.empty()) return 0;
  Mat h = hnf(a, nullptr);
  int r = 0;
  for (const auto& row : h) {
    if (!is_zero_row(row)) ++r;
  }
  return r;
}

bool solve_integer(const Mat& a, const Vec& b, Vec& x) {
  int rows = int(a.size());
  int cols = rows ? int(a[0].size()) : 0;
  x.assign(cols, 0);
  if (rows == 0) return true;
  Mat u;
  Mat h = hnf(transpose(a), &u);  // u * a^T = h,  h is cols x rows
  Vec y(cols, 0);
  Vec res = b;
  for (int p = 0; p < cols; ++p) {
    int c = -1;
    for (int j = 0; j < rows; ++j) {
      if (h[p][j] != 0) {
        c = j;
        break;
      }
    }
    if (c < 0) break;
    if (res[c] % h[p][c] != 0) return false;
    long long t = res[c] / h[p][c];
    y[p] = t;
    if (t != 0) {
      for (int j = 0; j < rows; ++j) res[j] -= t * h[p][j];
    }
  }
  if (!is_zero_row(res)) return false;
  for (int j = 0; j < cols; ++j) {
    long long s = 0;
    for (int p = 0; p < cols; ++p) s += u[p][j] * y[p];
    x[j] = s;
  }
  return true;
}

Mat snf(const Mat& a_in, Mat* u_out, Mat* v_out) {
  Mat d = a_in;
  int rows = int(d.size());
  int cols = rows ? int(d[0].size()) : 0;
  Mat u = identity(rows);
  Mat v = identity(cols);
  auto row_sub = [&](int dst, int src, long long q) {
    for (int j = 0; j < cols; ++j) d[dst][j] -= q * d[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
  };
  auto col_sub = [&](int dst, int src, long long q) {
    for (int i = 0; i < rows; ++i) d[i][dst] -= q * d[i][src];
    for (int i = 0; i < cols; ++i) v[i][dst] -= q * v[i][src];
  };
  int t = 0;
  while (t < rows && t < cols) {
    // locate a minimal nonzero entry in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (d[i][j] != 0 &&
            (pi < 0 || std::abs(d[i][j]) < std::abs(d[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(d[pi], d[t]);
    std::swap(u[pi], u[t]);
    if (pj != t) {
      for (int i = 0; i < rows; ++i) std::swap(d[i][pj], d[i][t]);
      for (int i = 0; i < cols; ++i) std::swap(v[i][pj], v[i][t]);
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (d[i][t] != 0) {
        row_sub(i, t, d[i][t] / d[t][t]);
        if (d[i][t] != 0) clean = false;
      }
    }
    for (int j = t + 1; j < cols; ++j) {
      if (d[t][j] != 0) {
        col_sub(j, t, d[t][j] / d[t][t]);
        if (d[t][j] != 0) clean = false;
      }
    }
    if (!clean) continue;
    // enforce divisibility of the remaining block by d[t][t]
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i) {
      for (int j = t + 1; j < cols && divides; ++j) {
        if (d[i][j] % d[t][t] != 0) {
          row_sub(t, i, -1);  // add row i to row t, then restart reduction
          divides = false;
        }
      }
    }
    if (divides) ++t;
  }
  if (u_out) *u_out = std::move(u);
  if (v_out) *v_out = std::move(v);
  return d;
}

Mat inverse_unimodular(const Mat& a) {
  int n = int(a.size());
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = a[i][j];
    w[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (w[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) throw std::invalid_argument("matrix is singular");
    std::swap(w[p], w[c]);
    Rational inv = Rational(1) / w[c][c];
    for (int j = 0; j < 2 * n; ++j) w[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      Rational f = w[i][c];
      for (int j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  Mat out(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& r = w[i][n + j];
      if (boost::multiprecision::denominator(r) != 1) {
        throw std::invalid_argument("matrix is not unimodular");
      }
      out[i][j] = boost::multiprecision::numerator(r).convert_to<long long>();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cones

Mat dual_gens(int n, const Mat& gens_in) {
  Mat gens;
  for (const auto& g : gens_in) {
    if (int(g.size()) != n) throw std::invalid_argument("generator has wrong length");
    if (!is_zero_row(g)) gens.push_back(g);
  }
  // lineality of the dual = everything orthogonal to the generators
  Mat nbasis = right_kernel(gens, n);
  // the span of the generators, as a saturated lattice
  Mat sbasis = right_kernel(nbasis, n);
  std::set<Vec> out;
  int r = int(sbasis.size());
  if (r > 0 && !gens.empty()) {
    // coordinates of the generators in the span basis
    Mat coords;
    for (const auto& g : gens) {
      Vec c;
      if (!solve_integer(transpose(sbasis), g, c)) {
        throw std::logic_error("generator not integral in its span basis");
      }
      coords.push_back(std::move(c));
    }
    // facet normals of the (full-dimensional) coordinate cone: normals of
    // rank r-1 subsets of generators that support the whole cone
    std::vector<int> idx(coords.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> subset;
    std::set<Vec> normals;
    auto consider = [&](const Mat& rows) {
      Mat k = right_kernel(rows, r);
      if (int(k.size()) != 1) return;
      for (int sgn : {1, -1}) {
        Vec w = k[0];
        if (sgn < 0) {
          for (auto& x : w) x = -x;
        }
        bool ok = true;
        for (const auto& c : coords) {
          if (dot(w, c) < 0) {
            ok = false;
            break;
          }
        }
        if (ok) normals.insert(primitive(w));
      }
    };
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (int(subset.size()) == r - 1) {
        Mat rows;
        for (int i : subset) rows.push_back(coords[i]);
        consider(rows);
        return;
      }
      for (std::size_t i = start; i < coords.size(); ++i) {
        subset.push_back(int(i));
        rec(i + 1);
        subset.pop_back();
      }
    };
    rec(0);
    // lift each normal back to the ambient lattice
    for (const auto& w : normals) {
      Vec m;
      if (!solve_integer(sbasis, w, m)) {
        throw std::logic_error("dual generator failed to lift integrally");
      }
      out.insert(primitive(std::move(m)));
    }
  }
  for (const auto& w : nbasis) {
    out.insert(w);
    Vec neg = w;
    for (auto& x : neg) x = -x;
    out.insert(neg);
  }
  Mat result(out.begin(), out.end());
  std::sort(result.begin(), result.end(), std::greater<Vec>());
  return result;
}

Cone::Cone(int n, Mat rays, Mat halfspaces)
    : n_(n), rays_(std::move(rays)), halfspaces_(std::move(halfspaces)) {}

Cone Cone::from_rays(int n, const Mat& gens) {
  if (n < 1) throw std::invalid_argument("ambient rank must be positive");
  Mat halfspaces = dual_gens(n, gens);
  Mat rays = dual_gens(n, halfspaces);
  return Cone(n, std::move(rays), std::move(halfspaces));
}

Cone Cone::dual() const { return Cone(n_, halfspaces_, rays_); }

int Cone::dim() const { return rank(rays_); }

Mat Cone::lineality_basis() const { return right_kernel(halfspaces_, n_); }

bool Cone::is_pointed() const { return lineality_basis().empty(); }

bool Cone::is_simplicial() const { return int(rays_.size()) == dim(); }

bool Cone::is_smooth() const {
  if (!is_pointed() || !is_simplicial()) return false;
  if (rays_.empty()) return true;
  Mat d = snf(rays_, nullptr, nullptr);
  for (std::size_t t = 0; t < rays_.size(); ++t) {
    if (d[t][t] != 1) return false;
  }
  return true;
}

bool Cone::contains(const Vec& x) const {
  for (const auto& h : halfspaces_) {
    if (dot(h, x) < 0) return false;
  }
  return true;
}

bool Cone::contains(const Cone& other) const {
  for (const auto& r : other.rays_) {
    if (!contains(r)) return false;
  }
  return true;
}

bool Cone::operator==(const Cone& other) const {
  return n_ == other.n_ && rays_ == other.rays_;
}

std::vector<Cone> Cone::faces() const {
  std::set<std::set<int>> supports;
  std::set<int> full;
  for (std::size_t i = 0; i < rays_.size(); ++i) full.insert(int(i));
  supports.insert(full);
  for (const auto& h : halfspaces_) {
    std::set<int> s;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (dot(h, rays_[i]) == 0) s.insert(int(i));
    }
    supports.insert(s);
  }
  // close under intersection
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::set<int>> cur(supports.begin(), supports.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::set<int> inter;
        std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                              cur[j].end(), std::inserter(inter, inter.begin()));
        if (supports.insert(inter).second) grew = true;
      }
    }
  }
  std::vector<Cone> out;
  for (const auto& s : supports) {
    Mat gens;
    for (int i : s) gens.push_back(rays_[i]);
    Cone f = Cone::from_rays(n_, gens);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    int da = a.dim(), db = b.dim();
    if (da != db) return da > db;
    return a.rays() < b.rays();
  });
  return out;
}

bool Cone::has_face(const Cone& f) const {
  auto fs = faces();
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument("cones live in different lattices");
  }
  Mat h = a.halfspaces();
  h.insert(h.end(), b.halfspaces().begin(), b.halfspaces().end());
  return Cone::from_rays(a.ambient(), dual_gens(a.ambient(), h));
}

// ---------------------------------------------------------------------------
// Hilbert bases

namespace {

// Hilbert basis of a pointed cone: every irreducible lattice point lies in the
// zonotope spanned by the generators, so candidates can be enumerated in the
// zonotope's bounding box and reduced against one another.
Mat hb_pointed(const Cone& c) {
  const Mat& rays = c.rays();
  int n = c.ambient();
  if (rays.empty()) return {};
  Vec lo(n, 0), hi(n, 0);
  for (const auto& r : rays) {
    for (int j = 0; j < n; ++j) {
      lo[j] += std::min(0LL, r[j]);
      hi[j] += std::max(0LL, r[j]);
    }
  }
  Mat cand;
  Vec x = lo;
  for (;;) {
    if (!is_zero_row(x) && c.contains(x)) cand.push_back(x);
    int j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }
  Mat out;
  for (const auto& v : cand) {
    bool reducible = false;
    for (const auto& w : cand) {
      if (w == v) continue;
      Vec diff(n);
      for (int j = 0; j < n; ++j) diff[j] = v[j] - w[j];
      if (is_zero_row(diff)) continue;
      if (c.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), std::greater<Vec>());
  return out;
}

}  // namespace

Mat hilbert_basis(const Cone& c) {
  int n = c.ambient();
  if (n > 4) {
    throw std::domain_error("hilbert basis is guarded to ambient rank <= 4");
  }
  Mat w = c.lineality_basis();
  if (w.empty()) return hb_pointed(c);
  int s = int(w.size());
  Mat v;
  Mat d = snf(w, nullptr, &v);
  for (int t = 0; t < s; ++t) {
    if (d[t][t] != 1) throw std::logic_error("lineality basis is not saturated");
  }
  Mat out;
  if (s < n) {
    Mat vi = inverse_unimodular(v);  // rows are a Z-basis; first s rows span w
    Mat vt = transpose(v);
    // project the generators onto the quotient by the lineality space
    Mat proj;
    for (const auto& r : c.rays()) {
      Vec a(n, 0);
      for (int i = 0; i < n; ++i) a[i] = dot(vt[i], r);
      Vec b(a.begin() + s, a.end());
      if (!is_zero_row(b)) proj.push_back(b);
    }
    Cone q = Cone::from_rays(n - s, proj);
    Mat hbq = hb_pointed(q);
    for (const auto& b : hbq) {
      Vec x(n, 0);
      for (int k = 0; k < n - s; ++k) {
        for (int j = 0; j < n; ++j) x[j] += b[k] * vi[s + k][j];
      }
      out.push_back(std::move(x));
    }
  }
  for (const auto& row : w) {
    out.push_back(row);
    Vec neg = row;
    for (auto& xj : neg) xj = -xj;
    out.push_back(std::move(neg));
  }
  std::sort(out.begin(), out.end(), std::greater<Vec>());
  return out;
}

Mat relation_lattice(const Mat& gens) {
  if (gens.empty()) return {};
  return left_kernel(gens);
}

// ---------------------------------------------------------------------------
// Fans

Fan Fan::build(int n, Mat rays, std::vector<std::vector<int>> max_cones) {
  Fan fan;
  fan.n_ = n;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (int(rays[i].size()) != n) {
      throw FanError("ray " + std::to_string(i) + " has wrong length");
    }
    if (is_zero_row(rays[i])) {
      throw FanError("ray " + std::to_string(i) + " is zero");
    }
    if (primitive(rays[i]) != rays[i]) {
      throw FanError("ray " + std::to_string(i) + " " + vec_text(rays[i]) +
                     " is not primitive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rays[j] == rays[i]) {
        throw FanError("rays " + std::to_string(j) + " and " + std::to_string(i) +
                       " coincide");
      }
    }
  }
  std::vector<Cone> mc;
  for (std::size_t ci = 0; ci < max_cones.size(); ++ci) {
    Mat gens;
    for (int ri : max_cones[ci]) {
      if (ri < 0 || ri >= int(rays.size())) {
        throw FanError("cone " + std::to_string(ci) + " references unknown ray " +
                       std::to_string(ri));
      }
      gens.push_back(rays[ri]);
    }
    Cone c = Cone::from_rays(n, gens);
    if (!c.is_pointed()) {
      throw FanError("cone " + std::to_string(ci) +
                     " is not strongly convex (contains a line)");
    }
    // every listed ray must actually be extreme in the cone it defines
    for (int ri : max_cones[ci]) {
      if (std::find(c.rays().begin(), c.rays().end(), rays[ri]) == c.rays().end()) {
        throw FanError("ray " + std::to_string(ri) + " " + vec_text(rays[ri]) +
                       " is not an extreme ray of cone " + std::to_string(ci));
      }
    }
    mc.push_back(std::move(c));
  }
  // pairwise intersections must be common faces
  for (std::size_t i = 0; i < mc.size(); ++i) {
    for (std::size_t j = i + 1; j < mc.size(); ++j) {
      Cone inter = intersect(mc[i], mc[j]);
      if (!mc[i].has_face(inter) || !mc[j].has_face(inter)) {
        throw FanError("cones " + std::to_string(i) + " and " + std::to_string(j) +
                       " overlap without a common face; intersection rays: " +
                       mat_text(inter.rays()));
      }
    }
  }
  // face closure with ray-index bookkeeping
  auto ray_index = [&](const Vec& v) {
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (rays[k] == v) return int(k);
    }
    return -1;
  };
  std::map<std::vector<int>, Cone> closure;
  for (const auto& c : mc) {
    for (const auto& f : c.faces()) {
      std::vector<int> idx;
      bool known = true;
      for (const auto& r : f.rays()) {
        int k = ray_index(r);
        if (k < 0) {
          known = false;
          break;
        }
        idx.push_back(k);
      }
      if (!known) {
        throw FanError("face with rays " + mat_text(f.rays()) +
                       " uses a ray not listed in the fan");
      }
      std::sort(idx.begin(), idx.end());
      closure.emplace(idx, f);
    }
  }
  std::vector<FaceEntry> entries;
  for (const auto& [idx, cone] : closure) {
    entries.push_back(FaceEntry{idx, cone, cone.dim()});
  }
  std::sort(entries.begin(), entries.end(), [](const FaceEntry& a, const FaceEntry& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.ray_indices < b.ray_indices;
  });
  fan.rays_ = std::move(rays);
  fan.max_cones_ = std::move(max_cones);
  fan.cones_ = std::move(entries);
  return fan;
}

int Fan::common_face(int i, int j) const {
  if (i < 0 || i >= int(cones_.size()) || j < 0 || j >= int(cones_.size())) {
    throw std::out_of_range("cone id out of range");
  }
  Cone inter = intersect(cones_[i].cone, cones_[j].cone);
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    if (cones_[k].cone == inter) return int(k);
  }
  throw FanError("intersection of cones " + std::to_string(i) + " and " +
                 std::to_string(j) + " is not a cone of the fan");
}

Fan Fan::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("rays") || !j.contains("cones")) {
    throw FanError("fan json must contain \"n\", \"rays\", and \"cones\"");
  }
  int n = j.at("n").get<int>();
  Mat rays;
  for (const auto& row : j.at("rays")) {
    rays.push_back(row.get<Vec>());
  }
  std::vector<std::vector<int>> cones;
  for (const auto& c : j.at("cones")) {
    cones.push_back(c.get<std::vector<int>>());
  }
  return build(n, std::move(rays), std::move(cones));
}

std::string Fan::to_json_text() const {
  nlohmann::json j;
  j["n"] = n_;
  j["rays"] = rays_;
  j["cones"] = max_cones_;
  return j.dump();
}

}  // namespace qtoric::fans
