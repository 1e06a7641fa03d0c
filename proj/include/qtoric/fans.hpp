#pragma once
// Lattice combinatorics: integer linear algebra, rational polyhedral cones,
// their duals and Hilbert bases, and fans with validated gluing data.
//
// Everything here is exact.  Cones are stored by a canonical minimal
// generating set (primitive extreme rays, plus a +/- basis of the lineality
// space when the cone is not pointed), ordered lexicographically descending,
// so equal cones have equal representations.  All algorithms are designed for
// desk scale (ambient rank <= 4, a handful of rays); they are simple,
// provably complete at that scale, and deterministic.

#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric::fans {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // rows

// --- exact integer / rational linear algebra -------------------------------

// Primitive representative (divide by the gcd of the entries; zero stays zero).
Vec primitive(Vec v);

Mat transpose(const Mat& a);

// Rank over the rationals.
int rank(const Mat& a);

// Row-style Hermite normal form: returns H and fills *u (if non-null) with a
// unimodular matrix such that u * a = h.  Pivots positive, entries above a
// pivot reduced into [0, pivot).
Mat hnf(const Mat& a, Mat* u = nullptr);

// Basis of {x : a x = 0} (integer right kernel; saturated), HNF-canonical.
Mat right_kernel(const Mat& a, int cols);

// Basis of {y : y^T a = 0} (integer left kernel; saturated), HNF-canonical.
Mat left_kernel(const Mat& a);

// Solves a x = b over the integers; returns false if no integral solution.
bool solve_integer(const Mat& a, const Vec& b, Vec& x);

// Smith normal form: u * a * v = d with u, v unimodular, d diagonal with
// d_1 | d_2 | ... (non-negative).  u and/or v may be null.
Mat snf(const Mat& a, Mat* u = nullptr, Mat* v = nullptr);

// Inverse of a unimodular integer matrix.
Mat inverse_unimodular(const Mat& a);

// --- cones -----------------------------------------------------------------

// Generators of the dual cone {m : <m, v> >= 0 for all v in gens} as a
// canonical minimal set.  Works for arbitrary generating sets, including
// non-pointed and lower-dimensional cones.
Mat dual_gens(int n, const Mat& gens);

class Cone {
 public:
  // Builds the cone generated by the given integer vectors (possibly
  // redundant); the stored representation is canonical.
  static Cone from_rays(int n, const Mat& gens);

  int ambient() const { return n_; }
  const Mat& rays() const { return rays_; }
  // Normals h with cone = {x : <h, x> >= 0 for all h}.
  const Mat& halfspaces() const { return halfspaces_; }
  Cone dual() const;

  int dim() const;
  bool is_pointed() const;
  bool is_simplicial() const;
  // Generated by part of a lattice basis?
  bool is_smooth() const;
  Mat lineality_basis() const;

  bool contains(const Vec& x) const;
  bool contains(const Cone& other) const;
  bool operator==(const Cone& other) const;

  // All faces (including the cone itself and its minimal face), ordered by
  // decreasing dimension, then lexicographically on the ray matrix.
  std::vector<Cone> faces() const;
  bool has_face(const Cone& f) const;

  friend Cone intersect(const Cone& a, const Cone& b);

 private:
  Cone(int n, Mat rays, Mat halfspaces);
  int n_ = 0;
  Mat rays_;        // canonical minimal generators
  Mat halfspaces_;  // canonical dual generators
};

Cone intersect(const Cone& a, const Cone& b);

// Hilbert basis of the semigroup cone ∩ Z^n: the unique minimal generating
// set for pointed cones; for cones with lineality W, the canonical choice
// (Hilbert basis of the pointed quotient, canonically lifted, plus +/- a
// basis of W).  Result sorted lexicographically descending.  Guarded to
// ambient rank <= 4.
Mat hilbert_basis(const Cone& c);

// HNF-canonical basis of {u : sum_a u_a gens_a = 0} (relations among the
// rows of gens).
Mat relation_lattice(const Mat& gens);

// --- fans ------------------------------------------------------------------

struct FanError : std::runtime_error {
  explicit FanError(const std::string& what) : std::runtime_error(what) {}
};

struct FaceEntry {
  std::vector<int> ray_indices;  // sorted indices into Fan::rays
  Cone cone;
  int dim;
};

class Fan {
 public:
  // Validates: rays primitive, nonzero, distinct; every listed cone pointed;
  // every pairwise intersection of cones is a face of both.  Throws FanError
  // with a witness description otherwise.
  static Fan build(int n, Mat rays, std::vector<std::vector<int>> max_cones);
  static Fan from_json_text(const std::string& text);

  int ambient() const { return n_; }
  const Mat& rays() const { return rays_; }
  const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }
  // Face closure in deterministic order (dim descending, then ray index
  // lists lexicographically); the id of a cone is its position here.
  const std::vector<FaceEntry>& cones() const { return cones_; }
  // Id of the face closure entry equal to the intersection of cones() [i]
  // and [j].
  int common_face(int i, int j) const;
  std::string to_json_text() const;

 private:
  Fan() = default;
  int n_ = 0;
  Mat rays_;
  std::vector<std::vector<int>> max_cones_;
  std::vector<FaceEntry> cones_;
};

}  // namespace qtoric::fans
