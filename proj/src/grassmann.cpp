#include "qtoric/grassmann.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qtoric::grassmann {

using scalars::PairExp;
using scalars::PhaseScalar;

Tuple standard_rows(int d) {
  Tuple rows;
  for (int r = 1; r <= d; ++r) rows.push_back(r);
  return rows;
}

namespace {

// Accumulate q_ij^e into a canonical exponent vector (keys i < j).
void add_unit(PairExp& ex, int i, int j, long long e) {
  if (i == j || e == 0) return;
  auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
  long long v = ex[key] + (i < j ? e : -e);
  if (v == 0)
    ex.erase(key);
  else
    ex[key] = v;
}

std::string tuple_text(const Tuple& t) {
  std::ostringstream os;
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (a) os << ',';
    os << t[a];
  }
  return os.str();
}

std::string minor_name(const Tuple& J, int n) {
  std::ostringstream os;
  os << 'L';
  if (n <= 9) {
    for (int j : J) os << j;
  } else {
    os << '[' << tuple_text(J) << ']';
  }
  return os.str();
}

fans::Vec indicator(const Tuple& J, int n) {
  fans::Vec v(std::size_t(n), 0);
  for (int j : J) v[std::size_t(j - 1)] += 1;
  return v;
}

}  // namespace

PhaseScalar theta_capital_phase(const Tuple& J, const Tuple& Jp) {
  PairExp ex;
  for (int a : J)
    for (int b : Jp) add_unit(ex, a, b, 1);
  return PhaseScalar::monomial(ex);
}

double theta_capital_numeric(const scalars::ThetaSpec& theta, const Tuple& J,
                             const Tuple& Jp) {
  double s = 0.0;
  for (int a : J)
    for (int b : Jp) s += theta.theta(a, b).real();
  return s;
}

std::string relation_class_name(RelationClass c) {
  switch (c) {
    case RelationClass::trivial: return "trivial";
    case RelationClass::alternating: return "alternating";
    case RelationClass::structure: return "structure";
    case RelationClass::pluecker: return "pluecker";
  }
  return "?";
}

YoungRelation young_structure(const Tuple& I, const Tuple& J, int d, int dp) {
  if (int(I.size()) != d + 1 || int(J.size()) != dp - 1)
    throw std::invalid_argument("young_structure: |I| != d+1 or |J| != d'-1");
  YoungRelation rel;
  rel.I = I;
  rel.J = J;
  rel.d = d;
  rel.dp = dp;
  for (int g = 1; g <= d + 1; ++g) {
    Tuple Ig = qmatrix::erase_pos(I, g);
    Tuple igJ;
    igJ.push_back(I[std::size_t(g - 1)]);
    igJ.insert(igJ.end(), J.begin(), J.end());
    if (qmatrix::tuple_sign(Ig) == 0 || qmatrix::tuple_sign(igJ) == 0) continue;
    rel.survivors.push_back(g);
    rel.coords.emplace_back(Ig, igJ);
  }
  return rel;
}

RelationClass classify(const YoungRelation& rel) {
  if (rel.survivors.size() < 2) return RelationClass::trivial;
  if (rel.survivors.size() >= 3) return RelationClass::pluecker;
  auto set_pair = [](const std::pair<Tuple, Tuple>& c) {
    Tuple s1 = c.first, s2 = c.second;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    return std::make_pair(s1, s2);
  };
  return set_pair(rel.coords[0]) == set_pair(rel.coords[1])
             ? RelationClass::alternating
             : RelationClass::structure;
}

EmbeddingResult embedding_compatible(const std::vector<std::vector<double>>& Theta,
                                     int d, int n, double tol) {
  auto subs = qmatrix::increasing_tuples(d, n);
  const int N = int(subs.size());
  if (int(Theta.size()) != N)
    throw std::invalid_argument("embedding_compatible: Theta must be C(n,d) square");
  for (const auto& row : Theta)
    if (int(row.size()) != N)
      throw std::invalid_argument("embedding_compatible: Theta must be C(n,d) square");

  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  auto col_of = [&](int i, int j) {
    // i < j assumed
    int c = 0;
    for (const auto& [a, b] : pairs) {
      if (a == i && b == j) return c;
      ++c;
    }
    return -1;
  };

  const int m = int(pairs.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N * N, m);
  Eigen::VectorXd rhs(N * N);
  for (int P = 0; P < N; ++P)
    for (int Q = 0; Q < N; ++Q) {
      int r = P * N + Q;
      rhs(r) = Theta[std::size_t(P)][std::size_t(Q)];
      for (int i : subs[std::size_t(P)])
        for (int j : subs[std::size_t(Q)]) {
          if (i < j)
            M(r, col_of(i, j)) += 1.0;
          else if (i > j)
            M(r, col_of(j, i)) -= 1.0;
        }
    }

  Eigen::VectorXd x =
      M.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  Eigen::VectorXd res = M * x - rhs;

  EmbeddingResult out;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (int r = 0; r < N * N; ++r) {
    double mr = std::abs(std::remainder(res(r), two_pi));
    if (mr > out.residual) {
      out.residual = mr;
      out.witness = {r / N, r % N};
    }
  }
  if (out.residual <= tol) {
    std::vector<std::complex<double>> entries(std::size_t(n) * std::size_t(n),
                                              {0.0, 0.0});
    for (int c = 0; c < m; ++c) {
      auto [i, j] = pairs[std::size_t(c)];
      entries[std::size_t(i - 1) * std::size_t(n) + std::size_t(j - 1)] = x(c);
      entries[std::size_t(j - 1) * std::size_t(n) + std::size_t(i - 1)] = -x(c);
    }
    out.theta = scalars::ThetaSpec::numeric(n, std::move(entries));
    out.witness = {-1, -1};
  }
  return out;
}

namespace {

// Pluecker-class Young relations over increasing multi-indices, rendered on
// the given generator index lookup.  Sorting a surviving term's column
// listings onto increasing generators changes nothing: the averaged minor
// depends only on the index set.
template <class Lookup>
std::vector<presentation::PolyRelation> pluecker_relations(int d, int dp, int n,
                                                           Lookup&& gen_index) {
  std::vector<presentation::PolyRelation> rels;
  for (const Tuple& I : qmatrix::increasing_tuples(d + 1, n)) {
    for (const Tuple& J : qmatrix::increasing_tuples(dp - 1, n)) {
      YoungRelation rel = young_structure(I, J, d, dp);
      if (classify(rel) != RelationClass::pluecker) continue;
      presentation::PolyRelation pr;
      pr.label = "young[" + tuple_text(I) + "|" + tuple_text(J) + "]";
      for (std::size_t s = 0; s < rel.survivors.size(); ++s) {
        int g = rel.survivors[s];
        int ig = I[std::size_t(g - 1)];
        const auto& [Ig, igJ] = rel.coords[s];
        PairExp ex;
        for (int m = 0; m < d; ++m) add_unit(ex, ig, Ig[std::size_t(m)], 1);
        for (int v = 0; v < dp - 1; ++v) add_unit(ex, ig, J[std::size_t(v)], 1);
        // listing the sorted generator costs the permutation sign
        int sign = (g % 2 == 1 ? 1 : -1) * qmatrix::tuple_sign(igJ);
        PhaseScalar coeff = PhaseScalar::monomial(ex, scalars::Rational(sign));
        Tuple igJ_sorted = igJ;
        std::sort(igJ_sorted.begin(), igJ_sorted.end());
        pr.terms.emplace_back(coeff, std::vector<int>{gen_index(d, Ig),
                                                      gen_index(dp, igJ_sorted)});
      }
      rels.push_back(std::move(pr));
    }
  }
  return rels;
}

}  // namespace

presentation::AlgebraPresentation grassmannian_algebra(int d, int n) {
  if (d < 1 || d >= n)
    throw std::invalid_argument("grassmannian_algebra: need 1 <= d < n");
  presentation::AlgebraPresentation p;
  {
    std::ostringstream os;
    os << "Gr(" << d << ";" << n << ")";
    p.title = os.str();
  }
  auto subs = qmatrix::increasing_tuples(d, n);
  std::map<Tuple, int> index;
  for (const Tuple& J : subs) {
    index[J] = int(p.generators.size());
    p.generators.push_back({minor_name(J, n), indicator(J, n)});
  }
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = a + 1; b < subs.size(); ++b)
      p.commutation.push_back(
          {int(a), int(b), theta_capital_phase(subs[a], subs[b]).pow(2)});
  auto gen_index = [&](int, const Tuple& J) { return index.at(J); };
  p.relations = pluecker_relations(d, d, n, gen_index);
  p.notes.push_back("coordinates are the d x d minors with rows 1.." +
                    std::to_string(d));
  return p;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      cur.push_back(part);
      self(self, rest - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

presentation::AlgebraPresentation flag_algebra(const std::vector<int>& gamma, int n) {
  int sum = 0;
  for (int part : gamma) {
    if (part < 1) throw std::invalid_argument("flag_algebra: parts must be >= 1");
    sum += part;
  }
  if (sum != n) throw std::invalid_argument("flag_algebra: parts must sum to n");

  presentation::AlgebraPresentation p;
  {
    std::ostringstream os;
    os << "Fl(";
    for (std::size_t a = 0; a < gamma.size(); ++a) {
      if (a) os << ',';
      os << gamma[a];
    }
    os << ";" << n << ")";
    p.title = os.str();
  }

  std::vector<int> sizes;
  int acc = 0;
  for (std::size_t a = 0; a + 1 < gamma.size(); ++a) {
    acc += gamma[a];
    sizes.push_back(acc);
  }
  if (sizes.empty()) {
    p.notes.push_back("no proper subspace sizes; the flag variety is a point");
    return p;
  }

  std::map<std::pair<int, Tuple>, int> index;
  std::vector<std::pair<int, Tuple>> gens;  // (size, columns), listing order
  for (int d : sizes)
    for (const Tuple& J : qmatrix::increasing_tuples(d, n)) {
      index[{d, J}] = int(p.generators.size());
      gens.emplace_back(d, J);
      p.generators.push_back({minor_name(J, n), indicator(J, n)});
    }

  scalars::ExactCtx exact;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const auto& [da, Ja] = gens[a];
      const auto& [db, Jb] = gens[b];
      PhaseScalar r = qmatrix::r_coeff(exact, standard_rows(da), Ja,
                                       standard_rows(db), Jb);
      p.commutation.push_back({int(a), int(b), r.pow(2)});
    }

  auto gen_index = [&](int d, const Tuple& J) { return index.at({d, J}); };
  for (int d : sizes)
    for (int dp : sizes) {
      if (d < dp) continue;
      auto rels = pluecker_relations(d, dp, n, gen_index);
      p.relations.insert(p.relations.end(), rels.begin(), rels.end());
    }

  for (int d : sizes)
    p.notes.push_back("truncation to size " + std::to_string(d) +
                      " recovers the grassmannian of " + std::to_string(d) +
                      "-planes");
  return p;
}

std::vector<TautRelation> taut_section_relations(int d, int n) {
  std::vector<TautRelation> out;
  for (const Tuple& J : qmatrix::increasing_tuples(d + 1, n)) {
    TautRelation rel;
    rel.J = J;
    for (int a = 1; a <= d + 1; ++a) {
      TautTerm t;
      t.sign = (a % 2 == 0) ? 1 : -1;  // (-1)^a
      t.minor_cols = qmatrix::erase_pos(J, a);
      t.w_index = J[std::size_t(a - 1)];
      for (int b = 0; b < d; ++b)
        add_unit(t.phase, t.w_index, t.minor_cols[std::size_t(b)], 1);
      rel.terms.push_back(std::move(t));
    }
    out.push_back(std::move(rel));
  }
  return out;
}

bool eta_weights_ok(int n, int d) {
  scalars::ExactCtx exact;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto e = eta(exact, n, d, i, j);
      for (const auto& [w, c] : e.terms) {
        for (int a = 1; a <= n; ++a) {
          long long weight = w.det_pow;
          for (const auto& [row, col] : w.letters)
            if (col == a) ++weight;
          long long expected = (a == j ? 1 : 0) - (a == i ? 1 : 0);
          if (weight != expected) return false;
        }
      }
    }
  return true;
}

}  // namespace qtoric::grassmann
