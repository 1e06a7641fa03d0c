// Verification suites: each suite enumerates a family of algebraic
// identities from one module, evaluates every defect, and aggregates the
// outcomes into a VerificationReport.  Suites are pure library calls — the
// CLI adds argument parsing and nothing else.
//
// Two evaluation modes share one code path.  Symbolic mode works over the
// exact phase ring, where an identity holds iff its defect is the zero
// element.  Numeric mode (a numeric theta supplied) evaluates the same
// defects as complex numbers and demands max |Delta| < kNumericTol; it is
// an independent cross-check because specialization replaces the exact
// unit bookkeeping with floating-point exponentials.
//
// Determinism: items are generated in a fixed enumeration order, randomness
// is seeded per item, and workers write results into pre-assigned slots, so
// a report's bytes depend only on its configuration — never on --jobs or
// scheduling.

#include "qtoric/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtoric/fans.hpp"
#include "qtoric/grassmann.hpp"
#include "qtoric/presentation.hpp"
#include "qtoric/projective.hpp"
#include "qtoric/qmatrix.hpp"
#include "qtoric/scalars.hpp"
#include "qtoric/torus.hpp"

namespace qtoric::suites {

namespace qm = qtoric::qmatrix;
namespace gr = qtoric::grassmann;
namespace pj = qtoric::projective;

using qtoric::fans::Cone;
using qtoric::fans::Mat;
using qtoric::fans::Vec;
using qtoric::qmatrix::Element;
using qtoric::qmatrix::Side;
using qtoric::qmatrix::Tuple;
using qtoric::scalars::ExactCtx;
using qtoric::scalars::NumericCtx;
using qtoric::scalars::PhaseScalar;
using qtoric::scalars::ThetaSpec;

namespace {

// ---------------------------------------------------------------------------
// small utilities

std::string fmt_delta(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "max|Delta| = %.3e", v);
  return buf;
}

std::string tup_id(const Tuple& t) {
  std::string s;
  for (int v : t) s += std::to_string(v);
  return s.empty() ? "-" : s;
}

std::string vec_id(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Non-decreasing tuples of the given length with entries in 1..n (length 0
// gives the single empty tuple).
std::vector<Tuple> nondecreasing_tuples(int len, int n) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(int)> rec = [&](int lo) {
    if (int(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// ---------------------------------------------------------------------------
// work items and the pool

struct Task {
  std::string id;
  std::function<IdentityResult(const std::string&)> run;
};

std::vector<IdentityResult> run_pool(const std::vector<Task>& tasks, int jobs) {
  std::vector<IdentityResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      try {
        out[i] = tasks[i].run(tasks[i].id);
      } catch (const std::exception& e) {
        out[i] = IdentityResult{tasks[i].id, false, std::string("exception: ") + e.what()};
      }
    }
  };
  int nw = std::max(1, jobs);
  if (!tasks.empty()) nw = std::min<int>(nw, int(tasks.size()));
  if (nw <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(nw - 1));
    for (int i = 0; i + 1 < nw; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  return out;
}

// ---------------------------------------------------------------------------
// defect accumulators

// Accumulates Element-level defects under a phase context.
template <class Ctx>
struct Acc {
  Ctx ctx;
  bool numeric = false;
  bool ok = true;
  double worst = 0.0;
  std::string note;

  void elem(const std::string& what, const Element<Ctx>& defect) {
    double r = qm::residual(ctx, defect);
    worst = std::max(worst, r);
    bool pass = numeric ? (r < kNumericTol) : defect.is_zero();
    if (!pass && ok) {
      ok = false;
      note = what;
    }
  }
  void scalar(const std::string& what, const typename Ctx::value_type& lhs,
              const typename Ctx::value_type& rhs) {
    double r = ctx.residual(lhs - rhs);
    worst = std::max(worst, r);
    bool pass = numeric ? (r < kNumericTol) : (r == 0.0);
    if (!pass && ok) {
      ok = false;
      note = what;
    }
  }
  void flag(const std::string& what, bool pass) {
    if (!pass) worst = std::max(worst, 1.0);
    if (!pass && ok) {
      ok = false;
      note = what;
    }
  }
  IdentityResult done(const std::string& id) const {
    IdentityResult r;
    r.id = id;
    r.pass = ok;
    if (numeric) {
      r.witness = fmt_delta(worst);
      if (!ok && !note.empty()) r.witness += "; first failure: " + note;
    } else if (!ok) {
      r.witness = note;
    }
    return r;
  }
};

// Accumulates defects expressed as exact PhaseScalar / torus-level objects,
// evaluated numerically when a theta is present.
struct PAcc {
  const ThetaSpec* th = nullptr;  // nullptr = symbolic mode
  bool ok = true;
  double worst = 0.0;
  std::string note;

  void fail(const std::string& what) {
    worst = std::max(worst, 1.0);
    if (ok) {
      ok = false;
      note = what;
    }
  }
  void record(const std::string& what, bool exact_zero, double num_res) {
    worst = std::max(worst, num_res);
    bool pass = th ? (num_res < kNumericTol) : exact_zero;
    if (!pass && ok) {
      ok = false;
      note = what;
    }
  }
  double phase_res(const PhaseScalar& d) const {
    if (!th) return 0.0;
    return std::abs(d.specialize(*th));
  }
  void phase_zero(const std::string& what, const PhaseScalar& d) {
    record(what, d.is_zero(), phase_res(d));
  }
  void phase_eq(const std::string& what, const PhaseScalar& a, const PhaseScalar& b) {
    phase_zero(what, a - b);
  }
  void complex_eq(const std::string& what, std::complex<double> a, std::complex<double> b) {
    double r = std::abs(a - b);
    worst = std::max(worst, r);
    if (r >= kNumericTol && ok) {
      ok = false;
      note = what;
    }
  }
  void laurent_zero(const std::string& what, const torus::LaurentElement& e) {
    double r = 0.0;
    if (th)
      for (const auto& [p, c] : e.terms()) r = std::max(r, std::abs(c.specialize(*th)));
    record(what, e.is_zero(), r);
  }
  void omega_zero(const std::string& what, const torus::OmegaElement& w) {
    double r = 0.0;
    if (th)
      for (const auto& [key, c] : w.terms) r = std::max(r, std::abs(c.specialize(*th)));
    record(what, w.is_zero(), r);
  }
  void flag(const std::string& what, bool pass) {
    if (!pass) fail(what);
  }
  IdentityResult done(const std::string& id) const {
    IdentityResult r;
    r.id = id;
    r.pass = ok;
    if (th) {
      r.witness = fmt_delta(worst);
      if (!ok && !note.empty()) r.witness += "; first failure: " + note;
    } else if (!ok) {
      r.witness = note;
    }
    return r;
  }
};

// ---------------------------------------------------------------------------
// configuration helpers

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

// Effective single n: --n if given, else theta's rank, else def; range-checked.
int pick_n(const RunConfig& cfg, int def, int lo, int hi, const char* suite) {
  int n = cfg.n;
  if (cfg.theta) {
    if (n != 0 && n != cfg.theta->n())
      bad(std::string(suite) + ": --n disagrees with the rank of the supplied theta");
    n = cfg.theta->n();
  }
  if (n == 0) n = def;
  if (n < lo || n > hi)
    bad(std::string(suite) + ": n must lie in [" + std::to_string(lo) + "," +
        std::to_string(hi) + "], got " + std::to_string(n));
  return n;
}

// Effective n range for suites that sweep n by default.
std::vector<int> pick_ns(const RunConfig& cfg, int def_lo, int def_hi, int lo, int hi,
                         const char* suite) {
  if (cfg.n != 0 || cfg.theta) return {pick_n(cfg, def_lo, lo, hi, suite)};
  std::vector<int> ns;
  for (int n = def_lo; n <= def_hi; ++n) ns.push_back(n);
  return ns;
}

std::string range_text(const std::vector<int>& ns) {
  if (ns.size() == 1) return std::to_string(ns.front());
  return std::to_string(ns.front()) + ".." + std::to_string(ns.back());
}

// ---------------------------------------------------------------------------
// star-assoc: associativity of the deformed character product

using NLaur = std::map<Vec, std::complex<double>>;

NLaur to_numeric(const ThetaSpec& th, const torus::LaurentElement& e) {
  NLaur out;
  for (const auto& [p, c] : e.terms()) out[p] += c.specialize(th);
  return out;
}

NLaur nstar(const ThetaSpec& th, const NLaur& a, const NLaur& b) {
  NLaur out;
  for (const auto& [p, cp] : a)
    for (const auto& [q, cq] : b) {
      Vec s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      out[s] += cp * cq * torus::star_phase_numeric(th, p, q);
    }
  return out;
}

double nlaur_diff(const NLaur& a, const NLaur& b) {
  double r = 0.0;
  std::set<Vec> keys;
  for (const auto& [k, v] : a) keys.insert(k);
  for (const auto& [k, v] : b) keys.insert(k);
  for (const Vec& k : keys) {
    auto ia = a.find(k);
    auto ib = b.find(k);
    std::complex<double> va = ia == a.end() ? 0.0 : ia->second;
    std::complex<double> vb = ib == b.end() ? 0.0 : ib->second;
    r = std::max(r, std::abs(va - vb));
  }
  return r;
}

torus::LaurentElement random_laurent(std::mt19937_64& rng, int n, int terms) {
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> uexp(-2, 2);
  torus::LaurentElement e(n);
  for (int t = 0; t < terms; ++t) {
    Vec p(std::size_t(n), 0);
    for (auto& v : p) v = expo(rng);
    int nu = num(rng);
    if (nu == 0) nu = 1;
    PhaseScalar c = PhaseScalar::from_rational(scalars::Rational(nu, den(rng)));
    if (n >= 2) {
      std::uniform_int_distribution<int> idx(1, n);
      int i = idx(rng), j = idx(rng);
      if (i != j) c = c * PhaseScalar::unit(std::min(i, j), std::max(i, j), uexp(rng));
    }
    e += torus::LaurentElement::monomial(n, p, c);
  }
  return e;
}

void build_star_assoc(const RunConfig& cfg, std::map<std::string, std::string>& params,
                      std::vector<Task>& tasks) {
  const int n = pick_n(cfg, 3, 1, 6, "star-assoc");
  const int trials = 100;
  params["n"] = std::to_string(n);
  params["trials"] = std::to_string(trials);
  const std::optional<ThetaSpec> th = cfg.theta;
  for (int t = 0; t < trials; ++t) {
    char name[32];
    std::snprintf(name, sizeof name, "star-assoc/trial%02d", t);
    tasks.push_back({name, [n, t, th](const std::string& id) {
                       std::mt19937_64 rng(0x51A2ull + 7919ull * std::uint64_t(t) +
                                           std::uint64_t(n));
                       torus::LaurentElement a = random_laurent(rng, n, 3);
                       torus::LaurentElement b = random_laurent(rng, n, 3);
                       torus::LaurentElement c = random_laurent(rng, n, 3);
                       torus::LaurentElement lhs = torus::star(torus::star(a, b), c);
                       torus::LaurentElement rhs = torus::star(a, torus::star(b, c));
                       PAcc acc;
                       acc.th = th ? &*th : nullptr;
                       acc.laurent_zero("(a*b)*c - a*(b*c)", lhs - rhs);
                       if (th) {
                         // Independent evaluation: multiply numerically and
                         // compare against the specialized exact product.
                         NLaur na = to_numeric(*th, a), nb = to_numeric(*th, b),
                               nc = to_numeric(*th, c);
                         NLaur nl = nstar(*th, nstar(*th, na, nb), nc);
                         NLaur nr = nstar(*th, na, nstar(*th, nb, nc));
                         double d = nlaur_diff(nl, nr);
                         d = std::max(d, nlaur_diff(nl, to_numeric(*th, lhs)));
                         acc.worst = std::max(acc.worst, d);
                         if (d >= kNumericTol) acc.fail("numeric product disagrees");
                       }
                       return acc.done(id);
                     }});
  }
}

// ---------------------------------------------------------------------------
// det: determinant Leibniz forms, permutability, centrality

template <class Ctx>
void build_det(const Ctx& ctx, bool numeric, const std::vector<int>& ns,
               std::vector<Task>& tasks) {
  for (int n : ns) {
    Tuple full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    tasks.push_back({"det/qdet-vs-averaged/n" + std::to_string(n),
                     [ctx, numeric, n, full](const std::string& id) {
                       Acc<Ctx> acc{ctx, numeric};
                       acc.elem("qdet - averaged minor",
                                qm::sub(ctx, qm::qdet(ctx, n), qm::minor(ctx, full, full)));
                       return acc.done(id);
                     }});
    tasks.push_back({"det/qdet-vs-row-leibniz/n" + std::to_string(n),
                     [ctx, numeric, n, full](const std::string& id) {
                       Acc<Ctx> acc{ctx, numeric};
                       acc.elem("qdet - row-ordered Leibniz",
                                qm::sub(ctx, qm::qdet(ctx, n),
                                        qm::minor_row_leibniz(ctx, full, full)));
                       return acc.done(id);
                     }});
    tasks.push_back({"det/qdet-vs-col-leibniz/n" + std::to_string(n),
                     [ctx, numeric, n, full](const std::string& id) {
                       Acc<Ctx> acc{ctx, numeric};
                       acc.elem("qdet - column-ordered Leibniz",
                                qm::sub(ctx, qm::qdet(ctx, n),
                                        qm::minor_col_leibniz(ctx, full, full)));
                       return acc.done(id);
                     }});
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        std::string id = "det/permutability/n" + std::to_string(n) + "/g" +
                         std::to_string(k) + std::to_string(l);
        tasks.push_back({id, [ctx, numeric, n, k, l](const std::string& tid) {
                           Acc<Ctx> acc{ctx, numeric};
                           acc.elem("det g - phase g det",
                                    qm::permutability_defect(ctx, n, k, l));
                           return acc.done(tid);
                         }});
      }
  }
}

void build_det_centrality(const ThetaSpec& th, int n, std::vector<Task>& tasks) {
  tasks.push_back(
      {"det/centrality", [th, n](const std::string& id) {
         NumericCtx ctx{th};
         Element<NumericCtx> det = qm::qdet(ctx, n);
         double worst = 0.0;
         for (int k = 1; k <= n; ++k)
           for (int l = 1; l <= n; ++l) {
             Element<NumericCtx> g = qm::monomial(ctx, {{k, l}}, ctx.one());
             Element<NumericCtx> comm =
                 qm::sub(ctx, qm::mul(ctx, n, det, g), qm::mul(ctx, n, g, det));
             worst = std::max(worst, qm::residual(ctx, comm));
           }
         bool commutes = worst < kNumericTol;
         bool predicted = qm::centrality_condition(th, kNumericTol);
         IdentityResult r;
         r.id = id;
         r.pass = commutes == predicted;
         char buf[96];
         std::snprintf(buf, sizeof buf, "commutators %s (max %.3e), column-sum condition %s",
                       commutes ? "vanish" : "do not vanish", worst,
                       predicted ? "holds" : "fails");
         r.witness = buf;
         return r;
       }});
}

// ---------------------------------------------------------------------------
// laplace: row/column expansions against the averaged minor

template <class Ctx>
void build_laplace(const Ctx& ctx, bool numeric, const std::vector<int>& ns,
                   const std::vector<int>& ds, std::vector<Task>& tasks) {
  for (int n : ns)
    for (int d : ds) {
      if (d > n) continue;
      for (const Tuple& I : qm::increasing_tuples(d, n))
        for (const Tuple& J : qm::increasing_tuples(d, n)) {
          std::string id = "laplace/n" + std::to_string(n) + "/d" + std::to_string(d) +
                           "/I" + tup_id(I) + "J" + tup_id(J);
          tasks.push_back({id, [ctx, numeric, n, d, I, J](const std::string& tid) {
                             Acc<Ctx> acc{ctx, numeric};
                             Element<Ctx> ref = qm::minor(ctx, I, J);
                             for (int k = 1; k <= d; ++k)
                               for (Side s : {Side::left, Side::right}) {
                                 const char* sn = s == Side::left ? "left" : "right";
                                 acc.elem("row expansion k=" + std::to_string(k) + " " + sn,
                                          qm::sub(ctx, qm::laplace_row(ctx, n, I, J, k, s), ref));
                                 acc.elem("column expansion k=" + std::to_string(k) + " " + sn,
                                          qm::sub(ctx, qm::laplace_col(ctx, n, I, J, k, s), ref));
                               }
                             return acc.done(tid);
                           }});
        }
    }
}

// ---------------------------------------------------------------------------
// minors: commutation defects and the ambient antisymmetric phase

template <class Ctx>
void build_minors(const Ctx& ctx, bool numeric, const ThetaSpec* th, int n,
                  const std::vector<int>& sizes, std::vector<Task>& tasks) {
  for (int d : sizes)
    for (int dp : sizes)
      for (const Tuple& I : qm::increasing_tuples(d, n)) {
        std::string id = "minors/exchange/d" + std::to_string(d) + "dp" +
                         std::to_string(dp) + "/I" + tup_id(I);
        tasks.push_back({id, [ctx, numeric, n, d, dp, I](const std::string& tid) {
                           Acc<Ctx> acc{ctx, numeric};
                           for (const Tuple& J : qm::increasing_tuples(d, n))
                             for (const Tuple& Ip : qm::increasing_tuples(dp, n))
                               for (const Tuple& Jp : qm::increasing_tuples(dp, n))
                                 acc.elem("J" + tup_id(J) + " Ip" + tup_id(Ip) + " Jp" +
                                              tup_id(Jp),
                                          qm::minor_commutation_defect(ctx, n, I, J, Ip, Jp));
                           return acc.done(tid);
                         }});
      }
  // The exchange coefficient of two column minors on the standard rows is
  // the antisymmetric pairing of their column sets; its square specializes
  // to exp(i * Theta-sum).
  Tuple rows = gr::standard_rows(2);
  const ThetaSpec* thp = th;
  for (const Tuple& A : qm::increasing_tuples(2, n))
    for (const Tuple& B : qm::increasing_tuples(2, n)) {
      std::string id = "minors/ambient-phase/J" + tup_id(A) + "Jp" + tup_id(B);
      tasks.push_back({id, [ctx, numeric, thp, rows, A, B](const std::string& tid) {
                         Acc<Ctx> acc{ctx, numeric};
                         auto lhs = qm::r_coeff(ctx, rows, A, rows, B);
                         Element<Ctx> phase_elem;  // compare as context scalars
                         if constexpr (std::is_same_v<Ctx, ExactCtx>) {
                           acc.scalar("r-coefficient vs column pairing", lhs,
                                      gr::theta_capital_phase(A, B));
                         } else {
                           acc.scalar("r-coefficient vs column pairing", lhs,
                                      gr::theta_capital_phase(A, B).specialize(acc.ctx.theta));
                         }
                         (void)phase_elem;
                         if (thp) {
                           std::complex<double> sq =
                               gr::theta_capital_phase(A, B).pow(2).specialize(*thp);
                           double s = gr::theta_capital_numeric(*thp, A, B);
                           double r = std::abs(sq - std::exp(std::complex<double>(0.0, s)));
                           acc.worst = std::max(acc.worst, r);
                           if (r >= kNumericTol) acc.flag("squared phase vs pairing sum", false);
                         }
                         return acc.done(tid);
                       }});
    }
}

// ---------------------------------------------------------------------------
// pluecker / young: quadratic relation expansions

template <class Ctx>
void build_young_family(const Ctx& ctx, bool numeric, const char* suite, int n, int d, int dp,
                        bool increasing_only, std::vector<Task>& tasks) {
  std::vector<Tuple> Is =
      increasing_only ? qm::increasing_tuples(d + 1, n) : nondecreasing_tuples(d + 1, n);
  std::vector<Tuple> Js = nondecreasing_tuples(dp - 1, n);
  for (const Tuple& I : Is) {
    std::string id = std::string(suite) + "/d" + std::to_string(d);
    if (dp != d) id += "dp" + std::to_string(dp);
    id += "n" + std::to_string(n) + "/I" + tup_id(I);
    tasks.push_back({id, [ctx, numeric, n, d, dp, I, Js](const std::string& tid) {
                       Acc<Ctx> acc{ctx, numeric};
                       for (const Tuple& J : Js)
                         acc.elem("J" + tup_id(J),
                                  gr::young_expansion(ctx, n, I, J, d, dp));
                       return acc.done(tid);
                     }});
  }
}

// ---------------------------------------------------------------------------
// classify: relation taxonomy at the 2;4 grassmannian

template <class Ctx>
void build_classify(const Ctx& ctx, bool numeric, std::vector<Task>& tasks) {
  const int n = 4, d = 2;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        Tuple I{a, b, c};
        std::string id = "classify/I" + tup_id(I);
        tasks.push_back({id, [ctx, numeric, n, d, I](const std::string& tid) {
                           Acc<Ctx> acc{ctx, numeric};
                           for (int j = 1; j <= n; ++j) {
                             Tuple J{j};
                             gr::YoungRelation rel = gr::young_structure(I, J, d, d);
                             gr::RelationClass cls = gr::classify(rel);
                             std::string at = "J" + tup_id(J) + " ";
                             acc.flag(at + "single surviving term",
                                      rel.survivors.size() != 1);
                             acc.elem(at + "expansion", gr::young_expansion(ctx, n, I, J, d, d));
                             // Repeats in the listing are what produces the
                             // alternating class.
                             bool repeat = I[0] == I[1] || I[1] == I[2] || I[0] == I[2];
                             if (cls == gr::RelationClass::alternating)
                               acc.flag(at + "alternating without repeated index", repeat);
                             bool incr = I[0] < I[1] && I[1] < I[2];
                             if (incr) {
                               int k = int(std::count(I.begin(), I.end(), j));
                               gr::RelationClass want = k == 1 ? gr::RelationClass::structure
                                                               : gr::RelationClass::pluecker;
                               acc.flag(at + "class determined by overlap", cls == want);
                             }
                             // Two-term structure relations pair same-size
                             // minors whose labels differ in one index.
                             if (cls == gr::RelationClass::structure &&
                                 rel.coords.size() == 2) {
                               auto diff_one = [](Tuple x, Tuple y) {
                                 std::sort(x.begin(), x.end());
                                 std::sort(y.begin(), y.end());
                                 if (x.size() != y.size()) return false;
                                 Tuple sx, sy;
                                 std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                                                     std::back_inserter(sx));
                                 std::set_difference(y.begin(), y.end(), x.begin(), x.end(),
                                                     std::back_inserter(sy));
                                 return sx.size() == 1 && sy.size() == 1;
                               };
                               const auto& [l0, r0] = rel.coords[0];
                               const auto& [l1, r1] = rel.coords[1];
                               acc.flag(at + "structure pair sizes",
                                        l0.size() == l1.size() && r0.size() == r1.size());
                               acc.flag(at + "structure pair one-index difference",
                                        diff_one(l0, l1) && diff_one(r0, r1));
                             }
                           }
                           return acc.done(tid);
                         }});
      }
  // Distribution sanity: all four classes occur over the full enumeration.
  tasks.push_back({"classify/all-classes-occur", [](const std::string& tid) {
                     int counts[4] = {0, 0, 0, 0};
                     for (int a = 1; a <= 4; ++a)
                       for (int b = 1; b <= 4; ++b)
                         for (int c = 1; c <= 4; ++c)
                           for (int j = 1; j <= 4; ++j) {
                             gr::YoungRelation rel =
                                 gr::young_structure({a, b, c}, {j}, 2, 2);
                             counts[int(gr::classify(rel))]++;
                           }
                     IdentityResult r;
                     r.id = tid;
                     r.pass = counts[0] > 0 && counts[1] > 0 && counts[2] > 0 && counts[3] > 0;
                     std::ostringstream os;
                     os << "trivial=" << counts[int(gr::RelationClass::trivial)]
                        << " alternating=" << counts[int(gr::RelationClass::alternating)]
                        << " structure=" << counts[int(gr::RelationClass::structure)]
                        << " pluecker=" << counts[int(gr::RelationClass::pluecker)];
                     r.witness = os.str();
                     return r;
                   }});
}

// ---------------------------------------------------------------------------
// eta: coinvariant projector identities

template <class Ctx>
void build_eta(const Ctx& ctx, bool numeric, const std::vector<std::pair<int, int>>& pairs,
               std::vector<Task>& tasks) {
  // Antipode orthogonality depends on n alone; emit once per distinct n.
  std::set<int> ns;
  for (auto [d, n] : pairs) ns.insert(n);
  for (int n : ns)
    for (Side side : {Side::left, Side::right})
      for (int i = 1; i <= n; ++i) {
        const char* sn = side == Side::left ? "left" : "right";
        std::string id =
            "eta/antipode-" + std::string(sn) + "/n" + std::to_string(n) + "/i" + std::to_string(i);
        tasks.push_back({id, [ctx, numeric, n, side, i](const std::string& tid) {
                           Acc<Ctx> acc{ctx, numeric};
                           for (int j = 1; j <= n; ++j)
                             acc.elem("j=" + std::to_string(j),
                                      qm::antipode_defect(ctx, n, i, j, side));
                           return acc.done(tid);
                         }});
      }

  for (auto [d, n] : pairs) {
    std::string tag = "/d" + std::to_string(d) + "n" + std::to_string(n);
    tasks.push_back({"eta/trace" + tag, [ctx, numeric, d, n](const std::string& tid) {
                       Acc<Ctx> acc{ctx, numeric};
                       Element<Ctx> trace, trace_perp;
                       for (int m = 1; m <= n; ++m) {
                         trace = qm::add(ctx, trace, gr::eta(ctx, n, d, m, m));
                         trace_perp = qm::add(ctx, trace_perp, gr::eta_perp(ctx, n, d, m, m));
                       }
                       Element<Ctx> dd, dnd;
                       dd.add(ctx, qm::GWord{0, {}}, ctx.rational(d, 1));
                       dnd.add(ctx, qm::GWord{0, {}}, ctx.rational(n - d, 1));
                       acc.elem("trace eta = d", qm::localized_defect(ctx, n, trace, dd));
                       acc.elem("trace eta-perp = n-d",
                                qm::localized_defect(ctx, n, trace_perp, dnd));
                       return acc.done(tid);
                     }});
    tasks.push_back({"eta/weights" + tag, [d, n](const std::string& tid) {
                       IdentityResult r;
                       r.id = tid;
                       r.pass = gr::eta_weights_ok(n, d);
                       if (!r.pass) r.witness = "torus weight of eta_ij differs from e_j - e_i";
                       return r;
                     }});
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::string sij = "/i" + std::to_string(i) + "j" + std::to_string(j);
        tasks.push_back(
            {"eta/idempotent" + tag + sij, [ctx, numeric, d, n, i, j](const std::string& tid) {
               Acc<Ctx> acc{ctx, numeric};
               Element<Ctx> sum, sum_perp, cross;
               for (int m = 1; m <= n; ++m) {
                 sum = qm::add(ctx, sum, qm::mul(ctx, n, gr::eta(ctx, n, d, i, m),
                                                 gr::eta(ctx, n, d, m, j)));
                 sum_perp = qm::add(ctx, sum_perp, qm::mul(ctx, n, gr::eta_perp(ctx, n, d, i, m),
                                                           gr::eta_perp(ctx, n, d, m, j)));
                 cross = qm::add(ctx, cross, qm::mul(ctx, n, gr::eta(ctx, n, d, i, m),
                                                     gr::eta_perp(ctx, n, d, m, j)));
               }
               acc.elem("eta^2 = eta",
                        qm::localized_defect(ctx, n, sum, gr::eta(ctx, n, d, i, j)));
               acc.elem("eta-perp^2 = eta-perp",
                        qm::localized_defect(ctx, n, sum_perp, gr::eta_perp(ctx, n, d, i, j)));
               acc.elem("eta eta-perp = 0",
                        qm::localized_defect(ctx, n, cross, Element<Ctx>{}));
               return acc.done(tid);
             }});
        tasks.push_back(
            {"eta/exchange" + tag + sij, [ctx, numeric, d, n, i, j](const std::string& tid) {
               Acc<Ctx> acc{ctx, numeric};
               for (int ip = 1; ip <= n; ++ip)
                 for (int jp = 1; jp <= n; ++jp) {
                   auto K2 = gr::k_coeff(ctx, i, j, ip, jp);
                   K2 = K2 * K2;
                   std::string at = "ip" + std::to_string(ip) + "jp" + std::to_string(jp);
                   auto check = [&](const char* kind, const Element<Ctx>& A,
                                    const Element<Ctx>& B) {
                     Element<Ctx> lhs = qm::mul(ctx, n, A, B);
                     Element<Ctx> rhs = qm::scale(ctx, qm::mul(ctx, n, B, A), K2);
                     acc.elem(at + std::string(" ") + kind,
                              qm::localized_defect(ctx, n, lhs, rhs));
                   };
                   check("eta/eta", gr::eta(ctx, n, d, i, j), gr::eta(ctx, n, d, ip, jp));
                   check("eta/eta-perp", gr::eta(ctx, n, d, i, j),
                         gr::eta_perp(ctx, n, d, ip, jp));
                   check("eta-perp/eta-perp", gr::eta_perp(ctx, n, d, i, j),
                         gr::eta_perp(ctx, n, d, ip, jp));
                 }
               return acc.done(tid);
             }});
        tasks.push_back(
            {"eta/rescaled" + tag + sij, [ctx, numeric, d, n, i, j](const std::string& tid) {
               Acc<Ctx> acc{ctx, numeric};
               // The rescaled entries are orthogonal projectors for the
               // dressed module product (plain-product idempotency belongs
               // to the unrescaled entries; the two agree only at n = 2).
               Element<Ctx> sum, sum_perp, cross;
               for (int m = 1; m <= n; ++m) {
                 sum = qm::add(ctx, sum,
                               gr::eta_dressed_mul(ctx, n, i, m, m, j,
                                                   gr::eta_hat(ctx, n, d, i, m, false),
                                                   gr::eta_hat(ctx, n, d, m, j, false)));
                 sum_perp = qm::add(ctx, sum_perp,
                                    gr::eta_dressed_mul(ctx, n, i, m, m, j,
                                                        gr::eta_hat(ctx, n, d, i, m, true),
                                                        gr::eta_hat(ctx, n, d, m, j, true)));
                 cross = qm::add(ctx, cross,
                                 gr::eta_dressed_mul(ctx, n, i, m, m, j,
                                                     gr::eta_hat(ctx, n, d, i, m, false),
                                                     gr::eta_hat(ctx, n, d, m, j, true)));
               }
               acc.elem("hat idempotency",
                        qm::localized_defect(ctx, n, sum, gr::eta_hat(ctx, n, d, i, j, false)));
               acc.elem("hat-perp idempotency",
                        qm::localized_defect(ctx, n, sum_perp,
                                             gr::eta_hat(ctx, n, d, i, j, true)));
               acc.elem("hat cross-orthogonality",
                        qm::localized_defect(ctx, n, cross, Element<Ctx>{}));
               Element<Ctx> total = qm::add(ctx, gr::eta_hat(ctx, n, d, i, j, false),
                                            gr::eta_hat(ctx, n, d, i, j, true));
               Element<Ctx> delta;
               if (i == j) delta.add(ctx, qm::GWord{0, {}}, ctx.one());
               acc.elem("hat + hat-perp = id", qm::localized_defect(ctx, n, total, delta));
               // Same exchange coefficient as the unrescaled entries; the
               // rescaling factors are central and drop out of the ratio.
               auto K2 = gr::k_coeff(ctx, i, j, 1, 2);
               K2 = K2 * K2;
               Element<Ctx> A = gr::eta_hat(ctx, n, d, i, j, false);
               Element<Ctx> B = gr::eta_hat(ctx, n, d, 1, 2, false);
               acc.elem("hat exchange vs (1,2)",
                        qm::localized_defect(ctx, n, qm::mul(ctx, n, A, B),
                                             qm::scale(ctx, qm::mul(ctx, n, B, A), K2)));
               return acc.done(tid);
             }});
      }
  }
}

// ---------------------------------------------------------------------------
// chart-iso: projective charts against localized degree-0 subalgebras

void build_chart_iso(const std::vector<int>& ns, const ThetaSpec* th,
                     std::vector<Task>& tasks) {
  for (int n : ns) {
    tasks.push_back({"chart-iso/n" + std::to_string(n), [n](const std::string& tid) {
                       pj::ChartIsoResult res = pj::chart_iso_check(n);
                       IdentityResult r;
                       r.id = tid;
                       r.pass = res.ok;
                       if (!res.ok)
                         for (const auto& c : res.charts)
                           if (!(c.weights_match && c.phases_match)) {
                             r.witness = "chart " + std::to_string(c.chart) + ": " + c.witness;
                             break;
                           }
                       return r;
                     }});
    if (th) {
      const ThetaSpec theta = *th;
      // Numeric cross-check: exchange phases of every projective chart
      // against the antisymmetric form evaluated through floating point.
      tasks.push_back(
          {"chart-iso/phase-numeric/n" + std::to_string(n),
           [n, theta](const std::string& tid) {
             PAcc acc;
             acc.th = &theta;
             for (int i = 1; i <= n + 1; ++i) {
               torus::ChartAlgebra alg = torus::chart_algebra(pj::projective_fan_cone(n, i));
               for (int a = 0; a < alg.size(); ++a)
                 for (int b = a + 1; b < alg.size(); ++b) {
                   std::complex<double> lhs = alg.qcheck(a, b).pow(2).specialize(theta);
                   std::complex<double> fwd = torus::star_phase_numeric(
                       theta, alg.gens[std::size_t(a)], alg.gens[std::size_t(b)]);
                   std::complex<double> bwd = torus::star_phase_numeric(
                       theta, alg.gens[std::size_t(b)], alg.gens[std::size_t(a)]);
                   acc.complex_eq("chart " + std::to_string(i) + " pair " + std::to_string(a + 1) +
                                      "," + std::to_string(b + 1),
                                  lhs, fwd / bwd);
                 }
             }
             return acc.done(tid);
           }});
    }
  }
}

// ---------------------------------------------------------------------------
// hilbert / koszul: graded dimensions, dual, Frobenius pairing

void build_hilbert(const std::vector<int>& ns, int deg, std::vector<Task>& tasks) {
  for (int n : ns) {
    tasks.push_back(
        {"hilbert/dimensions/n" + std::to_string(n), [n, deg](const std::string& tid) {
           PAcc acc;
           pj::HomogeneousAlgebra A = pj::projective_space(n);
           for (int k = 0; k <= deg; ++k) {
             long long want = binom(n + k, n);
             acc.flag("degree " + std::to_string(k) + " basis count",
                      (long long)pj::degree_basis(n + 1, k).size() == want);
             acc.flag("degree " + std::to_string(k) + " graded dimension",
                      pj::graded_dimension(A, k) == want);
           }
           return acc.done(tid);
         }});
    tasks.push_back({"hilbert/series-inverse/n" + std::to_string(n),
                     [n, deg](const std::string& tid) {
                       IdentityResult r;
                       r.id = tid;
                       r.pass = pj::hilbert_product_is_one(n, deg);
                       if (!r.pass)
                         r.witness = "H(s) * H_dual(-s) != 1 through degree " +
                                     std::to_string(deg);
                       return r;
                     }});
    if (n <= 3)
      tasks.push_back(
          {"hilbert/coordinate-quotient/n" + std::to_string(n), [n](const std::string& tid) {
             PAcc acc;
             pj::HomogeneousAlgebra A = pj::projective_space(n);
             Vec last(std::size_t(n + 1), 0);
             last.back() = 1;
             pj::HomogeneousAlgebra Q = pj::quotient_variety(A, {pj::wpoly_monomial(last)});
             for (int k = 0; k <= 4; ++k)
               acc.flag("degree " + std::to_string(k),
                        pj::graded_dimension(Q, k) == binom(n - 1 + k, n - 1));
             return acc.done(tid);
           }});
  }
}

void build_koszul(const std::vector<int>& ns, const ThetaSpec* th, std::vector<Task>& tasks) {
  for (int n : ns) {
    tasks.push_back({"koszul/dual-dimensions/n" + std::to_string(n),
                     [n](const std::string& tid) {
                       PAcc acc;
                       const auto dims = pj::koszul_dims(n);
                       acc.flag("length", (int)dims.size() == n + 2);
                       for (int k = 0; k < (int)dims.size(); ++k)
                         acc.flag("degree " + std::to_string(k), dims[std::size_t(k)] ==
                                                                     binom(n + 1, k));
                       return acc.done(tid);
                     }});
    if (n <= 2)
      tasks.push_back(
          {"koszul/frobenius-determinant/n" + std::to_string(n), [n](const std::string& tid) {
             PAcc acc;
             for (int k = 0; k <= n + 1; ++k) {
               PhaseScalar det = pj::frobenius_pairing_det(n, k);
               acc.flag("degree " + std::to_string(k) + " unit determinant",
                        !det.is_zero() && det.is_monomial());
             }
             return acc.done(tid);
           }});
    if (n <= 3) {
      std::vector<std::pair<std::string, ThetaSpec>> thetas;
      if (th) {
        thetas.emplace_back("supplied", *th);
      } else {
        for (int s = 0; s < 5; ++s)
          thetas.emplace_back("seed" + std::to_string(101 + s),
                              ThetaSpec::random(n, 101 + s));
      }
      for (const auto& [label, theta] : thetas)
        tasks.push_back({"koszul/frobenius-rank/n" + std::to_string(n) + "/" + label,
                         [n, theta](const std::string& tid) {
                           PAcc acc;
                           const auto dims = pj::koszul_dims(n);
                           for (int k = 0; k <= n + 1; ++k)
                             acc.flag("degree " + std::to_string(k) + " full rank",
                                      pj::frobenius_pairing_rank(n, k, theta,
                                                                 kSingularValueFloor) ==
                                          (int)dims[std::size_t(k)]);
                           return acc.done(tid);
                         }});
    }
  }
}

// ---------------------------------------------------------------------------
// ideals: torus-invariant monomial ideals of dual semigroups

void build_ideals(long long box, std::vector<Task>& tasks) {
  struct Named {
    std::string name;
    Cone cone;
  };
  std::vector<Named> cones;
  cones.push_back({"quadrant2", Cone::from_rays(2, {{1, 0}, {0, 1}})});
  cones.push_back({"halfquadric2", Cone::from_rays(2, {{1, 0}, {1, 2}})});
  cones.push_back({"conifold3", Cone::from_rays(3, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}})});
  for (const auto& [name, sigma] : cones) {
    std::vector<Cone> faces = sigma.faces();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const Cone tau = faces[f];
      std::string suffix = "/" + name + "/face" + std::to_string(f);
      tasks.push_back({"ideals/closure" + suffix,
                       [sigma, tau, box](const std::string& tid) {
                         IdentityResult r;
                         r.id = tid;
                         r.pass = pj::ideal_property_ok(pj::face_ideal(sigma, tau), box);
                         if (!r.pass) r.witness = "semigroup translation leaves the support";
                         return r;
                       }});
      tasks.push_back({"ideals/prime" + suffix, [sigma, tau, box](const std::string& tid) {
                         IdentityResult r;
                         r.id = tid;
                         r.pass = pj::is_prime_monomial(pj::face_ideal(sigma, tau), box);
                         if (!r.pass) r.witness = "complement not multiplicatively closed";
                         return r;
                       }});
    }
    tasks.push_back(
        {"ideals/zero-face-gives-zero-ideal/" + name, [sigma, box](const std::string& tid) {
           PAcc acc;
           // The minimal face is last in the ordering (dimension descending).
           Cone zero = sigma.faces().back();
           acc.flag("minimal face has dimension 0", zero.dim() == 0);
           pj::MonomialIdeal I = pj::face_ideal(sigma, zero);
           for (const Vec& s : pj::dual_semigroup_box(sigma, box))
             if (I.in_ideal(s)) {
               acc.flag("character " + vec_id(s) + " outside the zero ideal", false);
               break;
             }
           return acc.done(tid);
         }});
    tasks.push_back(
        {"ideals/full-face-augmentation/" + name, [sigma, box](const std::string& tid) {
           PAcc acc;
           // For a full-dimensional pointed cone, the ideal of the cone
           // itself contains every nonzero character and misses zero.
           pj::MonomialIdeal I = pj::face_ideal(sigma, sigma);
           for (const Vec& s : pj::dual_semigroup_box(sigma, box)) {
             bool zero = std::all_of(s.begin(), s.end(), [](long long v) { return v == 0; });
             if (I.in_ideal(s) == zero) {
               acc.flag("character " + vec_id(s), false);
               break;
             }
           }
           return acc.done(tid);
         }});
  }
  tasks.push_back({"ideals/non-prime-witness", [box](const std::string& tid) {
                     PAcc acc;
                     // Support {m >= 2} inside the semigroup of naturals is an
                     // ideal whose complement {0, 1} is not closed: 1 + 1 = 2.
                     pj::MonomialIdeal I{Cone::from_rays(1, {{1}})};
                     I.in_ideal = [](const Vec& s) { return s[0] >= 2; };
                     I.note = "powers at least two";
                     acc.flag("translation invariance", pj::ideal_property_ok(I, box));
                     acc.flag("detected as non-prime", !pj::is_prime_monomial(I, box));
                     return acc.done(tid);
                   }});
}

// ---------------------------------------------------------------------------
// kaehler: first-order differential calculus on free charts

void build_kaehler(const ThetaSpec* th, std::vector<Task>& tasks) {
  struct NamedChart {
    std::string name;
    int rank;
    Mat rays;
  };
  std::vector<NamedChart> charts = {
      {"quadrant2", 2, {{1, 0}, {0, 1}}},
      {"wedge2", 2, {{1, 0}, {1, 1}}},
      {"simplicial3", 3, {{1, 1, 1}, {1, 0, 1}, {1, 0, 0}}},
  };
  if (th) {
    std::vector<NamedChart> kept;
    for (auto& c : charts)
      if (c.rank == th->n()) kept.push_back(c);
    if (kept.empty())
      bad("kaehler: no numeric chart of rank " + std::to_string(th->n()) +
          " (charts have ranks 2 and 3)");
    charts = kept;
  }
  for (const auto& nc : charts) {
    const std::string name = nc.name;
    const Mat rays = nc.rays;
    const int rank = nc.rank;
    const std::optional<ThetaSpec> theta = th ? std::optional<ThetaSpec>(*th) : std::nullopt;
    auto make_chart = [rays, rank] { return torus::chart_algebra(Cone::from_rays(rank, rays)); };

    tasks.push_back({"kaehler/presentation/" + name,
                     [make_chart, theta](const std::string& tid) {
                       PAcc acc;
                       acc.th = theta ? &*theta : nullptr;
                       torus::ChartAlgebra A = make_chart();
                       presentation::AlgebraPresentation pres = torus::kaehler_relations(A);
                       const int s = A.size();
                       acc.flag("generator count",
                                (int)pres.generators.size() == 2 * s);
                       acc.flag("relation count",
                                (int)pres.commutation.size() == s * (s - 1) / 2 + s * s);
                       for (const auto& c : pres.commutation) {
                         int a = c.a, b = c.b;
                         int xa = a < s ? a : a - s;
                         int xb = b < s ? b : b - s;
                         acc.phase_eq("phase of generators " + std::to_string(a + 1) + "," +
                                          std::to_string(b + 1),
                                      c.phase2, A.qcheck(xa, xb).pow(2));
                       }
                       return acc.done(tid);
                     }});
    {
      torus::ChartAlgebra probe = make_chart();
      const int s = probe.size();
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
          tasks.push_back(
              {"kaehler/bimodule/" + name + "/x" + std::to_string(a + 1) + "dx" +
                   std::to_string(b + 1),
               [make_chart, theta, a, b](const std::string& tid) {
                 PAcc acc;
                 acc.th = theta ? &*theta : nullptr;
                 torus::ChartAlgebra A = make_chart();
                 Vec ea(std::size_t(A.size()), 0), eb(std::size_t(A.size()), 0);
                 ea[std::size_t(a)] = 1;
                 eb[std::size_t(b)] = 1;
                 torus::OmegaElement dxb = torus::differential(A, eb);
                 torus::OmegaElement lhs = torus::omega_mul_left(A, ea, dxb);
                 torus::OmegaElement rhs =
                     torus::omega_mul_right(A, dxb, ea).scaled(A.qcheck(a, b).pow(2));
                 torus::OmegaElement defect =
                     lhs + rhs.scaled(PhaseScalar::from_rational(-1));
                 acc.omega_zero("x dx - qcheck^2 dx x", defect);
                 return acc.done(tid);
               }});
      // Exponent grid: every nonzero monomial of total degree at most two.
      std::vector<Vec> grid;
      std::function<void(Vec&, int, long long)> gen = [&](Vec& cur, int pos, long long left) {
        if (pos == s) {
          if (std::any_of(cur.begin(), cur.end(), [](long long v) { return v != 0; }))
            grid.push_back(cur);
          return;
        }
        for (long long v = 0; v <= left; ++v) {
          cur[std::size_t(pos)] = v;
          gen(cur, pos + 1, left - v);
        }
        cur[std::size_t(pos)] = 0;
      };
      Vec cur(std::size_t(s), 0);
      gen(cur, 0, 2);
      for (const Vec& e : grid)
        tasks.push_back(
            {"kaehler/leibniz/" + name + "/e" + vec_id(e),
             [make_chart, theta, e, grid](const std::string& tid) {
               PAcc acc;
               acc.th = theta ? &*theta : nullptr;
               torus::ChartAlgebra A = make_chart();
               for (const Vec& f : grid) {
                 auto [phase, sum] = A.mul_monomials(e, f);
                 torus::OmegaElement lhs = torus::differential(A, sum, phase);
                 torus::OmegaElement rhs = torus::omega_mul_right(A, torus::differential(A, e), f) +
                                           torus::omega_mul_left(A, e, torus::differential(A, f));
                 torus::OmegaElement defect = lhs + rhs.scaled(PhaseScalar::from_rational(-1));
                 acc.omega_zero("f=" + vec_id(f), defect);
                 acc.flag("leibniz_holds f=" + vec_id(f), torus::leibniz_holds(A, e, f));
               }
               return acc.done(tid);
             }});
    }
    if (th) {
      const ThetaSpec theta_v = *th;
      tasks.push_back(
          {"kaehler/chart-phase/" + name, [make_chart, theta_v](const std::string& tid) {
             PAcc acc;
             acc.th = &theta_v;
             torus::ChartAlgebra A = make_chart();
             for (int a = 0; a < A.size(); ++a)
               for (int b = a + 1; b < A.size(); ++b) {
                 std::complex<double> fwd = torus::star_phase_numeric(
                     theta_v, A.gens[std::size_t(a)], A.gens[std::size_t(b)]);
                 std::complex<double> bwd = torus::star_phase_numeric(
                     theta_v, A.gens[std::size_t(b)], A.gens[std::size_t(a)]);
                 acc.complex_eq("pair " + std::to_string(a + 1) + "," + std::to_string(b + 1),
                                A.qcheck(a, b).pow(2).specialize(theta_v), fwd / bwd);
               }
             return acc.done(tid);
           }});
    }
  }
}

// ---------------------------------------------------------------------------
// examples: the embedded worked examples, recomputed from their fans

#include "worked_examples.inc"

void build_examples(const ThetaSpec* th, std::vector<Task>& tasks) {
  std::vector<WorkedExample> xs = worked_examples();
  if (th) {
    std::vector<WorkedExample> kept;
    for (auto& e : xs)
      if (fans::Fan::from_json_text(e.fan_json).ambient() == th->n()) kept.push_back(e);
    if (kept.empty())
      bad("examples: no worked example of rank " + std::to_string(th->n()));
    xs = kept;
  }
  for (const WorkedExample& ex : xs) {
    for (const auto& [cid, expected] : ex.charts) {
      tasks.push_back(
          {"examples/" + ex.name + "/cone" + std::to_string(cid),
           [ex, cid, expected](const std::string& tid) {
             IdentityResult r;
             r.id = tid;
             fans::Fan fan = fans::Fan::from_json_text(ex.fan_json);
             torus::ChartAlgebra alg =
                 torus::chart_algebra(fan.cones()[std::size_t(cid)].cone);
             std::string got = alg.pres.text();
             r.pass = got == expected;
             if (!r.pass) {
               std::size_t k = 0;
               while (k < got.size() && k < expected.size() && got[k] == expected[k]) ++k;
               r.witness = "presentation text diverges at byte " + std::to_string(k);
             }
             return r;
           }});
      if (th) {
        const ThetaSpec theta = *th;
        tasks.push_back(
            {"examples/" + ex.name + "/cone" + std::to_string(cid) + "/numeric",
             [ex, cid, theta](const std::string& tid) {
               PAcc acc;
               acc.th = &theta;
               fans::Fan fan = fans::Fan::from_json_text(ex.fan_json);
               torus::ChartAlgebra alg =
                   torus::chart_algebra(fan.cones()[std::size_t(cid)].cone);
               for (int a = 0; a < alg.size(); ++a)
                 for (int b = a + 1; b < alg.size(); ++b) {
                   std::complex<double> fwd = torus::star_phase_numeric(
                       theta, alg.gens[std::size_t(a)], alg.gens[std::size_t(b)]);
                   std::complex<double> bwd = torus::star_phase_numeric(
                       theta, alg.gens[std::size_t(b)], alg.gens[std::size_t(a)]);
                   acc.complex_eq("exchange " + std::to_string(a + 1) + "," +
                                      std::to_string(b + 1),
                                  alg.qcheck(a, b).pow(2).specialize(theta), fwd / bwd);
                 }
               for (const auto& bin : alg.pres.binomials) {
                 auto [pl, vl] = alg.realize(bin.p);
                 auto [pr, vr] = alg.realize(bin.r);
                 acc.flag("binomial exponents agree", vl == vr);
                 acc.complex_eq("binomial phase", pl.specialize(theta),
                                (bin.phase * pr).specialize(theta));
               }
               return acc.done(tid);
             }});
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// report assembly

bool VerificationReport::pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const IdentityResult& r) { return r.pass; });
}

int VerificationReport::failures() const {
  return int(std::count_if(items.begin(), items.end(),
                           [](const IdentityResult& r) { return !r.pass; }));
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << "suite: " << suite << " (" << theta_mode << ")\n";
  if (!parameters.empty()) {
    os << "parameters:";
    for (const auto& [k, v] : parameters) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const IdentityResult& r : items) {
    os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.id;
    if (!r.witness.empty()) os << "  (" << r.witness << ")";
    os << "\n";
  }
  os << "items: " << items.size() << ", failures: " << failures() << "\n";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.1f", elapsed_ms);
  os << "elapsed: " << buf << " ms\n";
  os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string VerificationReport::json_text() const {
  nlohmann::json j;
  j["schema"] = "qtoric-report/1";
  j["suite"] = suite;
  j["theta_mode"] = theta_mode;
  j["parameters"] = nlohmann::json::object();
  for (const auto& [k, v] : parameters) j["parameters"][k] = v;
  j["pass"] = pass();
  j["failures"] = failures();
  j["items"] = nlohmann::json::array();
  for (const IdentityResult& r : items) {
    nlohmann::json item;
    item["id"] = r.id;
    item["pass"] = r.pass;
    if (!r.witness.empty()) item["witness"] = r.witness;
    j["items"].push_back(item);
  }
  return j.dump(2) + "\n";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "star-assoc", "det",     "laplace",   "minors",  "pluecker",
      "young",      "classify", "chart-iso", "hilbert", "koszul",
      "eta",        "ideals",  "kaehler",   "examples"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& ns = suite_names();
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

const std::vector<WorkedExample>& worked_examples() {
  static const std::vector<WorkedExample> xs = worked_examples_data();
  return xs;
}

VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (!is_suite(name)) bad("unknown suite '" + name + "'");
  if (cfg.theta && !cfg.theta->is_numeric())
    bad("suites require a numeric theta; use the symbolic mode by omitting theta");
  if (cfg.jobs < 1 || cfg.jobs > 64) bad("jobs must lie in [1,64]");
  const bool numeric = cfg.theta.has_value();
  const ThetaSpec* th = numeric ? &*cfg.theta : nullptr;

  VerificationReport rep;
  rep.suite = name;
  rep.theta_mode = numeric ? "numeric" : "symbolic";
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Task> tasks;

  ExactCtx X;
  std::optional<NumericCtx> N;
  if (numeric) N.emplace(NumericCtx{*cfg.theta});

  auto with_ctx = [&](auto&& fn) {
    if (numeric)
      fn(*N, true);
    else
      fn(X, false);
  };

  if (name == "star-assoc") {
    build_star_assoc(cfg, rep.parameters, tasks);
  } else if (name == "det") {
    std::vector<int> ns = pick_ns(cfg, 2, 4, 2, 5, "det");
    rep.parameters["n"] = range_text(ns);
    with_ctx([&](const auto& ctx, bool num) { build_det(ctx, num, ns, tasks); });
    if (numeric) build_det_centrality(*cfg.theta, ns.front(), tasks);
  } else if (name == "laplace") {
    std::vector<int> ns = pick_ns(cfg, 2, 4, 2, 5, "laplace");
    std::vector<int> ds;
    if (cfg.d != 0) {
      if (cfg.d < 1 || cfg.d > 4) bad("laplace: d must lie in [1,4]");
      ds = {cfg.d};
    } else {
      ds = {2, 3};
    }
    rep.parameters["n"] = range_text(ns);
    rep.parameters["d"] = range_text(ds);
    with_ctx([&](const auto& ctx, bool num) { build_laplace(ctx, num, ns, ds, tasks); });
  } else if (name == "minors") {
    int n = pick_n(cfg, 4, 2, 5, "minors");
    std::vector<int> sizes;
    if (cfg.d != 0) {
      if (cfg.d < 1 || cfg.d > 3) bad("minors: d must lie in [1,3]");
      sizes = {cfg.d};
    } else {
      sizes = {1, 2};
    }
    rep.parameters["n"] = std::to_string(n);
    rep.parameters["d"] = range_text(sizes);
    with_ctx([&](const auto& ctx, bool num) { build_minors(ctx, num, th, n, sizes, tasks); });
  } else if (name == "pluecker" || name == "young") {
    const bool pk = name == "pluecker";
    std::vector<std::pair<int, int>> dn;  // (d, n) for pluecker; n only for young
    if (pk) {
      if (cfg.d != 0 || cfg.n != 0 || numeric) {
        int n = pick_n(cfg, 4, 2, 6, "pluecker");
        int d = cfg.d != 0 ? cfg.d : 2;
        if (d < 1 || d >= n) bad("pluecker: need 1 <= d < n");
        dn = {{d, n}};
      } else {
        dn = {{2, 4}, {2, 5}, {3, 5}};
      }
      std::string ps;
      for (auto [d, n] : dn) ps += "(" + std::to_string(d) + ";" + std::to_string(n) + ")";
      rep.parameters["pairs"] = ps;
      with_ctx([&](const auto& ctx, bool num) {
        for (auto [d, n] : dn) build_young_family(ctx, num, "pluecker", n, d, d, true, tasks);
      });
    } else {
      int n = pick_n(cfg, 4, 3, 5, "young");
      rep.parameters["n"] = std::to_string(n);
      with_ctx([&](const auto& ctx, bool num) {
        for (int d = 1; d < n; ++d)
          for (int dp = 1; dp <= d; ++dp)
            build_young_family(ctx, num, "young", n, d, dp, false, tasks);
      });
    }
  } else if (name == "classify") {
    if (cfg.theta && cfg.theta->n() != 4) bad("classify: requires a rank-4 theta");
    rep.parameters["d"] = "2";
    rep.parameters["n"] = "4";
    with_ctx([&](const auto& ctx, bool num) { build_classify(ctx, num, tasks); });
  } else if (name == "chart-iso") {
    std::vector<int> ns = pick_ns(cfg, 2, 3, 1, 3, "chart-iso");
    rep.parameters["n"] = range_text(ns);
    build_chart_iso(ns, th, tasks);
  } else if (name == "hilbert") {
    std::vector<int> ns = pick_ns(cfg, 1, 4, 1, 6, "hilbert");
    int deg = cfg.deg != 0 ? cfg.deg : 10;
    if (deg < 1 || deg > 12) bad("hilbert: deg must lie in [1,12]");
    rep.parameters["n"] = range_text(ns);
    rep.parameters["deg"] = std::to_string(deg);
    build_hilbert(ns, deg, tasks);
  } else if (name == "koszul") {
    std::vector<int> ns = pick_ns(cfg, 1, 4, 1, 4, "koszul");
    if (numeric && ns.front() > 3) bad("koszul: numeric rank checks are limited to n <= 3");
    rep.parameters["n"] = range_text(ns);
    build_koszul(ns, th, tasks);
  } else if (name == "eta") {
    std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {2, 3}, {2, 4}};
    if (cfg.n != 0 || cfg.d != 0 || numeric) {
      int n = pick_n(cfg, 2, 2, 4, "eta");
      std::vector<std::pair<int, int>> kept;
      for (auto [d, nn] : pairs)
        if (nn == n && (cfg.d == 0 || d == cfg.d)) kept.push_back({d, nn});
      if (kept.empty()) bad("eta: no projector block with the requested (d, n)");
      pairs = kept;
    }
    std::string ps;
    for (auto [d, n] : pairs) ps += "(" + std::to_string(d) + ";" + std::to_string(n) + ")";
    rep.parameters["pairs"] = ps;
    with_ctx([&](const auto& ctx, bool num) { build_eta(ctx, num, pairs, tasks); });
  } else if (name == "ideals") {
    long long box = cfg.box != 0 ? cfg.box : 6;
    if (box < 1 || box > 10) bad("ideals: box must lie in [1,10]");
    rep.parameters["box"] = std::to_string(box);
    build_ideals(box, tasks);
  } else if (name == "kaehler") {
    build_kaehler(th, tasks);
  } else if (name == "examples") {
    build_examples(th, tasks);
  }

  rep.items = run_pool(tasks, cfg.jobs);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace qtoric::suites
