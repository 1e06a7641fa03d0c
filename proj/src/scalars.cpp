#include "qtoric/scalars.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace qtoric::scalars {

namespace {

constexpr double kSkewTol = 1e-12;

void check_index(int i, int n, const char* what) {
  if (i < 1 || i > n) {
    throw std::invalid_argument(std::string(what) + " index out of range");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ThetaSpec

ThetaSpec::ThetaSpec(int n, bool numeric, std::vector<std::complex<double>> entries)
    : n_(n), numeric_(numeric), entries_(std::move(entries)) {}

ThetaSpec ThetaSpec::symbolic(int n) {
  if (n < 1) throw std::invalid_argument("theta size must be positive");
  return ThetaSpec(n, false, {});
}

ThetaSpec ThetaSpec::numeric(int n, std::vector<std::complex<double>> entries) {
  if (n < 1) throw std::invalid_argument("theta size must be positive");
  if (entries.size() != std::size_t(n) * std::size_t(n)) {
    throw std::invalid_argument("theta entry count does not match n*n");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(entries[i * n + j] + entries[j * n + i]) > kSkewTol) {
        throw std::invalid_argument("theta matrix is not skew-symmetric");
      }
    }
  }
  return ThetaSpec(n, true, std::move(entries));
}

ThetaSpec ThetaSpec::random(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("theta size must be positive");
  // splitmix64 stream; platform-independent by construction.
  auto next = [state = seed]() mutable {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::vector<std::complex<double>> entries(std::size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double u = double(next() >> 11) * (1.0 / 9007199254740992.0);  // [0,1)
      double v = 6.0 * u - 3.0;
      entries[i * n + j] = v;
      entries[j * n + i] = -v;
    }
  }
  return ThetaSpec(n, true, std::move(entries));
}

ThetaSpec ThetaSpec::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("theta")) {
    throw std::invalid_argument("theta json must contain \"n\" and \"theta\"");
  }
  int n = j.at("n").get<int>();
  const auto& rows = j.at("theta");
  if (!rows.is_array() || rows.size() != std::size_t(n)) {
    throw std::invalid_argument("theta json: \"theta\" must be an n x n array");
  }
  std::vector<std::complex<double>> entries(std::size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || row.size() != std::size_t(n)) {
      throw std::invalid_argument("theta json: \"theta\" must be an n x n array");
    }
    for (int k = 0; k < n; ++k) {
      const auto& cell = row.at(k);
      if (cell.is_number()) {
        entries[i * n + k] = cell.get<double>();
      } else if (cell.is_array() && cell.size() == 2) {
        entries[i * n + k] = {cell.at(0).get<double>(), cell.at(1).get<double>()};
      } else {
        throw std::invalid_argument("theta json: entries must be numbers or [re, im] pairs");
      }
    }
  }
  return numeric(n, std::move(entries));
}

std::string ThetaSpec::to_json_text() const {
  nlohmann::json j;
  j["n"] = n_;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < n_; ++k) {
      std::complex<double> z = numeric_ ? entries_[std::size_t(i) * n_ + k] : 0.0;
      row.push_back({z.real(), z.imag()});
    }
    rows.push_back(row);
  }
  j["theta"] = rows;
  return j.dump();
}

std::complex<double> ThetaSpec::theta(int i, int j) const {
  check_index(i, n_, "theta row");
  check_index(j, n_, "theta column");
  if (!numeric_) throw std::logic_error("symbolic theta has no numeric entries");
  return entries_[std::size_t(i - 1) * n_ + (j - 1)];
}

std::complex<double> ThetaSpec::q(int i, int j) const {
  return std::exp(std::complex<double>(0.0, 0.5) * theta(i, j));
}

// ---------------------------------------------------------------------------
// PhaseScalar

PhaseScalar PhaseScalar::from_rational(Rational c) {
  PhaseScalar p;
  if (c != 0) p.terms_.emplace(PairExp{}, std::move(c));
  return p;
}

PhaseScalar PhaseScalar::monomial(const PairExp& ex, Rational c) {
  PhaseScalar p;
  if (c == 0) return p;
  PairExp clean;
  for (const auto& [pr, e] : ex) {
    if (pr.first >= pr.second || pr.first < 1) {
      throw std::invalid_argument("phase monomial keys must be ordered pairs (i < j)");
    }
    if (e != 0) clean.emplace(pr, e);
  }
  p.terms_.emplace(std::move(clean), std::move(c));
  return p;
}

PhaseScalar PhaseScalar::unit(int i, int j, long long e) {
  if (i < 1 || j < 1) throw std::invalid_argument("phase unit indices must be >= 1");
  if (i == j || e == 0) return one();
  PairExp ex;
  if (i < j) {
    ex.emplace(std::make_pair(i, j), e);
  } else {
    ex.emplace(std::make_pair(j, i), -e);
  }
  PhaseScalar p;
  p.terms_.emplace(std::move(ex), Rational(1));
  return p;
}

bool PhaseScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

PhaseScalar& PhaseScalar::operator+=(const PhaseScalar& o) {
  for (const auto& [ex, c] : o.terms_) {
    auto it = terms_.find(ex);
    if (it == terms_.end()) {
      terms_.emplace(ex, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

PhaseScalar& PhaseScalar::operator-=(const PhaseScalar& o) {
  for (const auto& [ex, c] : o.terms_) {
    auto it = terms_.find(ex);
    if (it == terms_.end()) {
      terms_.emplace(ex, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

PhaseScalar& PhaseScalar::operator*=(const PhaseScalar& o) {
  std::map<PairExp, Rational> out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      PairExp ex = ea;
      for (const auto& [pr, e] : eb) {
        auto it = ex.find(pr);
        if (it == ex.end()) {
          ex.emplace(pr, e);
        } else {
          it->second += e;
          if (it->second == 0) ex.erase(it);
        }
      }
      Rational c = ca * cb;
      auto it = out.find(ex);
      if (it == out.end()) {
        out.emplace(std::move(ex), std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

PhaseScalar PhaseScalar::operator-() const {
  PhaseScalar p = *this;
  for (auto& [ex, c] : p.terms_) c = -c;
  return p;
}

PhaseScalar PhaseScalar::inv() const {
  if (terms_.size() != 1) {
    throw std::domain_error("phase inverse requires a single-term scalar");
  }
  const auto& [ex, c] = *terms_.begin();
  PhaseScalar p;
  PairExp nex;
  for (const auto& [pr, e] : ex) nex.emplace(pr, -e);
  p.terms_.emplace(std::move(nex), Rational(1) / c);
  return p;
}

PhaseScalar PhaseScalar::pow(long long k) const {
  if (k < 0) return inv().pow(-k);
  PhaseScalar acc = one();
  PhaseScalar base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::complex<double> PhaseScalar::specialize(const ThetaSpec& theta) const {
  std::complex<double> acc = 0.0;
  for (const auto& [ex, c] : terms_) {
    std::complex<double> arg = 0.0;
    for (const auto& [pr, e] : ex) arg += double(e) * theta.theta(pr.first, pr.second);
    acc += c.convert_to<double>() * std::exp(std::complex<double>(0.0, 0.5) * arg);
  }
  return acc;
}

namespace {

std::string unit_text(int i, int j, long long e) {
  std::ostringstream os;
  if (i < 10 && j < 10) {
    os << 'q' << i << j;
  } else {
    os << "q[" << i << ',' << j << ']';
  }
  if (e != 1) os << '^' << e;
  return os.str();
}

// Renders |c| * units; sign handled by the caller.
std::string term_text(const PairExp& ex, const Rational& abs_c) {
  std::ostringstream os;
  if (ex.empty()) {
    os << abs_c;
    return os.str();
  }
  bool lead = true;
  if (abs_c != 1) {
    os << abs_c;
    lead = false;
  }
  for (const auto& [pr, e] : ex) {
    if (!lead) os << '*';
    os << unit_text(pr.first, pr.second, e);
    lead = false;
  }
  return os.str();
}

}  // namespace

std::string PhaseScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ex, c] : terms_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    os << term_text(ex, a);
  }
  return os.str();
}

}  // namespace qtoric::scalars
