// Canonical text and JSON renderings of algebra presentations.  Both are
// byte-deterministic: generators, relations, and phase strings are emitted
// in their stored (canonical) order with a fixed layout.

#include "qtoric/presentation.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace qtoric::presentation {

using nlohmann::json;

std::string AlgebraPresentation::monomial_text(const fans::Vec& expo) const {
  std::ostringstream os;
  bool lead = true;
  for (std::size_t a = 0; a < expo.size(); ++a) {
    if (expo[a] == 0) continue;
    if (!lead) os << '*';
    lead = false;
    os << generators[a].name;
    if (expo[a] != 1) os << '^' << expo[a];
  }
  return lead ? "1" : os.str();
}

namespace {

std::string vec_text(const fans::Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string word_text(const AlgebraPresentation& p, const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << '*';
    os << p.generators[std::size_t(word[k])].name;
  }
  return os.str();
}

}  // namespace

std::string AlgebraPresentation::text() const {
  std::ostringstream os;
  os << title << "\n";
  os << "generators:\n";
  for (const Generator& g : generators) {
    os << "  " << g.name;
    if (!g.vector.empty()) os << "  weight " << vec_text(g.vector);
    os << "\n";
  }
  if (!commutation.empty()) {
    os << "commutation:\n";
    for (const Commutation& c : commutation) {
      const std::string& xa = generators[std::size_t(c.a)].name;
      const std::string& xb = generators[std::size_t(c.b)].name;
      os << "  " << xa << "*" << xb << " = (" << c.phase2.str() << ")*" << xb << "*" << xa
         << "\n";
    }
  }
  if (!binomials.empty()) {
    os << "binomials:\n";
    for (const Binomial& b : binomials)
      os << "  " << monomial_text(b.p) << " = (" << b.phase.str() << ")*" << monomial_text(b.r)
         << "\n";
  }
  if (!relations.empty()) {
    os << "relations:\n";
    for (const PolyRelation& r : relations) {
      os << "  " << r.label << ": ";
      bool first = true;
      for (const auto& [c, w] : r.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << word_text(*this, w);
      }
      os << " = 0\n";
    }
  }
  for (const std::string& n : notes) os << "note: " << n << "\n";
  return os.str();
}

std::string AlgebraPresentation::json_text(int indent) const {
  json j;
  j["generators"] = json::array();
  for (const Generator& g : generators) {
    json e;
    e["name"] = g.name;
    if (!g.vector.empty()) e["vector"] = g.vector;
    j["generators"].push_back(e);
  }
  j["commutation"] = json::array();
  for (const Commutation& c : commutation)
    j["commutation"].push_back(json::array({c.a + 1, c.b + 1, c.phase2.str()}));
  j["binomials"] = json::array();
  for (const Binomial& b : binomials) {
    json e;
    e["p"] = b.p;
    e["r"] = b.r;
    e["phase"] = b.phase.str();
    j["binomials"].push_back(e);
  }
  if (!relations.empty()) {
    j["relations"] = json::array();
    for (const PolyRelation& r : relations) {
      json e;
      e["label"] = r.label;
      e["terms"] = json::array();
      for (const auto& [c, w] : r.terms) {
        json idx = json::array();
        for (int g : w) idx.push_back(g + 1);
        e["terms"].push_back(json::array({c.str(), idx}));
      }
      j["relations"].push_back(e);
    }
  }
  return j.dump(indent) + "\n";
}

}  // namespace qtoric::presentation
