#pragma once
// Algebra presentations: a shared, serializable description of the deformed
// algebras produced by the chart, matrix, grassmannian, and projective
// modules.  Two canonical renderings are provided — a human-readable text
// block and a JSON object — both byte-deterministic for equal inputs.

#include <string>
#include <vector>

#include "qtoric/fans.hpp"
#include "qtoric/scalars.hpp"

namespace qtoric::presentation {

struct Generator {
  std::string name;
  fans::Vec vector;  // lattice/weight data; may be empty when not applicable
};

// x_a x_b = phase2 * x_b x_a   (0-based indices, a < b; rendered 1-based)
struct Commutation {
  int a = 0;
  int b = 0;
  scalars::PhaseScalar phase2;
};

// x^p = phase * x^r  (exponent vectors over the generator list)
struct Binomial {
  fans::Vec p;
  fans::Vec r;
  scalars::PhaseScalar phase;
};

// sum_k coeff_k * x_{w_k,1} x_{w_k,2} ... = 0   (general quadratic+ relations)
struct PolyRelation {
  std::string label;
  std::vector<std::pair<scalars::PhaseScalar, std::vector<int>>> terms;
};

struct AlgebraPresentation {
  std::string title;
  std::vector<Generator> generators;
  std::vector<Commutation> commutation;
  std::vector<Binomial> binomials;
  std::vector<PolyRelation> relations;
  std::vector<std::string> notes;

  // Canonical monomial rendering over this presentation's generator names,
  // e.g. "x1^2*x3" for exponent vector (2,0,1).
  std::string monomial_text(const fans::Vec& expo) const;
  std::string text() const;
  std::string json_text(int indent = 2) const;
};

}  // namespace qtoric::presentation
