// Canonical rendering of algebra presentations.  These strings are the
// golden-file currency of the CLI, so the exact bytes are pinned here.

#include <doctest.h>

#include "qtoric/presentation.hpp"

using namespace qtoric;
using presentation::AlgebraPresentation;
using scalars::PhaseScalar;

namespace {

AlgebraPresentation sample() {
  AlgebraPresentation p;
  p.title = "chart";
  p.generators = {{"x1", {2, -1}}, {"x2", {1, 0}}, {"x3", {0, 1}}};
  p.commutation = {{0, 1, PhaseScalar::unit(1, 2, 2)},
                   {0, 2, PhaseScalar::unit(1, 2, 4)},
                   {1, 2, PhaseScalar::unit(1, 2, 2)}};
  p.binomials = {{{1, 0, 1}, {0, 2, 0}, PhaseScalar::unit(1, 2, 2)}};
  return p;
}

}  // namespace

TEST_CASE("monomial text") {
  AlgebraPresentation p = sample();
  CHECK(p.monomial_text({2, 0, 1}) == "x1^2*x3");
  CHECK(p.monomial_text({0, 0, 0}) == "1");
  CHECK(p.monomial_text({0, 1, 0}) == "x2");
}

TEST_CASE("text rendering is stable") {
  CHECK(sample().text() ==
        "chart\n"
        "generators:\n"
        "  x1  weight (2,-1)\n"
        "  x2  weight (1,0)\n"
        "  x3  weight (0,1)\n"
        "commutation:\n"
        "  x1*x2 = (q12^2)*x2*x1\n"
        "  x1*x3 = (q12^4)*x3*x1\n"
        "  x2*x3 = (q12^2)*x3*x2\n"
        "binomials:\n"
        "  x1*x3 = (q12^2)*x2^2\n");
}

TEST_CASE("json rendering is stable and schema-shaped") {
  std::string js = sample().json_text(2);
  // Keys appear in alphabetical order; commutation rows are 1-based triples.
  CHECK(js.find("\"binomials\"") != std::string::npos);
  CHECK(js.find("\"commutation\"") != std::string::npos);
  CHECK(js.find("\"generators\"") != std::string::npos);
  CHECK(js.find("[\n      1,\n      2,\n      \"q12^2\"\n    ]") != std::string::npos);
  CHECK(js.find("\"phase\": \"q12^2\"") != std::string::npos);
  CHECK(js.back() == '\n');
  // Two renders are byte-identical.
  CHECK(js == sample().json_text(2));
}

TEST_CASE("polynomial relations render with words") {
  AlgebraPresentation p;
  p.title = "matrix";
  p.generators = {{"g11", {}}, {"g12", {}}, {"g21", {}}, {"g22", {}}};
  presentation::PolyRelation r;
  r.label = "det";
  r.terms = {{PhaseScalar::one(), {0, 3}},
             {-PhaseScalar::unit(1, 2, -1), {1, 2}}};
  p.relations = {r};
  CHECK(p.text() ==
        "matrix\n"
        "generators:\n"
        "  g11\n"
        "  g12\n"
        "  g21\n"
        "  g22\n"
        "relations:\n"
        "  det: (1)*g11*g22 + (-q12^-1)*g12*g21 = 0\n");
  CHECK(p.json_text(2).find("\"relations\"") != std::string::npos);
}
