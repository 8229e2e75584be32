#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "octic/caseio.hpp"
#include "octic/error.hpp"
#include "octic/parse.hpp"
#include "octic/twist.hpp"

#include "fixtures.hpp"

using namespace octic;
using namespace octic::fixtures;

namespace {

MPoly P(const std::string& s) { return parse_poly(s, ExprVars::ParamsAB); }

PMat identity_pmat() {
  PMat m;
  for (int i = 0; i < 4; ++i) m[i][i] = MPoly(1);
  return m;
}

PMat scalar_pmat(const MPoly& r) {
  PMat m;
  for (int i = 0; i < 4; ++i) m[i][i] = r;
  return m;
}

std::string data_dir() {
  const char* d = std::getenv("OCTIC_DATA");
  REQUIRE(d != nullptr);
  return d;
}

}  // namespace

TEST_CASE("the identity identification is untwisted") {
  MPoly f = running_r().octic();
  CHECK(classify_twist(f, f, identity_pmat(), MPoly(1)) == MPoly(1));
}

TEST_CASE("square factors are absorbed") {
  MPoly f = running_r().octic();
  // v -> 2v scales the octic by 2^8; with e = 8 the ratio mu/e^2 is 4,
  // still a square, so the class stays trivial.
  CHECK(classify_twist(f, f, scalar_pmat(MPoly(2)), MPoly(8)) == MPoly(1));
  CHECK(classify_twist(f, f, scalar_pmat(MPoly(2)), MPoly(16)) == MPoly(1));
  // same with a parameter: v -> Av and e = A^4
  CHECK(classify_twist(f, f, scalar_pmat(P("A")), P("A^4")) == MPoly(1));
}

TEST_CASE("the swap on R twists by -1") {
  MPoly f = running_r().octic();
  CHECK(classify_twist(f, f, swap_map_p(), MPoly(1)) == MPoly(-1));
  // e = 2: mu/e^2 = -1/4, same class
  CHECK(classify_twist(f, f, swap_map_p(), MPoly(2)) == MPoly(-1));
}

TEST_CASE("scaling one plane by A produces the class A") {
  MPoly f = running_r().octic();
  MPoly fa = P("A") * f;
  CHECK(classify_twist(f, fa, identity_pmat(), MPoly(1)) == P("A"));
  // the claimed u-coefficient only shifts by squares
  CHECK(classify_twist(f, fa, identity_pmat(), P("A")) == P("A"));
}

TEST_CASE("a degree-four scale reduces to its squarefree class") {
  MPoly f = running_r().octic();
  MPoly mu = P("-A^3*B^2*(A-B)");
  CHECK(classify_twist(f, mu * f, identity_pmat(), MPoly(1)) ==
        P("-A*(A-B)"));
  CHECK(classify_twist(f, mu * f, identity_pmat(), P("A*B")) ==
        P("-A*(A-B)"));
}

TEST_CASE("composed identifications multiply to a square") {
  MPoly f = running_r().octic();
  std::mt19937 rng(20240817);
  std::vector<MPoly> pool = {P("A"), P("B"), P("A+B"), P("A-B"), P("A+2*B")};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> count(1, 4);
  auto random_scale = [&] {
    MPoly mu(1);
    int n = count(rng);
    for (int i = 0; i < n; ++i) mu *= pool[pick(rng)];
    return mu;
  };
  for (int trial = 0; trial < 30; ++trial) {
    MPoly mu1 = random_scale(), mu2 = random_scale();
    MPoly d1 = classify_twist(f, mu1 * f, identity_pmat(), MPoly(1));
    MPoly d2 = classify_twist(mu1 * f, mu2 * f, identity_pmat(), MPoly(1));
    MPoly d3 = classify_twist(f, mu2 * f, identity_pmat(), MPoly(1));
    // d2 represents mu2/mu1, so d1*d2*d3 ~ (mu1*mu2)^2 is trivial
    CHECK(squarefree_part(d1 * d2 * d3) == MPoly(1));
  }
}

TEST_CASE("non-proportional targets are rejected") {
  MPoly f = running_r().octic();
  MPoly g = mutant_odd_contact().octic();
  CHECK_THROWS_AS(classify_twist(f, g, identity_pmat(), MPoly(1)), OcticError);
  CHECK_THROWS_AS(classify_twist(f, f, identity_pmat(), MPoly(0)), OcticError);
}

TEST_CASE("the bundled scaling twist case file") {
  TwistCase tc = load_twist_case(data_dir() + "/twists/scaling_twist.json");
  REQUIRE(tc.expected.has_value());
  CHECK(*tc.expected == P("A"));
  CHECK(classify_twist(tc) == *tc.expected);
}

TEST_CASE("recorded external identification, when provided") {
  std::string p = data_dir() + "/external/remark1_twist.json";
  if (!std::filesystem::exists(p)) {
    MESSAGE("external identification not present under data/external; skipping");
    return;
  }
  TwistCase tc = load_twist_case(p);
  REQUIRE(tc.expected.has_value());
  CHECK(classify_twist(tc) == *tc.expected);
}
