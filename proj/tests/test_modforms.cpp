#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <sstream>
#include <string>

#include <doctest.h>
#include "octic/caseio.hpp"
#include "octic/modforms.hpp"

using namespace octic;

namespace {

std::string data_dir() {
  const char* d = ::getenv("OCTIC_DATA");
  REQUIRE(d != nullptr);
  return d;
}

// Independent oracle: literally count pairs (x, y) with y^2 = x^3 + ax + b.
long long ap_exhaustive(long long a, long long b, uint32_t p) {
  long long am = ((a % p) + p) % p, bm = ((b % p) + p) % p;
  long long n = 1;  // point at infinity
  for (long long x = 0; x < p; ++x) {
    long long rhs = ((x * x % p) * x + am * x + bm) % p;
    for (long long y = 0; y < p; ++y)
      if (y * y % p == rhs) ++n;
  }
  return p + 1 - n;
}

CoefficientTable from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in, "inline");
}

}  // namespace

TEST_CASE("coefficient table parsing") {
  auto t = from_text("32k4A1 4 32\n2 0\n3 0\n5 22\n# comment\n\n7 0\n");
  CHECK(t.label == "32k4A1");
  CHECK(t.weight == 4);
  CHECK(t.level == 32);
  CHECK(t.coeffs.size() == 4);
  CHECK(*t.ap(5) == 22);
  CHECK(*t.ap(7) == 0);
  CHECK_FALSE(t.ap(11).has_value());
}

TEST_CASE("empty coefficient body is a valid table") {
  auto t = from_text("96k4E1 4 96\n");
  CHECK(t.label == "96k4E1");
  CHECK(t.coeffs.empty());
  CHECK(weil_check(t).pass);
}

TEST_CASE("table parse errors") {
  auto kind_of = [](const std::string& text) {
    try {
      from_text(text);
    } catch (const OcticError& e) {
      return e.kind;
    }
    return Err::Invalid;
  };
  CHECK(kind_of("") == Err::Parse);                      // no header
  CHECK(kind_of("f 3 32\n") == Err::Parse);              // weight not 2/4
  CHECK(kind_of("f 4 0\n") == Err::Parse);               // level not positive
  CHECK(kind_of("f 4 32 junk\n") == Err::Parse);         // trailing header token
  CHECK(kind_of("f 4 32\n5\n") == Err::Parse);           // row missing a_p
  CHECK(kind_of("f 4 32\n5 1 9\n") == Err::Parse);       // trailing row token
  CHECK(kind_of("f 4 32\n4 1\n") == Err::Parse);         // 4 is not prime
  CHECK(kind_of("f 4 32\n7 1\n5 1\n") == Err::Parse);    // decreasing
  CHECK(kind_of("f 4 32\n5 1\n5 1\n") == Err::Parse);    // repeated prime
}

TEST_CASE("Weil bound enforced on load, bad primes exempt") {
  // weight 2 bound at 7 is 2*sqrt(7) < 6
  try {
    from_text("g 2 11\n7 100\n");
    FAIL("expected BoundViolation");
  } catch (const OcticError& e) {
    CHECK(e.kind == Err::BoundViolation);
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
  // p = 2 divides level 32: any value passes
  auto t = from_text("g 4 32\n2 9999\n");
  CHECK(*t.ap(2) == 9999);
  CHECK(weil_check(t).pass);
}

TEST_CASE("weil_bound_ok exact integer anchors") {
  // 4*97^3 = 3650692 sits between 1910^2 = 3648100 and 1911^2 = 3651921,
  // so the exact integer comparison flips exactly there
  CHECK(weil_bound_ok(1910, 97, 4));
  CHECK(weil_bound_ok(-1910, 97, 4));
  CHECK_FALSE(weil_bound_ok(1911, 97, 4));
  CHECK_FALSE(weil_bound_ok(1912, 97, 4));
  CHECK(weil_bound_ok(3, 3, 2));   // 9 <= 12
  CHECK_FALSE(weil_bound_ok(4, 3, 2));  // 16 > 12
}

TEST_CASE("weil_check reports each violation") {
  CoefficientTable t;
  t.label = "bad";
  t.weight = 2;
  t.level = 11;
  t.coeffs = {{3, 4}, {5, 1}, {7, -100}, {11, 500}};  // 11 divides the level
  auto r = weil_check(t);
  CHECK_FALSE(r.pass);
  REQUIRE(r.violations.size() == 2);
  CHECK(r.violations[0].find("p = 3") != std::string::npos);
  CHECK(r.violations[1].find("p = 7") != std::string::npos);
}

TEST_CASE("elliptic oracle anchors for y^2 = x^3 - x") {
  EllipticCurveModel e{-1, 0, ""};
  CHECK(ap_elliptic(e, 3) == 0);
  CHECK(ap_elliptic(e, 5) == -2);
  CHECK(ap_elliptic(e, 7) == 0);
  CHECK(ap_elliptic(e, 13) == 6);
}

TEST_CASE("elliptic oracle equals exhaustive enumeration up to 50") {
  struct Curve {
    long long a, b, disc_primes[3];
  };
  // disc = 4a^3 + 27b^2, bad primes listed (0 padding)
  Curve curves[] = {
      {-1, 0, {2, 0, 0}},    // disc -4
      {0, 1, {2, 3, 0}},     // disc 27 (and p=2 always rejected)
      {-1, 1, {2, 23, 0}},   // disc 23
      {2, 3, {2, 5, 11}},    // disc 275
  };
  for (const auto& c : curves) {
    EllipticCurveModel e{c.a, c.b, ""};
    for (uint32_t p = 3; p <= 50; p += 2) {
      if (!is_prime_u32(p)) continue;
      bool bad = false;
      for (long long q : c.disc_primes) bad = bad || (q == p);
      CAPTURE(c.a);
      CAPTURE(c.b);
      CAPTURE(p);
      if (bad) {
        CHECK_THROWS_AS(ap_elliptic(e, p), OcticError);
      } else {
        CHECK(ap_elliptic(e, p) == ap_exhaustive(c.a, c.b, p));
      }
    }
  }
}

TEST_CASE("supersingular vanishing: a_p = 0 for p = 3 mod 4 up to 100") {
  EllipticCurveModel e{-1, 0, ""};
  for (uint32_t p = 3; p <= 100; ++p) {
    if (!is_prime_u32(p) || p % 4 != 3) continue;
    CAPTURE(p);
    CHECK(ap_elliptic(e, p) == 0);
    CHECK(ap_exhaustive(-1, 0, p) == 0);
  }
}

TEST_CASE("elliptic oracle rejects bad reduction") {
  EllipticCurveModel e{-1, 0, ""};
  CHECK_THROWS_AS(ap_elliptic(e, 2), OcticError);
  CHECK_THROWS_AS(ap_elliptic(e, 9), OcticError);
  EllipticCurveModel cusp{0, 0, ""};  // singular over every field
  try {
    ap_elliptic(cusp, 5);
    FAIL("expected BadReduction");
  } catch (const OcticError& err) {
    CHECK(err.kind == Err::BadReduction);
  }
}

TEST_CASE("primary Gaussian primes") {
  for (uint32_t p = 5; p <= 1000; ++p) {
    if (!is_prime_u32(p) || p % 4 != 1) continue;
    auto [a, b] = primary_gaussian(p);
    CAPTURE(p);
    CHECK(a * a + b * b == (long long)p);
    CHECK((((a % 2) + 2) % 2) == 1);
    CHECK(b % 2 == 0);
    CHECK((((a + b) % 4) + 4) % 4 == 1);
  }
  CHECK_THROWS_AS(primary_gaussian(7), OcticError);
  CHECK_THROWS_AS(primary_gaussian(2), OcticError);
  CHECK_THROWS_AS(primary_gaussian(15), OcticError);
}

TEST_CASE("CM weight-4 oracle anchors") {
  // pi = -1 + 2i over 5: 2 Re(pi^3) = 22;  pi = 3 + 2i over 13: 2 Re(pi^3) = -18
  CHECK(ap_cm_weight4(5, +1) == 22);
  CHECK(ap_cm_weight4(5, -1) == -22);
  CHECK(ap_cm_weight4(13, +1) == -18);
  CHECK(ap_cm_weight4(7, +1) == 0);
  CHECK_THROWS_AS(ap_cm_weight4(5, 0), OcticError);
  CHECK_THROWS_AS(ap_cm_weight4(4, 1), OcticError);
  CHECK_THROWS_AS(ap_cm_weight4(2, 1), OcticError);
}

TEST_CASE("CM vanishing and Deligne bound up to 1000") {
  for (uint32_t p = 3; p <= 1000; ++p) {
    if (!is_prime_u32(p)) continue;
    long long a = ap_cm_weight4(p, +1);
    CAPTURE(p);
    CHECK((a == 0) == (p % 4 == 3));
    // |a_p| <= 2 p^{3/2} checked as integers
    CHECK(a * a <= 4 * (long long)p * p * p);
    CHECK(weil_bound_ok(a, p, 4));
  }
}

TEST_CASE("CM oracle matches the elliptic route: a_p(f4) = t^3 - 3pt") {
  EllipticCurveModel e{-1, 0, ""};
  for (uint32_t p = 3; p <= 300; ++p) {
    if (!is_prime_u32(p)) continue;
    long long t = ap_elliptic(e, p);
    CAPTURE(p);
    CHECK(ap_cm_weight4(p, +1) == t * t * t - 3 * (long long)p * t);
  }
}

TEST_CASE("bundled level-32 tables are consistent") {
  auto f2 = load_table(data_dir() + "/forms/32A1.txt");
  auto f4 = load_table(data_dir() + "/forms/32k4A1.txt");
  CHECK(f2.label == "32A1");
  CHECK(f2.weight == 2);
  CHECK(f2.level == 32);
  CHECK(f4.weight == 4);
  CHECK(f2.coeffs.size() == 168);  // 2 plus the 167 odd primes < 1000
  CHECK(f4.coeffs.size() == 168);
  CHECK(*f2.ap(5) == -2);
  CHECK(*f4.ap(5) == 22);
  CHECK(*f4.ap(13) == -18);
  CHECK(weil_check(f2).pass);
  CHECK(weil_check(f4).pass);
  EllipticCurveModel e{-1, 0, ""};
  for (const auto& [p, t] : f2.coeffs) {
    if (p == 2) continue;
    CAPTURE(p);
    REQUIRE(f4.ap(p).has_value());
    CHECK(*f4.ap(p) == t * t * t - 3 * (long long)p * t);
    if (p <= 200) CHECK(ap_elliptic(e, p) == t);
  }
}

TEST_CASE("shipped calibration reproduces the reference table") {
  Json cal = load_json_file(data_dir() + "/calibration.json");
  int eps = cal.at("cm_epsilon").at("32k4A1").get<int>();
  CHECK((eps == 1 || eps == -1));
  auto f4 = load_table(data_dir() + "/forms/32k4A1.txt");
  for (const auto& [p, a] : f4.coeffs) {
    if (p == 2) continue;
    CAPTURE(p);
    CHECK(ap_cm_weight4(p, eps) == a);
  }
}

TEST_CASE("placeholder tables load as valid empty tables") {
  struct Want {
    const char* file;
    const char* label;
    long long level;
  };
  for (auto w : {Want{"/forms/32k4B1.txt", "32k4B1", 32},
                 Want{"/forms/12k4A1.txt", "12k4A1", 12},
                 Want{"/forms/96k4B1.txt", "96k4B1", 96},
                 Want{"/forms/96k4E1.txt", "96k4E1", 96}}) {
    auto t = load_table(data_dir() + w.file);
    CHECK(t.label == w.label);
    CHECK(t.weight == 4);
    CHECK(t.level == w.level);
    CHECK(t.coeffs.empty());
  }
}

TEST_CASE("load_table raises IO on a missing file") {
  try {
    load_table("/nonexistent/form.txt");
    FAIL("expected IO");
  } catch (const OcticError& e) {
    CHECK(e.kind == Err::IO);
  }
}
