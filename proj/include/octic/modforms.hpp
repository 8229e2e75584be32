#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octic/counting.hpp"

namespace octic {

// ---------------------------------------------------------------------------
// Cusp-form coefficient tables.  Plain ASCII so rows can be hand-copied
// from published tables: header "LABEL WEIGHT LEVEL", then "p a_p" lines
// with p strictly increasing.
// ---------------------------------------------------------------------------

struct CoefficientTable {
  std::string label;
  int weight = 0;  // 2 or 4
  long long level = 0;
  std::map<uint32_t, long long> coeffs;

  std::optional<long long> ap(uint32_t p) const {
    auto it = coeffs.find(p);
    if (it == coeffs.end()) return std::nullopt;
    return it->second;
  }
};

// Exact integer comparison a^2 <= 4 p^{weight-1}; no floating point.
bool weil_bound_ok(long long a, uint32_t p, int weight);

// ParseError on malformed input; BoundViolation when an entry at a prime
// not dividing the level breaks the Deligne bound.
CoefficientTable parse_table(std::istream& in, const std::string& origin);
CoefficientTable load_table(const std::string& path);

struct WeilReport {
  bool pass = true;
  std::vector<std::string> violations;
};
WeilReport weil_check(const CoefficientTable& t);

// ---------------------------------------------------------------------------
// Independent a_p oracles
// ---------------------------------------------------------------------------

// y^2 = x^3 + a x + b over Q; must have 4a^3 + 27b^2 != 0.
struct EllipticCurveModel {
  long long a = 0;
  long long b = 0;
  std::string note;
};

// a_p = p + 1 - #E(F_p), where #E counts one point at infinity plus
// 1 + chi(x^3 + a x + b) affine points per x.  BadReduction when p = 2 or
// p divides the discriminant.
long long ap_elliptic(const EllipticCurveModel& e, uint32_t p);

// For p ≡ 1 (mod 4): the Gaussian prime a + bi over p with a odd and
// a + b ≡ 1 (mod 4); Re is determined up to conjugation, so powers have a
// well-defined real part.
std::pair<long long, long long> primary_gaussian(uint32_t p);

// Weight-4 coefficient of the CM form with CM by the Gaussian field:
// 0 when p ≡ 3 (mod 4), else epsilon * 2 * Re(pi^3) for the primary pi.
// epsilon in {+1, -1} is the unit convention, calibrated once against the
// shipped reference table (see data/calibration.json).
long long ap_cm_weight4(uint32_t p, int epsilon);

// ---------------------------------------------------------------------------
// The splitting verdict
// ---------------------------------------------------------------------------

struct SplittingReport {
  std::vector<uint32_t> primes;  // usable primes, ascending; fit = first 4
  std::array<long long, 4> q{};  // Q(p) = q[3] p^3 + q[2] p^2 + q[1] p + q[0]
  bool integer_fit = false;      // the exact 4-point fit has integer coeffs
  bool monic_cubic = false;      // q[3] == 1
  std::vector<std::pair<uint32_t, long long>> residuals;  // validation primes
  bool pass = false;
  std::string assumption;  // modeling caveat recorded with every verdict
  std::string str() const;
};

// D(p) = n_points(p) + a_p + p b_p must equal a single monic integer cubic
// Q(p): exact Lagrange fit through the 4 smallest usable primes, validated
// on all the rest.  InsufficientPrimes when fewer than 6 primes carry a
// count and both coefficients.  A failed fit or a nonzero residual makes
// pass false; nothing else throws.
SplittingReport verify_splitting(const std::vector<CountResult>& counts,
                                 const CoefficientTable& f4,
                                 const CoefficientTable& f2);

}  // namespace octic
