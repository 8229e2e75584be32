#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octic/rat.hpp"

namespace octic {

// Ambient variables.  x,y,z,t are the projective coordinates, s is the
// deformation parameter of a one-parameter family (written "t" in family
// map strings, renamed internally to avoid clashing with the coordinate),
// A,B are the homogeneous parameters with s = A/B at specialization time.
enum Var : int { VX = 0, VY, VZ, VT, VS, VA, VB };
inline constexpr int kNVars = 7;
const char* var_name(int v);      // "x","y","z","t","s","A","B"
int var_from_name(char c);        // -1 if not a variable

struct Expo {
  std::array<int16_t, kNVars> e{};
  int total() const {
    int t = 0;
    for (int i = 0; i < kNVars; ++i) t += e[i];
    return t;
  }
  bool operator==(const Expo&) const = default;
};

// Graded lexicographic order with x > y > z > t > s > A > B; the map
// comparator sorts descending so begin() is the leading term.
struct GrlexDesc {
  bool operator()(const Expo& a, const Expo& b) const {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    for (int i = 0; i < kNVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

// Sparse multivariate polynomial over Q.  No zero coefficients are stored;
// the zero polynomial has an empty term map.
class MPoly {
 public:
  using Terms = std::map<Expo, Rat, GrlexDesc>;

  MPoly() = default;
  explicit MPoly(const Rat& c) { if (!c.is_zero()) terms_[Expo{}] = c; }
  MPoly(long n) : MPoly(Rat(n)) {}  // NOLINT

  static MPoly variable(int v, int exp = 1);
  static MPoly constant(const Rat& c) { return MPoly(c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
  }
  // Constant term (the value, if is_constant()).
  Rat constant_value() const;

  // Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }
  int degree_in(int v) const;
  bool uses(int v) const;

  const Expo& leading_expo() const;
  const Rat& leading_coeff() const;
  Rat coeff(const Expo& e) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& b) { *this = *this + b; return *this; }
  MPoly& operator-=(const MPoly& b) { *this = *this - b; return *this; }
  MPoly& operator*=(const MPoly& b) { *this = *this * b; return *this; }
  friend MPoly operator*(const Rat& c, const MPoly& a);
  friend MPoly operator*(long c, const MPoly& a) { return Rat(c) * a; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(int n) const;
  MPoly derivative(int v) const;

  // Substitute polynomials for a subset of the variables (null = keep).
  MPoly subst(const std::array<const MPoly*, kNVars>& images) const;
  // Substitute rational values for a subset of the variables.
  MPoly eval_partial(const std::array<const Rat*, kNVars>& vals) const;
  // Full evaluation (every variable the polynomial uses must get a value).
  Rat eval(const std::array<Rat, kNVars>& vals) const;

  // Positive rational c such that f = c * (integer-coefficient polynomial
  // with coefficient gcd 1).  Zero polynomial has content 0.
  Rat content() const;
  // f / content(); integer coefficients with gcd 1, sign of the leading
  // coefficient preserved.
  MPoly primitive_part() const;

  // Exact division; nullopt when b does not divide a.
  static std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

  // View as a univariate polynomial in v with MPoly coefficients.
  std::map<int, MPoly> univar(int v) const;
  static MPoly from_univar(int v, const std::map<int, MPoly>& coeffs);

  // Human-readable form, terms in decreasing grlex order, e.g. "3*x^2*y - 1/2".
  std::string str() const;

 private:
  Terms terms_;
  void add_term(const Expo& e, const Rat& c);
  friend struct MPolyBuilder;
};

struct MPolyBuilder {
  MPoly p;
  void add(const Expo& e, const Rat& c) { p.add_term(e, c); }
  MPoly take() { return std::move(p); }
};

// gcd over Q[x..B], normalized so the leading coefficient is 1 (gcd(0,0)=0).
MPoly poly_gcd(const MPoly& a, const MPoly& b);

// Representative of f modulo squares.  Writing f = c * prod f_i^{e_i} with
// primitive irreducible f_i and rational content c = n/d, returns
// sign(lc(f)) * squarefree_int(n*d) * prod f_i^{e_i mod 2}.  Exact squares
// map to 1, and f/g maps to the same class as f*g.
MPoly squarefree_part(const MPoly& f);

}  // namespace octic
