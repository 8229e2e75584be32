#include "octic/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace octic {

namespace {
constexpr char kNames[kNVars + 1] = "xyztsAB";
}

const char* var_name(int v) {
  static const char* names[kNVars] = {"x", "y", "z", "t", "s", "A", "B"};
  assert(v >= 0 && v < kNVars);
  return names[v];
}

int var_from_name(char c) {
  for (int i = 0; i < kNVars; ++i)
    if (kNames[i] == c) return i;
  return -1;
}

MPoly MPoly::variable(int v, int exp) {
  assert(v >= 0 && v < kNVars && exp >= 0);
  MPoly p;
  Expo e;
  e.e[v] = static_cast<int16_t>(exp);
  p.terms_[e] = Rat(1);
  return p;
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  assert(is_constant());
  return terms_.begin()->second;
}

int MPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.e[v]));
  return terms_.empty() ? -1 : d;
}

bool MPoly::uses(int v) const {
  for (const auto& [e, c] : terms_)
    if (e.e[v] != 0) return true;
  return false;
}

const Expo& MPoly::leading_expo() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

const Rat& MPoly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

Rat MPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c.neg();
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c.neg());
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Expo e;
      for (int i = 0; i < kNVars; ++i)
        e.e[i] = static_cast<int16_t>(ea.e[i] + eb.e[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly operator*(const Rat& c, const MPoly& a) {
  MPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, k] : a.terms_) r.terms_[e] = c * k;
  return r;
}

MPoly MPoly::pow(int n) const {
  assert(n >= 0);
  MPoly r(1);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

MPoly MPoly::derivative(int v) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.e[v] == 0) continue;
    Expo d = e;
    d.e[v] -= 1;
    r.add_term(d, Rat(static_cast<long>(e.e[v])) * c);
  }
  return r;
}

MPoly MPoly::subst(const std::array<const MPoly*, kNVars>& images) const {
  // Cache powers of each image to avoid recomputing across terms.
  std::array<std::vector<MPoly>, kNVars> pows;
  auto power_of = [&](int v, int k) -> const MPoly& {
    auto& cache = pows[v];
    if (cache.empty()) cache.push_back(MPoly(1));
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * *images[v]);
    return cache[k];
  };
  MPoly out;
  for (const auto& [e, c] : terms_) {
    MPoly term(c);
    Expo rest;
    for (int v = 0; v < kNVars; ++v) {
      if (e.e[v] == 0) continue;
      if (images[v] == nullptr)
        rest.e[v] = e.e[v];
      else
        term *= power_of(v, e.e[v]);
    }
    if (!(rest == Expo{})) {
      MPoly mono;
      mono.terms_[rest] = Rat(1);
      term *= mono;
    }
    out += term;
  }
  return out;
}

MPoly MPoly::eval_partial(const std::array<const Rat*, kNVars>& vals) const {
  std::array<std::vector<Rat>, kNVars> pows;
  auto power_of = [&](int v, int k) -> const Rat& {
    auto& cache = pows[v];
    if (cache.empty()) cache.push_back(Rat(1));
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * *vals[v]);
    return cache[k];
  };
  MPoly out;
  for (const auto& [e, c] : terms_) {
    Rat k = c;
    Expo rest;
    for (int v = 0; v < kNVars; ++v) {
      if (e.e[v] == 0) continue;
      if (vals[v] == nullptr)
        rest.e[v] = e.e[v];
      else
        k *= power_of(v, e.e[v]);
    }
    out.add_term(rest, k);
  }
  return out;
}

Rat MPoly::eval(const std::array<Rat, kNVars>& vals) const {
  std::array<const Rat*, kNVars> ptrs;
  for (int i = 0; i < kNVars; ++i) ptrs[i] = &vals[i];
  MPoly r = eval_partial(ptrs);
  assert(r.is_constant());
  return r.constant_value();
}

Rat MPoly::content() const {
  if (terms_.empty()) return Rat(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    num_gcd = gcd_z(num_gcd, c.num());
    den_lcm = lcm_z(den_lcm, c.den());
  }
  return Rat::of(num_gcd, den_lcm);
}

MPoly MPoly::primitive_part() const {
  if (terms_.empty()) return MPoly();
  Rat c = content();
  return c.inv() * *this;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return std::nullopt;
  MPoly rem = a, quot;
  while (!rem.is_zero()) {
    const Expo& le = rem.leading_expo();
    const Expo& lb = b.leading_expo();
    Expo q;
    for (int i = 0; i < kNVars; ++i) {
      int d = le.e[i] - lb.e[i];
      if (d < 0) return std::nullopt;
      q.e[i] = static_cast<int16_t>(d);
    }
    MPoly qt;
    qt.terms_[q] = rem.leading_coeff() / b.leading_coeff();
    quot += qt;
    rem -= qt * b;
  }
  return quot;
}

std::map<int, MPoly> MPoly::univar(int v) const {
  std::map<int, MPoly> out;
  for (const auto& [e, c] : terms_) {
    Expo rest = e;
    int k = e.e[v];
    rest.e[v] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

MPoly MPoly::from_univar(int v, const std::map<int, MPoly>& coeffs) {
  MPoly out;
  for (const auto& [k, c] : coeffs) {
    MPoly mono = MPoly::variable(v, k);
    out += mono * c;
  }
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_var = !(e == Expo{});
    if (!has_var || !a.is_one()) {
      os << a.str();
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (int v = 0; v < kNVars; ++v) {
      if (e.e[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_name(v);
      if (e.e[v] > 1) os << "^" << e.e[v];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequences.
// ---------------------------------------------------------------------------

namespace {

// Normalize a nonzero polynomial so the leading coefficient is 1.
MPoly monic(const MPoly& f) {
  assert(!f.is_zero());
  return f.leading_coeff().inv() * f;
}

// Primitive integer-coefficient representative with positive leading
// coefficient; this is the canonical member of the Q*-orbit of f.
MPoly primitive_positive(const MPoly& f) {
  assert(!f.is_zero());
  MPoly p = f.primitive_part();
  if (p.leading_coeff().sign() < 0) return -p;
  return p;
}

int first_used_var(const MPoly& f) {
  for (int v = 0; v < kNVars; ++v)
    if (f.uses(v)) return v;
  return -1;
}

// Content of f viewed in (Q[other vars])[v]: the (monic) gcd of the
// univariate coefficients.
MPoly content_wrt(const MPoly& f, int v) {
  MPoly g;
  for (const auto& [k, c] : f.univar(v)) g = poly_gcd(g, c);
  return g;
}

// Pseudo-remainder of f by g in the variable v: the remainder of
// lc(g)^k * f under univariate division, which stays polynomial.
MPoly pseudo_rem(MPoly f, const MPoly& g, int v) {
  auto gu = g.univar(v);
  int dg = gu.rbegin()->first;
  const MPoly& lg = gu.rbegin()->second;
  while (!f.is_zero()) {
    auto fu = f.univar(v);
    int df = fu.rbegin()->first;
    if (df < dg) break;
    const MPoly& lf = fu.rbegin()->second;
    f = lg * f - MPoly::variable(v, df - dg) * lf * g;
  }
  return f;
}

}  // namespace

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return MPoly();
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return MPoly(1);

  int v = std::min(first_used_var(a), first_used_var(b));
  MPoly ca = content_wrt(a, v), cb = content_wrt(b, v);
  MPoly cont = poly_gcd(ca, cb);
  MPoly f = primitive_positive(*MPoly::divide_exact(a, ca));
  MPoly g = primitive_positive(*MPoly::divide_exact(b, cb));
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);

  // Primitive pseudo-remainder sequence in v.
  for (;;) {
    MPoly r = pseudo_rem(f, g, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      g = MPoly(1);
      break;
    }
    MPoly cr = content_wrt(r, v);
    f = g;
    g = primitive_positive(*MPoly::divide_exact(r, cr));
  }
  if (g.degree_in(v) > 0) {
    MPoly cg = content_wrt(g, v);
    g = *MPoly::divide_exact(g, cg);
  }
  return monic(cont * g);
}

// ---------------------------------------------------------------------------
// Squarefree (mod squares) representative.
// ---------------------------------------------------------------------------

MPoly squarefree_part(const MPoly& f) {
  if (f.is_zero()) fail(Err::Invalid, "squarefree_part of zero");
  int sign = f.leading_coeff().sign();
  Rat c = f.content();  // positive
  MPoly num(1), den(1);
  if (!f.is_constant()) {
    // With f ~ prod p_i^{e_i} (primitive positive irreducibles), the j-th
    // deflation step peels off w_j = prod_{e_i >= j} p_i; the alternating
    // product w_1 * w_3 * ... / (w_2 * w_4 * ...) is exactly
    // prod p_i^{e_i mod 2}.
    MPoly p = primitive_positive(f);
    int j = 1;
    while (!p.is_constant()) {
      MPoly g = p;
      for (int v = 0; v < kNVars; ++v)
        if (p.uses(v)) g = poly_gcd(g, p.derivative(v));
      MPoly w = primitive_positive(*MPoly::divide_exact(p, g));
      if (j % 2 == 1)
        num *= w;
      else
        den *= w;
      if (g.is_constant()) break;
      p = primitive_positive(g);
      ++j;
    }
  }
  MPoly poly_part = *MPoly::divide_exact(num, den);
  mpz_class content_class = squarefree_int(c.num() * c.den());
  MPoly out = Rat(content_class) * poly_part;
  return sign < 0 ? -out : out;
}

}  // namespace octic
