#include "octic/rat.hpp"

#include <cctype>

namespace octic {

bool Rat::square_root(Rat* root) const {
  if (sign() < 0) return false;
  if (is_zero()) {
    if (root) *root = Rat(0);
    return true;
  }
  mpz_class n = num(), d = den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (root) *root = Rat::of(rn, rd);
  return true;
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::parse(const std::string& s) {
  size_t i = 0, n = s.size();
  auto bad = [&] { fail(Err::Parse, "bad rational literal '" + s + "'"); };
  if (n == 0) bad();
  size_t j = i;
  bool negate = false;
  if (s[j] == '+' || s[j] == '-') negate = (s[j++] == '-');
  size_t num_start = j;
  while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
  if (j == num_start) bad();
  mpz_class num(s.substr(num_start, j - num_start));
  if (negate) num = -num;
  mpz_class den(1);
  if (j < n) {
    if (s[j] != '/') bad();
    ++j;
    size_t den_start = j;
    while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == den_start || j != n) bad();
    den = mpz_class(s.substr(den_start, j - den_start));
    if (den == 0) bad();
  }
  return Rat::of(num, den);
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

mpz_class squarefree_int(const mpz_class& n) {
  if (n <= 0) fail(Err::Invalid, "squarefree_int expects a positive integer");
  mpz_class m = n, out = 1, d = 2;
  while (d * d <= m) {
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      if (e % 2 == 1) out *= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (m > 1) out *= m;  // remaining factor is prime
  return out;
}

}  // namespace octic
