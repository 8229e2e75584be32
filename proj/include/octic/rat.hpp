#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "octic/error.hpp"

namespace octic {

// Arbitrary-precision rational number.  Invariants: always in lowest terms,
// denominator > 0 (maintained by mpq canonicalization).
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit on purpose, 3 means 3/1
  Rat(long n, long d) : q_(n, d) {
    if (d == 0) fail(Err::Invalid, "rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpz_class& z) : q_(z) {}
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  static Rat of(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(Err::Invalid, "rational with zero denominator");
    mpq_class q(num);
    q /= mpq_class(den);
    return Rat(q);
  }

  const mpq_class& mpq() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat neg() const { return Rat(mpq_class(-q_)); }
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat inv() const {
    if (is_zero()) fail(Err::Invalid, "inverse of zero");
    return Rat(mpq_class(1 / q_));
  }

  // True iff the value is a square in Q; on success *root is the
  // non-negative square root.
  bool square_root(Rat* root) const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) fail(Err::Invalid, "division by zero");
    return Rat(mpq_class(a.q_ / b.q_));
  }
  Rat operator-() const { return neg(); }
  Rat& operator+=(const Rat& b) { q_ += b.q_; return *this; }
  Rat& operator-=(const Rat& b) { q_ -= b.q_; return *this; }
  Rat& operator*=(const Rat& b) { q_ *= b.q_; return *this; }
  Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  // "p" or "p/q", always reduced, q > 0.
  std::string str() const;
  // Accepts optional sign, digits, optionally "/" digits.
  static Rat parse(const std::string& s);

 private:
  mpq_class q_;
};

// gcd of |a|,|b| as non-negative rational-friendly helper on integers.
mpz_class gcd_z(const mpz_class& a, const mpz_class& b);
mpz_class lcm_z(const mpz_class& a, const mpz_class& b);

// Largest squarefree divisor class: n > 0 maps to the product of primes
// dividing n to an odd power (trial division; inputs here are small).
mpz_class squarefree_int(const mpz_class& n);

}  // namespace octic
