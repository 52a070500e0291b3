#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace polyexp {

/// Arbitrary-precision integer. Thin value wrapper around GMP's mpz_class;
/// all operators return plain values so the type composes with Eigen and
/// the standard library without expression-template surprises.
class Int {
 public:
  Int() : v_(0) {}
  Int(int v) : v_(v) {}
  Int(long v) : v_(v) {}
  explicit Int(const mpz_class& v) : v_(v) {}

  const mpz_class& raw() const { return v_; }
  mpz_class& raw() { return v_; }

  /// Parses a base-10 integer literal, optionally signed. Throws
  /// InputError on anything else (including floats).
  static Int parse(std::string_view text);

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }
  long to_long() const;
  bool fits_long() const { return v_.fits_slong_p(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()); }
  int sign() const { return sgn(v_); }

  Int operator-() const { return Int(mpz_class(-v_)); }
  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  /// Truncated division, like built-in integer division.
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend Int operator+(const Int& a, const Int& b) { return Int(mpz_class(a.v_ + b.v_)); }
  friend Int operator-(const Int& a, const Int& b) { return Int(mpz_class(a.v_ - b.v_)); }
  friend Int operator*(const Int& a, const Int& b) { return Int(mpz_class(a.v_ * b.v_)); }
  friend Int operator/(const Int& a, const Int& b) { return Int(mpz_class(a.v_ / b.v_)); }
  friend Int operator%(const Int& a, const Int& b) { return Int(mpz_class(a.v_ % b.v_)); }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

 private:
  mpz_class v_;
};

Int abs(const Int& a);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
/// Extended gcd: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
Int exgcd(const Int& a, const Int& b, Int& x, Int& y);
/// Floor division: largest q with q*b <= a (b > 0).
Int floordiv(const Int& a, const Int& b);
/// Exact division; throws on a non-exact quotient.
Int divexact(const Int& a, const Int& b);
Int pow(const Int& base, unsigned long e);

std::ostream& operator<<(std::ostream& os, const Int& v);

/// Arbitrary-precision rational in lowest terms with positive denominator.
/// Construction canonicalizes, so equal values always compare equal
/// coefficient-wise and the zero value is unique.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(const Int& n) : v_(n.raw()) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }

  /// Parses "p" or "p/q" with arbitrary-precision parts. Rejects floats
  /// ("0.5" and friends) and malformed text with InputError.
  static Rat parse(std::string_view text);

  /// "p/q" in lowest terms, or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  Int numerator() const { return Int(mpz_class(v_.get_num())); }
  Int denominator() const { return Int(mpz_class(v_.get_den())); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

Rat abs(const Rat& a);
Int floor(const Rat& a);
Int ceil(const Rat& a);
/// Nearest integer, halves toward positive infinity (deterministic).
Int round_nearest(const Rat& a);
/// Reduces into [0, 1).
Rat mod1(const Rat& a);
/// a^e for integer e (negative e inverts; throws on 0^negative).
Rat pow(const Rat& base, const Int& e);

std::ostream& operator<<(std::ostream& os, const Rat& v);

}  // namespace polyexp
