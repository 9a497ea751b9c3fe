#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "orbitkit/errors.hpp"

namespace orbitkit {

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rat(long n, long d);
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(mpq_class v);

  // Accepts "p", "-p", "p/q" with arbitrary-precision integers.
  static Rat parse(const std::string& s);
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inv() const;
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  static Rat pow(const Rat& base, long e);

  // True iff *this is the square of a rational.
  bool is_square() const;
  // The nonnegative exact square root; throws NotAmenable when not a square.
  Rat sqrt_exact() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  mpq_class v_;
};

}  // namespace orbitkit
