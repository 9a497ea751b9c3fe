#pragma once

#include <string>

#include "orbitkit/order.hpp"
#include "orbitkit/poly.hpp"

namespace orbitkit {

// Rational function in t over Q, kept canonical: numerator and denominator
// coprime, denominator monic (so 0 is represented as 0/1 and equality is
// plain component equality).
class RatFunc {
public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
  RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}   // NOLINT
  RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  static RatFunc t() { return RatFunc(Poly::t()); }
  static RatFunc t_pow(long k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inv() const;

  // ord(t^m * a(t)/b(t)) = m when a(0), b(0) != 0; ord 0 = infinity.
  Order order() const;
  // Value at t = 0; requires order >= 0.
  Rat at_zero() const;
  // Value at a nonzero rational point; the denominator must not vanish there.
  Rat eval(const Rat& x) const;

  std::string str() const;

private:
  void normalize();
  Poly num_, den_;
};

}  // namespace orbitkit
