#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitkit/rat.hpp"

namespace orbitkit {

// Polynomial in t over Q.  Coefficients are stored in ascending degree with
// no trailing zeros; the zero polynomial has an empty coefficient vector.
class Poly {
public:
  Poly() = default;
  Poly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
  Poly(long c) : Poly(Rat(c)) {}                             // NOLINT
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly t() { return t_pow(1); }
  static Poly t_pow(std::size_t k);

  // Degree; -1 for the zero polynomial.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of t^k (zero beyond the stored range).
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  // Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int low_deg() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const Rat& s, const Poly& p);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd (zero when both arguments are zero).
  static Poly gcd(Poly a, Poly b);

  Poly monic() const;
  // Quotient by t^k; requires the k lowest coefficients to vanish.
  Poly shift_down(std::size_t k) const;
  Poly shift_up(std::size_t k) const;

  Rat eval(const Rat& x) const;
  Rat at_zero() const { return coeff(0); }

  std::string str() const;  // human-readable, e.g. "1 - 2*t + t^3"

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace orbitkit
