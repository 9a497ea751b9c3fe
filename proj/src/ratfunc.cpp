#include "orbitkit/ratfunc.hpp"

namespace orbitkit {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rat lead = den_.leading();
  if (!lead.is_one()) {
    Rat inv = lead.inv();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFunc RatFunc::t_pow(long k) {
  if (k >= 0) return RatFunc(Poly::t_pow(static_cast<std::size_t>(k)));
  return RatFunc(Poly(Rat(1)), Poly::t_pow(static_cast<std::size_t>(-k)));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

Order RatFunc::order() const {
  if (is_zero()) return Order::infinite();
  // den_ is coprime to num_, so at most one of the two vanishes at 0.
  return Order(num_.low_deg() - den_.low_deg());
}

Rat RatFunc::at_zero() const {
  Order o = order();
  if (o.is_infinite()) return Rat(0);
  if (o.value() < 0)
    throw NegativeOrder("order " + o.str() + " < 0: no value at t=0 for " + str());
  if (o.value() > 0) return Rat(0);
  int k = den_.low_deg();  // equals num_.low_deg() here
  return num_.coeff(static_cast<std::size_t>(k)) / den_.coeff(static_cast<std::size_t>(k));
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d.is_zero())
    throw DivisionByZero("denominator of " + str() + " vanishes at t=" + x.str());
  return num_.eval(x) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace orbitkit
