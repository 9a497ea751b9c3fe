#include "orbitkit/poly.hpp"

#include <sstream>

namespace orbitkit {

Poly Poly::t_pow(std::size_t k) {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = Rat(1);
  return Poly(std::move(c));
}

int Poly::low_deg() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
  Poly r = p;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly rem = a;
  if (a.deg() < b.deg()) return {Poly(), rem};
  std::vector<Rat> q(static_cast<std::size_t>(a.deg() - b.deg()) + 1, Rat(0));
  Rat lead_inv = b.leading().inv();
  while (!rem.is_zero() && rem.deg() >= b.deg()) {
    std::size_t shift = static_cast<std::size_t>(rem.deg() - b.deg());
    Rat f = rem.leading() * lead_inv;
    q[shift] = f;
    rem -= f * b.shift_up(shift);
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inv() * *this;
}

Poly Poly::shift_down(std::size_t k) const {
  if (is_zero()) return *this;
  for (std::size_t i = 0; i < k && i < c_.size(); ++i)
    if (!c_[i].is_zero())
      throw NegativeOrder("cannot divide " + str() + " by t^" + std::to_string(k));
  if (c_.size() <= k) return Poly();
  return Poly(std::vector<Rat>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::shift_up(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Rat> c(k, Rat(0));
  c.insert(c.end(), c_.begin(), c_.end());
  return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rat c = c_[i];
    if (first) {
      if (c.sign() < 0) { os << "-"; c = -c; }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (i == 0 || !c.is_one()) {
      os << c.str();
      if (i > 0) os << "*";
    }
    if (i == 1) os << "t";
    else if (i > 1) os << "t^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace orbitkit
