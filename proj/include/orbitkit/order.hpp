#pragma once

#include <compare>
#include <string>

#include "orbitkit/errors.hpp"

namespace orbitkit {

// Valuation at t = 0; the order of the zero element is +infinity.
class Order {
public:
  static Order infinite() { return Order(true, 0); }
  explicit Order(long v) : inf_(false), v_(v) {}

  bool is_infinite() const { return inf_; }
  long value() const {
    if (inf_) throw NotAmenable("order of zero is infinite");
    return v_;
  }
  bool is_nonnegative() const { return inf_ || v_ >= 0; }

  friend bool operator==(const Order& a, const Order& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Order& a, const Order& b) { return !(a == b); }
  friend bool operator<(const Order& a, const Order& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Order& a, const Order& b) { return a == b || a < b; }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
  Order(bool inf, long v) : inf_(inf), v_(v) {}
  bool inf_;
  long v_;
};

}  // namespace orbitkit
