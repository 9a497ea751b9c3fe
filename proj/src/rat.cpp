#include "orbitkit/rat.hpp"

#include <cctype>
#include <ostream>

namespace orbitkit {

namespace {
void require_nonzero_den(const mpz_class& d) {
  if (sgn(d) == 0) throw DivisionByZero("rational with zero denominator");
}
}  // namespace

Rat::Rat(long n, long d) {
  require_nonzero_den(mpz_class(d));
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  require_nonzero_den(d);
  v_ = mpq_class(n) / mpq_class(d);
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(const std::string& s) {
  auto is_int = [](const std::string& p) {
    if (p.empty()) return false;
    std::size_t i = (p[0] == '-' || p[0] == '+') ? 1 : 0;
    if (i == p.size()) return false;
    for (; i < p.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  if (!is_int(num) || !is_int(den))
    throw ParseError("bad rational literal: \"" + s + "\"");
  if (num[0] == '+') num.erase(0, 1);  // mpz_class rejects a leading '+'
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (sgn(d) == 0) throw ParseError("zero denominator in \"" + s + "\"");
  return Rat(n, d);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) return pow(base.inv(), -e);
  Rat acc(1), b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

bool Rat::is_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(v_.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(v_.get_den().get_mpz_t());
}

Rat Rat::sqrt_exact() const {
  if (!is_square()) throw NotAmenable("not a rational square: " + str());
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
  return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace orbitkit
