#include "orbitkit/numtheory.hpp"

#include <algorithm>
#include <map>

#include "orbitkit/errors.hpp"

namespace orbitkit {

bool is_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  // n odd, composite, > 1.  Deterministic sweep over polynomial offsets.
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = abs(x - y);
      if (diff == 0) { d = n; break; }
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) { out[n] += 1; return; }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n) {
  if (n == 0) throw NotAmenable("cannot factor zero");
  mpz_class m = abs(n);
  std::map<mpz_class, int> acc;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (m % p == 0) { acc[mpz_class(p)] += 1; m /= p; }
  }
  // Trial division by 6k +- 1 up to a modest bound, then rho on the rest.
  for (mpz_class p = 41; p * p <= m && p < 100000; p += (p % 6 == 5 ? 2 : 4)) {
    while (m % p == 0) { acc[p] += 1; m /= p; }
  }
  if (m > 1) factor_into(m, acc);
  return {acc.begin(), acc.end()};
}

mpz_class squarefree_part(const mpz_class& n) {
  mpz_class r = (n < 0) ? -1 : 1;
  for (const auto& [p, e] : factorize(n))
    if (e % 2 == 1) r *= p;
  return r;
}

mpz_class squarefree_part(const Rat& q) {
  if (q.is_zero()) throw NotAmenable("zero has no square class");
  return squarefree_part(mpz_class(q.num() * q.den()));
}

}  // namespace orbitkit
