#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "orbitkit/rat.hpp"

namespace orbitkit {

bool is_prime(const mpz_class& n);

// Prime factorization of |n| as (prime, exponent) pairs in increasing prime
// order; n must be nonzero.  Uses trial division plus Pollard rho for the
// occasional large cofactor.
std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n);

// Square-free integer representing the square class of n (sign preserved);
// n must be nonzero.
mpz_class squarefree_part(const mpz_class& n);

// Square-free integer representing the square class of a nonzero rational:
// p/q and p*q lie in the same class.
mpz_class squarefree_part(const Rat& q);

}  // namespace orbitkit
