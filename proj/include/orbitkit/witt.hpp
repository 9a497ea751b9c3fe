#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitkit/numtheory.hpp"
#include "orbitkit/quadform.hpp"
#include "orbitkit/rat.hpp"

namespace orbitkit {

// A place of Q: a finite prime or the real place.
class Place {
public:
  static Place infinity() { return Place(true, 0); }
  static Place prime(const mpz_class& p);

  bool is_infinite() const { return inf_; }
  const mpz_class& p() const { return p_; }
  std::string str() const { return inf_ ? "inf" : p_.get_str(); }

  friend bool operator<(const Place& a, const Place& b) {
    if (a.inf_ != b.inf_) return !a.inf_;  // finite primes first, infinity last
    return a.p_ < b.p_;
  }
  friend bool operator==(const Place& a, const Place& b) {
    return a.inf_ == b.inf_ && a.p_ == b.p_;
  }

private:
  Place(bool inf, mpz_class p) : inf_(inf), p_(std::move(p)) {}
  bool inf_;
  mpz_class p_;
};

// Classical Hilbert symbol (a,b)_v in {+1,-1}; a, b nonzero rationals.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Whether a nonzero rational is a square in the completion Q_v.
bool is_square_at(const Rat& a, const Place& v);

struct WittInvariants {
  std::size_t dim = 0;   // ambient dimension
  std::size_t rank = 0;  // nonsingular part dimension
  Rat disc = Rat(1);     // square-free integer representative of the discriminant
  long signature = 0;    // real signature of the nonsingular part
  std::map<Place, int> hasse;  // Hasse symbols over the relevant prime set
  std::size_t witt_index = 0;
  std::size_t anisotropic_dim = 0;

  // Equality of the classifying invariants (rank, disc, signature, Hasse
  // symbols with default +1 off the stored sets); ambient dim is ignored.
  bool equivalent_to(const WittInvariants& o) const;
};

WittInvariants witt_invariants(const QuadFormQ& Q);

// Invariants of the diagonal form with the given nonzero entries.
WittInvariants witt_invariants_of_diagonal(const std::vector<Rat>& entries,
                                           std::size_t ambient_dim);

}  // namespace orbitkit
