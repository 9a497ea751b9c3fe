#include "orbitkit/witt.hpp"

#include <set>

namespace orbitkit {

Place Place::prime(const mpz_class& p) {
  if (p < 2 || !is_prime(p)) throw BadPrime("not a prime: " + p.get_str());
  return Place(false, p);
}

namespace {

long val_at(const Rat& a, const mpz_class& p) {
  long v = 0;
  mpz_class n = a.num();
  while (n % p == 0) { n /= p; ++v; }
  mpz_class d = a.den();
  while (d % p == 0) { d /= p; --v; }
  return v;
}

// num and den of a with all powers of p removed.
std::pair<mpz_class, mpz_class> unit_part(const Rat& a, const mpz_class& p) {
  mpz_class n = a.num(), d = a.den();
  while (n % p == 0) n /= p;
  while (d % p == 0) d /= p;
  return {n, d};
}

// Legendre symbol of the unit part of a modulo an odd prime p.
int legendre_unit(const Rat& a, const mpz_class& p) {
  auto [n, d] = unit_part(a, p);
  return mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) *
         mpz_legendre(d.get_mpz_t(), p.get_mpz_t());
}

// Residue mod 8 of the (odd) unit part of a at p = 2; inverses of odd
// residues mod 8 are themselves, so n/d reduces to n*d.
long unit_mod8(const Rat& a) {
  auto [n, d] = unit_part(a, 2);
  mpz_class r = ((n * d) % 8 + 8) % 8;
  return r.get_si();
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a.is_zero() || b.is_zero())
    throw ZeroParameter("hilbert symbol requires nonzero arguments");
  if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  const mpz_class& p = v.p();
  long alpha = val_at(a, p), beta = val_at(b, p);
  if (p == 2) {
    long u = unit_mod8(a), w = unit_mod8(b);
    auto eps = [](long x) { return (x % 4 == 3) ? 1 : 0; };      // (x-1)/2 mod 2
    auto omega = [](long x) { return (x == 3 || x == 5) ? 1 : 0; };  // (x^2-1)/8 mod 2
    long e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int sym = 1;
  if ((alpha % 2) != 0 && (beta % 2) != 0 && p % 4 == 3) sym = -sym;
  if ((beta % 2) != 0 && legendre_unit(a, p) < 0) sym = -sym;
  if ((alpha % 2) != 0 && legendre_unit(b, p) < 0) sym = -sym;
  return sym;
}

bool is_square_at(const Rat& a, const Place& v) {
  if (a.is_zero()) throw ZeroParameter("zero has no square class");
  if (v.is_infinite()) return a.sign() > 0;
  const mpz_class& p = v.p();
  if (val_at(a, p) % 2 != 0) return false;
  if (p == 2) return unit_mod8(a) == 1;
  return legendre_unit(a, p) == 1;
}

bool WittInvariants::equivalent_to(const WittInvariants& o) const {
  if (rank != o.rank || disc != o.disc || signature != o.signature) return false;
  std::set<Place> keys;
  for (const auto& [k, _] : hasse) keys.insert(k);
  for (const auto& [k, _] : o.hasse) keys.insert(k);
  for (const auto& k : keys) {
    auto a = hasse.find(k), b = o.hasse.find(k);
    int va = (a == hasse.end()) ? 1 : a->second;
    int vb = (b == o.hasse.end()) ? 1 : b->second;
    if (va != vb) return false;
  }
  return true;
}

namespace {

bool isotropic_step(std::size_t r, const Rat& d, long sig,
                    const std::map<Place, int>& eps) {
  if (r <= 1) return false;
  if (r == 2) return d == Rat(-1);
  if (r == 3) {
    for (const auto& [v, e] : eps)
      if (e != hilbert_symbol(Rat(-1), -d, v)) return false;
    return true;
  }
  if (r == 4) {
    for (const auto& [v, e] : eps)
      if (is_square_at(d, v) && e != hilbert_symbol(Rat(-1), Rat(-1), v)) return false;
    return true;
  }
  return static_cast<long>(r) > sig && sig > -static_cast<long>(r);  // indefinite
}

}  // namespace

WittInvariants witt_invariants_of_diagonal(const std::vector<Rat>& entries,
                                           std::size_t ambient_dim) {
  WittInvariants w;
  w.dim = ambient_dim;
  w.rank = entries.size();
  for (const auto& e : entries)
    if (e.is_zero()) throw ZeroParameter("diagonal entries must be nonzero");

  mpz_class disc = 1;
  long sig = 0;
  for (const auto& e : entries) {
    disc *= squarefree_part(e);
    sig += e.sign();
  }
  w.disc = Rat(squarefree_part(disc));
  w.signature = sig;

  std::set<Place> places = {Place::prime(2), Place::infinity()};
  for (const auto& e : entries)
    for (const auto& [p, _] : factorize(squarefree_part(e)))
      places.insert(Place::prime(p));
  for (const auto& v : places) {
    int eps = 1;
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        eps *= hilbert_symbol(entries[i], entries[j], v);
    w.hasse[v] = eps;
  }

  // Peel hyperbolic planes at the invariant level until anisotropic.
  std::size_t r = w.rank;
  Rat d = w.disc;
  std::map<Place, int> eps = w.hasse;
  std::size_t wi = 0;
  while (r >= 2 && isotropic_step(r, d, sig, eps)) {
    for (auto& [v, e] : eps) e *= hilbert_symbol(Rat(-1), -d, v);
    d = -d;  // disc of the split-off complement; still square-free
    r -= 2;
    ++wi;
  }
  w.witt_index = wi;
  w.anisotropic_dim = r;
  return w;
}

WittInvariants witt_invariants(const QuadFormQ& Q) {
  auto dg = diagonalize(Q);
  std::vector<Rat> nonzero;
  for (const auto& d : dg.diag)
    if (!d.is_zero()) nonzero.push_back(d);
  return witt_invariants_of_diagonal(nonzero, Q.n());
}

}  // namespace orbitkit
