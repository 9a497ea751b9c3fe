#include "orbitkit/structvec.hpp"

namespace orbitkit {

std::pair<bool, bool> check_axioms(const StructVecQ& lam) {
  const std::size_t n = lam.n();
  bool comm = true;
  for (std::size_t i = 0; i < n && comm; ++i)
    for (std::size_t j = 0; j < n && comm; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (lam.at(i, j, k) != lam.at(j, i, k)) { comm = false; break; }
  bool assoc = true;
  auto basis = [&](std::size_t i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = Rat(1);
    return v;
  };
  for (std::size_t i = 0; i < n && assoc; ++i)
    for (std::size_t j = 0; j < n && assoc; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto left = product(lam, product(lam, basis(i), basis(j)), basis(k));
        auto right = product(lam, basis(i), product(lam, basis(j), basis(k)));
        if (left != right) { assoc = false; break; }
      }
  return {comm, assoc};
}

AlgebraInvariants invariant_dims(const StructVecQ& lam) {
  const std::size_t n = lam.n();
  AlgebraInvariants inv;
  inv.trace_rank = algebra_rank(lam);

  // Annihilator: u with [u, v_j] = [v_j, u] = 0 for all j.  Rows are the
  // (j,k) components of both sided products; unknowns are u_i.
  MatQ ann(2 * n * n, n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k, row += 2)
      for (std::size_t i = 0; i < n; ++i) {
        ann(row, i) = lam.at(i, j, k);
        ann(row + 1, i) = lam.at(j, i, k);
      }
  inv.annihilator_dim = n - ann.rank();

  // Square: span of all products [e_i, e_j].
  MatQ sq(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sq(i * n + j, k) = lam.at(i, j, k);
  inv.square_dim = sq.rank();

  // Derivations: D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]; unknowns D_{rs} in
  // column r*n + s; one equation per (i, j, m).
  MatQ der(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        std::size_t r = (i * n + j) * n + m;
        for (std::size_t k = 0; k < n; ++k) der(r, m * n + k) += lam.at(i, j, k);
        for (std::size_t a = 0; a < n; ++a) der(r, a * n + i) -= lam.at(a, j, m);
        for (std::size_t b = 0; b < n; ++b) der(r, b * n + j) -= lam.at(i, b, m);
      }
  inv.derivation_dim = n * n - der.rank();

  auto [comm, assoc] = check_axioms(lam);
  inv.commutative = comm;
  inv.associative = assoc;
  return inv;
}

StructVecQt lift(const StructVecQ& lam) {
  StructVecQt out(lam.n());
  for (std::size_t i = 0; i < lam.n(); ++i)
    for (std::size_t j = 0; j < lam.n(); ++j)
      for (std::size_t k = 0; k < lam.n(); ++k)
        out.at(i, j, k) = RatFunc(lam.at(i, j, k));
  return out;
}

StructVecQ structvec_at_zero(const StructVecQt& lam) {
  StructVecQ out(lam.n());
  for (std::size_t i = 0; i < lam.n(); ++i)
    for (std::size_t j = 0; j < lam.n(); ++j)
      for (std::size_t k = 0; k < lam.n(); ++k)
        out.at(i, j, k) = lam.at(i, j, k).at_zero();
  return out;
}

Order structvec_order(const StructVecQt& lam) {
  Order best = Order::infinite();
  for (const auto& e : lam.entries()) {
    Order o = e.order();
    if (o < best) best = o;
  }
  return best;
}

}  // namespace orbitkit
