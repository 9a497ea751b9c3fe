#pragma once

#include <cstddef>
#include <vector>

#include "orbitkit/mat.hpp"
#include "orbitkit/quadform.hpp"

namespace orbitkit {

// The n^3 tensor lambda_{ijk} of a bilinear product [v_i, v_j] = sum_k
// lambda_{ijk} v_k.  Indices are 0-based in code; the JSON encoding is
// 1-based.
template <class K>
class StructVec {
public:
  explicit StructVec(std::size_t n) : n_(n), e_(n * n * n, K(0)) {}

  std::size_t n() const { return n_; }
  K& at(std::size_t i, std::size_t j, std::size_t k) { return e_[idx(i, j, k)]; }
  const K& at(std::size_t i, std::size_t j, std::size_t k) const { return e_[idx(i, j, k)]; }
  const std::vector<K>& entries() const { return e_; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const StructVec& a, const StructVec& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const StructVec& a, const StructVec& b) { return !(a == b); }

private:
  std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= n_ || j >= n_ || k >= n_)
      throw DimensionMismatch("structure vector index out of range");
    return (i * n_ + j) * n_ + k;
  }
  std::size_t n_;
  std::vector<K> e_;
};

using StructVecQ = StructVec<Rat>;
using StructVecQt = StructVec<RatFunc>;

// [u, v] by bilinear expansion.
template <class K>
std::vector<K> product(const StructVec<K>& lam, const std::vector<K>& u,
                       const std::vector<K>& v) {
  const std::size_t n = lam.n();
  if (u.size() != n || v.size() != n)
    throw DimensionMismatch("product operands must have length n");
  std::vector<K> out(n, K(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      K uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += uv * lam.at(i, j, k);
    }
  }
  return out;
}

// Change of basis: lambda'_{ijk} = sum_{a,b,c} g_{ai} g_{bj} ghat_{kc} lambda_{abc}
// with ghat = adjugate(g)/det(g) (a right action of GL_n).
template <class K>
StructVec<K> act(const StructVec<K>& lam, const Mat<K>& g) {
  const std::size_t n = lam.n();
  if (g.rows() != n || g.cols() != n)
    throw DimensionMismatch("change-of-basis matrix must be n x n");
  auto adj = g.adjugate_inverse();
  if (!adj.inverse) throw Singular("change of basis by a singular matrix");
  const Mat<K>& inv = *adj.inverse;
  StructVec<K> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<K> gi = g.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<K> w = product(lam, gi, g.col(j));
      for (std::size_t k = 0; k < n; ++k) {
        K acc(0);
        for (std::size_t c = 0; c < n; ++c) acc += inv(k, c) * w[c];
        out.at(i, j, k) = acc;
      }
    }
  }
  return out;
}

// Matrix of v -> [u, v]; column j is [u, e_j].
template <class K>
Mat<K> adjoint_matrix(const StructVec<K>& lam, const std::vector<K>& u) {
  const std::size_t n = lam.n();
  if (u.size() != n) throw DimensionMismatch("adjoint vector must have length n");
  Mat<K> m(n, n);
  std::vector<K> ej(n, K(0));
  for (std::size_t j = 0; j < n; ++j) {
    ej[j] = K(1);
    std::vector<K> col = product(lam, u, ej);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
    ej[j] = K(0);
  }
  return m;
}

// t_{ij} = sum_{k,l} lambda_{ikl} lambda_{jlk}  (= tr(ad e_i * ad e_j)).
template <class K>
QuadForm<K> trace_form(const StructVec<K>& lam) {
  const std::size_t n = lam.n();
  Mat<K> t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      K acc(0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) acc += lam.at(i, k, l) * lam.at(j, l, k);
      t(i, j) = acc;
      t(j, i) = acc;
    }
  return QuadForm<K>(t);
}

template <class K>
std::size_t algebra_rank(const StructVec<K>& lam) {
  return trace_form(lam).rank();
}

struct AlgebraInvariants {
  std::size_t trace_rank = 0;
  std::size_t annihilator_dim = 0;
  std::size_t square_dim = 0;
  std::size_t derivation_dim = 0;
  bool commutative = false;
  bool associative = false;

  friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};

std::pair<bool, bool> check_axioms(const StructVecQ& lam);  // (commutative, associative)
AlgebraInvariants invariant_dims(const StructVecQ& lam);

StructVecQt lift(const StructVecQ& lam);
// Entrywise value at t = 0; every entry must have order >= 0.
StructVecQ structvec_at_zero(const StructVecQt& lam);
Order structvec_order(const StructVecQt& lam);

}  // namespace orbitkit
