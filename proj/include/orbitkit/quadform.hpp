#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orbitkit/family.hpp"
#include "orbitkit/mat.hpp"

namespace orbitkit {

class NotSymmetric : public Error {
public:
  explicit NotSymmetric(const std::string& msg) : Error("not_symmetric", msg) {}
};

// Quadratic form given by its symmetric Gram matrix over an exact field.
template <class K>
class QuadForm {
public:
  explicit QuadForm(Mat<K> gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw DimensionMismatch("gram matrix must be square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = i + 1; j < gram_.cols(); ++j)
        if (gram_(i, j) != gram_(j, i))
          throw NotSymmetric("gram matrix must be symmetric");
  }

  static QuadForm diag_form(const std::vector<K>& d) { return QuadForm(Mat<K>::diag(d)); }
  static QuadForm zero(std::size_t n) { return QuadForm(Mat<K>(n, n)); }

  std::size_t n() const { return gram_.rows(); }
  const Mat<K>& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rank(); }

  K eval(const std::vector<K>& v) const {  // Q(v) = v^T B v
    return bilinear(v, v);
  }
  K bilinear(const std::vector<K>& u, const std::vector<K>& v) const {
    if (u.size() != n() || v.size() != n())
      throw DimensionMismatch("vector length must match form dimension");
    K acc(0);
    for (std::size_t i = 0; i < n(); ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n(); ++j) acc += u[i] * gram_(i, j) * v[j];
    }
    return acc;
  }

  friend bool operator==(const QuadForm& a, const QuadForm& b) {
    return a.gram_ == b.gram_;
  }
  friend bool operator!=(const QuadForm& a, const QuadForm& b) { return !(a == b); }

private:
  Mat<K> gram_;
};

using QuadFormQ = QuadForm<Rat>;
using QuadFormQt = QuadForm<RatFunc>;

// [Bg] = g^T [B] g; requires det g != 0.
template <class K>
QuadForm<K> congruence_act(const QuadForm<K>& Q, const Mat<K>& g) {
  if (g.rows() != Q.n() || g.cols() != Q.n())
    throw DimensionMismatch("congruence matrix shape mismatch");
  if (g.det().is_zero()) throw Singular("congruence by a singular matrix");
  return QuadForm<K>(g.transpose() * Q.gram() * g);
}

template <class K>
struct DiagResult {
  Mat<K> transform;     // g with g^T B g = diag(diag)
  std::vector<K> diag;  // nonzero entries first, zeros trailing
};

// Symmetric congruence diagonalization over any exact field of char 0.
// When a leading diagonal entry vanishes but an off-diagonal survivor exists,
// the row/column addition repair (new (i,i) entry 2*B(i,j)) is applied.
template <class K>
DiagResult<K> diagonalize(const QuadForm<K>& Q) {
  const std::size_t n = Q.n();
  Mat<K> M = Q.gram();
  Mat<K> g = Mat<K>::identity(n);
  auto congruence = [&](const Mat<K>& E) {
    M = E.transpose() * M * E;
    g = g * E;
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    Mat<K> P = Mat<K>::identity(n);
    P(a, a) = K(0); P(b, b) = K(0);
    P(a, b) = K(1); P(b, a) = K(1);
    congruence(P);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (M(k, k).is_zero()) {
      std::size_t l = k + 1;
      while (l < n && M(l, l).is_zero()) ++l;
      if (l < n) {
        swap_cols(k, l);
      } else {
        // Trailing diagonal all zero: look for an off-diagonal entry.
        std::size_t bi = n, bj = n;
        for (std::size_t i = k; i < n && bi == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (!M(i, j).is_zero()) { bi = i; bj = j; break; }
        if (bi == n) break;  // zero block; done
        Mat<K> E = Mat<K>::identity(n);
        E(bj, bi) = K(1);  // column bi += column bj
        congruence(E);
        if (bi != k) swap_cols(k, bi);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M(k, i).is_zero()) continue;
      Mat<K> E = Mat<K>::identity(n);
      E(k, i) = -(M(k, i) / M(k, k));  // column i -= f * column k
      congruence(E);
    }
  }
  std::vector<K> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = M(i, i);
  return {g, d};
}

template <class K>
struct SplitResult {
  QuadForm<K> nonsingular;  // Q_N, rank(Q_N) = rank(Q)
  std::size_t corank;
  Mat<K> transform;  // g with g^T [B] g = [B_{Q_N}] directly-summed with a zero block
};

// Q = Q_N orthogonal-sum Q_Z.  The nonsingular part is the principal submatrix
// on the lexicographically first column basis (so a nonsingular Q splits as
// itself with g = I); the radical is spanned by the kernel.
template <class K>
SplitResult<K> radical_split(const QuadForm<K>& Q) {
  const std::size_t n = Q.n();
  const Mat<K>& B = Q.gram();
  const std::size_t r = B.rank();
  // First column basis S.  For a symmetric matrix the principal submatrix
  // B[S, S] on any column basis is nonsingular (a vector of the column space
  // vanishing on S is orthogonal to the column space, hence zero); note a
  // chain of nonsingular principal minors need not exist when the diagonal
  // vanishes, so the selection must test column independence, not minors.
  std::vector<std::size_t> S;
  for (std::size_t i = 0; i < n && S.size() < r; ++i) {
    Mat<K> cols(n, S.size() + 1);
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t row = 0; row < n; ++row) cols(row, a) = B(row, S[a]);
    for (std::size_t row = 0; row < n; ++row) cols(row, S.size()) = B(row, i);
    if (cols.rank() == S.size() + 1) S.push_back(i);
  }
  Mat<K> ker = B.kernel_basis();  // n x (n - r)
  Mat<K> g(n, n);
  for (std::size_t a = 0; a < S.size(); ++a) g(S[a], a) = K(1);
  for (std::size_t b = 0; b < ker.cols(); ++b)
    for (std::size_t i = 0; i < n; ++i) g(i, r + b) = ker(i, b);
  Mat<K> Bn(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) Bn(a, b) = B(S[a], S[b]);
  return {QuadForm<K>(Bn), n - r, g};
}

// Orbit-closure order on forms of the same ambient dimension: Q degenerates
// to Q' exactly when rank Q' <= rank Q.
template <class K>
bool degenerates_to(const QuadForm<K>& Q, const QuadForm<K>& Qp) {
  if (Q.n() != Qp.n())
    throw DimensionMismatch("degeneration comparison needs equal dimensions");
  return Qp.rank() <= Q.rank();
}

// ---- order-aware diagonalization over Q(t) ----

struct BlockDecomposition {
  struct Block {
    std::size_t exponent;
    std::vector<RatFunc> units;  // all of order 0
  };
  MatQt transform;  // transform^T B transform = sum of t^e diag(units) + zero block
  std::vector<Block> blocks;  // exponents strictly ascending
  std::size_t corank;

  MatQt block_matrix(std::size_t n) const;  // the diagonal matrix the blocks describe
};

// Pivot tie-breaking among minimum-order entries.  Both policies prefer a
// diagonal pivot when one attains the minimum order (required for the
// off-diagonal repair step to be valid); they differ in which index is taken.
enum class PivotPolicy { kFirst, kLast };

// Diagonalize a symmetric matrix over Q(t) with ord >= 0 entries using only
// congruences whose factors have all entries of order >= 0 (no scaling
// matrices), pivoting on entries of least order.
BlockDecomposition ordered_diagonalize_qt(const QuadFormQt& B,
                                          PivotPolicy policy = PivotPolicy::kFirst);

// B^t = (g^t)^T [B] g^t and its limit at t = 0.
QuadFormQ contraction_limit_qf(const QuadFormQ& Q, const ContractionFamily& C);

// Given witness g0 with congruence_act(Q, g0) = [B_{Q'_N}] ⊥ X block-diagonal,
// the family g^t = g0 * diag(I_rank(Q'_N), t*I) contracts Q onto Q'_N padded
// with zeros.
ContractionFamily family_for_representation(const QuadFormQ& Q, const QuadFormQ& Qprime,
                                            const MatQ& witness);

struct RepresentsResult {
  bool represented;
  std::optional<MatQ> witness;  // first rank(Q'_N) columns realize [B_{Q'_N}]
};

// Decision by the subform criterion over Q (Witt index of Q_N ⊥ -Q'_N at
// least rank Q'_N); the witness search is a bounded-height enumeration and
// never influences the decision.
RepresentsResult represents(const QuadFormQ& Q, const QuadFormQ& Qprime,
                            long height_bound = 20);

}  // namespace orbitkit
