#include "orbitkit/quadform.hpp"

#include <algorithm>
#include <numeric>

#include "orbitkit/witt.hpp"

namespace orbitkit {

MatQt BlockDecomposition::block_matrix(std::size_t n) const {
  MatQt m(n, n);
  std::size_t pos = 0;
  for (const auto& blk : blocks) {
    RatFunc tp = RatFunc::t_pow(static_cast<long>(blk.exponent));
    for (const auto& u : blk.units) m(pos, pos) = tp * u, ++pos;
  }
  return m;  // trailing corank entries stay zero
}

namespace {

// Splits f = t^m * unit with ord(unit) = 0; requires f nonzero.
std::pair<long, RatFunc> t_power_split(const RatFunc& f) {
  long m = f.order().value();
  return {m, f / RatFunc::t_pow(m)};
}

struct PivotChoice {
  bool found = false;
  bool diagonal = false;
  std::size_t i = 0, j = 0;  // i <= j
};

PivotChoice select_pivot(const MatQt& M, std::size_t k, PivotPolicy policy) {
  const std::size_t n = M.rows();
  Order best = Order::infinite();
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Order o = M(i, j).order();
      if (o < best) best = o;
    }
  PivotChoice choice;
  if (best.is_infinite()) return choice;  // trailing block is zero
  choice.found = true;
  // Both policies must prefer a diagonal pivot when one attains the minimum
  // order; otherwise the off-diagonal repair's leading term could cancel.
  std::vector<std::pair<std::size_t, std::size_t>> diag, offdiag;
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (M(i, j).order() == best) (i == j ? diag : offdiag).emplace_back(i, j);
  const bool last = (policy == PivotPolicy::kLast);
  if (!diag.empty()) {
    choice.diagonal = true;
    auto [i, j] = last ? diag.back() : diag.front();
    choice.i = i;
    choice.j = j;
  } else {
    auto [i, j] = last ? offdiag.back() : offdiag.front();
    choice.i = i;
    choice.j = j;
  }
  return choice;
}

}  // namespace

BlockDecomposition ordered_diagonalize_qt(const QuadFormQt& B, PivotPolicy policy) {
  const std::size_t n = B.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!B.gram()(i, j).order().is_nonnegative())
        throw NegativeOrder("entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") has negative order");
  MatQt M = B.gram();
  MatQt g = MatQt::identity(n);
  auto congruence = [&](const MatQt& E) {
    M = E.transpose() * M * E;
    g = g * E;
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    MatQt P = MatQt::identity(n);
    P(a, a) = RatFunc(0); P(b, b) = RatFunc(0);
    P(a, b) = RatFunc(1); P(b, a) = RatFunc(1);
    congruence(P);
  };
  std::size_t k = 0;
  for (; k < n; ++k) {
    PivotChoice pivot = select_pivot(M, k, policy);
    if (!pivot.found) break;
    if (!pivot.diagonal) {
      // All diagonal orders exceed ord m, so adding row/column j to i gives
      // the (i,i) entry a + 2m + b of order exactly ord m.
      MatQt E = MatQt::identity(n);
      E(pivot.j, pivot.i) = RatFunc(1);  // column i += column j
      congruence(E);
    }
    swap_cols(k, pivot.i);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M(k, i).is_zero()) continue;
      MatQt E = MatQt::identity(n);
      E(k, i) = -(M(k, i) / M(k, k));  // order >= 0 by pivot minimality
      congruence(E);
    }
  }
  BlockDecomposition out;
  out.corank = n - k;
  out.transform = g;
  // The pivots were chosen by nondecreasing order, so the diagonal exponents
  // already ascend; group equal exponents into blocks.
  for (std::size_t i = 0; i < k; ++i) {
    auto [m, unit] = t_power_split(M(i, i));
    std::size_t e = static_cast<std::size_t>(m);
    if (out.blocks.empty() || out.blocks.back().exponent != e)
      out.blocks.push_back({e, {}});
    out.blocks.back().units.push_back(unit);
  }
  return out;
}

QuadFormQ contraction_limit_qf(const QuadFormQ& Q, const ContractionFamily& C) {
  if (C.n() != Q.n()) throw DimensionMismatch("family dimension mismatch");
  MatQt Bt = C.mat().transpose() * lift(Q.gram()) * C.mat();
  for (std::size_t i = 0; i < Bt.rows(); ++i)
    for (std::size_t j = 0; j < Bt.cols(); ++j)
      if (!Bt(i, j).order().is_nonnegative())
        throw NotAmenable("entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") of B^t has order " +
                          Bt(i, j).order().str());
  return QuadFormQ(mat_at_zero(Bt));
}

ContractionFamily family_for_representation(const QuadFormQ& Q, const QuadFormQ& Qprime,
                                            const MatQ& witness) {
  if (Q.n() != Qprime.n())
    throw DimensionMismatch("forms must share the ambient dimension");
  const std::size_t n = Q.n();
  auto split = radical_split(Qprime);
  const std::size_t r = split.nonsingular.n();
  MatQ transformed = congruence_act(Q, witness).gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool top_left = i < r && j < r;
      if (top_left && transformed(i, j) != split.nonsingular.gram()(i, j))
        throw BadWitness("witness congruence does not reproduce the nonsingular part");
      if (!top_left && (i < r) != (j < r) && !transformed(i, j).is_zero())
        throw BadWitness("witness congruence is not block-diagonal");
    }
  MatQt gt = MatQt::identity(n);
  for (std::size_t i = r; i < n; ++i) gt(i, i) = RatFunc::t();
  return ContractionFamily(n, lift(witness) * gt);
}

namespace {

// Rationals of height <= H (height = max(|num|, den)), ordered by height then
// by value, starting from 0.  layers[h] is the count of entries of height <= h.
std::vector<Rat> height_ball(long H, std::vector<std::size_t>& layers) {
  std::vector<Rat> out;
  out.emplace_back(0);
  layers.assign(1, out.size());
  for (long h = 1; h <= H; ++h) {
    std::vector<Rat> layer;
    for (long q = 1; q <= h; ++q) {
      // max(|p|, q) == h exactly
      if (q == h) {
        for (long p = -h; p <= h; ++p)
          if (std::gcd(std::abs(p), q) == 1) layer.emplace_back(p, q);
      } else {
        for (long p : {-h, h})
          if (std::gcd(std::abs(p), q) == 1) layer.emplace_back(p, q);
      }
    }
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
    layers.push_back(out.size());
  }
  return out;
}

struct WitnessSearch {
  const MatQ& B;  // ambient gram
  const std::vector<Rat>& ball;
  const std::vector<std::size_t>& ball_layers;
  long budget;

  // Find columns v_1..v_r, pairwise B-orthogonal, with Q(v_i) = want[i],
  // each v_i expressed in the current complement basis.  Returns columns in
  // ambient coordinates.
  bool search(const MatQ& basis, const std::vector<Rat>& want, std::size_t idx,
              std::vector<std::vector<Rat>>& found) {
    if (idx == want.size()) return true;
    const std::size_t dim = basis.cols();
    if (dim == 0) return false;
    // Candidate enumeration: standard complement basis vectors first, then
    // height-ordered rational tuples.
    auto try_vec = [&](const std::vector<Rat>& coords) -> bool {
      if (--budget < 0) return false;
      std::vector<Rat> v(B.rows(), Rat(0));
      for (std::size_t c = 0; c < dim; ++c) {
        if (coords[c].is_zero()) continue;
        for (std::size_t i = 0; i < B.rows(); ++i) v[i] += coords[c] * basis(i, c);
      }
      // Q(v) = want[idx]?
      Rat val(0);
      std::vector<Rat> Bv(B.rows(), Rat(0));
      for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.rows(); ++j) Bv[i] += B(i, j) * v[j];
      for (std::size_t i = 0; i < B.rows(); ++i) val += v[i] * Bv[i];
      if (val != want[idx]) return false;
      // Restrict to the B-orthogonal complement of v inside the current basis:
      // kernel of the 1 x dim row (Bv)^T * basis.
      MatQ row(1, dim);
      for (std::size_t c = 0; c < dim; ++c) {
        Rat acc(0);
        for (std::size_t i = 0; i < B.rows(); ++i) acc += Bv[i] * basis(i, c);
        row(0, c) = acc;
      }
      MatQ ker = row.kernel_basis();        // dim x (dim - rank)
      MatQ next = basis * ker;              // ambient x smaller
      found.push_back(v);
      if (search(next, want, idx + 1, found)) return true;
      found.pop_back();
      return false;
    };
    std::vector<Rat> coords(dim, Rat(0));
    for (std::size_t c = 0; c < dim; ++c) {  // basis vectors first
      coords[c] = Rat(1);
      if (try_vec(coords)) return true;
      coords[c] = Rat(0);
    }
    // Tuples by increasing height (max coordinate height); within a layer the
    // first nonzero coordinate is taken positive, since a sign flip changes
    // neither Q(v) nor orthogonality constraints.
    for (std::size_t layer = 1; layer < ball_layers.size(); ++layer) {
      const std::size_t hi = ball_layers[layer], lo = ball_layers[layer - 1];
      std::vector<std::size_t> stack(dim, 0);
      for (;;) {
        if (budget < 0) return false;
        bool fresh = false;  // at least one coordinate from this layer
        bool skip = false;
        bool leading = true;
        for (std::size_t c = 0; c < dim; ++c) {
          if (stack[c] >= lo) fresh = true;
          coords[c] = ball[stack[c]];
          if (leading && !coords[c].is_zero()) {
            if (coords[c].sign() < 0) skip = true;
            leading = false;
          }
        }
        if (fresh && !skip && try_vec(coords)) return true;
        std::size_t c = 0;
        while (c < dim && ++stack[c] == hi) stack[c++] = 0;
        if (c == dim) break;
      }
    }
    return false;
  }
};

}  // namespace

RepresentsResult represents(const QuadFormQ& Q, const QuadFormQ& Qprime,
                            long height_bound) {
  if (Q.n() != Qprime.n())
    throw DimensionMismatch("forms must share the ambient dimension");
  const std::size_t n = Q.n();
  auto splitQ = radical_split(Q);
  auto splitP = radical_split(Qprime);
  const std::size_t r = splitP.nonsingular.n();
  if (r == 0) return {true, MatQ::identity(n)};
  if (splitQ.nonsingular.n() < r) return {false, std::nullopt};

  auto dQ = diagonalize(splitQ.nonsingular);
  auto dP = diagonalize(splitP.nonsingular);
  std::vector<Rat> combined;
  for (const auto& x : dQ.diag) combined.push_back(x);
  for (const auto& x : dP.diag) combined.push_back(-x);
  WittInvariants w = witt_invariants_of_diagonal(combined, combined.size());
  bool decision = w.witt_index >= r;
  if (!decision) return {false, std::nullopt};

  // Witness search (bounded; never affects the decision).  Realize the
  // diagonal values of Q'_N orthogonally inside Q, then undo the
  // diagonalization of Q'_N and complete with the B-orthogonal complement.
  // When the forms coincide, the radical-splitting transform is already a
  // witness (its leading columns realize the nonsingular part).
  if (Qprime.gram() == Q.gram()) return {true, splitP.transform};
  std::vector<std::size_t> layers;
  std::vector<Rat> ball = height_ball(height_bound, layers);
  WitnessSearch ws{Q.gram(), ball, layers, 200000};
  std::vector<std::vector<Rat>> found;
  if (!ws.search(MatQ::identity(n), dP.diag, 0, found)) return {true, std::nullopt};
  MatQ V(n, r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < n; ++i) V(i, c) = found[c][i];
  // U = V * h^{-1} satisfies U^T B U = [B_{Q'_N}].
  MatQ U = V * dP.transform.inverse();
  MatQ UtB = U.transpose() * Q.gram();
  MatQ comp = UtB.kernel_basis();  // n x (n - r)
  MatQ g0(n, n);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < n; ++i) g0(i, c) = U(i, c);
  for (std::size_t c = 0; c < comp.cols(); ++c)
    for (std::size_t i = 0; i < n; ++i) g0(i, r + c) = comp(i, c);
  if (g0.det().is_zero()) return {true, std::nullopt};  // defensive; see header
  return {true, g0};
}

}  // namespace orbitkit
