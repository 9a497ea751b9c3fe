#pragma once

#include "orbitkit/mat.hpp"

namespace orbitkit {

// One-parameter family {g^t} of matrices over Q(t), invertible as a matrix
// over Q(t) (so invertible for all but finitely many rational t).
class ContractionFamily {
public:
  ContractionFamily(std::size_t n, MatQt mat) : n_(n), mat_(std::move(mat)) {
    if (mat_.rows() != n_ || mat_.cols() != n_)
      throw DimensionMismatch("contraction family matrix must be n x n");
    if (mat_.det().is_zero())
      throw Singular("contraction family determinant vanishes identically");
  }

  static ContractionFamily scaling(std::size_t n) {  // g^t = t*I
    return ContractionFamily(n, RatFunc::t() * MatQt::identity(n));
  }

  std::size_t n() const { return n_; }
  const MatQt& mat() const { return mat_; }

private:
  std::size_t n_;
  MatQt mat_;
};

}  // namespace orbitkit
