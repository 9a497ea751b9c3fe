#include "orbitkit/mat.hpp"

namespace orbitkit {

Order mat_order(const MatQt& m) {
  Order best = Order::infinite();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Order o = m(i, j).order();
      if (o < best) best = o;
    }
  return best;
}

MatQ mat_at_zero(const MatQt& m) {
  MatQ r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).at_zero();
  return r;
}

MatQ mat_eval(const MatQt& m, const Rat& x) {
  MatQ r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(x);
  return r;
}

MatQt lift(const MatQ& m) {
  MatQt r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RatFunc(m(i, j));
  return r;
}

}  // namespace orbitkit
