#include <vector>

#include "doctest.h"
#include "orbitkit/catalog.hpp"
#include "orbitkit/sampling.hpp"
#include "orbitkit/structvec.hpp"

using orbitkit::act;
using orbitkit::adjoint_matrix;
using orbitkit::AlgebraInvariants;
using orbitkit::MatQ;
using orbitkit::product;
using orbitkit::Rat;
using orbitkit::Sampler;
using orbitkit::StructVecQ;

namespace {

std::vector<Rat> basis_vec(std::size_t n, std::size_t i) {
  std::vector<Rat> v(n, Rat(0));
  v[i] = Rat(1);
  return v;
}

}  // namespace

TEST_CASE("product expands bilinearly") {
  // f_s: e=v1 identity, w=v2 with w^2 = s e
  StructVecQ f = orbitkit::f2_quadratic(Rat(3));
  auto e = basis_vec(2, 0), w = basis_vec(2, 1);
  CHECK(product(f, e, e) == e);
  CHECK(product(f, e, w) == w);
  CHECK(product(f, w, e) == w);
  std::vector<Rat> se{Rat(3), Rat(0)};
  CHECK(product(f, w, w) == se);
  // (e + 2w)(e - w) = e + w - 2*3 e = -5e + w
  std::vector<Rat> u{Rat(1), Rat(2)}, v{Rat(1), Rat(-1)};
  std::vector<Rat> expect{Rat(-5), Rat(1)};
  CHECK(product(f, u, v) == expect);
}

TEST_CASE("act is a right action fixing products") {
  Sampler s(101);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t n = 2 + s.raw()() % 2;
    StructVecQ lam = s.structvec(n);
    MatQ g = s.invertible(n), h = s.invertible(n);
    CHECK(act(lam, MatQ::identity(n)) == lam);
    CHECK(act(act(lam, g), h) == act(lam, g * h));
  }
  // change of basis transports products: [gu, gv] = g [u, v]'
  Sampler s2(102);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t n = 2;
    StructVecQ lam = s2.structvec(n);
    MatQ g = s2.invertible(n);
    StructVecQ mu = act(lam, g);
    std::vector<Rat> u{s2.small_rat(), s2.small_rat()};
    std::vector<Rat> v{s2.small_rat(), s2.small_rat()};
    // In the new basis, coordinates x multiply as mu; pushing through g must
    // recover the old product: g * mu(u, v) == lam(g u, g v).
    CHECK(g.apply(product(mu, u, v)) == product(lam, g.apply(u), g.apply(v)));
  }
  CHECK_THROWS_AS(act(StructVecQ(2), MatQ(2, 2)), orbitkit::Singular);
}

TEST_CASE("adjoint matrix columns are products") {
  Sampler s(103);
  StructVecQ lam = s.structvec(3);
  std::vector<Rat> u{Rat(1), Rat(-2), Rat(1, 2)};
  MatQ m = adjoint_matrix(lam, u);
  for (std::size_t j = 0; j < 3; ++j) {
    auto col = product(lam, u, basis_vec(3, j));
    for (std::size_t k = 0; k < 3; ++k) CHECK(m(k, j) == col[k]);
  }
}

TEST_CASE("trace form is symmetric and matches the adjoint trace") {
  Sampler s(104);
  for (int iter = 0; iter < 10; ++iter) {
    StructVecQ lam = s.structvec(3);
    auto T = orbitkit::trace_form(lam);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(T.gram()(i, j) == T.gram()(j, i));
        // independent computation: tr(ad e_i ad e_j)
        MatQ prod = adjoint_matrix(lam, basis_vec(3, i)) *
                    adjoint_matrix(lam, basis_vec(3, j));
        Rat tr(0);
        for (std::size_t k = 0; k < 3; ++k) tr += prod(k, k);
        CHECK(T.gram()(i, j) == tr);
      }
  }
}

TEST_CASE("invariants are basis independent") {
  Sampler s(105);
  for (int iter = 0; iter < 12; ++iter) {
    std::size_t n = 2 + s.raw()() % 2;
    StructVecQ lam = s.structvec(n);
    MatQ g = s.invertible(n);
    AlgebraInvariants a = orbitkit::invariant_dims(lam);
    AlgebraInvariants b = orbitkit::invariant_dims(act(lam, g));
    CHECK(a == b);
  }
}

TEST_CASE("invariants of the zero algebra") {
  StructVecQ zero = orbitkit::two_dim("a0");
  CHECK(zero.is_zero());
  AlgebraInvariants inv = orbitkit::invariant_dims(zero);
  CHECK(inv.trace_rank == 0);
  CHECK(inv.annihilator_dim == 2);
  CHECK(inv.square_dim == 0);
  CHECK(inv.derivation_dim == 4);  // all of gl_2
  CHECK(inv.commutative);
  CHECK(inv.associative);
}

TEST_CASE("axioms detected") {
  // f_s and the split cubic are commutative associative unital algebras
  auto [c1, a1] = orbitkit::check_axioms(orbitkit::f2_quadratic(Rat(2)));
  CHECK(c1);
  CHECK(a1);
  auto [c2, a2] = orbitkit::check_axioms(orbitkit::f3(Rat(1)));
  CHECK(c2);
  CHECK(a2);
  auto [c3, a3] = orbitkit::check_axioms(orbitkit::split_cubic(Rat(5)));
  CHECK(c3);
  CHECK(a3);

  // a noncommutative example: e1*e2 = e1, e2*e1 = 0
  StructVecQ nc(2);
  nc.at(0, 1, 0) = Rat(1);
  auto [c4, a4] = orbitkit::check_axioms(nc);
  CHECK_FALSE(c4);

  // a commutative nonassociative example: e1*e1 = e2, e2*e2 = e1
  StructVecQ na(2);
  na.at(0, 0, 1) = Rat(1);
  na.at(1, 1, 0) = Rat(1);
  auto [c5, a5] = orbitkit::check_axioms(na);
  CHECK(c5);
  CHECK_FALSE(a5);  // (e1 e1) e2 = e2 e2 = e1 but e1 (e1 e2) = 0
}

TEST_CASE("lift and value at zero") {
  Sampler s(106);
  StructVecQ lam = s.structvec(2);
  auto lifted = orbitkit::lift(lam);
  CHECK(orbitkit::structvec_at_zero(lifted) == lam);
  CHECK(orbitkit::structvec_order(orbitkit::lift(orbitkit::two_dim("a0"))) ==
        orbitkit::Order::infinite());
}
