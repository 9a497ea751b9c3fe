#include <vector>

#include "doctest.h"
#include "orbitkit/quadform.hpp"
#include "orbitkit/sampling.hpp"

using orbitkit::BlockDecomposition;
using orbitkit::congruence_act;
using orbitkit::ContractionFamily;
using orbitkit::MatQ;
using orbitkit::MatQt;
using orbitkit::PivotPolicy;
using orbitkit::QuadFormQ;
using orbitkit::QuadFormQt;
using orbitkit::Rat;
using orbitkit::RatFunc;
using orbitkit::Sampler;

namespace {

QuadFormQt lift_form(const QuadFormQ& Q) {
  return QuadFormQt(orbitkit::lift(Q.gram()));
}

}  // namespace

TEST_CASE("quadform rejects asymmetry, evaluates exactly") {
  CHECK_THROWS_AS(QuadFormQ(MatQ(2, 2, {Rat(1), Rat(2), Rat(3), Rat(4)})),
                  orbitkit::NotSymmetric);
  QuadFormQ Q(MatQ(2, 2, {Rat(1), Rat(2), Rat(2), Rat(5)}));
  std::vector<Rat> v{Rat(1), Rat(-1)};
  CHECK(Q.eval(v) == Rat(1) - Rat(4) + Rat(5));  // x^2 + 4xy + 5y^2 at (1,-1)
  std::vector<Rat> u{Rat(1), Rat(0)};
  CHECK(Q.bilinear(u, v) == Rat(-1));
}

TEST_CASE("diagonalize is a congruence onto a diagonal matrix") {
  Sampler s(201);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t n = 1 + s.raw()() % 4;
    QuadFormQ Q(s.symmetric(n));
    auto dr = orbitkit::diagonalize(Q);
    CHECK_FALSE(dr.transform.det().is_zero());
    MatQ D = dr.transform.transpose() * Q.gram() * dr.transform;
    CHECK(D == MatQ::diag(dr.diag));
    // nonzero entries first, zeros trailing
    bool seen_zero = false;
    std::size_t nonzero = 0;
    for (const auto& d : dr.diag) {
      if (d.is_zero())
        seen_zero = true;
      else {
        CHECK_FALSE(seen_zero);
        ++nonzero;
      }
    }
    CHECK(nonzero == Q.rank());
  }
}

TEST_CASE("diagonalize handles a zero diagonal with off-diagonal survivor") {
  // hyperbolic plane: zero diagonal
  QuadFormQ H(MatQ(2, 2, {Rat(0), Rat(1), Rat(1), Rat(0)}));
  auto dr = orbitkit::diagonalize(H);
  MatQ D = dr.transform.transpose() * H.gram() * dr.transform;
  CHECK(D == MatQ::diag(dr.diag));
  CHECK_FALSE(dr.diag[0].is_zero());
  CHECK_FALSE(dr.diag[1].is_zero());
}

TEST_CASE("radical split") {
  Sampler s(202);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t n = 1 + s.raw()() % 4;
    MatQ m(n, n);
    // low-rank symmetric: A^T D A with small A
    MatQ a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(s.int_in(-1, 1));
    std::vector<Rat> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = Rat(s.int_in(-2, 2));
    QuadFormQ Q(a.transpose() * MatQ::diag(d) * a);
    auto sp = orbitkit::radical_split(Q);
    CHECK(sp.nonsingular.n() + sp.corank == n);
    CHECK(sp.nonsingular.rank() == Q.rank());
    CHECK(sp.nonsingular.n() == Q.rank());
    CHECK_FALSE(sp.transform.det().is_zero());
    // g^T B g = Bn (+) 0
    MatQ full = sp.transform.transpose() * Q.gram() * sp.transform;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat expect = (i < sp.nonsingular.n() && j < sp.nonsingular.n())
                         ? sp.nonsingular.gram()(i, j)
                         : Rat(0);
        CHECK(full(i, j) == expect);
      }
  }
  // nonsingular input keeps the identity transform
  QuadFormQ Q(MatQ(2, 2, {Rat(1), Rat(2), Rat(2), Rat(1)}));
  auto sp = orbitkit::radical_split(Q);
  CHECK(sp.corank == 0);
  CHECK(sp.transform == MatQ::identity(2));
  CHECK(sp.nonsingular == Q);
}

TEST_CASE("degenerates_to is the rank order") {
  QuadFormQ a = QuadFormQ::diag_form({Rat(1), Rat(1)});
  QuadFormQ b = QuadFormQ::diag_form({Rat(1), Rat(0)});
  QuadFormQ z = QuadFormQ::zero(2);
  CHECK(orbitkit::degenerates_to(a, b));
  CHECK(orbitkit::degenerates_to(a, z));
  CHECK(orbitkit::degenerates_to(b, z));
  CHECK_FALSE(orbitkit::degenerates_to(b, a));
  CHECK(orbitkit::degenerates_to(a, a));
  CHECK_THROWS_AS(orbitkit::degenerates_to(a, QuadFormQ::zero(3)),
                  orbitkit::DimensionMismatch);
}

TEST_CASE("ordered diagonalization: pinned examples") {
  // diag(a, t^2 b) -> blocks (0,[a]), (2,[b])
  {
    QuadFormQt Q(MatQt::diag({RatFunc(Rat(5)), RatFunc::t_pow(2) * RatFunc(Rat(-3))}));
    auto bd = orbitkit::ordered_diagonalize_qt(Q);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0].exponent == 0);
    CHECK(bd.blocks[0].units == std::vector<RatFunc>{RatFunc(Rat(5))});
    CHECK(bd.blocks[1].exponent == 2);
    CHECK(bd.blocks[1].units == std::vector<RatFunc>{RatFunc(Rat(-3))});
    CHECK(bd.corank == 0);
  }
  // [[t, t], [t, t^3]] -> single block at exponent 1 with units [1, t^2 - 1]
  {
    MatQt m(2, 2);
    m(0, 0) = RatFunc::t();
    m(0, 1) = RatFunc::t();
    m(1, 0) = RatFunc::t();
    m(1, 1) = RatFunc::t_pow(3);
    auto bd = orbitkit::ordered_diagonalize_qt(QuadFormQt(m));
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].exponent == 1);
    REQUIRE(bd.blocks[0].units.size() == 2);
    CHECK(bd.blocks[0].units[0] == RatFunc(Rat(1)));
    CHECK(bd.blocks[0].units[1] ==
          RatFunc(orbitkit::Poly(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)})));
    CHECK(bd.corank == 0);
  }
  // identity stays a single exponent-0 block
  {
    auto bd = orbitkit::ordered_diagonalize_qt(QuadFormQt(MatQt::identity(2)));
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].exponent == 0);
    CHECK(bd.blocks[0].units == std::vector<RatFunc>(2, RatFunc(Rat(1))));
  }
}

TEST_CASE("ordered diagonalization: congruence identity on random forms") {
  Sampler s(203);
  int done = 0;
  while (done < 40) {
    std::size_t n = 2 + s.raw()() % 3;
    MatQt m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        // polynomial entries of order >= 0
        orbitkit::Poly p;
        for (std::size_t k = 0; k <= 2; ++k)
          p += Rat(s.int_in(-3, 3)) * orbitkit::Poly::t_pow(k);
        m(i, j) = RatFunc(p);
        m(j, i) = m(i, j);
      }
    QuadFormQt Q(m);
    for (PivotPolicy pol : {PivotPolicy::kFirst, PivotPolicy::kLast}) {
      BlockDecomposition bd = orbitkit::ordered_diagonalize_qt(Q, pol);
      // exact congruence identity
      CHECK(bd.transform.transpose() * Q.gram() * bd.transform == bd.block_matrix(n));
      // transform entries all of nonnegative order (no scaling allowed)
      CHECK(orbitkit::mat_order(bd.transform).is_nonnegative());
      CHECK_FALSE(bd.transform.det().is_zero());
      // ascending exponents, unit parts of order exactly 0
      std::size_t units = 0;
      for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        if (b > 0) CHECK(bd.blocks[b].exponent > bd.blocks[b - 1].exponent);
        for (const auto& u : bd.blocks[b].units) {
          CHECK(u.order() == orbitkit::Order(0));
          ++units;
        }
      }
      CHECK(units + bd.corank == n);
      CHECK(bd.corank == n - Q.gram().rank());
    }
    ++done;
  }
}

TEST_CASE("ordered diagonalization rejects negative order input") {
  MatQt m(1, 1);
  m(0, 0) = RatFunc::t_pow(-1);
  CHECK_THROWS_AS(orbitkit::ordered_diagonalize_qt(QuadFormQt(m)),
                  orbitkit::NegativeOrder);
}

TEST_CASE("contraction limit of a quadratic form") {
  // Q = diag(1,1) under g^t = [[1, 1/t],[0, 1]] is not amenable (order -2 term)
  QuadFormQ Q = QuadFormQ::diag_form({Rat(1), Rat(1)});
  MatQt g(2, 2);
  g(0, 0) = RatFunc(1);
  g(0, 1) = RatFunc::t_pow(-1);
  g(1, 0) = RatFunc(0);
  g(1, 1) = RatFunc(1);
  CHECK_THROWS_AS(orbitkit::contraction_limit_qf(Q, ContractionFamily(2, g)),
                  orbitkit::NotAmenable);

  // scaling family sends everything to zero
  QuadFormQ lim = orbitkit::contraction_limit_qf(Q, ContractionFamily::scaling(2));
  CHECK(lim == QuadFormQ::zero(2));

  // diag(1, t) keeps the first entry
  MatQt d = MatQt::diag({RatFunc(1), RatFunc::t()});
  QuadFormQ lim2 = orbitkit::contraction_limit_qf(Q, ContractionFamily(2, d));
  CHECK(lim2 == QuadFormQ::diag_form({Rat(1), Rat(0)}));
}

TEST_CASE("family_for_representation contracts onto the padded subform") {
  // Q = diag(2, 3, 5); Q' = diag(2, 3, 0) with the identity witness
  QuadFormQ Q = QuadFormQ::diag_form({Rat(2), Rat(3), Rat(5)});
  QuadFormQ Qp = QuadFormQ::diag_form({Rat(2), Rat(3), Rat(0)});
  ContractionFamily fam = orbitkit::family_for_representation(Q, Qp, MatQ::identity(3));
  QuadFormQ lim = orbitkit::contraction_limit_qf(Q, fam);
  CHECK(lim == Qp);
}

TEST_CASE("represents: decision pins") {
  using orbitkit::represents;
  QuadFormQ one_one = QuadFormQ::diag_form({Rat(1), Rat(1)});
  // sum of two squares represents 2 but not 3
  auto r2 = represents(one_one, QuadFormQ::diag_form({Rat(2), Rat(0)}));
  CHECK(r2.represented);
  REQUIRE(r2.witness.has_value());
  auto r3 = represents(one_one, QuadFormQ::diag_form({Rat(3), Rat(0)}));
  CHECK_FALSE(r3.represented);
  CHECK_FALSE(r3.witness.has_value());

  // every form represents the zero form
  CHECK(represents(one_one, QuadFormQ::zero(2)).represented);
  // and itself (identity witness)
  auto rself = represents(one_one, one_one);
  CHECK(rself.represented);

  // x^2 - y^2 represents any diagonal <a, 0>
  QuadFormQ hyp = QuadFormQ::diag_form({Rat(1), Rat(-1)});
  for (long a : {1, 2, 3, -5, 7}) {
    auto r = represents(hyp, QuadFormQ::diag_form({Rat(a), Rat(0)}));
    CHECK(r.represented);
  }
  // but <1,1> does not represent <-1, 0>
  CHECK_FALSE(represents(one_one, QuadFormQ::diag_form({Rat(-1), Rat(0)})).represented);
  // rank too large
  CHECK_FALSE(represents(QuadFormQ::diag_form({Rat(1), Rat(0)}), one_one).represented);
}

TEST_CASE("represents witnesses realize the subform exactly") {
  Sampler s(204);
  int with_witness = 0;
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t n = 2 + s.raw()() % 2;
    MatQ m = s.symmetric(n);
    QuadFormQ Q(m);
    // build a subform that is genuinely represented: restrict to a random
    // invertible change of basis and keep the leading principal block
    MatQ g = s.invertible(n);
    MatQ full = g.transpose() * m * g;
    std::size_t k = 1 + s.raw()() % n;
    MatQ sub(n, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = full(i, j);
    QuadFormQ Qp(sub);
    auto r = orbitkit::represents(Q, Qp);
    CHECK(r.represented);  // a genuine subform must be detected
    if (r.witness.has_value()) {
      ++with_witness;
      std::size_t rk = orbitkit::radical_split(Qp).nonsingular.n();
      MatQ w = *r.witness;
      // columns evaluate to the nonsingular block of Q'
      QuadFormQ QpN = orbitkit::radical_split(Qp).nonsingular;
      for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < rk; ++j) {
          Rat v = Q.bilinear(w.col(i), w.col(j));
          CHECK(v == QpN.gram()(i, j));
        }
    }
  }
  CHECK(with_witness > 0);
}
