#include <optional>

#include "doctest.h"
#include "orbitkit/catalog.hpp"
#include "orbitkit/contraction.hpp"
#include "orbitkit/sampling.hpp"

using orbitkit::act;
using orbitkit::ContractionFamily;
using orbitkit::ContractionResult;
using orbitkit::MatQ;
using orbitkit::MatQt;
using orbitkit::NecessaryReport;
using orbitkit::Order;
using orbitkit::Rat;
using orbitkit::RatFunc;
using orbitkit::Sampler;
using orbitkit::StructVecQ;

TEST_CASE("contract: f_s under diag(1, t) lands on a4") {
  StructVecQ f = orbitkit::f2_quadratic(Rat(5));
  ContractionFamily C(2, MatQt::diag({RatFunc(1), RatFunc::t()}));
  ContractionResult r = orbitkit::contract(f, C);
  CHECK(r.amenable);
  CHECK(r.min_order == Order(0));
  REQUIRE(r.limit.has_value());
  CHECK(*r.limit == orbitkit::two_dim("a4"));
  // the t-dependent entry scales as t^2 * s
  CHECK(r.lambda_t.at(1, 1, 0) == RatFunc::t_pow(2) * RatFunc(Rat(5)));
}

TEST_CASE("contract: f_s under diag(1, 1/t) is not amenable") {
  StructVecQ f = orbitkit::f2_quadratic(Rat(5));
  ContractionFamily C(2, MatQt::diag({RatFunc(1), RatFunc::t_pow(-1)}));
  ContractionResult r = orbitkit::contract(f, C);
  CHECK_FALSE(r.amenable);
  CHECK(r.min_order == Order(-2));
  CHECK_FALSE(r.limit.has_value());
  CHECK(r.lambda_t.at(1, 1, 0) == RatFunc::t_pow(-2) * RatFunc(Rat(5)));
}

TEST_CASE("contract: scaling family kills every product") {
  Sampler s(401);
  for (std::size_t n = 1; n <= 3; ++n) {
    StructVecQ lam = s.structvec(n);
    ContractionResult r = orbitkit::contract(lam, ContractionFamily::scaling(n));
    CHECK(r.amenable);
    REQUIRE(r.limit.has_value());
    CHECK(r.limit->is_zero());
  }
}

TEST_CASE("contract: constant family is a plain change of basis") {
  Sampler s(402);
  for (int iter = 0; iter < 15; ++iter) {
    std::size_t n = 2 + s.raw()() % 2;
    StructVecQ lam = s.structvec(n);
    MatQ g = s.invertible(n);
    ContractionFamily C(n, orbitkit::lift(g));
    ContractionResult r = orbitkit::contract(lam, C);
    CHECK(r.amenable);
    REQUIRE(r.limit.has_value());
    CHECK(*r.limit == act(lam, g));
  }
}

TEST_CASE("contract: appending a constant isomorphism commutes with the limit") {
  Sampler s(403);
  StructVecQ f = orbitkit::f2_quadratic(Rat(3));
  ContractionFamily C(2, MatQt::diag({RatFunc(1), RatFunc::t()}));
  for (int iter = 0; iter < 10; ++iter) {
    MatQ h = s.invertible(2);
    ContractionFamily Ch(2, C.mat() * orbitkit::lift(h));
    ContractionResult a = orbitkit::contract(f, Ch);
    ContractionResult b = orbitkit::contract(f, C);
    REQUIRE(a.limit.has_value());
    REQUIRE(b.limit.has_value());
    CHECK(*a.limit == act(*b.limit, h));
  }
}

TEST_CASE("trace functor identity on standard families") {
  StructVecQ f = orbitkit::f2_quadratic(Rat(7));
  CHECK(orbitkit::trace_functor_check(f, ContractionFamily(2, MatQt::diag({RatFunc(1), RatFunc::t()}))));
  CHECK(orbitkit::trace_functor_check(f, ContractionFamily::scaling(2)));
  // on f_c the family diag(1, t, t^2) is amenable: w maps to t*w, w^2 to t^2*w^2
  StructVecQ g3 = orbitkit::f3(Rat(2));
  CHECK(orbitkit::trace_functor_check(
      g3, ContractionFamily(
              3, MatQt::diag({RatFunc(1), RatFunc::t(), RatFunc::t_pow(2)}))));
  CHECK_THROWS_AS(
      orbitkit::trace_functor_check(
          f, ContractionFamily(2, MatQt::diag({RatFunc(1), RatFunc::t_pow(-1)}))),
      orbitkit::NotAmenable);
}

TEST_CASE("necessary_report blocks rank increases") {
  StructVecQ a5 = orbitkit::two_dim("a5");
  StructVecQ f = orbitkit::f2_quadratic(Rat(2));
  NecessaryReport up = orbitkit::necessary_report(a5, f);
  CHECK(up.verdict == NecessaryReport::Verdict::kBlocked);
  CHECK(up.rank_from == 1);
  CHECK(up.rank_to == 2);
  CHECK_FALSE(up.reason.empty());

  NecessaryReport down = orbitkit::necessary_report(f, orbitkit::two_dim("a4"));
  CHECK(down.verdict == NecessaryReport::Verdict::kInconclusive);
  CHECK(down.rank_from == 2);
  CHECK(down.rank_to == 1);

  NecessaryReport self = orbitkit::necessary_report(f, f);
  CHECK(self.verdict == NecessaryReport::Verdict::kInconclusive);
  CHECK_THROWS_AS(orbitkit::necessary_report(f, orbitkit::f3(Rat(1))),
                  orbitkit::DimensionMismatch);
}

TEST_CASE("orbit polynomial evaluation") {
  orbitkit::OrbitPolynomial P;
  P.terms.push_back({Rat(2), {{{1, 1, 1}}}});           // 2 * l_111
  P.terms.push_back({Rat(-3), {{{1, 2, 2}, {2, 1, 2}}}});  // -3 * l_122 * l_212
  StructVecQ a4 = orbitkit::two_dim("a4");
  CHECK(P.eval(a4) == Rat(2) - Rat(3));
  orbitkit::OrbitPolynomial constant;
  constant.terms.push_back({Rat(7), {}});
  CHECK(constant.eval(a4) == Rat(7));
}

TEST_CASE("orbit vanishing test is deterministic and sound") {
  auto pairs = orbitkit::forbidden_pairs();
  REQUIRE(pairs.size() == 2);
  for (const auto& pr : pairs) {
    // the witness polynomial vanishes identically on the from-orbit samples
    auto rep = orbitkit::orbit_vanishing_test(pr.witness, pr.from, 50, 99);
    CHECK(rep.all_zero);
    CHECK(rep.samples == 50);
    CHECK(rep.seed == 99);
    CHECK_FALSE(rep.counterexample_g.has_value());
    // and is provably nonzero at the target base point
    CHECK(pr.witness.eval(pr.to) != Rat(0));
    // determinism: the same seed gives the same report
    auto rep2 = orbitkit::orbit_vanishing_test(pr.witness, pr.from, 50, 99);
    CHECK(rep2.all_zero == rep.all_zero);
  }
  // a polynomial that does not vanish on the orbit is caught with a
  // counterexample carrying the sampled matrix and value
  orbitkit::OrbitPolynomial one;
  one.terms.push_back({Rat(1), {}});
  auto bad = orbitkit::orbit_vanishing_test(one, orbitkit::two_dim("a4"), 20, 5);
  CHECK_FALSE(bad.all_zero);
  REQUIRE(bad.counterexample_g.has_value());
  REQUIRE(bad.counterexample_value.has_value());
  CHECK(*bad.counterexample_value == Rat(1));
}

TEST_CASE("verify_certificate on the standard table and a forbidden direction") {
  auto table = orbitkit::standard_contractions();
  CHECK(table.size() >= 5);
  for (const auto& c : table) {
    CAPTURE(c.name);
    CHECK(orbitkit::verify_certificate(c.from, c.family, c.to, c.matcher));
  }
  // a4 does not land on a5 under the scaling-style family diag(1, t)
  StructVecQ a4 = orbitkit::two_dim("a4");
  StructVecQ a5 = orbitkit::two_dim("a5");
  ContractionFamily C(2, MatQt::diag({RatFunc(1), RatFunc::t()}));
  CHECK_FALSE(orbitkit::verify_certificate(a4, C, a5, std::nullopt));
  // wrong matcher is rejected rather than trusted
  CHECK_FALSE(orbitkit::verify_certificate(a4, C, a5, MatQ::identity(2)));
}

TEST_CASE("family construction validates shape and determinant") {
  CHECK_THROWS_AS(ContractionFamily(2, MatQt(2, 3)), orbitkit::DimensionMismatch);
  CHECK_THROWS_AS(ContractionFamily(2, MatQt(2, 2)), orbitkit::Singular);
  MatQt m(2, 2);
  m(0, 0) = RatFunc::t();
  m(0, 1) = RatFunc::t_pow(2);
  m(1, 0) = RatFunc(1);
  m(1, 1) = RatFunc::t();  // det = t^2 - t^2 = 0
  CHECK_THROWS_AS(ContractionFamily(2, m), orbitkit::Singular);
}
