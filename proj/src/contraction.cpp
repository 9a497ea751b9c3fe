#include "orbitkit/contraction.hpp"

#include "orbitkit/sampling.hpp"

namespace orbitkit {

ContractionResult contract(const StructVecQ& lam, const ContractionFamily& C) {
  if (C.n() != lam.n())
    throw DimensionMismatch("contraction family dimension mismatch");
  StructVecQt lt = act(lift(lam), C.mat());
  Order o = structvec_order(lt);
  ContractionResult res{lt, o, o.is_nonnegative(), std::nullopt};
  if (res.amenable) res.limit = structvec_at_zero(lt);
  return res;
}

bool trace_functor_check(const StructVecQ& lam, const ContractionFamily& C) {
  ContractionResult r = contract(lam, C);
  if (!r.amenable)
    throw NotAmenable("contraction has no limit (min order " + r.min_order.str() + ")");
  MatQ lhs = mat_at_zero(trace_form(r.lambda_t).gram());
  MatQ rhs = trace_form(*r.limit).gram();
  return lhs == rhs;
}

NecessaryReport necessary_report(const StructVecQ& from, const StructVecQ& to) {
  if (from.n() != to.n())
    throw DimensionMismatch("necessary_report needs equal dimensions");
  NecessaryReport rep;
  rep.rank_from = algebra_rank(from);
  rep.rank_to = algebra_rank(to);
  rep.dims_from = invariant_dims(from);
  rep.dims_to = invariant_dims(to);
  if (rep.rank_to > rep.rank_from) {
    rep.verdict = NecessaryReport::Verdict::kBlocked;
    rep.reason = "trace rank would increase (" + std::to_string(rep.rank_from) +
                 " -> " + std::to_string(rep.rank_to) + "); rank strata are closed";
  } else {
    rep.verdict = NecessaryReport::Verdict::kInconclusive;
    rep.reason = "no rank obstruction; degeneration not decided";
  }
  return rep;
}

Rat OrbitPolynomial::eval(const StructVecQ& lam) const {
  Rat acc(0);
  const long n = static_cast<long>(lam.n());
  for (const auto& term : terms) {
    Rat prod = term.coeff;
    for (const auto& m : term.monomial) {
      if (m[0] < 1 || m[0] > n || m[1] < 1 || m[1] > n || m[2] < 1 || m[2] > n)
        throw DimensionMismatch("monomial index out of range");
      prod *= lam.at(static_cast<std::size_t>(m[0] - 1), static_cast<std::size_t>(m[1] - 1),
                     static_cast<std::size_t>(m[2] - 1));
    }
    acc += prod;
  }
  return acc;
}

VanishingReport orbit_vanishing_test(const OrbitPolynomial& P, const StructVecQ& lam,
                                     std::size_t samples, std::uint64_t seed) {
  VanishingReport rep;
  rep.samples = samples;
  rep.seed = seed;
  Sampler sampler(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    MatQ g = sampler.invertible(lam.n());
    Rat value = P.eval(act(lam, g));
    if (!value.is_zero()) {
      rep.all_zero = false;
      rep.counterexample_g = g;
      rep.counterexample_value = value;
      break;
    }
  }
  return rep;
}

bool verify_certificate(const StructVecQ& from, const ContractionFamily& C,
                        const StructVecQ& to, const std::optional<MatQ>& matcher) {
  if (from.n() != to.n())
    throw DimensionMismatch("certificate endpoints must have equal dimensions");
  ContractionResult r = contract(from, C);
  if (!r.amenable) return false;
  StructVecQ expected = matcher ? act(to, *matcher) : to;
  return *r.limit == expected;
}

}  // namespace orbitkit
