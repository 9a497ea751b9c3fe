#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/family.hpp"
#include "orbitkit/structvec.hpp"

namespace orbitkit {

struct ContractionResult {
  StructVecQt lambda_t;
  Order min_order;
  bool amenable;                     // min_order >= 0
  std::optional<StructVecQ> limit;   // present iff amenable
};

// lambda^t = act(lambda, g^t) over Q(t) and, when every entry has order >= 0,
// its limit lambda^0 at t = 0.
ContractionResult contract(const StructVecQ& lam, const ContractionFamily& C);

// Self-test identity: the trace form of the limit equals the limit of the
// trace form.  Throws NotAmenable when the contraction has no limit.
bool trace_functor_check(const StructVecQ& lam, const ContractionFamily& C);

struct NecessaryReport {
  enum class Verdict { kBlocked, kInconclusive };
  std::size_t rank_from = 0, rank_to = 0;
  AlgebraInvariants dims_from, dims_to;
  Verdict verdict = Verdict::kInconclusive;
  std::string reason;
};

// Necessary conditions for a degeneration lambda_from -> lambda_to: the trace
// rank cannot increase (rank strata are closed and invariant).  Dimension data
// of both sides is reported without adjudication.
NecessaryReport necessary_report(const StructVecQ& from, const StructVecQ& to);

// Sparse polynomial in the coordinates lambda_{ijk} (1-based index triples).
struct OrbitPolynomial {
  struct Term {
    Rat coeff;
    std::vector<std::array<int, 3>> monomial;  // product of these coordinates
  };
  std::vector<Term> terms;

  Rat eval(const StructVecQ& lam) const;
};

struct VanishingReport {
  bool all_zero = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<MatQ> counterexample_g;  // present iff !all_zero
  std::optional<Rat> counterexample_value;
};

// Evaluates P at `samples` seeded random orbit points act(lambda, g).
// ALL_ZERO is evidence of vanishing on the orbit closure, not proof; a nonzero
// value is proof of non-vanishing.
VanishingReport orbit_vanishing_test(const OrbitPolynomial& P, const StructVecQ& lam,
                                     std::size_t samples, std::uint64_t seed);

// True iff contract(from, C) exists and its limit equals `to` exactly, or
// equals act(to, *matcher) when a matching isomorphism is supplied.
bool verify_certificate(const StructVecQ& from, const ContractionFamily& C,
                        const StructVecQ& to, const std::optional<MatQ>& matcher);

}  // namespace orbitkit
