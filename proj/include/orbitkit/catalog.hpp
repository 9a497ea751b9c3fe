#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitkit/contraction.hpp"
#include "orbitkit/structvec.hpp"

namespace orbitkit {

// ---- dimension 2 ----

// f_s: basis (e, w) with e the identity and w^2 = s*e.
StructVecQ f2_quadratic(const Rat& s);

// The zero algebra a0, a4 (l111=l122=l212=1), a5 (l111=1 only).
StructVecQ two_dim(const std::string& name);

// ---- dimension 3: the cubic family f_c ----

// f_c: basis (e, w, w^2) with e the identity and w^3 = w^2 + c*e.
StructVecQ f3(const Rat& c);

// Trace matrix of f_c is [[3,1,1],[1,1,3c+1],[1,3c+1,4c+1]], determinant
// -c(27c+4); returns whether the computed trace form matches exactly.
bool f3_trace_check(const Rat& c);

struct CubicParams {
  Rat c;
  Rat gamma;  // 27c + 4
  Rat m;
  Rat delta;  // m^2 - 3*gamma*c
};

struct IsoElement {
  Rat x0, x1, x2;  // u = x2 w^2 + x1 w + x0 e
  Rat d;           // u^3 = u^2 + d
  CubicParams params;
};

// The conic parameterization: u generates f_c over a new parameter d(m).
IsoElement f3_iso_element(const Rat& c, const Rat& m);

struct IsoMatrix {
  MatQ g;  // columns e, u, u^2 in the (e, w, w^2) basis
  Rat d;
};

// Explicit isomorphism f_d ~ f_c: act(f3(c), g) = f3(d).
IsoMatrix f3_iso_matrix(const Rat& c, const Rat& m);

// Checks (27d^2+4d)/(27c^2+4c) is a rational square.
bool square_class_check(const Rat& c, const Rat& m);

// ---- dimension 3: the split algebra c(s) ----

// Basis (v1, v2, v3): v1^2=v1, v2^2=v2, v3^2=s*v2, v1v2=v1v3=0, v2v3=v3;
// identity v1+v2.
StructVecQ split_cubic(const Rat& s);

struct SplitGenerator {
  Rat x1, x2, x3;  // w = x1 v1 + x2 v2 + x3 v3
  Rat d;           // w^3 = w^2 + d*e
  MatQ g;          // columns e, w, w^2
};

// Generator w(m) of c(s) with w^3 = w^2 + d e; m^2 s must avoid
// {-1/3, 0, 1/9, 1}.
SplitGenerator split_cubic_generator(const Rat& s, const Rat& m);

struct NormalizationInput {
  Rat p;
  Rat q;                 // nonzero
  std::optional<Rat> b;  // required when p = 0
};

struct Normalization {
  Rat c;
  std::vector<Rat> u;  // coordinates of u in the basis (e, w, w^2)
};

// From w^3 = pw + qe to a generator u with u^3 = u^2 + c, verified by exact
// expansion in F[w]/(w^3 - pw - q).
Normalization normalize_cubic(const NormalizationInput& in);

// ---- certified degenerations and obstructions ----

struct CertifiedContraction {
  std::string name;  // e.g. "f2:2 -> a4"
  StructVecQ from;
  ContractionFamily family;
  StructVecQ to;
  std::optional<MatQ> matcher;
};

// Explicit families, each passing verify_certificate: f_s -> a4, f_1 -> a5,
// f_s -> a5 (s a square; composite route through f_1), a4 -> a0, a5 -> a0,
// f_s -> a0.
std::vector<CertifiedContraction> standard_contractions();

struct ForbiddenPair {
  std::string name;
  StructVecQ from;
  StructVecQ to;
  OrbitPolynomial witness;  // vanishes on the from-orbit, nonzero at `to`
};

// The two non-degenerations between a4 and a5 with their separating
// polynomials.
std::vector<ForbiddenPair> forbidden_pairs();

// Structure vector of F[w]/(w^3 - pw - q) on the basis (e, w, w^2).
StructVecQ cubic_quotient_algebra(const Rat& p, const Rat& q);

}  // namespace orbitkit
