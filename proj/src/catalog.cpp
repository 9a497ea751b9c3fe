#include "orbitkit/catalog.hpp"

namespace orbitkit {

namespace {

std::vector<Rat> basis_vec(std::size_t n, std::size_t i) {
  std::vector<Rat> v(n, Rat(0));
  v[i] = Rat(1);
  return v;
}

// Columns are the coordinate vectors of a proposed basis; throws when they
// are dependent.
MatQ columns_matrix(const std::vector<std::vector<Rat>>& cols) {
  MatQ g(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) g(i, j) = cols[j][i];
  return g;
}

void set_identity_element(StructVecQ& lam, std::size_t e) {
  for (std::size_t j = 0; j < lam.n(); ++j) {
    lam.at(e, j, j) = Rat(1);
    lam.at(j, e, j) = Rat(1);
  }
}

}  // namespace

StructVecQ f2_quadratic(const Rat& s) {
  StructVecQ lam(2);
  set_identity_element(lam, 0);      // l111 = l122 = l212 = 1
  lam.at(1, 1, 0) = s;               // w^2 = s e
  return lam;
}

StructVecQ two_dim(const std::string& name) {
  StructVecQ lam(2);
  if (name == "a0") return lam;
  if (name == "a4") {
    lam.at(0, 0, 0) = Rat(1);
    lam.at(0, 1, 1) = Rat(1);
    lam.at(1, 0, 1) = Rat(1);
    return lam;
  }
  if (name == "a5") {
    lam.at(0, 0, 0) = Rat(1);
    return lam;
  }
  throw UnknownName("unknown two-dimensional algebra: " + name);
}

StructVecQ f3(const Rat& c) {
  StructVecQ lam(3);
  set_identity_element(lam, 0);
  lam.at(1, 1, 2) = Rat(1);  // w * w = w^2
  lam.at(1, 2, 2) = Rat(1);  // w * w^2 = w^2 + c e
  lam.at(1, 2, 0) = c;
  lam.at(2, 1, 2) = Rat(1);
  lam.at(2, 1, 0) = c;
  lam.at(2, 2, 2) = Rat(1);  // w^2 * w^2 = w^2 + c w + c e
  lam.at(2, 2, 1) = c;
  lam.at(2, 2, 0) = c;
  return lam;
}

bool f3_trace_check(const Rat& c) {
  MatQ expected(3, 3);
  expected(0, 0) = Rat(3);
  expected(0, 1) = expected(1, 0) = Rat(1);
  expected(0, 2) = expected(2, 0) = Rat(1);
  expected(1, 1) = Rat(1);
  expected(1, 2) = expected(2, 1) = Rat(3) * c + Rat(1);
  expected(2, 2) = Rat(4) * c + Rat(1);
  QuadFormQ t = trace_form(f3(c));
  return t.gram() == expected && t.gram().det() == -c * (Rat(27) * c + Rat(4));
}

IsoElement f3_iso_element(const Rat& c, const Rat& m) {
  if (c.is_zero()) throw DegenerateParameter("f3 parameterization requires c != 0");
  Rat gamma = Rat(27) * c + Rat(4);
  Rat delta = m * m - Rat(3) * gamma * c;
  if (delta.is_zero()) throw DegenerateParameter("Delta = m^2 - 3*gamma*c vanishes");
  IsoElement out;
  out.params = {c, gamma, m, delta};
  out.x0 = Rat(2) * c * (Rat(3) * m - gamma) / delta;
  out.x1 = (m * m - (gamma - Rat(9) * c) * m + Rat(3) * gamma * c) / delta;
  out.x2 = Rat(4) * m / delta;
  Rat inner = m * m * m - gamma * m * m + Rat(9) * gamma * c * m - gamma * gamma * c;
  out.d = c * inner * inner / (delta * delta * delta);
  return out;
}

IsoMatrix f3_iso_matrix(const Rat& c, const Rat& m) {
  IsoElement el = f3_iso_element(c, m);
  StructVecQ lam = f3(c);
  std::vector<Rat> u = {el.x0, el.x1, el.x2};
  std::vector<Rat> u2 = product(lam, u, u);
  MatQ g = columns_matrix({basis_vec(3, 0), u, u2});
  if (g.det().is_zero())
    throw DegenerateParameter("(e, u, u^2) are dependent at m = " + m.str());
  return {g, el.d};
}

bool square_class_check(const Rat& c, const Rat& m) {
  Rat denom = Rat(27) * c * c + Rat(4) * c;
  if (denom.is_zero())
    throw DegenerateParameter("27c^2 + 4c vanishes at c = " + c.str());
  Rat d = f3_iso_element(c, m).d;
  Rat ratio = (Rat(27) * d * d + Rat(4) * d) / denom;
  return ratio.is_square();
}

StructVecQ split_cubic(const Rat& s) {
  if (s.is_zero()) throw ZeroParameter("split cubic requires s != 0");
  StructVecQ lam(3);
  lam.at(0, 0, 0) = Rat(1);  // v1^2 = v1
  lam.at(1, 1, 1) = Rat(1);  // v2^2 = v2
  lam.at(2, 2, 1) = s;       // v3^2 = s v2
  lam.at(1, 2, 2) = Rat(1);  // v2 v3 = v3
  lam.at(2, 1, 2) = Rat(1);
  return lam;
}

SplitGenerator split_cubic_generator(const Rat& s, const Rat& m) {
  StructVecQ lam = split_cubic(s);
  Rat k = m * m * s;
  if (k == Rat(-1, 3)) throw RestrictedParameter("m^2 s = -1/3 is excluded");
  if (k.is_zero()) throw RestrictedParameter("m^2 s = 0 is excluded");
  if (k == Rat(1, 9)) throw RestrictedParameter("m^2 s = 1/9 is excluded");
  if (k.is_one()) throw RestrictedParameter("m^2 s = 1 is excluded");
  SplitGenerator out;
  Rat nine_k = Rat(9) * k;
  Rat three_k1 = Rat(3) * k + Rat(1);
  out.x1 = (nine_k - Rat(1)) / (nine_k + Rat(3));
  out.x2 = Rat(2) / (nine_k + Rat(3));
  out.x3 = Rat(2) * m / three_k1;
  Rat n1 = nine_k - Rat(1);
  out.d = Rat(-4) * n1 * n1 / (Rat(27) * three_k1 * three_k1 * three_k1);
  std::vector<Rat> e = {Rat(1), Rat(1), Rat(0)};
  std::vector<Rat> w = {out.x1, out.x2, out.x3};
  std::vector<Rat> w2 = product(lam, w, w);
  out.g = columns_matrix({e, w, w2});
  if (out.g.det().is_zero())
    throw RestrictedParameter("(e, w, w^2) degenerate at m = " + m.str());
  return out;
}

StructVecQ cubic_quotient_algebra(const Rat& p, const Rat& q) {
  StructVecQ lam(3);
  set_identity_element(lam, 0);
  lam.at(1, 1, 2) = Rat(1);  // w * w = w^2
  lam.at(1, 2, 1) = p;       // w * w^2 = p w + q e
  lam.at(1, 2, 0) = q;
  lam.at(2, 1, 1) = p;
  lam.at(2, 1, 0) = q;
  lam.at(2, 2, 2) = p;       // w^2 * w^2 = p w^2 + q w
  lam.at(2, 2, 1) = q;
  return lam;
}

Normalization normalize_cubic(const NormalizationInput& in) {
  if (in.q.is_zero()) throw BadNormalization("q must be nonzero");
  StructVecQ alg = cubic_quotient_algebra(in.p, in.q);
  Rat c;
  std::vector<Rat> u;
  if (!in.p.is_zero()) {
    c = (Rat(27) * in.q * in.q - Rat(4) * in.p * in.p * in.p) /
        (Rat(27) * in.p * in.p * in.p);
    u = {Rat(-1, 3), Rat(0), in.p.inv()};
  } else {
    if (!in.b) throw BadNormalization("b is required when p = 0");
    Rat b = *in.b;
    if (b.is_zero()) throw BadNormalization("b must be nonzero");
    Rat b3q = b * b * b * in.q;
    if (Rat(729) * b3q * b3q == Rat(1))
      throw BadNormalization("729 b^6 q^2 = 1 degenerates the generator");
    Rat n = Rat(27) * b3q - Rat(1);
    c = n * n / (Rat(729) * b3q);
    u = {Rat(1, 3), b, (Rat(9) * b * in.q).inv()};
  }
  // Exact verification: u^3 - u^2 = c*e and (e, u, u^2) independent.
  std::vector<Rat> u2 = product(alg, u, u);
  std::vector<Rat> u3 = product(alg, u, u2);
  std::vector<Rat> diff = {u3[0] - u2[0], u3[1] - u2[1], u3[2] - u2[2]};
  if (!(diff[0] == c && diff[1].is_zero() && diff[2].is_zero()))
    throw BadNormalization("u^3 - u^2 is not a multiple of the identity");
  if (columns_matrix({basis_vec(3, 0), u, u2}).det().is_zero())
    throw BadNormalization("(e, u, u^2) are dependent");
  return {c, u};
}

std::vector<CertifiedContraction> standard_contractions() {
  std::vector<CertifiedContraction> out;
  auto diag_1_t = ContractionFamily(
      2, MatQt::diag({RatFunc(Rat(1)), RatFunc::t()}));
  Rat half(1, 2);
  // Orthogonal idempotent basis for f_1: ((v1+v2)/2, t(v1-v2)/2).
  MatQt idem(2, 2);
  idem(0, 0) = RatFunc(half);
  idem(0, 1) = RatFunc(half) * RatFunc::t();
  idem(1, 0) = RatFunc(half);
  idem(1, 1) = -RatFunc(half) * RatFunc::t();
  // f_4 -> a5 route: first the isomorphism f_4 ~ f_1 (w -> w/2), then the
  // idempotent family; the composite is diag(1,1/2) * idem.
  MatQt comp(2, 2);
  comp(0, 0) = RatFunc(half);
  comp(0, 1) = RatFunc(half) * RatFunc::t();
  comp(1, 0) = RatFunc(Rat(1, 4));
  comp(1, 1) = -RatFunc(Rat(1, 4)) * RatFunc::t();

  out.push_back({"f2:2 -> a4", f2_quadratic(Rat(2)), diag_1_t, two_dim("a4"), std::nullopt});
  out.push_back({"f2:1 -> a5", f2_quadratic(Rat(1)), ContractionFamily(2, idem),
                 two_dim("a5"), std::nullopt});
  out.push_back({"f2:4 -> a5 (via f2:1)", f2_quadratic(Rat(4)),
                 ContractionFamily(2, comp), two_dim("a5"), std::nullopt});
  out.push_back({"a4 -> a0", two_dim("a4"), ContractionFamily::scaling(2),
                 two_dim("a0"), std::nullopt});
  out.push_back({"a5 -> a0", two_dim("a5"), ContractionFamily::scaling(2),
                 two_dim("a0"), std::nullopt});
  out.push_back({"f2:2 -> a0", f2_quadratic(Rat(2)), ContractionFamily::scaling(2),
                 two_dim("a0"), std::nullopt});
  return out;
}

std::vector<ForbiddenPair> forbidden_pairs() {
  // P1 = l111^2 - l212^2 + 2 l112 l211 + 2 l112 l222: vanishes on the a4
  // orbit, value 1 at a5.
  OrbitPolynomial P1{{
      {Rat(1), {{{1, 1, 1}}, {{1, 1, 1}}}},
      {Rat(-1), {{{2, 1, 2}}, {{2, 1, 2}}}},
      {Rat(2), {{{1, 1, 2}}, {{2, 1, 1}}}},
      {Rat(2), {{{1, 1, 2}}, {{2, 2, 2}}}},
  }};
  // P2 = l111 l212 - l112 l211: vanishes on the a5 orbit, value 1 at a4.
  OrbitPolynomial P2{{
      {Rat(1), {{{1, 1, 1}}, {{2, 1, 2}}}},
      {Rat(-1), {{{1, 1, 2}}, {{2, 1, 1}}}},
  }};
  return {
      {"a4 -/-> a5", two_dim("a4"), two_dim("a5"), P1},
      {"a5 -/-> a4", two_dim("a5"), two_dim("a4"), P2},
  };
}

}  // namespace orbitkit
