#include "orbitkit/json_io.hpp"

namespace orbitkit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

void require(bool ok, const std::string& what) {
  if (!ok) bad(what);
}

std::size_t parse_nat(const ojson& j, const std::string& what) {
  require(j.is_number_unsigned(), what + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

ojson rat_json(const Rat& r) { return r.str(); }

ojson poly_json(const Poly& p) {
  ojson a = ojson::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

ojson ratfunc_json(const RatFunc& f) {
  return ojson{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

ojson scalar_qt_json(const RatFunc& f) {
  if (f.is_constant()) return f.num().coeff(0).str();
  return ratfunc_json(f);
}

ojson order_json(const Order& o) {
  if (o.is_infinite()) return "inf";
  return o.value();
}

template <class K, class EntryFn>
static ojson mat_json_impl(const Mat<K>& m, EntryFn entry) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson rows_json(const MatQ& m) {
  return mat_json_impl(m, [](const Rat& r) { return rat_json(r); });
}
ojson rows_json(const MatQt& m) {
  return mat_json_impl(m, [](const RatFunc& f) { return scalar_qt_json(f); });
}
ojson mat_json(const MatQ& m) {
  return ojson{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows_json(m)}};
}
ojson mat_json(const MatQt& m) {
  return ojson{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows_json(m)}};
}

template <class K, class EntryFn>
static ojson structvec_json_impl(const StructVec<K>& lam, EntryFn entry) {
  ojson entries = ojson::array();
  for (std::size_t i = 0; i < lam.n(); ++i)
    for (std::size_t j = 0; j < lam.n(); ++j)
      for (std::size_t k = 0; k < lam.n(); ++k) {
        if (lam.at(i, j, k).is_zero()) continue;
        entries.push_back(ojson{{"i", i + 1}, {"j", j + 1}, {"k", k + 1},
                                {"value", entry(lam.at(i, j, k))}});
      }
  return ojson{{"n", lam.n()}, {"entries", std::move(entries)}};
}

ojson structvec_json(const StructVecQ& lam) {
  return structvec_json_impl(lam, [](const Rat& r) { return rat_json(r); });
}
ojson structvec_json(const StructVecQt& lam) {
  return structvec_json_impl(lam, [](const RatFunc& f) { return scalar_qt_json(f); });
}

ojson quadform_json(const QuadFormQ& q) {
  return ojson{{"n", q.n()}, {"gram", rows_json(q.gram())}};
}
ojson quadform_json(const QuadFormQt& q) {
  return ojson{{"n", q.n()}, {"gram", rows_json(q.gram())}};
}

ojson family_json(const ContractionFamily& c) {
  return ojson{{"n", c.n()}, {"mat", rows_json(c.mat())}};
}

ojson orbit_polynomial_json(const OrbitPolynomial& p) {
  ojson terms = ojson::array();
  for (const auto& t : p.terms) {
    ojson mono = ojson::array();
    for (const auto& m : t.monomial) mono.push_back(ojson::array({m[0], m[1], m[2]}));
    terms.push_back(ojson{{"coeff", t.coeff.str()}, {"monomial", std::move(mono)}});
  }
  return terms;
}

ojson algebra_invariants_json(const AlgebraInvariants& inv) {
  return ojson{{"trace_rank", inv.trace_rank},
               {"annihilator_dim", inv.annihilator_dim},
               {"square_dim", inv.square_dim},
               {"derivation_dim", inv.derivation_dim},
               {"commutative", inv.commutative},
               {"associative", inv.associative}};
}

ojson witt_json(const WittInvariants& w) {
  ojson hasse = ojson::object();
  for (const auto& [place, eps] : w.hasse) hasse[place.str()] = eps;
  return ojson{{"dim", w.dim},
               {"rank", w.rank},
               {"disc", w.disc.str()},
               {"signature", w.signature},
               {"hasse", std::move(hasse)},
               {"witt_index", w.witt_index},
               {"anisotropic_dim", w.anisotropic_dim}};
}

ojson blocks_json(const BlockDecomposition& b) {
  ojson blocks = ojson::array();
  for (const auto& blk : b.blocks) {
    ojson units = ojson::array();
    for (const auto& u : blk.units) units.push_back(scalar_qt_json(u));
    blocks.push_back(ojson{{"exponent", blk.exponent}, {"units", std::move(units)}});
  }
  return ojson{{"transform", mat_json(b.transform)},
               {"blocks", std::move(blocks)},
               {"corank", b.corank}};
}

// ---- parsers ----

Rat parse_rat(const ojson& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  bad("expected a rational as \"p/q\" string");
}

Poly parse_poly(const ojson& j) {
  require(j.is_array(), "polynomial must be an array of rationals");
  std::vector<Rat> c;
  for (const auto& e : j) c.push_back(parse_rat(e));
  return Poly(std::move(c));
}

RatFunc parse_ratfunc(const ojson& j) {
  require(j.is_object() && j.contains("num") && j.contains("den"),
          "rational function must be {\"num\": [...], \"den\": [...]}");
  return RatFunc(parse_poly(j.at("num")), parse_poly(j.at("den")));
}

RatFunc parse_scalar_qt(const ojson& j) {
  if (j.is_string() || j.is_number_integer()) return RatFunc(parse_rat(j));
  if (j.is_object()) return parse_ratfunc(j);
  bad("expected a rational string or {\"num\",\"den\"} object");
}

namespace {

template <class K, class ScalarFn>
Mat<K> parse_mat_impl(const ojson& j, ScalarFn scalar) {
  const ojson* rows = &j;
  if (j.is_object()) {
    require(j.contains("entries"), "matrix object needs \"entries\"");
    rows = &j.at("entries");
  }
  require(rows->is_array() && !rows->empty(), "matrix must be a nonempty array of rows");
  std::size_t nrows = rows->size();
  require((*rows)[0].is_array(), "matrix rows must be arrays");
  std::size_t ncols = (*rows)[0].size();
  Mat<K> m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    const auto& row = (*rows)[i];
    require(row.is_array() && row.size() == ncols, "ragged matrix rows");
    for (std::size_t jj = 0; jj < ncols; ++jj) m(i, jj) = scalar(row[jj]);
  }
  if (j.is_object()) {
    if (j.contains("rows"))
      require(parse_nat(j.at("rows"), "rows") == nrows, "row count mismatch");
    if (j.contains("cols"))
      require(parse_nat(j.at("cols"), "cols") == ncols, "column count mismatch");
  }
  return m;
}

}  // namespace

MatQ parse_mat_q(const ojson& j) {
  return parse_mat_impl<Rat>(j, [](const ojson& e) { return parse_rat(e); });
}

MatQt parse_mat_qt(const ojson& j) {
  return parse_mat_impl<RatFunc>(j, [](const ojson& e) { return parse_scalar_qt(e); });
}

StructVecQ parse_structvec_q(const ojson& j) {
  require(j.is_object() && j.contains("n") && j.contains("entries"),
          "structure vector must be {\"n\", \"entries\"}");
  std::size_t n = parse_nat(j.at("n"), "n");
  require(n >= 1, "dimension must be positive");
  StructVecQ lam(n);
  require(j.at("entries").is_array(), "\"entries\" must be an array");
  for (const auto& e : j.at("entries")) {
    require(e.is_object() && e.contains("i") && e.contains("j") && e.contains("k") &&
                e.contains("value"),
            "entry must be {\"i\",\"j\",\"k\",\"value\"}");
    std::size_t i = parse_nat(e.at("i"), "i"), jj = parse_nat(e.at("j"), "j"),
                k = parse_nat(e.at("k"), "k");
    require(i >= 1 && i <= n && jj >= 1 && jj <= n && k >= 1 && k <= n,
            "entry index out of range (indices are 1-based)");
    lam.at(i - 1, jj - 1, k - 1) = parse_rat(e.at("value"));
  }
  return lam;
}

QuadFormQ parse_quadform_q(const ojson& j) {
  require(j.is_object() && j.contains("n") && j.contains("gram"),
          "quadratic form must be {\"n\", \"gram\"}");
  MatQ gram = parse_mat_q(j.at("gram"));
  require(gram.rows() == parse_nat(j.at("n"), "n"), "gram size must match n");
  try {
    return QuadFormQ(gram);
  } catch (const NotSymmetric& e) {
    bad(e.what());
  }
}

QuadFormQt parse_quadform_qt(const ojson& j) {
  require(j.is_object() && j.contains("n") && j.contains("gram"),
          "quadratic form must be {\"n\", \"gram\"}");
  MatQt gram = parse_mat_qt(j.at("gram"));
  require(gram.rows() == parse_nat(j.at("n"), "n"), "gram size must match n");
  try {
    return QuadFormQt(gram);
  } catch (const NotSymmetric& e) {
    bad(e.what());
  }
}

ContractionFamily parse_family(const ojson& j) {
  require(j.is_object() && j.contains("n") && j.contains("mat"),
          "contraction family must be {\"n\", \"mat\"}");
  std::size_t n = parse_nat(j.at("n"), "n");
  MatQt m = parse_mat_qt(j.at("mat"));
  return ContractionFamily(n, std::move(m));
}

OrbitPolynomial parse_orbit_polynomial(const ojson& j) {
  require(j.is_array(), "orbit polynomial must be an array of terms");
  OrbitPolynomial p;
  for (const auto& t : j) {
    require(t.is_object() && t.contains("coeff") && t.contains("monomial"),
            "term must be {\"coeff\", \"monomial\"}");
    OrbitPolynomial::Term term;
    term.coeff = parse_rat(t.at("coeff"));
    require(t.at("monomial").is_array(), "\"monomial\" must be an array of index triples");
    for (const auto& m : t.at("monomial")) {
      require(m.is_array() && m.size() == 3, "monomial entries are [i,j,k] triples");
      term.monomial.push_back({m[0].get<int>(), m[1].get<int>(), m[2].get<int>()});
    }
    p.terms.push_back(std::move(term));
  }
  return p;
}

}  // namespace orbitkit::io
