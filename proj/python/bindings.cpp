// Thin JSON-string bridge: every function accepts and returns the same JSON
// encodings the CLI uses, so the Python layer stays schema-compatible.
#include <pybind11/pybind11.h>

#include <cstdint>
#include <string>

#include "orbitkit/catalog.hpp"
#include "orbitkit/contraction.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/paper_suite.hpp"
#include "orbitkit/quadform.hpp"
#include "orbitkit/structvec.hpp"
#include "orbitkit/witt.hpp"

namespace py = pybind11;
using namespace orbitkit;
using io::ojson;

namespace {

ojson jparse(const std::string& text) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const ojson& j) { return j.dump(); }

StructVecQ named_algebra(const std::string& name) {
  auto param = [&](const std::string& prefix) {
    return Rat::parse(name.substr(prefix.size()));
  };
  if (name.rfind("f2:", 0) == 0) return f2_quadratic(param("f2:"));
  if (name.rfind("f3:", 0) == 0) return f3(param("f3:"));
  if (name.rfind("split3:", 0) == 0) return split_cubic(param("split3:"));
  if (name == "a0" || name == "a4" || name == "a5") return two_dim(name);
  throw UnknownName("unknown catalog name: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact degenerations and contractions of algebras and quadratic forms";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::string msg = e.code() + ": " + e.what();
      PyErr_SetString(PyExc_ValueError, msg.c_str());
    }
  });

  m.def("catalog", [](const std::string& name) {
    return dump(io::structvec_json(named_algebra(name)));
  });

  m.def("invariants", [](const std::string& alg) {
    StructVecQ lam = io::parse_structvec_q(jparse(alg));
    return dump(io::algebra_invariants_json(invariant_dims(lam)));
  });

  m.def("trace_form", [](const std::string& alg) {
    StructVecQ lam = io::parse_structvec_q(jparse(alg));
    return dump(io::quadform_json(trace_form(lam)));
  });

  m.def("act", [](const std::string& alg, const std::string& mat) {
    StructVecQ lam = io::parse_structvec_q(jparse(alg));
    MatQ g = io::parse_mat_q(jparse(mat));
    return dump(io::structvec_json(orbitkit::act(lam, g)));
  });

  m.def("contract", [](const std::string& alg, const std::string& fam) {
    StructVecQ lam = io::parse_structvec_q(jparse(alg));
    ContractionFamily C = io::parse_family(jparse(fam));
    ContractionResult r = orbitkit::contract(lam, C);
    ojson out;
    out["lambda_t"] = io::structvec_json(r.lambda_t);
    out["min_order"] = io::order_json(r.min_order);
    out["amenable"] = r.amenable;
    if (r.limit) out["limit"] = io::structvec_json(*r.limit);
    return dump(out);
  });

  m.def("verify_certificate",
        [](const std::string& from, const std::string& fam, const std::string& to,
           const std::string& matcher) {
          StructVecQ a = io::parse_structvec_q(jparse(from));
          ContractionFamily C = io::parse_family(jparse(fam));
          StructVecQ b = io::parse_structvec_q(jparse(to));
          std::optional<MatQ> g;
          if (!matcher.empty()) g = io::parse_mat_q(jparse(matcher));
          return orbitkit::verify_certificate(a, C, b, g);
        },
        py::arg("from_algebra"), py::arg("family"), py::arg("to_algebra"),
        py::arg("matcher") = std::string());

  m.def("degen_check", [](const std::string& from, const std::string& to) {
    StructVecQ a = io::parse_structvec_q(jparse(from));
    StructVecQ b = io::parse_structvec_q(jparse(to));
    NecessaryReport nr = necessary_report(a, b);
    ojson out;
    out["rank_from"] = nr.rank_from;
    out["rank_to"] = nr.rank_to;
    out["invariants_from"] = io::algebra_invariants_json(nr.dims_from);
    out["invariants_to"] = io::algebra_invariants_json(nr.dims_to);
    out["blocked"] = nr.verdict == NecessaryReport::Verdict::kBlocked;
    out["reason"] = nr.reason;
    return dump(out);
  });

  m.def("qf_diagonalize", [](const std::string& form) {
    QuadFormQ Q = io::parse_quadform_q(jparse(form));
    DiagResult<Rat> dr = diagonalize(Q);
    ojson out;
    out["transform"] = io::rows_json(dr.transform);
    ojson diag = ojson::array();
    for (const auto& x : dr.diag) diag.push_back(io::rat_json(x));
    out["diag"] = std::move(diag);
    out["rank"] = Q.rank();
    return dump(out);
  });

  m.def("qf_blocks", [](const std::string& form) {
    QuadFormQt B = io::parse_quadform_qt(jparse(form));
    return dump(io::blocks_json(ordered_diagonalize_qt(B)));
  });

  m.def("qf_represents",
        [](const std::string& q, const std::string& qp, long height) {
          QuadFormQ Q = io::parse_quadform_q(jparse(q));
          QuadFormQ Qp = io::parse_quadform_q(jparse(qp));
          RepresentsResult rr = represents(Q, Qp, height);
          ojson out;
          out["represented"] = rr.represented;
          if (rr.witness) out["witness"] = io::rows_json(*rr.witness);
          return dump(out);
        },
        py::arg("form"), py::arg("target"), py::arg("height") = 20);

  m.def("qf_limit", [](const std::string& q, const std::string& fam) {
    QuadFormQ Q = io::parse_quadform_q(jparse(q));
    ContractionFamily C = io::parse_family(jparse(fam));
    return dump(io::quadform_json(contraction_limit_qf(Q, C)));
  });

  m.def("witt", [](const std::string& q) {
    QuadFormQ Q = io::parse_quadform_q(jparse(q));
    return dump(io::witt_json(witt_invariants(Q)));
  });

  m.def("verify_paper",
        [](std::uint64_t seed) { return verify_paper(seed).serialize(false); },
        py::arg("seed") = 1);
}
