#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orbitkit/catalog.hpp"
#include "orbitkit/contraction.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/paper_suite.hpp"
#include "orbitkit/quadform.hpp"
#include "orbitkit/report.hpp"
#include "orbitkit/structvec.hpp"
#include "orbitkit/witt.hpp"

namespace {

using namespace orbitkit;
using io::ojson;

ojson read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

int emit(const Report& rep, bool pretty) {
  std::cout << rep.serialize(pretty) << "\n";
  return rep.any_fail() ? 1 : 0;
}

std::uint64_t env_seed() {
  if (const char* env = std::getenv("ORBITKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("ORBITKIT_SEED must be a nonnegative integer");
    }
  }
  return 1;
}

int run_trace_form(const std::string& alg_path, bool pretty) {
  StructVecQ lam = io::parse_structvec_q(read_json(alg_path));
  Report rep("trace-form");
  rep.inputs()["algebra"] = io::structvec_json(lam);
  QuadFormQ T = trace_form(lam);
  rep.results()["trace_form"] = io::quadform_json(T);
  rep.results()["det"] = io::rat_json(T.gram().det());
  rep.results()["rank"] = T.rank();
  rep.results()["invariants"] = io::algebra_invariants_json(invariant_dims(lam));
  return emit(rep, pretty);
}

int run_contract(const std::string& alg_path, const std::string& fam_path,
                 const std::string& target_path, const std::string& matcher_path,
                 bool pretty) {
  StructVecQ lam = io::parse_structvec_q(read_json(alg_path));
  ContractionFamily C = io::parse_family(read_json(fam_path));
  Report rep("contract");
  rep.inputs()["algebra"] = io::structvec_json(lam);
  rep.inputs()["family"] = io::family_json(C);
  std::optional<StructVecQ> target;
  std::optional<MatQ> matcher;
  if (!target_path.empty()) {
    target = io::parse_structvec_q(read_json(target_path));
    rep.inputs()["target"] = io::structvec_json(*target);
  }
  if (!matcher_path.empty()) {
    matcher = io::parse_mat_q(read_json(matcher_path));
    rep.inputs()["matcher"] = io::rows_json(*matcher);
  }
  ContractionResult r = contract(lam, C);
  rep.results()["lambda_t"] = io::structvec_json(r.lambda_t);
  rep.results()["min_order"] = io::order_json(r.min_order);
  rep.results()["amenable"] = r.amenable;
  if (r.limit) rep.results()["limit"] = io::structvec_json(*r.limit);
  if (target) {
    bool ok = verify_certificate(lam, C, *target, matcher);
    rep.add_verdict("certificate", ok ? Status::kPass : Status::kFail,
                    ojson{{"amenable", r.amenable}});
  } else {
    rep.add_verdict("amenable", r.amenable ? Status::kPass : Status::kFail,
                    ojson{{"min_order", io::order_json(r.min_order)}});
  }
  if (r.amenable)
    rep.add_verdict("trace-functoriality",
                    trace_functor_check(lam, C) ? Status::kPass : Status::kFail);
  return emit(rep, pretty);
}

int run_qf_diagonalize(const std::string& form_path, const std::string& over, bool pretty) {
  Report rep("qf diagonalize");
  ojson raw = read_json(form_path);
  if (over == "qt") {
    QuadFormQt B = io::parse_quadform_qt(raw);
    rep.inputs()["form"] = io::quadform_json(B);
    BlockDecomposition bd = ordered_diagonalize_qt(B);
    rep.results()["decomposition"] = io::blocks_json(bd);
    bool ok = bd.transform.transpose() * B.gram() * bd.transform == bd.block_matrix(B.n());
    rep.add_verdict("congruence-identity", ok ? Status::kPass : Status::kFail);
  } else {
    QuadFormQ Q = io::parse_quadform_q(raw);
    rep.inputs()["form"] = io::quadform_json(Q);
    DiagResult<Rat> dr = diagonalize(Q);
    ojson diag = ojson::array();
    for (const auto& x : dr.diag) diag.push_back(io::rat_json(x));
    rep.results()["transform"] = io::rows_json(dr.transform);
    rep.results()["diag"] = std::move(diag);
    rep.results()["rank"] = Q.rank();
    bool ok = dr.transform.transpose() * Q.gram() * dr.transform == MatQ::diag(dr.diag);
    rep.add_verdict("congruence-identity", ok ? Status::kPass : Status::kFail);
  }
  return emit(rep, pretty);
}

int run_qf_represents(const std::string& q_path, const std::string& qp_path, long height,
                      bool pretty) {
  QuadFormQ Q = io::parse_quadform_q(read_json(q_path));
  QuadFormQ Qp = io::parse_quadform_q(read_json(qp_path));
  Report rep("qf represents");
  rep.inputs()["form"] = io::quadform_json(Q);
  rep.inputs()["target"] = io::quadform_json(Qp);
  rep.inputs()["height"] = height;
  RepresentsResult rr = represents(Q, Qp, height);
  rep.results()["source_invariants"] = io::witt_json(witt_invariants(Q));
  rep.results()["target_invariants"] = io::witt_json(witt_invariants(Qp));
  if (rr.witness) rep.results()["witness"] = io::rows_json(*rr.witness);
  rep.add_verdict("represents", rr.represented ? Status::kPass : Status::kFail,
                  rr.represented
                      ? ojson{{"witness_found", rr.witness.has_value()}}
                      : ojson{{"reason", "not represented"}});
  return emit(rep, pretty);
}

int run_qf_limit(const std::string& q_path, const std::string& fam_path, bool pretty) {
  QuadFormQ Q = io::parse_quadform_q(read_json(q_path));
  ContractionFamily C = io::parse_family(read_json(fam_path));
  Report rep("qf limit");
  rep.inputs()["form"] = io::quadform_json(Q);
  rep.inputs()["family"] = io::family_json(C);
  QuadFormQ limit = contraction_limit_qf(Q, C);
  rep.results()["limit"] = io::quadform_json(limit);
  rep.results()["rank"] = limit.rank();
  return emit(rep, pretty);
}

int run_degen_check(const std::string& from_path, const std::string& to_path,
                    const std::string& witness_path, std::size_t samples,
                    std::uint64_t seed, bool pretty) {
  StructVecQ from = io::parse_structvec_q(read_json(from_path));
  StructVecQ to = io::parse_structvec_q(read_json(to_path));
  Report rep("degen check");
  rep.inputs()["from"] = io::structvec_json(from);
  rep.inputs()["to"] = io::structvec_json(to);
  NecessaryReport nr = necessary_report(from, to);
  rep.results()["rank_from"] = nr.rank_from;
  rep.results()["rank_to"] = nr.rank_to;
  rep.results()["invariants_from"] = io::algebra_invariants_json(nr.dims_from);
  rep.results()["invariants_to"] = io::algebra_invariants_json(nr.dims_to);
  bool blocked = nr.verdict == NecessaryReport::Verdict::kBlocked;
  rep.add_verdict("rank-condition", blocked ? Status::kFail : Status::kInconclusive,
                  ojson{{"reason", nr.reason}});
  if (!witness_path.empty()) {
    OrbitPolynomial P = io::parse_orbit_polynomial(read_json(witness_path));
    rep.inputs()["witness"] = io::orbit_polynomial_json(P);
    rep.inputs()["samples"] = samples;
    rep.inputs()["seed"] = seed;
    VanishingReport vr = orbit_vanishing_test(P, from, samples, seed);
    ojson vj{{"all_zero", vr.all_zero}, {"samples", vr.samples}};
    if (vr.counterexample_g) {
      vj["counterexample_g"] = io::rows_json(*vr.counterexample_g);
      vj["counterexample_value"] = io::rat_json(*vr.counterexample_value);
    }
    rep.results()["vanishing"] = std::move(vj);
    Rat at_to = P.eval(to);
    rep.results()["witness_value_at_target"] = io::rat_json(at_to);
    if (!vr.all_zero) {
      rep.add_verdict("witness-obstruction", Status::kInconclusive,
                      ojson{{"reason", "polynomial does not vanish on the source orbit"}});
    } else if (!at_to.is_zero()) {
      rep.add_verdict("witness-obstruction", Status::kFail,
                      ojson{{"reason", "polynomial vanishes on the source orbit (sampled) "
                                       "but not at the target"}});
    } else {
      rep.add_verdict("witness-obstruction", Status::kInconclusive,
                      ojson{{"reason", "polynomial does not separate the target"}});
    }
  }
  return emit(rep, pretty);
}

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

int run_catalog(const std::string& name, bool pretty) {
  StructVecQ lam = named_algebra(name);
  Report rep("catalog");
  rep.inputs()["name"] = name;
  rep.results()["structure_vector"] = io::structvec_json(lam);
  rep.results()["invariants"] = io::algebra_invariants_json(invariant_dims(lam));
  rep.results()["trace_form"] = io::quadform_json(trace_form(lam));
  return emit(rep, pretty);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degenerations and contractions of algebras and quadratic forms"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON report");

  int rc = 0;

  auto* tf = app.add_subcommand("trace-form", "trace form and invariants of an algebra");
  std::string tf_alg;
  tf->add_option("algebra", tf_alg, "algebra JSON file")->required();
  tf->callback([&] { rc = run_trace_form(tf_alg, pretty); });

  auto* ct = app.add_subcommand("contract", "apply a contraction family to an algebra");
  std::string ct_alg, ct_fam, ct_target, ct_matcher;
  ct->add_option("algebra", ct_alg, "algebra JSON file")->required();
  ct->add_option("family", ct_fam, "contraction family JSON file")->required();
  auto* ct_target_opt = ct->add_option("--target", ct_target, "expected limit algebra JSON file");
  ct->add_option("--matcher", ct_matcher, "isomorphism matcher matrix JSON file")
      ->needs(ct_target_opt);
  ct->callback([&] { rc = run_contract(ct_alg, ct_fam, ct_target, ct_matcher, pretty); });

  auto* qf = app.add_subcommand("qf", "quadratic form operations");
  qf->require_subcommand(1);

  auto* qd = qf->add_subcommand("diagonalize", "congruence diagonalization");
  std::string qd_form, qd_over = "q";
  qd->add_option("form", qd_form, "quadratic form JSON file")->required();
  qd->add_option("--over", qd_over, "base field: q (default) or qt")
      ->check(CLI::IsMember({"q", "qt"}));
  qd->callback([&] { rc = run_qf_diagonalize(qd_form, qd_over, pretty); });

  auto* qr = qf->add_subcommand("represents", "representation decision and witness search");
  std::string qr_q, qr_qp;
  long qr_height = 20;
  qr->add_option("form", qr_q, "source form JSON file")->required();
  qr->add_option("target", qr_qp, "target form JSON file")->required();
  qr->add_option("--height", qr_height, "witness search height bound (default 20)");
  qr->callback([&] { rc = run_qf_represents(qr_q, qr_qp, qr_height, pretty); });

  auto* ql = qf->add_subcommand("limit", "limit of a form under a contraction family");
  std::string ql_q, ql_fam;
  ql->add_option("form", ql_q, "quadratic form JSON file")->required();
  ql->add_option("family", ql_fam, "contraction family JSON file")->required();
  ql->callback([&] { rc = run_qf_limit(ql_q, ql_fam, pretty); });

  auto* dg = app.add_subcommand("degen", "degeneration checks");
  dg->require_subcommand(1);
  auto* dc = dg->add_subcommand("check", "necessary conditions for a degeneration");
  std::string dc_from, dc_to, dc_witness;
  std::size_t dc_samples = 100;
  std::uint64_t dc_seed = 0;
  bool dc_seed_set = false;
  dc->add_option("from", dc_from, "source algebra JSON file")->required();
  dc->add_option("to", dc_to, "target algebra JSON file")->required();
  dc->add_option("--witness", dc_witness, "separating polynomial JSON file");
  dc->add_option("--samples", dc_samples, "orbit sample count (default 100)");
  dc->add_option("--seed", dc_seed, "sampling seed (default ORBITKIT_SEED or 1)")
      ->each([&](const std::string&) { dc_seed_set = true; });
  dc->callback([&] {
    rc = run_degen_check(dc_from, dc_to, dc_witness, dc_samples,
                         dc_seed_set ? dc_seed : env_seed(), pretty);
  });

  auto* cat = app.add_subcommand("catalog", "named algebras: f2:s, f3:c, split3:s, a0, a4, a5");
  std::string cat_name;
  cat->add_option("name", cat_name, "catalog name")->required();
  cat->callback([&] { rc = run_catalog(cat_name, pretty); });

  auto* vp = app.add_subcommand("verify-paper", "run the full reproduction suite");
  std::uint64_t vp_seed = 0;
  bool vp_seed_set = false;
  vp->add_option("--seed", vp_seed, "suite seed (default ORBITKIT_SEED or 1)")
      ->each([&](const std::string&) { vp_seed_set = true; });
  vp->callback([&] {
    Report rep = orbitkit::verify_paper(vp_seed_set ? vp_seed : env_seed());
    rc = emit(rep, pretty);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << ojson{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const orbitkit::Error& e) {
    std::cout << ojson{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << ojson{{"error", {{"code", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  }
  return rc;
}
