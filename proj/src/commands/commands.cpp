#include "commands/commands.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "cuspidal/roundtrip.hpp"
#include "cuspidal/separation.hpp"
#include "expr/parse.hpp"
#include "kernel/format.hpp"
#include "shenlarsson/phi.hpp"
#include "shenlarsson/q1.hpp"
#include "verify/acceptance.hpp"

namespace wnlie {

namespace {

Json check(const std::string& name, bool ok, const std::string& witness = "") {
  Json c;
  c["name"] = name;
  c["status"] = ok ? "pass" : "fail";
  if (!ok || !witness.empty()) c["witness"] = witness;
  return c;
}

Json report(const std::string& command, Json inputs, Json results, Json checks) {
  Json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["results"] = std::move(results);
  r["checks"] = std::move(checks);
  return r;
}

Json scalar_vec_json(const std::vector<Scalar>& v, const std::vector<std::string>& params) {
  Json arr = Json::array();
  for (const Scalar& s : v) arr.push_back(s.str(params));
  return arr;
}

std::vector<Scalar> arg_scalar_vec(const Session& s, const Json& args, const char* key,
                                   const std::vector<Scalar>& fallback) {
  if (!args.contains(key)) return fallback;
  auto v = parse_scalar_vector(args.at(key).get<std::string>(), s.config.params);
  if (static_cast<int>(v.size()) != s.config.n)
    fail(errc::bad_argument, std::string(key) + " must have length n");
  return v;
}

GlRep rep_from_args(const Session& s, const Json& args) {
  if (args.contains("exterior"))
    return exterior_power(s.config.n, args.at("exterior").get<int>());
  std::vector<Scalar> lambda = arg_scalar_vec(s, args, "lambda", s.config.lambda);
  return highest_weight_module(s.config.n, lambda);
}

std::shared_ptr<DnModule> module_from_args(const Session& s, const Json& args) {
  std::string p = args.value("module", "A^a");
  if (p == "A^a" || p == "A^1")
    return std::make_shared<TwistedPolyModule>(
        p == "A^1" ? std::vector<Scalar>(static_cast<size_t>(s.config.n), Scalar(1))
                   : s.config.a);
  if (p == "P(mu)") return std::make_shared<TwistedLaurentModule>(s.config.mu);
  fail(errc::bad_argument, "unknown module '" + p + "' (use A^a, A^1 or P(mu))");
}

// ---- handlers -----------------------------------------------------------

Json cmd_bracket(Session& s, const Json& args) {
  const auto& P = s.config.params;
  WittElem x = parse_witt_expr(args.at("x").get<std::string>(), s.config.n, P);
  WittElem y = parse_witt_expr(args.at("y").get<std::string>(), s.config.n, P);
  WittElem b = bracket(x, y);
  Json results;
  results["bracket"] = witt_str(b, P);
  Json checks = Json::array();
  checks.push_back(check("antisymmetry", bracket(y, x) == -b));
  return report("bracket", Json{{"x", args.at("x")}, {"y", args.at("y")}},
                std::move(results), std::move(checks));
}

Json cmd_normal_form(Session& s, const Json& args) {
  UElem u = parse_u_expr(args.at("expr").get<std::string>(), s.config.n, s.config.params);
  Json results;
  results["normal_form"] = u_str(u, s.config.params);
  results["degree"] = u_degree(u);
  return report("normal-form", Json{{"expr", args.at("expr")}}, std::move(results),
                Json::array());
}

Json cmd_commutator(Session& s, const Json& args) {
  const auto& P = s.config.params;
  UElem x = parse_u_expr(args.at("x").get<std::string>(), s.config.n, P);
  UElem y = parse_u_expr(args.at("y").get<std::string>(), s.config.n, P);
  UElem c = commutator(x, y);
  Json results;
  results["commutator"] = u_str(c, P);
  return report("commutator", Json{{"x", args.at("x")}, {"y", args.at("y")}},
                std::move(results), Json::array());
}

Json cmd_decompose(Session& s, const Json& args) {
  const auto& P = s.config.params;
  UElem u = parse_u_expr(args.at("expr").get<std::string>(), s.config.n, P);
  long bound = args.value("max_degree", s.config.degree);
  BHDecomposition d = decompose_BH(u, bound, s.xcache->provider(), s.config.n);
  Json terms = Json::array();
  for (const auto& [t, c] : d.terms) {
    Json e;
    e["triple"] = t.str();
    e["coeff"] = c.str(P);
    terms.push_back(e);
  }
  Json results;
  results["terms"] = terms;
  Json checks = Json::array();
  bool ok = recombine(d, s.xcache->provider(), s.config.n) == u;
  checks.push_back(check("recombine", ok, ok ? "" : "recombination differs"));
  return report("decompose",
                Json{{"expr", args.at("expr")}, {"max_degree", bound}},
                std::move(results), std::move(checks));
}

Json cmd_make_z(Session& s, const Json& args) {
  std::vector<int> idx = args.at("indices").get<std::vector<int>>();
  ZGen z = [&]() {
    if (idx.size() == 1) return make_z_i(s.config.n, idx[0] - 1);
    if (idx.size() == 2) return make_z_ij(s.config.n, idx[0] - 1, idx[1] - 1);
    if (idx.size() == 3)
      return make_z_ilj(s.config.n, idx[0] - 1, idx[1] - 1, idx[2] - 1);
    fail(errc::bad_argument, "make-z takes 1, 2 or 3 indices");
  }();
  Json results;
  results["name"] = z.name();
  results["normal_form"] = u_str(z.elem, s.config.params);
  Json checks = Json::array();
  checks.push_back(check("centralizes", centralizes(z.elem, s.config.n).ok));
  return report("make-z", Json{{"indices", idx}}, std::move(results), std::move(checks));
}

std::string h_mono_str(const MIndex& a) {
  std::string out;
  for (int k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += "h" + std::to_string(k + 1);
    if (a[k] != 1) out += "^" + std::to_string(a[k]);
  }
  return out;
}

Json cmd_make_x(Session& s, const Json& args) {
  MIndex m = parse_mindex(args.at("m").get<std::string>(), s.config.n);
  int j = args.at("j").get<int>() - 1;
  const XGen& x = s.xcache->get(m, j);
  Json results;
  results["normal_form"] = u_str(x.elem, s.config.params);
  results["trace"] = x.trace;
  results["degrees_exact"] = x.shape.degrees_exact;
  if (args.value("show_shape", true)) {
    Json shape;
    for (const auto& [r, g] : x.shape.g) {
      std::ostringstream os;
      bool first = true;
      for (const auto& [a, c] : g) {
        append_term(os, first, c, h_mono_str(a), s.config.params);
        first = false;
      }
      shape["r=" + r.str()] = os.str().empty() ? "0" : os.str();
    }
    if (!x.shape.cartan.is_zero()) {
      std::ostringstream os;
      bool first = true;
      for (const auto& [a, c] : x.shape.cartan) {
        append_term(os, first, c, h_mono_str(a), s.config.params);
        first = false;
      }
      shape["cartan"] = os.str();
    }
    results["shape"] = shape;
  }
  Json checks = Json::array();
  checks.push_back(check("centralizes", centralizes(x.elem, s.config.n).ok));
  checks.push_back(check("shape", x.shape.ok, x.shape.issue));
  return report("make-x", Json{{"m", args.at("m")}, {"j", j + 1}}, std::move(results),
                std::move(checks));
}

Json cmd_h_basis(Session& s, const Json& args) {
  long max_degree = args.value("max_degree", s.config.degree);
  HBasisResult r = h_monomial_basis(s.config.n, max_degree, *s.xcache);
  Json monos = Json::array();
  bool central = true;
  for (const auto& mono : r.monomials) {
    monos.push_back(mono.str());
    UElem u = u_one();
    for (const auto& [mj, exp] : mono.factors)
      u = mul(u, u_pow(s.xcache->get(mj.first, mj.second).elem, exp));
    if (!centralizes(u, s.config.n).ok) central = false;
  }
  Json results;
  results["monomials"] = monos;
  results["count"] = r.monomials.size();
  results["rank"] = r.rank;
  Json checks = Json::array();
  checks.push_back(check("independent", r.independent));
  checks.push_back(check("entries-centralize", central));
  return report("h-basis", Json{{"max_degree", max_degree}}, std::move(results),
                std::move(checks));
}

Json cmd_phi(Session& s, const Json& args) {
  UElem u = parse_u_expr(args.at("expr").get<std::string>(), s.config.n, s.config.params);
  Json results;
  results["phi"] = phi_str(phi(u, s.config.n), s.config.params);
  return report("phi", Json{{"expr", args.at("expr")}}, std::move(results), Json::array());
}

Json cmd_tensor_apply(Session& s, const Json& args) {
  const auto& P = s.config.params;
  auto mod = module_from_args(s, args);
  GlRep v = rep_from_args(s, args);
  TensorModule M{mod, std::make_shared<GlRep>(v)};
  UElem op = parse_u_expr(args.at("op").get<std::string>(), s.config.n, P);
  PVec p = parse_pvec(args.value("vec", "1"), s.config.n, P, !mod->nonneg_keys());
  int vindex = args.value("vindex", 1) - 1;
  if (vindex < 0 || vindex >= v.dim) fail(errc::bad_argument, "vindex out of range");
  TenVec w;
  for (const auto& [m, c] : p) w.add(TenKey{m, vindex}, c);
  TenVec img = tensor_action(op, w, M);
  const std::vector<Scalar>* mu = nullptr;
  if (auto* lp = dynamic_cast<const TwistedLaurentModule*>(mod.get())) mu = &lp->mu();
  Json results;
  results["module"] = mod->describe();
  results["V_dim"] = v.dim;
  results["result"] = tenvec_str(img, P, mu);
  return report("tensor-apply", args, std::move(results), Json::array());
}

Json cmd_dmod_apply(Session& s, const Json& args) {
  const auto& P = s.config.params;
  auto mod = module_from_args(s, args);
  WeylOp op = parse_weyl_op(args.at("op").get<std::string>(), s.config.n, P);
  PVec v = parse_pvec(args.value("vec", "1"), s.config.n, P, !mod->nonneg_keys());
  PVec img = apply_weyl_op(op, *mod, v);
  const std::vector<Scalar>* mu = nullptr;
  Json results;
  if (auto* lp = dynamic_cast<const TwistedLaurentModule*>(mod.get())) {
    mu = &lp->mu();
    SimplicityVerdict sv = is_simple_witness(*lp);
    results["simplicity"] = sv.generically_simple ? "generically simple" : sv.detail;
  }
  results["module"] = mod->describe();
  results["result"] = pvec_str(img, P, mu);
  return report("dmod-apply", args, std::move(results), Json::array());
}

Json cmd_complex_check(Session& s, const Json& args) {
  int n = s.config.n;
  std::string p = args.value("p", "A^1");
  long bound = args.value("max_degree", s.config.degree);
  std::shared_ptr<DnModule> mod;
  if (p == "A^1")
    mod = std::make_shared<TwistedPolyModule>(
        std::vector<Scalar>(static_cast<size_t>(n), Scalar(1)));
  else if (p == "P(mu)")
    mod = std::make_shared<TwistedLaurentModule>(s.config.mu);
  else
    fail(errc::bad_argument, "p must be A^1 or P(mu)");

  Json checks = Json::array();
  std::mt19937_64 rng(s.config.seed);
  for (int k = 1; k < n; ++k) {
    std::vector<MIndex> keys;
    std::vector<int> e(static_cast<size_t>(n), 0);
    if (mod->nonneg_keys()) {
      std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == n) {
          keys.push_back(MIndex(e));
          return;
        }
        for (int v = 0; v <= left; ++v) {
          e[static_cast<size_t>(pos)] = v;
          rec(pos + 1, left - v);
        }
        e[static_cast<size_t>(pos)] = 0;
      };
      rec(0, bound);
    } else {
      std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
          keys.push_back(MIndex(e));
          return;
        }
        for (int v = -1; v <= 1; ++v) {
          e[static_cast<size_t>(pos)] = v;
          rec(pos + 1);
        }
      };
      rec(0);
    }
    bool zero = true;
    int dkm1 = static_cast<int>(exterior_basis(n, k - 1).size());
    for (const MIndex& m : keys)
      for (int b = 0; b < dkm1; ++b)
        if (!pi_map(k, pi_map(k - 1, TenVec::single(TenKey{m, b}), *mod), *mod).is_zero())
          zero = false;
    checks.push_back(check("pi_" + std::to_string(k) + " o pi_" + std::to_string(k - 1) +
                               " = 0",
                           zero));
  }
  for (int k = 0; k < n; ++k) {
    auto Vk = std::make_shared<GlRep>(exterior_power(n, k));
    auto Vk1 = std::make_shared<GlRep>(exterior_power(n, k + 1));
    TensorModule Mk{mod, Vk};
    TensorModule Mk1{mod, Vk1};
    bool natural = true;
    std::uniform_int_distribution<int> dir(0, n - 1);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int it = 0; it < 6; ++it) {
      MIndex m(n);
      for (int q = deg(rng); q > 0; --q) m[dir(rng)] += 1;
      UElem x = u_gen(Gen{m, dir(rng)});
      MIndex key(n);
      if (!mod->nonneg_keys()) key = MIndex::unit(n, 0);
      TenVec w = TenVec::single(TenKey{key, it % Vk->dim});
      if (pi_map(k, tensor_action(x, w, Mk), *mod) !=
          tensor_action(x, pi_map(k, w, *mod), Mk1))
        natural = false;
    }
    checks.push_back(check("pi_" + std::to_string(k) + " commutes with sampled actions",
                           natural));
  }
  Json results;
  results["module"] = mod->describe();
  return report("complex-check",
                Json{{"p", p}, {"n", n}, {"max_degree", bound}, {"seed", s.config.seed}},
                std::move(results), std::move(checks));
}

Json cmd_whittaker(Session& s, const Json& args) {
  int n = s.config.n;
  std::string kind = args.value("module", "tensor");
  long bound = args.value("bound", s.config.degree);
  WhittakerModuleDesc d;
  if (kind == "tensor") {
    d.kind = WhittakerModuleDesc::Kind::tensor;
    d.V = std::make_shared<GlRep>(rep_from_args(s, args));
  } else if (kind == "im-pi") {
    d.kind = WhittakerModuleDesc::Kind::im_pi;
    d.k = args.value("k", 0);
  } else if (kind == "ker-pi") {
    d.kind = WhittakerModuleDesc::Kind::ker_pi;
    d.k = args.value("k", 0);
  } else {
    fail(errc::bad_argument, "module must be tensor, im-pi or ker-pi");
  }
  WhittakerResult r = whittaker_space(d, n, bound);
  Json results;
  results["dim"] = r.dim;
  results["stable"] = r.stable;
  Json basis = Json::array();
  for (const TenVec& b : r.basis) basis.push_back(tenvec_str(b, s.config.params));
  results["basis"] = basis;
  Json checks = Json::array();
  Json c;
  c["name"] = "truncation-stable";
  c["status"] = r.stable ? "pass" : "unstable";
  if (!r.stable) c["witness"] = "kernel dimension changed between bounds";
  checks.push_back(c);
  if (kind == "tensor") {
    bool support = true;
    for (const TenVec& b : r.basis)
      for (const auto& [key, coeff] : b)
        if (!key.p.is_zero()) support = false;
    checks.push_back(check("equals 1 (x) V",
                           support && r.dim == d.V->dim,
                           "dim " + std::to_string(r.dim)));
  }
  return report("whittaker", args, std::move(results), std::move(checks));
}

Json cmd_q1(Session& s, const Json& args) {
  int n = s.config.n;
  Json results;
  Json checks = Json::array();
  if (args.contains("op")) {
    UElem op = parse_u_expr(args.at("op").get<std::string>(), n, s.config.params);
    Q1Vec img = q1_action(op, q1_vacuum(), n);
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : img) {
      append_term(os, first, c, m.is_one() ? "v" : m.str() + "*v", s.config.params);
      first = false;
    }
    results["image"] = img.is_zero() ? "0" : os.str();
    results["degree"] = q1_degree(img);
    results["weight"] = q1_weight(img);
    results["whittaker_vector"] = q1_is_whittaker(img, n);
  }
  if (args.contains("dims_bound")) {
    long bound = args.at("dims_bound").get<long>();
    Q1WhitDims d = q1_whittaker_dimensions(n, bound, *s.xcache);
    results["kernel_dims"] = d.kernel_dims;
    results["monomial_counts"] = d.monomial_counts;
    checks.push_back(check("dims-match-Y-monomials", d.dims_match));
    checks.push_back(check("kernel-solvable", d.solvable));
  }
  return report("q1", args, std::move(results), std::move(checks));
}

Json cmd_glrep(Session& s, const Json& args) {
  GlRep v = rep_from_args(s, args);
  Json results;
  results["rep"] = glrep_to_json(v, s.config.params);
  Json checks = Json::array();
  checks.push_back(check("weyl-dimension",
                         !v.lambda || weyl_dimension(*v.lambda) == Scalar(v.dim)));
  checks.push_back(check("serialization-roundtrip",
                         glrep_from_json(results["rep"], s.config.params) == v));
  return report("glrep", args, std::move(results), std::move(checks));
}

Json cmd_cuspidal_check(Session& s, const Json& args) {
  int n = s.config.n;
  GlRep v = rep_from_args(s, args);
  auto rho = HRep::from_glrep(v, *s.xcache, false);
  std::vector<Scalar> alpha = s.config.alpha;
  if (args.contains("alpha")) {
    std::string a = args.at("alpha").get<std::string>();
    if (a != "symbolic") alpha = parse_scalar_vector(a, s.config.params);
  }
  if (static_cast<int>(alpha.size()) != n) fail(errc::bad_argument, "alpha length mismatch");
  int radius = args.value("radius", s.config.radius);
  WeightWindow win(rho, alpha, radius, *s.xcache);
  CuspidalityReport r = cuspidality_check(win, args.value("scan", radius));
  Json results;
  results["alpha"] = scalar_vec_json(alpha, s.config.params);
  Json dets = Json::array();
  for (const auto& d : r.dets) {
    Json e;
    e["op"] = d.op;
    e["slice"] = d.slice.str();
    e["det"] = d.det.str(s.config.params);
    if (d.zero) e["zero"] = true;
    dets.push_back(e);
  }
  results["determinants"] = dets;
  Json vs = Json::array();
  for (const auto& vspec : r.vanishing_specializations) {
    Json e;
    e["op"] = vspec.op;
    e["slice"] = vspec.slice.str();
    e["alpha"] = vspec.alpha;
    vs.push_back(e);
  }
  results["vanishing_specializations"] = vs;
  Json checks = Json::array();
  std::string w;
  for (const auto& d : r.dets)
    if (d.zero) {
      w = "det(" + d.op + ") = 0 at slice " + d.slice.str();
      break;
    }
  checks.push_back(check("cuspidal-on-window", r.cuspidal_on_window, w));
  return report("cuspidal-check", args, std::move(results), std::move(checks));
}

Json cmd_separation(Session& s, const Json& args) {
  std::vector<Scalar> gamma = arg_scalar_vec(s, args, "gamma", s.config.gamma);
  std::vector<Scalar> lambda = arg_scalar_vec(s, args, "lambda", s.config.lambda);
  SeparationVerdict v = separation_check(gamma, lambda);
  Json results;
  results["disjoint"] = v.disjoint;
  if (v.disjoint)
    results["witness_index"] = v.witness_index + 1;
  else
    results["colliding_shift"] = v.colliding_shift;
  Json checks = Json::array();
  checks.push_back(check("dichotomy-oracle", verify_separation_dichotomy()));
  return report("separation",
                Json{{"gamma", scalar_vec_json(gamma, s.config.params)},
                     {"lambda", scalar_vec_json(lambda, s.config.params)}},
                std::move(results), std::move(checks));
}

Json cmd_roundtrip(Session& s, const Json& args) {
  int n = s.config.n;
  std::shared_ptr<HRep> rho;
  std::string which;
  if (args.contains("wdelta")) {
    int k = args.at("wdelta").get<int>();
    rho = make_whittaker_hrep(n, k, *s.xcache).rep;
    which = "W(delta_" + std::to_string(k) + ")";
  } else {
    GlRep v = rep_from_args(s, args);
    rho = HRep::from_glrep(v, *s.xcache, false);
    which = "V(lambda)";
  }
  int radius = args.value("radius", s.config.radius);
  long bound = args.value("bound", s.config.degree);
  RoundtripReport r = roundtrip_F_G(rho, s.config.alpha, radius, bound, *s.xcache);
  Json results;
  results["module"] = which;
  results["dim"] = rho->dim();
  Json checks = Json::array();
  checks.push_back(check("FG-whittaker-space", r.fg_kernel_ok, r.detail));
  checks.push_back(check("FG-matrices", r.fg_matrices_ok, r.detail));
  checks.push_back(check("F1G1-matrices", r.f1g1_ok, r.detail));
  checks.push_back(check("support-in-alpha-lattice", r.support_ok));
  return report("roundtrip", args, std::move(results), std::move(checks));
}

Json cmd_verify_all(Session& s, const Json& args) {
  AcceptanceOptions opt;
  opt.seed = s.config.seed;
  opt.extended = args.value("extended", s.config.extended);
  bool symbolic = false;
  for (const Scalar& a : s.config.alpha)
    if (!a.as_rational()) symbolic = true;
  if (!symbolic) opt.alpha = s.config.alpha;  // negative-control configs
  std::vector<CheckResult> rs = run_acceptance(opt);
  Json checks = Json::array();
  for (const CheckResult& r : rs) {
    Json c;
    c["name"] = r.name;
    c["status"] = r.status;
    if (!r.witness.empty()) c["witness"] = r.witness;
    checks.push_back(c);
  }
  Json results;
  int passed = 0;
  for (const CheckResult& r : rs)
    if (r.passed()) ++passed;
  results["passed"] = passed;
  results["total"] = rs.size();
  Json inputs;
  inputs["seed"] = opt.seed;
  inputs["extended"] = opt.extended;
  inputs["config"] = s.config.to_json();
  return report("verify-all", std::move(inputs), std::move(results), std::move(checks));
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "bracket",    "normal-form",  "commutator",    "decompose", "make-z",
      "make-x",     "h-basis",      "phi",           "tensor-apply",
      "complex-check", "whittaker", "q1",            "glrep",
      "cuspidal-check", "separation", "roundtrip",   "dmod-apply", "verify-all"};
  return names;
}

Json run_command(Session& session, const std::string& name, const Json& args) {
  if (name == "bracket") return cmd_bracket(session, args);
  if (name == "normal-form") return cmd_normal_form(session, args);
  if (name == "commutator") return cmd_commutator(session, args);
  if (name == "decompose") return cmd_decompose(session, args);
  if (name == "make-z") return cmd_make_z(session, args);
  if (name == "make-x") return cmd_make_x(session, args);
  if (name == "h-basis") return cmd_h_basis(session, args);
  if (name == "phi") return cmd_phi(session, args);
  if (name == "tensor-apply") return cmd_tensor_apply(session, args);
  if (name == "complex-check") return cmd_complex_check(session, args);
  if (name == "whittaker") return cmd_whittaker(session, args);
  if (name == "q1") return cmd_q1(session, args);
  if (name == "glrep") return cmd_glrep(session, args);
  if (name == "cuspidal-check") return cmd_cuspidal_check(session, args);
  if (name == "separation") return cmd_separation(session, args);
  if (name == "roundtrip") return cmd_roundtrip(session, args);
  if (name == "dmod-apply") return cmd_dmod_apply(session, args);
  if (name == "verify-all") return cmd_verify_all(session, args);
  fail(errc::bad_argument, "unknown command '" + name + "'");
}

bool report_ok(const Json& report) {
  if (!report.contains("checks")) return true;
  for (const auto& c : report.at("checks"))
    if (c.at("status").get<std::string>() == "fail") return false;
  return true;
}

// ---- serialization ------------------------------------------------------

namespace {

Json mat_to_json(const Mat& m, const std::vector<std::string>& params) {
  Json triplets = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) {
        Json t = Json::array();
        t.push_back(i);
        t.push_back(j);
        t.push_back(m.at(i, j).str(params));
        triplets.push_back(t);
      }
  return triplets;
}

Mat mat_from_json(const Json& j, int rows, int cols,
                  const std::vector<std::string>& params) {
  Mat m(rows, cols);
  for (const auto& t : j)
    m.at(t.at(0).get<int>(), t.at(1).get<int>()) =
        parse_scalar(t.at(2).get<std::string>(), params);
  return m;
}

}  // namespace

Json glrep_to_json(const GlRep& v, const std::vector<std::string>& params) {
  Json j;
  j["n"] = v.n;
  j["dim"] = v.dim;
  Json mats;
  for (int i = 0; i < v.n; ++i)
    for (int k = 0; k < v.n; ++k)
      mats["E" + std::to_string(i + 1) + std::to_string(k + 1)] =
          mat_to_json(v.e(i, k), params);
  j["matrices"] = mats;
  Json ws = Json::array();
  for (const auto& w : v.weights) ws.push_back(scalar_vec_json(w, params));
  j["weights"] = ws;
  if (v.lambda) j["lambda"] = scalar_vec_json(*v.lambda, params);
  return j;
}

GlRep glrep_from_json(const Json& j, const std::vector<std::string>& params) {
  GlRep v;
  v.n = j.at("n").get<int>();
  v.dim = j.at("dim").get<int>();
  v.E.assign(static_cast<size_t>(v.n * v.n), Mat(v.dim, v.dim));
  for (int i = 0; i < v.n; ++i)
    for (int k = 0; k < v.n; ++k)
      v.e(i, k) = mat_from_json(
          j.at("matrices").at("E" + std::to_string(i + 1) + std::to_string(k + 1)), v.dim,
          v.dim, params);
  for (const auto& w : j.at("weights")) {
    std::vector<Scalar> ws;
    for (const auto& sv : w) ws.push_back(parse_scalar(sv.get<std::string>(), params));
    v.weights.push_back(std::move(ws));
  }
  if (j.contains("lambda")) {
    std::vector<Scalar> lam;
    for (const auto& sv : j.at("lambda")) lam.push_back(parse_scalar(sv.get<std::string>(), params));
    v.lambda = lam;
  }
  return v;
}

Json hrep_to_json(const HRep& h, const std::vector<std::string>& params) {
  Json j;
  j["n"] = h.n();
  j["dim"] = h.dim();
  Json z;
  for (int i = 0; i < h.n(); ++i) {
    z["z" + std::to_string(i + 1)] = mat_to_json(h.z_i(i), params);
    for (int k = 0; k < h.n(); ++k) {
      z["z" + std::to_string(i + 1) + "," + std::to_string(k + 1)] =
          mat_to_json(h.z_ij(i, k), params);
      for (int l = 0; l < h.n(); ++l)
        z["z" + std::to_string(i + 1) + "," + std::to_string(l + 1) + "," +
          std::to_string(k + 1)] = mat_to_json(h.z_ilj(i, l, k), params);
    }
  }
  j["z_tables"] = z;
  return j;
}

std::shared_ptr<HRep> hrep_from_json(const Json& j, const std::vector<std::string>& params) {
  int n = j.at("n").get<int>();
  int dim = j.at("dim").get<int>();
  const Json& z = j.at("z_tables");
  std::vector<Mat> zij, zilj, zi;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      zij.push_back(mat_from_json(
          z.at("z" + std::to_string(i + 1) + "," + std::to_string(k + 1)), dim, dim, params));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k)
        zilj.push_back(mat_from_json(z.at("z" + std::to_string(i + 1) + "," +
                                          std::to_string(l + 1) + "," + std::to_string(k + 1)),
                                     dim, dim, params));
  for (int i = 0; i < n; ++i)
    zi.push_back(mat_from_json(z.at("z" + std::to_string(i + 1)), dim, dim, params));
  return HRep::from_tables(n, dim, std::move(zij), std::move(zilj), std::move(zi));
}

}  // namespace wnlie
