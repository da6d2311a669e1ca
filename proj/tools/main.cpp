// Command-line front end. Links only the public C API; argument parsing
// builds a JSON request per subcommand and the human-readable output is a
// rendering of the returned report JSON, never a separate code path.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "wnlie/wnlie.h"

namespace {

using Json = nlohmann::ordered_json;

struct SessionHandle {
  wn_session* s = nullptr;
  ~SessionHandle() { wn_session_free(s); }
};

struct OwnedStr {
  char* p = nullptr;
  ~OwnedStr() { wn_string_free(p); }
};

void render_value(const Json& v, const std::string& indent) {
  if (v.is_array()) {
    if (v.empty()) {
      std::cout << " (none)\n";
      return;
    }
    std::cout << "\n";
    for (const auto& e : v) {
      if (e.is_primitive())
        std::cout << indent << "  - " << (e.is_string() ? e.get<std::string>() : e.dump())
                  << "\n";
      else
        std::cout << indent << "  - " << e.dump() << "\n";
    }
  } else if (v.is_object()) {
    std::cout << "\n";
    for (auto it = v.begin(); it != v.end(); ++it) {
      std::cout << indent << "  " << it.key() << ":";
      render_value(it.value(), indent + "  ");
    }
  } else if (v.is_string()) {
    std::cout << " " << v.get<std::string>() << "\n";
  } else {
    std::cout << " " << v.dump() << "\n";
  }
}

int render_report(const Json& rep, bool raw_json, const std::string& emit) {
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) {
      std::cerr << "error: cannot write " << emit << "\n";
      return 2;
    }
    out << rep.dump(2) << "\n";
  }
  if (raw_json) {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "== " << rep.value("command", "?") << "\n";
    if (rep.contains("results"))
      for (auto it = rep["results"].begin(); it != rep["results"].end(); ++it) {
        std::cout << it.key() << ":";
        render_value(it.value(), "");
      }
    if (rep.contains("checks") && !rep["checks"].empty()) {
      std::cout << "checks:\n";
      for (const auto& c : rep["checks"]) {
        std::string status = c.value("status", "?");
        std::string mark = status == "pass" ? "pass" : (status == "unstable" ? "UNSTABLE" : "FAIL");
        std::cout << "  [" << mark << "] " << c.value("name", "?");
        if (c.contains("witness") && !c["witness"].get<std::string>().empty())
          std::cout << " -- " << c["witness"].get<std::string>();
        std::cout << "\n";
      }
    }
  }
  bool ok = true;
  if (rep.contains("checks"))
    for (const auto& c : rep["checks"])
      if (c.value("status", "") == "fail") ok = false;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wnlie: exact computations in the Lie algebra of polynomial vector fields, "
               "its localized enveloping algebra and the centralizer algebra H_n"};
  app.require_subcommand(1);

  std::string config_path, emit_path;
  bool raw_json = false;
  std::optional<int> opt_n;
  std::optional<long long> opt_seed;
  app.add_option("--config", config_path, "configuration JSON file");
  app.add_option("--emit", emit_path, "write the report JSON to this path");
  app.add_option("--seed", opt_seed, "random seed override");
  app.add_option("-n,--rank", opt_n, "rank n override (1..4)");
  app.add_flag("--json", raw_json, "print the raw report JSON");

  Json args = Json::object();
  std::string command;

  // --- expression commands
  std::string x_text, y_text, expr_text;
  auto* c_bracket = app.add_subcommand("bracket", "Lie bracket of two vector fields")->fallthrough();
  c_bracket->add_option("x", x_text)->required();
  c_bracket->add_option("y", y_text)->required();
  auto* c_nf = app.add_subcommand("normal-form", "PBW normal form of an element of U_∂")->fallthrough();
  c_nf->add_option("expr", expr_text)->required();
  auto* c_comm = app.add_subcommand("commutator", "commutator in U_∂")->fallthrough();
  c_comm->add_option("x", x_text)->required();
  c_comm->add_option("y", y_text)->required();

  long max_degree = -1;
  auto* c_dec = app.add_subcommand("decompose", "B_n ⊗ H_n coordinates of an element")->fallthrough();
  c_dec->add_option("expr", expr_text)->required();
  c_dec->add_option("--max-degree", max_degree);

  std::vector<int> z_indices;
  auto* c_mkz = app.add_subcommand("make-z", "build z_i, z_{i,j} or z_{i,l,j}")->fallthrough();
  c_mkz->add_option("indices", z_indices, "1, 2 or 3 one-based indices")->required();

  std::string m_text;
  int j_index = 1;
  bool show_shape = false;
  auto* c_mkx = app.add_subcommand("make-x", "build X_{m,j} with shape verification")->fallthrough();
  c_mkx->add_option("m", m_text, "multi-index, e.g. 2,1")->required();
  c_mkx->add_option("j", j_index, "direction (1-based)")->required();
  c_mkx->add_flag("--show-shape", show_shape);

  auto* c_hb = app.add_subcommand("h-basis", "ordered X-monomial basis of H_n")->fallthrough();
  c_hb->add_option("--max-degree", max_degree);

  auto* c_phi = app.add_subcommand("phi", "image in D_n ⊗ U(gl_n)")->fallthrough();
  c_phi->add_option("expr", expr_text)->required();

  std::string module_name = "A^a", lambda_text, vec_text = "1", op_text;
  std::optional<int> exterior_k;
  int vindex = 1;
  auto* c_ta = app.add_subcommand("tensor-apply", "act on a tensor module T(P, V)")->fallthrough();
  c_ta->add_option("--module", module_name, "A^a, A^1 or P(mu)");
  c_ta->add_option("--op", op_text)->required();
  c_ta->add_option("--vec", vec_text, "polynomial part, e.g. t1^2*t2");
  c_ta->add_option("--vindex", vindex, "V basis index (1-based)");
  c_ta->add_option("--lambda", lambda_text);
  c_ta->add_option("--exterior", exterior_k, "use the k-th exterior power");

  std::string p_name = "A^1";
  auto* c_cc = app.add_subcommand("complex-check", "π_k ∘ π_{k-1} = 0 and naturality")->fallthrough();
  c_cc->add_option("--p", p_name, "A^1 or P(mu)");
  c_cc->add_option("--max-degree", max_degree);

  std::string wh_kind = "tensor";
  std::optional<int> pi_k;
  long bound = -1;
  auto* c_wh = app.add_subcommand("whittaker", "basis of wh_1 on a truncation")->fallthrough();
  c_wh->add_option("--module", wh_kind, "tensor, im-pi or ker-pi");
  c_wh->add_option("--lambda", lambda_text);
  c_wh->add_option("--exterior", exterior_k);
  c_wh->add_option("--k", pi_k, "pi index for im-pi/ker-pi");
  c_wh->add_option("--bound", bound);

  std::optional<long> dims_bound;
  auto* c_q1 = app.add_subcommand("q1", "the universal Whittaker module Q_1")->fallthrough();
  c_q1->add_option("--op", op_text, "element applied to v_1");
  c_q1->add_option("--dims-bound", dims_bound, "report per-degree wh_1(Q_1) dimensions");

  auto* c_gl = app.add_subcommand("glrep", "finite-dimensional gl_n-module V(λ)")->fallthrough();
  c_gl->add_option("--lambda", lambda_text);
  c_gl->add_option("--exterior", exterior_k);

  std::string alpha_text = "symbolic";
  int radius = -1, scan = -2;
  auto* c_cu = app.add_subcommand("cuspidal-check", "slice determinants on a weight window")->fallthrough();
  c_cu->add_option("--lambda", lambda_text);
  c_cu->add_option("--exterior", exterior_k);
  c_cu->add_option("--alpha", alpha_text, "symbolic or a scalar vector");
  c_cu->add_option("--radius", radius);
  c_cu->add_option("--scan", scan, "integer-alpha scan radius (-1 disables)");

  std::string gamma_text;
  auto* c_sep = app.add_subcommand("separation", "block disjointness of two weights")->fallthrough();
  c_sep->add_option("--gamma", gamma_text);
  c_sep->add_option("--lambda", lambda_text);

  std::optional<int> wdelta;
  auto* c_rt = app.add_subcommand("roundtrip", "F∘G and F_1∘G_1 at example scale")->fallthrough();
  c_rt->add_option("--lambda", lambda_text);
  c_rt->add_option("--wdelta", wdelta, "use the Whittaker module W(δ_k)");
  c_rt->add_option("--radius", radius);
  c_rt->add_option("--bound", bound);

  auto* c_dm = app.add_subcommand("dmod-apply", "apply a Weyl operator in A^a or P(mu)")->fallthrough();
  c_dm->add_option("--module", module_name, "A^a, A^1 or P(mu)");
  c_dm->add_option("--op", op_text)->required();
  c_dm->add_option("--vec", vec_text);

  bool extended = false;
  auto* c_va = app.add_subcommand("verify-all", "run the full verification suite")->fallthrough();
  c_va->add_flag("--extended", extended, "include the n = 3 X-family checks");

  CLI11_PARSE(app, argc, argv);

  // assemble the config
  Json config = Json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read " << config_path << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      config = Json::parse(ss.str());
    } catch (const std::exception& e) {
      std::cerr << "error: bad config JSON: " << e.what() << "\n";
      return 2;
    }
  }
  if (opt_n) config["n"] = *opt_n;
  if (opt_seed) config["seed"] = *opt_seed;

  SessionHandle session;
  {
    OwnedStr err;
    session.s = wn_session_create(config.dump().c_str(), &err.p);
    if (!session.s) {
      std::cerr << "error: " << (err.p ? err.p : "session creation failed") << "\n";
      return 2;
    }
  }

  if (c_bracket->parsed()) {
    command = "bracket";
    args["x"] = x_text;
    args["y"] = y_text;
  } else if (c_nf->parsed()) {
    command = "normal-form";
    args["expr"] = expr_text;
  } else if (c_comm->parsed()) {
    command = "commutator";
    args["x"] = x_text;
    args["y"] = y_text;
  } else if (c_dec->parsed()) {
    command = "decompose";
    args["expr"] = expr_text;
    if (max_degree >= 0) args["max_degree"] = max_degree;
  } else if (c_mkz->parsed()) {
    command = "make-z";
    args["indices"] = z_indices;
  } else if (c_mkx->parsed()) {
    command = "make-x";
    args["m"] = m_text;
    args["j"] = j_index;
    args["show_shape"] = show_shape;
  } else if (c_hb->parsed()) {
    command = "h-basis";
    if (max_degree >= 0) args["max_degree"] = max_degree;
  } else if (c_phi->parsed()) {
    command = "phi";
    args["expr"] = expr_text;
  } else if (c_ta->parsed()) {
    command = "tensor-apply";
    args["module"] = module_name;
    args["op"] = op_text;
    args["vec"] = vec_text;
    args["vindex"] = vindex;
    if (exterior_k) args["exterior"] = *exterior_k;
    if (!lambda_text.empty()) args["lambda"] = lambda_text;
  } else if (c_cc->parsed()) {
    command = "complex-check";
    args["p"] = p_name;
    if (max_degree >= 0) args["max_degree"] = max_degree;
  } else if (c_wh->parsed()) {
    command = "whittaker";
    args["module"] = wh_kind;
    if (!lambda_text.empty()) args["lambda"] = lambda_text;
    if (exterior_k) args["exterior"] = *exterior_k;
    if (pi_k) args["k"] = *pi_k;
    if (bound >= 0) args["bound"] = bound;
  } else if (c_q1->parsed()) {
    command = "q1";
    if (!op_text.empty()) args["op"] = op_text;
    if (dims_bound) args["dims_bound"] = *dims_bound;
  } else if (c_gl->parsed()) {
    command = "glrep";
    if (!lambda_text.empty()) args["lambda"] = lambda_text;
    if (exterior_k) args["exterior"] = *exterior_k;
  } else if (c_cu->parsed()) {
    command = "cuspidal-check";
    if (!lambda_text.empty()) args["lambda"] = lambda_text;
    if (exterior_k) args["exterior"] = *exterior_k;
    args["alpha"] = alpha_text;
    if (radius >= 1) args["radius"] = radius;
    if (scan >= -1) args["scan"] = scan;
  } else if (c_sep->parsed()) {
    command = "separation";
    if (!gamma_text.empty()) args["gamma"] = gamma_text;
    if (!lambda_text.empty()) args["lambda"] = lambda_text;
  } else if (c_rt->parsed()) {
    command = "roundtrip";
    if (!lambda_text.empty()) args["lambda"] = lambda_text;
    if (wdelta) args["wdelta"] = *wdelta;
    if (radius >= 1) args["radius"] = radius;
    if (bound >= 0) args["bound"] = bound;
  } else if (c_dm->parsed()) {
    command = "dmod-apply";
    args["module"] = module_name;
    args["op"] = op_text;
    args["vec"] = vec_text;
  } else if (c_va->parsed()) {
    command = "verify-all";
    args["extended"] = extended;
  }

  OwnedStr report;
  wn_status st = wn_command(session.s, command.c_str(), args.dump().c_str(), &report.p);
  if (st != WN_OK) {
    std::cerr << "error (" << wn_status_name(st) << "): " << wn_session_last_error(session.s)
              << "\n";
    return 2;
  }
  Json rep = Json::parse(report.p);
  return render_report(rep, raw_json, emit_path);
}
