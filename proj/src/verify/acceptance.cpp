#include "verify/acceptance.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "cuspidal/roundtrip.hpp"
#include "cuspidal/separation.hpp"
#include "shenlarsson/phi.hpp"
#include "shenlarsson/q1.hpp"
#include "witt/witt.hpp"

namespace wnlie {

namespace {

using Rng = std::mt19937_64;

WittTerm rnd_term(Rng& rng, int n, int max_deg) {
  std::uniform_int_distribution<int> dir(0, n - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  MIndex m(n);
  for (int q = deg(rng); q > 0; --q) m[dir(rng)] += 1;
  return WittTerm{m, dir(rng)};
}

UElem rnd_low_elem(Rng& rng, int n) {
  std::uniform_int_distribution<int> dir(0, n - 1);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> len(1, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  UElem out;
  for (int s = 0; s < 2; ++s) {
    Word w;
    int total = 0;
    int k = len(rng);
    for (int t = 0; t < k && total <= 2; ++t) {
      MIndex m(n);
      int d = deg(rng);
      if (total + d > 2) d = 2 - total;
      for (int q = d; q > 0; --q) m[dir(rng)] += 1;
      total += d;
      w.push_back({Gen{m, dir(rng)}, 1});
    }
    int c = coef(rng);
    if (c != 0) out += normal_word(w, Scalar(c));
  }
  return out;
}

struct Reporter {
  std::vector<CheckResult> out;
  void add(const std::string& name, bool ok, const std::string& witness = "") {
    out.push_back(CheckResult{name, ok ? "pass" : "fail", ok ? "" : witness});
  }
  void add_status(const std::string& name, const std::string& status,
                  const std::string& witness = "") {
    out.push_back(CheckResult{name, status, witness});
  }
};

// 1. Lie axioms: antisymmetry + Jacobi, >= 200 seeded basis triples, n <= 3.
void c1_lie_axioms(Reporter& rep, Rng& rng) {
  int failures = 0;
  std::string witness;
  int total = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int it = 0; it < 72; ++it) {
      WittElem x = WittElem::single(rnd_term(rng, n, 4));
      WittElem y = WittElem::single(rnd_term(rng, n, 4));
      WittElem z = WittElem::single(rnd_term(rng, n, 4));
      ++total;
      if (!(bracket(x, y) == -bracket(y, x))) {
        ++failures;
        if (witness.empty()) witness = "antisymmetry at " + witt_str(x) + ", " + witt_str(y);
      }
      WittElem jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                     bracket(z, bracket(x, y));
      if (!jac.is_zero()) {
        ++failures;
        if (witness.empty())
          witness = "Jacobi at " + witt_str(x) + ", " + witt_str(y) + ", " + witt_str(z);
      }
    }
  }
  rep.add("01-lie-axioms (" + std::to_string(total) + " triples, n <= 3, |m| <= 4)",
          failures == 0, witness);
}

// 2. phi is an algebra homomorphism on >= 100 seeded degree <= 2 pairs.
void c2_phi_homomorphism(Reporter& rep, Rng& rng) {
  int n = 2;
  int failures = 0;
  std::string witness;
  for (int it = 0; it < 120; ++it) {
    UElem x = rnd_low_elem(rng, n);
    UElem y = rnd_low_elem(rng, n);
    if (!(phi(mul(x, y), n) == phi_mul(phi(x, n), phi(y, n), n))) {
      ++failures;
      if (witness.empty()) witness = "phi(xy) != phi(x)phi(y) at " + u_str(x) + "; " + u_str(y);
    }
    PhiImage px = phi(x, n), py = phi(y, n);
    if (!(phi(commutator(x, y), n) == phi_mul(px, py, n) - phi_mul(py, px, n))) {
      ++failures;
      if (witness.empty()) witness = "phi bracket mismatch at " + u_str(x) + "; " + u_str(y);
    }
  }
  rep.add("02-phi-homomorphism (120 pairs, degree <= 2, n = 2)", failures == 0, witness);
}

// 3. Centralizer membership and the single-frame shape of the X family.
void c3_centralizer(Reporter& rep, bool extended) {
  std::string witness;
  bool ok = true;
  for (int n = 1; n <= 3 && ok; ++n)
    for (int i = 0; i < n && ok; ++i) {
      if (!centralizes(make_z_i(n, i).elem, n).ok) {
        ok = false;
        witness = "z_i fails at n=" + std::to_string(n);
      }
      for (int j = 0; j < n && ok; ++j) {
        if (!centralizes(make_z_ij(n, i, j).elem, n).ok) ok = false;
        for (int l = 0; l < n && ok; ++l)
          if (!centralizes(make_z_ilj(n, i, l, j).elem, n).ok) ok = false;
      }
    }
  rep.add("03a-centralizer-z (all z generators, n <= 3)", ok, witness);

  auto x_family = [&](int n) -> std::pair<bool, std::string> {
    XCache cache(n);
    std::vector<int> e(static_cast<size_t>(n), 0);
    bool good = true;
    std::string w;
    std::function<void(int, long)> rec = [&](int pos, long left) {
      if (!good) return;
      if (pos == n) {
        MIndex m(e);
        if (m.total() < 1) return;
        for (int j = 0; j < n; ++j) {
          if (m == MIndex::unit(n, j)) continue;
          try {
            const XGen& x = cache.get(m, j);
            if (!centralizes(x.elem, n).ok || !x.shape.ok) {
              good = false;
              w = "X[" + m.str() + "," + std::to_string(j + 1) + "]: " + x.shape.issue;
            }
            if (n == 1 && !x.shape.degrees_exact) {
              good = false;
              w = "n=1 closed family should attain deg g_r = |m|-|r| at X[" + m.str() + "]";
            }
          } catch (const error& err) {
            good = false;
            w = std::string("build failure: ") + err.what();
          }
        }
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[static_cast<size_t>(pos)] = v;
        rec(pos + 1, left - v);
      }
      e[static_cast<size_t>(pos)] = 0;
    };
    rec(0, 4);
    return {good, w};
  };
  for (int n = 1; n <= 2; ++n) {
    auto [good, w] = x_family(n);
    rep.add("03b-centralizer-X (|m| <= 4, shape bound deg g_r <= |m|-|r|, n = " +
                std::to_string(n) + ")",
            good, w);
  }
  if (extended) {
    auto [good, w] = x_family(3);
    rep.add("03c-centralizer-X-extended (|m| <= 4, n = 3)", good, w);
  }
}

// 4. n = 1 closed formulas.
void c4_closed_formula(Reporter& rep) {
  XCache cache(1);
  bool ok1 = cache.get(MIndex(std::vector<int>{2}), 0).elem == make_z_ilj(1, 0, 0, 0).elem;
  bool ok2 = cache.get(MIndex(std::vector<int>{3}), 0).elem == make_z_i(1, 0).elem;
  rep.add("04-n1-closed-formula (X_{2,1} = z_{1,1,1}, X_{3,1} = z_1)", ok1 && ok2,
          ok1 ? "X_{3,1} != z_1" : "X_{2,1} != z_{1,1,1}");
}

// 5. The B_n H_n generator identities, as displayed, plus round-trips.
void c5_decomposition(Reporter& rep) {
  bool ok = true;
  std::string witness;
  {
    int n = 2;
    XCache cache(n);
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        // t_i d_j = z_{i,j} d_j d_i^{-1} + h_i d_j d_i^{-1}
        UElem lhs = u_gen(Gen{MIndex::unit(n, i), j});
        UElem tail = normal_word({{gen_partial(n, j), 1}, {gen_partial(n, i), -1}});
        UElem rhs = mul(make_z_ij(n, i, j).elem, tail) +
                    mul(u_gen(gen_h(n, i)), tail);
        if (lhs != rhs) {
          ok = false;
          witness = "t_i d_j identity fails at i=" + std::to_string(i + 1) + ",j=" +
                    std::to_string(j + 1);
        }
        for (int l = 0; l < n && ok; ++l) {
          // t_i t_l d_j via the z_{i,l,j} display
          UElem lhs2 = u_gen(Gen{MIndex::unit(n, i).plus_unit(l), j});
          UElem tail2 = normal_word({{gen_partial(n, i), -1},
                                     {gen_partial(n, l), -1},
                                     {gen_partial(n, j), 1}});
          UElem tdj_i = normal_word({{Gen{MIndex::unit(n, i), j}, 1},
                                     {gen_partial(n, i), 1},
                                     {gen_partial(n, j), -1},
                                     {gen_h(n, l), 1}});
          UElem tdj_l = normal_word({{Gen{MIndex::unit(n, l), j}, 1},
                                     {gen_partial(n, l), 1},
                                     {gen_partial(n, j), -1},
                                     {gen_h(n, i), 1}});
          UElem rhs2 = mul(make_z_ilj(n, i, l, j).elem, tail2) + mul(tdj_i, tail2) +
                       mul(tdj_l, tail2) -
                       mul(normal_word({{gen_h(n, l), 1}, {gen_h(n, i), 1}}), tail2);
          if (i == l) rhs2 -= mul(u_gen(Gen{MIndex::unit(n, i), l}), tail2);
          if (lhs2 != rhs2) {
            ok = false;
            witness = "t_i t_l d_j identity fails at (" + std::to_string(i + 1) + "," +
                      std::to_string(l + 1) + "," + std::to_string(j + 1) + ")";
          }
        }
      }
  }
  {
    int n = 1;
    UElem h = u_gen(gen_h(n, 0));
    UElem dinv = u_gen(gen_partial(n, 0), -1);
    UElem t2d = u_gen(Gen{MIndex(std::vector<int>{2}), 0});
    UElem t3d = u_gen(Gen{MIndex(std::vector<int>{3}), 0});
    UElem rhs = mul(make_z_ilj(n, 0, 0, 0).elem, dinv) + mul({h, h, dinv}) -
                mul(h, dinv);
    if (t2d != rhs) {
      ok = false;
      witness = "t_1^2 d_1 identity fails";
    }
    UElem hm1 = h - u_one();
    UElem hm2 = h - u_scalar(Scalar(2));
    UElem dinv2 = u_gen(gen_partial(n, 0), -2);
    UElem rhs3 = mul(make_z_i(n, 0).elem, dinv2) +
                 mul({t2d, hm1, dinv}).scaled(Scalar(3)) -
                 mul({h, hm1, hm2, dinv2}).scaled(Scalar(2));
    if (t3d != rhs3) {
      ok = false;
      witness = "t_1^3 d_1 identity fails";
    }
  }
  rep.add("05a-decomposition-identities (four generator identities, exact normal forms)", ok,
          witness);

  bool rt = true;
  std::string rtw;
  {
    int n = 2;
    XCache cache(n);
    std::vector<UElem> gens;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        gens.push_back(u_gen(Gen{MIndex::unit(n, i), j}));
        for (int l = 0; l < n; ++l)
          gens.push_back(u_gen(Gen{MIndex::unit(n, i).plus_unit(l), j}));
      }
    for (const UElem& u : gens) {
      BHDecomposition d = decompose_BH(u, 6, cache.provider(), n);
      if (recombine(d, cache.provider(), n) != u) {
        rt = false;
        rtw = "round-trip fails for " + u_str(u);
      }
    }
  }
  {
    XCache cache(1);
    for (int deg = 2; deg <= 3; ++deg) {
      UElem u = u_gen(Gen{MIndex(std::vector<int>{deg}), 0});
      BHDecomposition d = decompose_BH(u, 6, cache.provider(), 1);
      if (recombine(d, cache.provider(), 1) != u) {
        rt = false;
        rtw = "round-trip fails for " + u_str(u);
      }
    }
  }
  rep.add("05b-decompose-roundtrip (t_i d_j, t_i t_l d_j, t_1^2 d_1, t_1^3 d_1)", rt, rtw);
}

// 6. PBW independence of X-monomials of degree <= 3.
void c6_pbw_independence(Reporter& rep) {
  for (int n = 1; n <= 2; ++n) {
    XCache cache(n);
    HBasisResult r = h_monomial_basis(n, 3, cache);
    rep.add("06-pbw-independence (degree <= 3, n = " + std::to_string(n) + ": rank " +
                std::to_string(r.rank) + " of " + std::to_string(r.monomials.size()) + ")",
            r.independent && r.rank == static_cast<int>(r.monomials.size()), "rank deficit");
  }
}

// 7. The complex property and pi naturality.
void c7_complex(Reporter& rep, Rng& rng) {
  bool ok = true;
  std::string witness;
  for (int n = 2; n <= 3 && ok; ++n) {
    std::vector<Scalar> ones(static_cast<size_t>(n), Scalar(1));
    std::vector<Scalar> mus;
    for (int i = 0; i < n; ++i) mus.push_back(Scalar::param(i, n));
    std::vector<std::shared_ptr<DnModule>> mods = {
        std::make_shared<TwistedPolyModule>(ones),
        std::make_shared<TwistedLaurentModule>(mus)};
    for (const auto& P : mods) {
      for (int k = 1; k < n && ok; ++k) {
        std::vector<MIndex> keys;
        if (P->nonneg_keys()) {
          std::vector<int> e(static_cast<size_t>(n), 0);
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
          rec(0, 3);
        } else {
          std::vector<int> e(static_cast<size_t>(n), 0);
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
        int dkm1 = static_cast<int>(exterior_basis(n, k - 1).size());
        for (const MIndex& m : keys)
          for (int b = 0; b < dkm1 && ok; ++b) {
            TenVec v = TenVec::single(TenKey{m, b});
            if (!pi_map(k, pi_map(k - 1, v, *P), *P).is_zero()) {
              ok = false;
              witness = "pi_" + std::to_string(k) + " o pi_" + std::to_string(k - 1) +
                        " != 0 over " + P->describe();
            }
          }
      }
      // naturality on sampled actions
      for (int k = 0; k < n && ok; ++k) {
        auto Vk = std::make_shared<GlRep>(exterior_power(n, k));
        auto Vk1 = std::make_shared<GlRep>(exterior_power(n, k + 1));
        TensorModule Mk{P, Vk};
        TensorModule Mk1{P, Vk1};
        for (int it = 0; it < 6 && ok; ++it) {
          UElem x = u_from_witt(WittElem::single(rnd_term(rng, n, 2)));
          MIndex key(n);
          if (!P->nonneg_keys()) key = MIndex::unit(n, 0);
          TenVec w = TenVec::single(TenKey{key, it % Vk->dim});
          if (pi_map(k, tensor_action(x, w, Mk), *P) !=
              tensor_action(x, pi_map(k, w, *P), Mk1)) {
            ok = false;
            witness = "pi_" + std::to_string(k) + " does not commute with " + u_str(x);
          }
        }
      }
    }
  }
  rep.add("07-complex-property (pi o pi = 0 and naturality, n <= 3, A^1 and P(mu))", ok,
          witness);
}

// 8. Whittaker identification at truncation 3 with the stability flag.
void c8_whittaker(Reporter& rep) {
  int n = 2;
  struct Case {
    std::string name;
    GlRep v;
  };
  std::vector<Case> cases;
  cases.push_back({"trivial", exterior_power(n, 0)});
  cases.push_back({"natural", exterior_power(n, 1)});
  cases.push_back({"V(2,0)", highest_weight_module(n, {Scalar(2), Scalar(0)})});
  bool ok = true;
  std::string witness;
  bool stable = true;
  for (const Case& c : cases) {
    WhittakerModuleDesc d;
    d.kind = WhittakerModuleDesc::Kind::tensor;
    d.V = std::make_shared<GlRep>(c.v);
    WhittakerResult r = whittaker_space(d, n, 3);
    if (!r.stable) stable = false;
    bool support = true;
    SpanBuilder span(c.v.dim);
    for (const TenVec& b : r.basis) {
      std::vector<Scalar> vcomp(static_cast<size_t>(c.v.dim));
      for (const auto& [key, coeff] : b) {
        if (!key.p.is_zero()) support = false;
        else vcomp[static_cast<size_t>(key.v)] = coeff;
      }
      span.insert(vcomp);
    }
    if (r.dim != c.v.dim || !support || span.rank() != c.v.dim) {
      ok = false;
      witness = "wh_1(T(A^1," + c.name + ")) != 1 (x) V";
    }
  }
  WhittakerModuleDesc d;
  d.kind = WhittakerModuleDesc::Kind::im_pi;
  d.k = 0;
  WhittakerResult r = whittaker_space(d, n, 3);
  if (r.dim != 1) {
    ok = false;
    witness = "dim wh_1(im pi_0) = " + std::to_string(r.dim) + ", expected 1";
  }
  if (!r.stable) stable = false;
  rep.add_status("08-whittaker-identification (D = 3, V in {trivial, natural, V(2,0)}, n = 2)",
                 !ok ? "fail" : (stable ? "pass" : "unstable"), witness);
}

// 9. The closed H_n action formulas against the tensor realization.
void c9_h_action(Reporter& rep) {
  int n = 2;
  XCache cache(n);
  std::vector<std::pair<std::string, GlRep>> cases;
  cases.push_back({"natural", exterior_power(n, 1)});
  cases.push_back({"V(2,0)", highest_weight_module(n, {Scalar(2), Scalar(0)})});
  cases.push_back({"Lambda^2", exterior_power(n, 2)});
  bool ok = true;
  std::string witness;
  for (const auto& [name, v] : cases) {
    try {
      auto rho = HRep::from_glrep(v, cache, /*crosscheck=*/true);
      (void)rho;
    } catch (const error& e) {
      ok = false;
      witness = name + ": " + e.what();
    }
  }
  rep.add("09-h-action-formulas (closed z formulas vs localized tensor action, n = 2)", ok, witness);
}

// 10. Q_1 checks.
void c10_q1(Reporter& rep) {
  bool ok = true;
  std::string witness;
  for (int n = 1; n <= 2 && ok; ++n) {
    std::vector<UElem> zs;
    for (int i = 0; i < n; ++i) {
      zs.push_back(make_z_i(n, i).elem);
      for (int j = 0; j < n; ++j) {
        zs.push_back(make_z_ij(n, i, j).elem);
        for (int l = 0; l < n; ++l) zs.push_back(make_z_ilj(n, i, l, j).elem);
      }
    }
    for (const UElem& z : zs) {
      if (z.is_zero()) continue;
      Q1Vec img = q1_action(z, q1_vacuum(), n);
      if (!q1_is_whittaker(img, n)) {
        ok = false;
        witness = "Theta(z)v_1 not a Whittaker vector at n=" + std::to_string(n);
      }
    }
  }
  rep.add("10a-q1-theta (Theta(z)v_1 Whittaker for every z generator, n <= 2)", ok, witness);

  XCache cache(1);
  Q1WhitDims d = q1_whittaker_dimensions(1, 4, cache);
  std::ostringstream dims;
  for (size_t i = 0; i < d.kernel_dims.size(); ++i)
    dims << (i ? "," : "") << d.kernel_dims[i];
  rep.add("10b-q1-dimensions (n = 1, degree <= 4: dims " + dims.str() +
              " match Y-monomial counts; kernel solvable)",
          d.dims_match && d.solvable,
          d.dims_match ? "kernel vector outside the Y-monomial span" : "dimension mismatch");
}

// 11. The closed weight-action families against the decompose route, plus
// the module axiom.
void c11_wmod(Reporter& rep) {
  int n = 2;
  XCache cache(n);
  std::vector<Scalar> alpha{Scalar::param(0, n), Scalar::param(1, n)};
  bool ok = true;
  std::string witness;
  for (const std::string& name : {std::string("natural"), std::string("V(2,0)")}) {
    GlRep v = name == "natural" ? exterior_power(n, 1)
                                : highest_weight_module(n, {Scalar(2), Scalar(0)});
    auto rho = HRep::from_glrep(v, cache, false);
    WeightWindow win(rho, alpha, 2, cache);
    for (const MIndex& r : win.slices(2)) {
      for (int b = 0; b < rho->dim() && ok; ++b) {
        WinVec w = WinVec::single(WinKey{r, b});
        for (int k = 0; k < n && ok; ++k) {
          if (win.act_h(k, w) != win.act_elem(u_gen(gen_h(n, k)), w) ||
              win.act_d(k, 1, w) != win.act_elem(u_gen(gen_partial(n, k)), w)) {
            ok = false;
            witness = name + ": h/∂ family disagrees at slice " + r.str();
          }
        }
        for (int i = 0; i < n && ok; ++i)
          for (int j = 0; j < n && ok; ++j) {
            if (win.act_td(i, j, w) != win.act_elem(u_gen(Gen{MIndex::unit(n, i), j}), w)) {
              ok = false;
              witness = name + ": t_i d_j family disagrees at slice " + r.str();
            }
            if (win.act_ttd(i, j, w) !=
                win.act_elem(u_gen(Gen{MIndex::unit(n, i).plus_unit(j), j}), w)) {
              ok = false;
              witness = name + ": t_i t_j d_j family disagrees at slice " + r.str();
            }
          }
      }
      if (!ok) break;
    }
  }
  rep.add("11a-weight-action-families (closed formulas vs B_n (x) H_n route, radius 2, n = 2)", ok, witness);

  bool axiom = true;
  std::string axw;
  {
    auto rho = HRep::from_glrep(exterior_power(n, 1), cache, false);
    WeightWindow win(rho, alpha, 2, cache);
    std::vector<WittElem> ops;
    for (int k = 0; k < n; ++k) {
      ops.push_back(witt_partial(n, k));
      ops.push_back(witt_h(n, k));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j) ops.push_back(witt_term_elem(MIndex::unit(n, i), j));
        ops.push_back(witt_term_elem(MIndex::unit(n, i).plus_unit(j), j));
      }
    for (const MIndex& r : win.slices(1)) {
      for (int b = 0; b < rho->dim(); ++b) {
        WinVec w = WinVec::single(WinKey{r, b});
        for (size_t x = 0; x < ops.size() && axiom; ++x)
          for (size_t y = x + 1; y < ops.size() && axiom; ++y) {
            UElem ux = u_from_witt(ops[x]), uy = u_from_witt(ops[y]);
            WinVec lhs = win.act_elem(u_from_witt(bracket(ops[x], ops[y])), w);
            WinVec rhs = win.act_elem(ux, win.act_elem(uy, w)) -
                         win.act_elem(uy, win.act_elem(ux, w));
            if (lhs != rhs) {
              axiom = false;
              axw = "[x,y] mismatch for " + witt_str(ops[x]) + ", " + witt_str(ops[y]) +
                    " at slice " + r.str();
            }
          }
        if (!axiom) break;
      }
      if (!axiom) break;
    }
  }
  rep.add("11b-wmod-module-axiom (interior slices, all family pairs)", axiom, axw);
}

// 12. Cuspidality with symbolic alpha plus the excluded-lattice control.
void c12_cuspidality(Reporter& rep, const std::vector<Scalar>& alpha_opt) {
  int n = 2;
  XCache cache(n);
  std::vector<Scalar> alpha = alpha_opt;
  if (alpha.empty()) {
    alpha.push_back(Scalar::param(0, n));
    alpha.push_back(Scalar::param(1, n));
  }
  bool ok = true;
  std::string witness;
  for (const std::string& name : {std::string("natural"), std::string("V(2,0)")}) {
    GlRep v = name == "natural" ? exterior_power(n, 1)
                                : highest_weight_module(n, {Scalar(2), Scalar(0)});
    auto rho = HRep::from_glrep(v, cache, false);
    WeightWindow win(rho, alpha, 2, cache);
    CuspidalityReport r = cuspidality_check(win, -1);
    if (!r.cuspidal_on_window) {
      ok = false;
      for (const auto& d : r.dets)
        if (d.zero) {
          witness = name + ": det(" + d.op + ") = 0 at slice " + d.slice.str();
          break;
        }
    }
  }
  rep.add("12a-cuspidality (symbolic alpha, V in {natural, V(2,0)}, radius 2)", ok, witness);

  // negative control: alpha in the excluded lattice must kill a determinant
  auto rho = HRep::from_glrep(highest_weight_module(n, {Scalar(2), Scalar(0)}), cache, false);
  WeightWindow win(rho, {Scalar(0), Scalar(0)}, 2, cache);
  CuspidalityReport r = cuspidality_check(win, -1);
  std::string zero_witness;
  for (const auto& d : r.dets)
    if (d.zero) {
      zero_witness = "det(" + d.op + ") = 0 at slice " + d.slice.str();
      break;
    }
  rep.add("12b-cuspidality-negative-control (alpha = (0,0) on V(2,0))",
          !r.cuspidal_on_window && !zero_witness.empty(),
          "no zero determinant found in the excluded lattice");
  if (!zero_witness.empty())
    rep.out.back().witness = zero_witness;  // record the witness on success too
}

// 13. The separation dichotomy and its two examples.
void c13_separation(Reporter& rep) {
  bool oracle = verify_separation_dichotomy();
  Scalar a = Scalar::param(0, 1);
  SeparationVerdict disj = separation_check({a, a}, {a + Scalar(Rat(1, 2)), a});
  SeparationVerdict coll = separation_check({a, a}, {a, a});
  bool ok = oracle && disj.disjoint && !coll.disjoint &&
            coll.colliding_shift == std::vector<long long>{0, 0};
  rep.add("13-separation (dichotomy by exact solve; (a,a) vs (a+1/2,a) disjoint)", ok,
          oracle ? "verdict mismatch" : "dichotomy solve failed");
}

// 14. Round-trips.
void c14_roundtrips(Reporter& rep) {
  int n = 2;
  XCache cache(n);
  std::vector<Scalar> alpha{Scalar::param(0, n), Scalar::param(1, n)};
  bool ok = true;
  std::string witness;
  {
    WhittakerHRep w = make_whittaker_hrep(n, 1, cache);
    RoundtripReport r = roundtrip_F_G(w.rep, alpha, 1, 2, cache);
    if (!r.ok()) {
      ok = false;
      witness = "W(delta_1): " + r.detail;
    }
  }
  for (const std::string& name : {std::string("natural"), std::string("V(2,0)")}) {
    GlRep v = name == "natural" ? exterior_power(n, 1)
                                : highest_weight_module(n, {Scalar(2), Scalar(0)});
    auto rho = HRep::from_glrep(v, cache, false);
    RoundtripReport r = roundtrip_F_G(rho, alpha, 1, 2, cache);
    if (!r.ok()) {
      ok = false;
      witness = name + ": " + r.detail;
    }
  }
  rep.add("14-roundtrips (F∘G and F_1∘G_1 recover the HRep matrices)", ok, witness);
}

// 15. Laurent-module negative control.
void c15_negative_control(Reporter& rep) {
  int n = 2;
  std::vector<Scalar> mu{Scalar(0), Scalar::param(1, n)};
  auto P = std::make_shared<TwistedLaurentModule>(mu);
  SimplicityVerdict v = is_simple_witness(*P);
  bool ok = !v.generically_simple && v.bad_index == 0;
  std::string witness = v.detail;
  if (ok) {
    TensorModule M{P, std::make_shared<GlRep>(exterior_power(n, 1))};
    TenVec vec = TenVec::single(TenKey{v.witness_key, 0});
    TenVec img = tensor_action(u_gen(gen_partial(n, 0)), vec, M);
    ok = img.is_zero();
    if (!ok) witness = "claimed witness is not annihilated";
  }
  rep.add("15-laurent-negative-control (integer mu_1 kills a vector under d_1)", ok, witness);
  if (ok) rep.out.back().witness = witness;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opt) {
  Reporter rep;
  Rng rng(opt.seed);
  c1_lie_axioms(rep, rng);
  c2_phi_homomorphism(rep, rng);
  c3_centralizer(rep, opt.extended);
  c4_closed_formula(rep);
  c5_decomposition(rep);
  c6_pbw_independence(rep);
  c7_complex(rep, rng);
  c8_whittaker(rep);
  c9_h_action(rep);
  c10_q1(rep);
  c11_wmod(rep);
  c12_cuspidality(rep, opt.alpha);
  c13_separation(rep);
  c14_roundtrips(rep);
  c15_negative_control(rep);
  return rep.out;
}

}  // namespace wnlie
