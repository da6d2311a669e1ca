#include <doctest.h>

#include "cuspidal/roundtrip.hpp"
#include "cuspidal/separation.hpp"

using namespace wnlie;

namespace {

std::vector<Scalar> symbolic_alpha(int n) {
  std::vector<Scalar> a;
  for (int i = 0; i < n; ++i) a.push_back(Scalar::param(i, n));
  return a;
}

}  // namespace

TEST_CASE("HRep closed formulas on the natural module") {
  int n = 2;
  XCache cache(n);
  auto rho = HRep::from_glrep(exterior_power(n, 1), cache);
  // z_{1,2} = E_12 - E_11
  const Mat& z12 = rho->z_ij(0, 1);
  CHECK(z12.at(0, 0) == Scalar(-1));
  CHECK(z12.at(0, 1) == Scalar(1));
  CHECK(z12.at(1, 0) == Scalar(0));
  CHECK(z12.at(1, 1) == Scalar(0));
  CHECK(rho->z_ij(0, 0).is_zero());
}

TEST_CASE("z_1 annihilates eigenvalue-1 weight vectors") {
  XCache cache(2);
  auto rho = HRep::from_glrep(exterior_power(2, 1), cache);
  // e_1 has E_11 eigenvalue 1: 2(1 - 3 + 2) = 0
  const Mat& z1 = rho->z_i(0);
  CHECK(z1.at(0, 0).is_zero());
  CHECK(z1.at(1, 0).is_zero());
}

TEST_CASE("W(δ_1) is one-dimensional with zero z_{i,j}") {
  int n = 2;
  XCache cache(n);
  WhittakerHRep w = make_whittaker_hrep(n, 1, cache);
  REQUIRE(w.rep->dim() == 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(w.rep->z_ij(i, j).is_zero());
}

TEST_CASE("X matrices: recursion agrees with the tensor route") {
  int n = 2;
  XCache cache(n);
  GlRep nat = exterior_power(n, 1);
  auto rho = HRep::from_glrep(nat, cache);
  std::vector<std::pair<MIndex, int>> samples = {
      {MIndex(std::vector<int>{1, 1}), 0},
      {MIndex(std::vector<int>{2, 0}), 0},
      {MIndex(std::vector<int>{2, 1}), 0},
      {MIndex(std::vector<int>{0, 3}), 1},
  };
  for (const auto& [m, j] : samples) {
    const Mat& rec = rho->x_matrix(m, j, cache);
    Mat ten = tensor_route_matrix(cache.get(m, j).elem, nat);
    CHECK(rec == ten);
  }
}

TEST_CASE("window actions: the closed induced-module formulas") {
  int n = 2;
  XCache cache(n);
  auto rho = HRep::from_glrep(exterior_power(n, 1), cache);
  std::vector<Scalar> alpha = symbolic_alpha(n);
  WeightWindow win(rho, alpha, 2, cache);

  WinVec v0 = WinVec::single(WinKey{MIndex(n), 0});
  SUBCASE("h_k acts by alpha_k - r_k") {
    CHECK(win.act_h(0, v0) == v0.scaled(alpha[0]));
    WinVec shifted = win.act_d(0, 1, v0);
    CHECK(win.act_h(0, shifted) == shifted.scaled(alpha[0] - Scalar(1)));
  }
  SUBCASE("d_k shifts slices with identity coefficient") {
    WinVec w = win.act_d(1, 1, v0);
    REQUIRE(w.size() == 1);
    CHECK(w.coeff(WinKey{MIndex::unit(n, 1), 0}) == Scalar(1));
    CHECK(win.act_d(1, -1, w) == v0);
  }
  SUBCASE("t_1 d_2 slice matrix at r = 0") {
    Mat m = win.slice_td(0, 1, MIndex(n));
    CHECK(m.at(0, 0) == alpha[0]);
    CHECK(m.at(0, 1) == Scalar(1));
    CHECK(m.at(1, 1) == alpha[0] + Scalar(1));
    CHECK(det(m) == alpha[0] * (alpha[0] + Scalar(1)));
  }
}

TEST_CASE("window: closed formulas match the decompose route") {
  int n = 2;
  XCache cache(n);
  auto rho = HRep::from_glrep(exterior_power(n, 1), cache);
  WeightWindow win(rho, symbolic_alpha(n), 2, cache);
  for (const MIndex& r : win.slices(1)) {
    for (int b = 0; b < rho->dim(); ++b) {
      WinVec v = WinVec::single(WinKey{r, b});
      for (int k = 0; k < n; ++k) {
        CHECK(win.act_h(k, v) == win.act_elem(u_gen(gen_h(n, k)), v));
        CHECK(win.act_d(k, 1, v) == win.act_elem(u_gen(gen_partial(n, k)), v));
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          CHECK(win.act_td(i, j, v) == win.act_elem(u_gen(Gen{MIndex::unit(n, i), j}), v));
          CHECK(win.act_ttd(i, j, v) ==
                win.act_elem(u_gen(Gen{MIndex::unit(n, i).plus_unit(j), j}), v));
        }
    }
  }
}

TEST_CASE("window module axiom on interior slices") {
  int n = 2;
  XCache cache(n);
  auto rho = HRep::from_glrep(exterior_power(n, 1), cache);
  WeightWindow win(rho, symbolic_alpha(n), 2, cache);
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
  WinVec v = WinVec::single(WinKey{MIndex(n), 1});
  for (size_t a = 0; a < ops.size(); ++a)
    for (size_t b = a + 1; b < ops.size(); ++b) {
      UElem ua = u_from_witt(ops[a]), ub = u_from_witt(ops[b]);
      WinVec lhs = win.act_elem(u_from_witt(bracket(ops[a], ops[b])), v);
      WinVec rhs = win.act_elem(ua, win.act_elem(ub, v)) -
                   win.act_elem(ub, win.act_elem(ua, v));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("cuspidality check") {
  int n = 2;
  XCache cache(n);
  SUBCASE("symbolic alpha is cuspidal on the window") {
    auto rho = HRep::from_glrep(exterior_power(n, 1), cache);
    WeightWindow win(rho, symbolic_alpha(n), 2, cache);
    CuspidalityReport rep = cuspidality_check(win, 1);
    CHECK(rep.cuspidal_on_window);
    CHECK(rep.alpha_symbolic);
    CHECK(!rep.vanishing_specializations.empty());
  }
  SUBCASE("integer alpha on V(2,0) produces a zero determinant") {
    auto rho = HRep::from_glrep(highest_weight_module(n, {Scalar(2), Scalar(0)}), cache);
    WeightWindow win(rho, {Scalar(0), Scalar(0)}, 2, cache);
    CuspidalityReport rep = cuspidality_check(win, -1);
    CHECK(!rep.cuspidal_on_window);
    bool found = false;
    for (const auto& d : rep.dets)
      if (d.zero) found = true;
    CHECK(found);
  }
}

TEST_CASE("separation") {
  CHECK(verify_separation_dichotomy());
  Scalar a = Scalar::param(0, 1);
  SUBCASE("gamma = (a,a) vs lambda = (a + 1/2, a) is disjoint") {
    SeparationVerdict v = separation_check({a, a}, {a + Scalar(Rat(1, 2)), a});
    CHECK(v.disjoint);
    CHECK(v.witness_index == 0);
  }
  SUBCASE("lambda = gamma collides at shift 0") {
    SeparationVerdict v = separation_check({a, a}, {a, a});
    CHECK(!v.disjoint);
    CHECK(v.colliding_shift == std::vector<long long>{0, 0});
  }
  SUBCASE("integer shifts collide") {
    SeparationVerdict v = separation_check({a, Scalar(0)}, {a + Scalar(2), Scalar(1)});
    CHECK(!v.disjoint);
    CHECK(v.colliding_shift == std::vector<long long>{2, 1});
  }
}

TEST_CASE("roundtrips") {
  int n = 2;
  XCache cache(n);
  std::vector<Scalar> alpha = symbolic_alpha(n);
  SUBCASE("natural module") {
    auto rho = HRep::from_glrep(exterior_power(n, 1), cache);
    RoundtripReport r = roundtrip_F_G(rho, alpha, 2, 2, cache);
    CHECK(r.fg_kernel_ok);
    CHECK(r.fg_matrices_ok);
    CHECK(r.f1g1_ok);
    CHECK(r.support_ok);
  }
  SUBCASE("trivial H-structure on W(δ_1)") {
    WhittakerHRep w = make_whittaker_hrep(n, 1, cache);
    RoundtripReport r = roundtrip_F_G(w.rep, alpha, 1, 2, cache);
    CHECK(r.ok());
  }
  SUBCASE("V(2,0)") {
    auto rho = HRep::from_glrep(highest_weight_module(n, {Scalar(2), Scalar(0)}), cache);
    RoundtripReport r = roundtrip_F_G(rho, alpha, 1, 2, cache);
    CHECK(r.ok());
  }
}

TEST_CASE("z_{i,i,i} and z_i act diagonally and commute") {
  int n = 2;
  XCache cache(n);
  for (const auto& lambda :
       std::vector<std::vector<Scalar>>{{Scalar(1), Scalar(0)}, {Scalar(2), Scalar(0)}}) {
    auto rho = HRep::from_glrep(highest_weight_module(n, lambda), cache, false);
    for (int i = 0; i < n; ++i) {
      const Mat& a = rho->z_ilj(i, i, i);
      const Mat& b = rho->z_i(i);
      CHECK(mat_commutator(a, b).is_zero());
      for (int r = 0; r < rho->dim(); ++r)
        for (int c = 0; c < rho->dim(); ++c)
          if (r != c) {
            CHECK(a.at(r, c).is_zero());
            CHECK(b.at(r, c).is_zero());
          }
    }
  }
}

TEST_CASE("trivial module at alpha = 0: t_i E_n determinant vanishes") {
  int n = 2;
  XCache cache(n);
  auto rho = HRep::from_glrep(exterior_power(n, 0), cache, false);
  WeightWindow win(rho, {Scalar(0), Scalar(0)}, 1, cache);
  // at the zero slice |alpha| - |r| = 0 forces the determinant to zero
  CHECK(det(win.slice_tEn(0, MIndex(n))).is_zero());
  CuspidalityReport rep = cuspidality_check(win, -1);
  CHECK(!rep.cuspidal_on_window);
}

TEST_CASE("X matrices agree with the tensor route across the |m| <= 4 family") {
  int n = 2;
  XCache cache(n);
  GlRep v = exterior_power(n, 1);
  auto rho = HRep::from_glrep(v, cache, false);
  std::vector<int> e(2, 0);
  for (int tot = 1; tot <= 4; ++tot)
    for (int a = 0; a <= tot; ++a) {
      e[0] = a;
      e[1] = tot - a;
      MIndex m(e);
      for (int j = 0; j < n; ++j) {
        if (m == MIndex::unit(n, j)) continue;
        CHECK(rho->x_matrix(m, j, cache) == tensor_route_matrix(cache.get(m, j).elem, v));
      }
    }
}

TEST_CASE("n = 3 window families match the decompose route on the zero slice") {
  int n = 3;
  XCache cache(n);
  auto rho = HRep::from_glrep(exterior_power(n, 1), cache, false);
  std::vector<Scalar> alpha{Scalar::param(0, 3), Scalar::param(1, 3), Scalar::param(2, 3)};
  WeightWindow win(rho, alpha, 1, cache);
  MIndex r0(n);
  for (int b = 0; b < rho->dim(); ++b) {
    WinVec v = WinVec::single(WinKey{r0, b});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(win.act_td(i, j, v) == win.act_elem(u_gen(Gen{MIndex::unit(n, i), j}), v));
        CHECK(win.act_ttd(i, j, v) ==
              win.act_elem(u_gen(Gen{MIndex::unit(n, i).plus_unit(j), j}), v));
      }
  }
}

TEST_CASE("computed Whittaker module dimensions") {
  // wh_1(im pi_{k-1}) comes out as C(n-1, k-1): the rank of wedging with
  // e_1 + ... + e_n on the (k-1)-st exterior power.
  {
    XCache cache(2);
    CHECK(make_whittaker_hrep(2, 1, cache).rep->dim() == 1);
    CHECK(make_whittaker_hrep(2, 2, cache).rep->dim() == 1);
  }
  {
    XCache cache(3);
    CHECK(make_whittaker_hrep(3, 1, cache).rep->dim() == 1);
    CHECK(make_whittaker_hrep(3, 2, cache).rep->dim() == 2);
    CHECK(make_whittaker_hrep(3, 3, cache).rep->dim() == 1);
  }
}

TEST_CASE("roundtrip on W(delta_2)") {
  int n = 2;
  XCache cache(n);
  WhittakerHRep w = make_whittaker_hrep(n, 2, cache);
  std::vector<Scalar> alpha{Scalar::param(0, n), Scalar::param(1, n)};
  CHECK(roundtrip_F_G(w.rep, alpha, 1, 2, cache).ok());
}
