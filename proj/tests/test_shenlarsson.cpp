#include <doctest.h>

#include <random>

#include "shenlarsson/phi.hpp"
#include "shenlarsson/q1.hpp"
#include "shenlarsson/tensor.hpp"

using namespace wnlie;

namespace {

UElem rnd_low_elem(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> dir(0, n - 1);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> len(1, 2);
  Word w;
  int k = len(rng);
  for (int t = 0; t < k; ++t) {
    MIndex m(n);
    for (int q = deg(rng); q > 0; --q) m[dir(rng)] += 1;
    w.push_back({Gen{m, dir(rng)}, 1});
  }
  return normal_word(w);
}

TensorModule a1_module(int n, const GlRep& v) {
  std::vector<Scalar> ones(static_cast<size_t>(n), Scalar(1));
  return TensorModule{std::make_shared<TwistedPolyModule>(ones),
                      std::make_shared<GlRep>(v)};
}

}  // namespace

TEST_CASE("phi on generators") {
  int n = 2;
  PhiImage pd = phi(u_gen(gen_partial(n, 0)), n);
  REQUIRE(pd.size() == 1);
  WeylMono d1{MIndex(n), MIndex::unit(n, 0)};
  CHECK(pd.coeff({d1, GlMono{}}) == Scalar(1));

  PhiImage pt = phi(u_gen(Gen{MIndex::unit(n, 0), 1}), n);
  REQUIRE(pt.size() == 2);
  WeylMono t1d2{MIndex::unit(n, 0), MIndex::unit(n, 1)};
  CHECK(pt.coeff({t1d2, GlMono{}}) == Scalar(1));
  WeylMono unit{MIndex(n), MIndex(n)};
  CHECK(pt.coeff({unit, GlMono{{{{0, 1}, 1}}}}) == Scalar(1));
}

TEST_CASE("phi respects the bracket of t1^2 d2 and d1") {
  int n = 2;
  UElem x = u_gen(Gen{MIndex(std::vector<int>{2, 0}), 1});
  UElem y = u_gen(gen_partial(n, 0));
  PhiImage lhs = phi(commutator(x, y), n);
  PhiImage px = phi(x, n), py = phi(y, n);
  PhiImage rhs = phi_mul(px, py, n) - phi_mul(py, px, n);
  CHECK(lhs == rhs);
}

TEST_CASE("phi is an algebra homomorphism on sampled pairs") {
  std::mt19937_64 rng(101);
  int n = 2;
  for (int it = 0; it < 25; ++it) {
    UElem x = rnd_low_elem(rng, n);
    UElem y = rnd_low_elem(rng, n);
    CHECK(phi(mul(x, y), n) == phi_mul(phi(x, n), phi(y, n), n));
  }
}

TEST_CASE("phi rejects localized input") {
  CHECK_THROWS_AS(phi(u_gen(gen_partial(1, 0), -1), 1), error);
}

TEST_CASE("tensor action on P(mu): the closed displays") {
  int n = 2;
  Scalar mu1 = Scalar::param(0, 2), mu2 = Scalar::param(1, 2);
  GlRep nat = exterior_power(n, 1);
  TensorModule M{std::make_shared<TwistedLaurentModule>(std::vector<Scalar>{mu1, mu2}),
                 std::make_shared<GlRep>(nat)};
  TenKey base{MIndex(n), 0};  // t^mu ⊗ e_1

  SUBCASE("d_i acts by mu_i") {
    TenVec img = tensor_action(u_gen(gen_partial(n, 0)), TenVec::single(base), M);
    REQUIRE(img.size() == 1);
    CHECK(img.coeff(TenKey{MIndex(std::vector<int>{-1, 0}), 0}) == mu1);
  }
  SUBCASE("t_i d_j display") {
    // t_1 d_2 (t^mu ⊗ v) = mu_2 t^{mu+e_1-e_2} ⊗ v + t^mu ⊗ E_{12} v
    TenVec img = tensor_action(u_gen(Gen{MIndex::unit(n, 0), 1}),
                               TenVec::single(TenKey{MIndex(n), 1}), M);
    CHECK(img.coeff(TenKey{MIndex(std::vector<int>{1, -1}), 1}) == mu2);
    CHECK(img.coeff(TenKey{MIndex(n), 0}) == Scalar(1));  // E_{12} e_2 = e_1
    CHECK(img.size() == 2);
  }
  SUBCASE("t_i E_n display") {
    // t_1 E_n (t^{mu+m} ⊗ v) = t^{mu+m+e_1} ⊗ (|mu+lambda+m| + E_11) v
    //                          + sum_{j != 1} t^{mu+m+e_j} ⊗ E_{1j} v
    UElem t1En;
    for (int k = 0; k < n; ++k)
      t1En += u_gen(Gen{MIndex::unit(n, 0).plus_unit(k), k});
    MIndex m(std::vector<int>{1, 0});
    for (int b = 0; b < nat.dim; ++b) {
      TenVec img = tensor_action(t1En, TenVec::single(TenKey{m, b}), M);
      Scalar total = mu1 + mu2 + Scalar(1) + Scalar(m.total());  // |mu| + |lambda| + |m|
      TenVec want;
      for (int r = 0; r < nat.dim; ++r) {
        Scalar c = nat.e(0, 0).at(r, b) + (r == b ? total : Scalar(0));
        if (!c.is_zero()) want.add(TenKey{m.plus_unit(0), r}, c);
        if (!nat.e(0, 1).at(r, b).is_zero())
          want.add(TenKey{m.plus_unit(1), r}, nat.e(0, 1).at(r, b));
      }
      CHECK(img == want);
    }
  }
}

TEST_CASE("tensor action respects brackets on all three families") {
  std::mt19937_64 rng(211);
  int n = 2;
  GlRep nat = exterior_power(n, 1);
  std::vector<TensorModule> mods;
  mods.push_back(a1_module(n, nat));
  mods.push_back(TensorModule{
      std::make_shared<TwistedPolyModule>(std::vector<Scalar>{Scalar(1), Scalar(2)}),
      std::make_shared<GlRep>(nat)});
  mods.push_back(TensorModule{std::make_shared<TwistedLaurentModule>(std::vector<Scalar>{
                                  Scalar::param(0, 2), Scalar::param(1, 2)}),
                              std::make_shared<GlRep>(nat)});
  std::uniform_int_distribution<int> dir(0, n - 1);
  std::uniform_int_distribution<int> deg(0, 2);
  for (const TensorModule& M : mods) {
    for (int it = 0; it < 10; ++it) {
      MIndex ma(n), mb(n);
      for (int q = deg(rng); q > 0; --q) ma[dir(rng)] += 1;
      for (int q = deg(rng); q > 0; --q) mb[dir(rng)] += 1;
      WittTerm a = make_term(ma, dir(rng)), b = make_term(mb, dir(rng));
      MIndex key(n);
      if (!M.P->nonneg_keys()) key = MIndex(std::vector<int>{1, -1});
      TenVec w = TenVec::single(TenKey{key, it % nat.dim});
      UElem ua = u_from_witt(WittElem::single(a));
      UElem ub = u_from_witt(WittElem::single(b));
      TenVec lhs = tensor_action(u_from_witt(bracket(a, b)), w, M);
      TenVec rhs = tensor_action(ua, tensor_action(ub, w, M), M) -
                   tensor_action(ub, tensor_action(ua, w, M), M);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("pi maps") {
  int n = 2;
  TwistedPolyModule P({Scalar(1), Scalar(1)});

  SUBCASE("pi_0 of 1 ⊗ 1") {
    TenVec v = TenVec::single(TenKey{MIndex(n), 0});
    TenVec img = pi_map(0, v, P);
    CHECK(img.coeff(TenKey{MIndex(n), 0}) == Scalar(1));
    CHECK(img.coeff(TenKey{MIndex(n), 1}) == Scalar(1));
  }
  SUBCASE("pi_1 after pi_0 vanishes") {
    std::mt19937_64 rng(401);
    std::uniform_int_distribution<int> exp(0, 2);
    for (int it = 0; it < 10; ++it) {
      MIndex m(std::vector<int>{exp(rng), exp(rng)});
      TenVec v = TenVec::single(TenKey{m, 0});
      CHECK(pi_map(1, pi_map(0, v, P), P).is_zero());
    }
  }
  SUBCASE("pi commutes with sampled W_n actions") {
    GlRep l0 = exterior_power(n, 0);
    GlRep l1 = exterior_power(n, 1);
    auto Pp = std::make_shared<TwistedPolyModule>(std::vector<Scalar>{Scalar(1), Scalar(1)});
    TensorModule M0{Pp, std::make_shared<GlRep>(l0)};
    TensorModule M1{Pp, std::make_shared<GlRep>(l1)};
    std::vector<UElem> xs = {u_gen(gen_partial(n, 0)), u_gen(gen_h(n, 1)),
                             u_gen(Gen{MIndex::unit(n, 1), 0}),
                             u_gen(Gen{MIndex(std::vector<int>{1, 1}), 1})};
    TenVec w = TenVec::single(TenKey{MIndex(std::vector<int>{1, 2}), 0});
    for (const UElem& x : xs)
      CHECK(pi_map(0, tensor_action(x, w, M0), P) ==
            tensor_action(x, pi_map(0, w, P), M1));
  }
}

TEST_CASE("whittaker spaces over A^1") {
  int n = 2;
  SUBCASE("tensor modules give 1 ⊗ V") {
    for (int k = 0; k <= 1; ++k) {
      WhittakerModuleDesc d;
      d.kind = WhittakerModuleDesc::Kind::tensor;
      d.V = std::make_shared<GlRep>(exterior_power(n, k));
      WhittakerResult r = whittaker_space(d, n, 3);
      CHECK(r.dim == d.V->dim);
      CHECK(r.stable);
      for (const TenVec& v : r.basis)
        for (const auto& [key, c] : v) CHECK(key.p.is_zero());
    }
  }
  SUBCASE("wh_1(im pi_0) is one-dimensional") {
    WhittakerModuleDesc d;
    d.kind = WhittakerModuleDesc::Kind::im_pi;
    d.k = 0;
    WhittakerResult r = whittaker_space(d, n, 3);
    REQUIRE(r.dim == 1);
    CHECK(r.stable);
    // span{1 ⊗ e_1 + 1 ⊗ e_2}
    TenVec v = r.basis[0];
    Scalar c0 = v.coeff(TenKey{MIndex(n), 0});
    REQUIRE(!c0.is_zero());
    CHECK(v == (TenVec::single(TenKey{MIndex(n), 0}) +
                TenVec::single(TenKey{MIndex(n), 1})).scaled(c0));
  }
  SUBCASE("n = 1 natural module") {
    WhittakerModuleDesc d;
    d.kind = WhittakerModuleDesc::Kind::tensor;
    d.V = std::make_shared<GlRep>(exterior_power(1, 1));
    WhittakerResult r = whittaker_space(d, 1, 3);
    CHECK(r.dim == 1);
    CHECK(r.stable);
  }
}

TEST_CASE("Q1 action examples") {
  int n = 1;
  Q1Vec v1 = q1_vacuum();
  CHECK(q1_action(u_gen(gen_partial(n, 0)), v1, n) == v1);
  Q1Vec hv = q1_action(u_gen(gen_h(n, 0)), v1, n);
  CHECK(hv == Q1Vec::single(PBWMonomial{{{gen_h(n, 0), 1}}}));
  CHECK(q1_action(u_gen(gen_partial(n, 0)), hv, n) == hv + v1);
}

TEST_CASE("theta images are Whittaker vectors") {
  SUBCASE("unit") { CHECK(theta_of(u_one(), 2) == q1_vacuum()); }
  SUBCASE("z generators, n = 2") {
    int n = 2;
    Q1Vec img = theta_of(make_z_ij(n, 0, 1).elem, n);
    CHECK(!img.is_zero());
    CHECK(q1_is_whittaker(img, n));
  }
  SUBCASE("z_1 at n = 1 has Whittaker degree 3") {
    Q1Vec img = theta_of(make_z_i(1, 0).elem, 1);
    CHECK(q1_is_whittaker(img, 1));
    CHECK(q1_degree(img) == 3);
  }
  SUBCASE("non-central input is rejected") {
    CHECK_THROWS_AS(theta_of(u_gen(Gen{MIndex::unit(2, 0), 1}), 2), error);
  }
}

TEST_CASE("Q1 whittaker dimensions match the X-monomial counts (n = 1)") {
  XCache cache(1);
  Q1WhitDims d = q1_whittaker_dimensions(1, 4, cache);
  CHECK(d.kernel_dims == std::vector<int>{1, 1, 2, 3, 5});
  CHECK(d.monomial_counts == std::vector<int>{1, 1, 2, 3, 5});
  CHECK(d.dims_match);
  CHECK(d.solvable);
}

TEST_CASE("H_n elements preserve the computed Whittaker space") {
  int n = 2;
  GlRep v = highest_weight_module(n, {Scalar(2), Scalar(0)});
  WhittakerModuleDesc d;
  d.kind = WhittakerModuleDesc::Kind::tensor;
  d.V = std::make_shared<GlRep>(v);
  WhittakerResult r = whittaker_space(d, n, 2);
  REQUIRE(r.dim == v.dim);
  TensorModule M = a1_module(n, v);
  // coordinates live in 1 (x) V
  SpanBuilder span(v.dim);
  for (const TenVec& b : r.basis) {
    std::vector<Scalar> c(static_cast<size_t>(v.dim));
    for (const auto& [key, coeff] : b) c[static_cast<size_t>(key.v)] = coeff;
    span.insert(c);
  }
  std::vector<UElem> zs = {make_z_ij(n, 0, 1).elem, make_z_ilj(n, 0, 1, 1).elem,
                           make_z_i(n, 0).elem};
  for (const UElem& z : zs)
    for (const TenVec& b : r.basis) {
      TenVec img = tensor_action(z, b, M);
      std::vector<Scalar> c(static_cast<size_t>(v.dim));
      for (const auto& [key, coeff] : img) {
        REQUIRE(key.p.is_zero());
        c[static_cast<size_t>(key.v)] = coeff;
      }
      CHECK(span.contains(c));
    }
}

TEST_CASE("d_1 acts by 1 on 1 (x) v over A^1") {
  GlRep nat = exterior_power(1, 1);
  TensorModule M = a1_module(1, nat);
  TenVec v = TenVec::single(TenKey{MIndex(1), 0});
  CHECK(tensor_action(u_gen(gen_partial(1, 0)), v, M) == v);
}

TEST_CASE("pi_0 over A^1 is injective on a degree-3 truncation") {
  int n = 2;
  TwistedPolyModule P({Scalar(1), Scalar(1)});
  // columns of pi_0 on the degree <= 3 monomials must be independent
  std::vector<MIndex> keys;
  std::vector<int> e(2, 0);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) {
      e[0] = a;
      e[1] = b;
      keys.push_back(MIndex(e));
    }
  std::map<TenKey, int> index;
  for (const MIndex& m : keys)
    for (int v = 0; v < n; ++v)
      index.emplace(TenKey{m, v}, static_cast<int>(index.size()));
  SpanBuilder span(static_cast<int>(index.size()));
  for (const MIndex& m : keys) {
    TenVec img = pi_map(0, TenVec::single(TenKey{m, 0}), P);
    std::vector<Scalar> col(index.size());
    for (const auto& [k, c] : img) col[static_cast<size_t>(index.at(k))] = c;
    CHECK(span.insert(col).has_value());
  }
}

TEST_CASE("Q1 whittaker dimensions at n = 2") {
  XCache cache(2);
  Q1WhitDims d = q1_whittaker_dimensions(2, 2, cache);
  CHECK(d.kernel_dims == std::vector<int>{1, 3, 12});
  CHECK(d.monomial_counts == std::vector<int>{1, 3, 12});
  CHECK(d.dims_match);
  CHECK(d.solvable);
}

TEST_CASE("kernel of pi_0 vanishes, kernel of pi_1 carries one Whittaker line") {
  WhittakerModuleDesc d;
  d.kind = WhittakerModuleDesc::Kind::ker_pi;
  d.k = 0;
  WhittakerResult r0 = whittaker_space(d, 2, 3);
  CHECK(r0.dim == 0);
  d.k = 1;
  WhittakerResult r1 = whittaker_space(d, 2, 3);
  CHECK(r1.dim == 1);
  CHECK(r1.stable);
}
