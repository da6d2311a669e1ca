#include <doctest.h>

#include <random>

#include "centralizer/centralizer.hpp"

using namespace wnlie;

TEST_CASE("z generators centralize") {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < n; ++i) {
      CHECK(centralizes(make_z_i(n, i).elem, n).ok);
      for (int j = 0; j < n; ++j) {
        CHECK(centralizes(make_z_ij(n, i, j).elem, n).ok);
        for (int l = 0; l < n; ++l)
          CHECK(centralizes(make_z_ilj(n, i, l, j).elem, n).ok);
      }
    }
  }
}

TEST_CASE("z_{1,1} vanishes") {
  CHECK(make_z_ij(2, 0, 0).elem.is_zero());
}

TEST_CASE("n = 1 closed formulas reproduce the z family") {
  XCache cache(1);
  const XGen& x2 = cache.get(MIndex(std::vector<int>{2}), 0);
  CHECK(x2.elem == make_z_ilj(1, 0, 0, 0).elem);
  const XGen& x3 = cache.get(MIndex(std::vector<int>{3}), 0);
  CHECK(x3.elem == make_z_i(1, 0).elem);
}

TEST_CASE("X generators: shape and membership") {
  XCache cache(2);
  // leading term of X_{(1,1),1} is (t1 t2 d1) d2
  const XGen& x = cache.get(MIndex(std::vector<int>{1, 1}), 0);
  PBWMonomial lead{{{Gen{MIndex(std::vector<int>{1, 1}), 0}, 1},
                    {gen_partial(2, 1), 1}}};
  CHECK(x.elem.coeff(lead) == Scalar(1));
  CHECK(x.shape.ok);
  for (const auto& [r, g] : x.shape.g) {
    long deg = 0;
    for (const auto& [a, c] : g) deg = std::max(deg, a.total());
    CHECK(deg == x.m.total() - r.total());
  }
}

TEST_CASE("X recursion covers all cases at |m| <= 4, n = 2") {
  XCache cache(2);
  int n = 2;
  std::vector<int> e(2, 0);
  for (int total = 1; total <= 4; ++total)
    for (int a = 0; a <= total; ++a) {
      e[0] = a;
      e[1] = total - a;
      MIndex m(e);
      for (int j = 0; j < n; ++j) {
        if (m == MIndex::unit(n, j)) continue;
        const XGen& x = cache.get(m, j);
        CHECK(centralizes(x.elem, n).ok);
        CHECK(x.shape.ok);
      }
    }
}

TEST_CASE("X precondition violations") {
  XCache cache(2);
  CHECK_THROWS_AS(cache.get(MIndex(std::vector<int>{1, 0}), 0), error);
  CHECK_THROWS_AS(cache.get(MIndex(std::vector<int>{0, 0}), 0), error);
}

TEST_CASE("recursion choices differ by lower-order centralizer elements") {
  // m = (1,1,1), j = 3: the m_j = 0 case admits i = 1 or i = 2.
  int n = 3;
  XCache cache(n);
  MIndex m(std::vector<int>{1, 1, 1});
  int j = 2;
  UElem via_i1 = commutator(cache.get(m.plus_unit(0, -1), j).elem,
                            cache.get(MIndex::unit(n, j).plus_unit(0), j).elem);
  UElem via_i2 = commutator(cache.get(m.plus_unit(1, -1), j).elem,
                            cache.get(MIndex::unit(n, j).plus_unit(1), j).elem);
  UElem diff = via_i1 - via_i2;
  CHECK(centralizes(diff, n).ok);
  if (!diff.is_zero()) {
    BHDecomposition d = decompose_BH(diff, 8, cache.provider(), n);
    for (const auto& [t, c] : d.terms) {
      CHECK(t.h_exps.is_zero());
      CHECK(t.d_exps.is_zero());
    }
  }
}

TEST_CASE("decompose_BH examples") {
  SUBCASE("t1 d2 over n = 2") {
    int n = 2;
    XCache cache(n);
    UElem u = u_gen(Gen{MIndex::unit(n, 0), 1});
    BHDecomposition d = decompose_BH(u, 4, cache.provider(), n);
    REQUIRE(d.terms.size() == 2);
    // z_{1,2} d2 d1^{-1} + h1 d2 d1^{-1}
    const BHTriple& t0 = d.terms[0].first;
    CHECK(t0.x_part.size() == 1);
    CHECK(t0.x_part[0].first.first == MIndex::unit(n, 0));
    CHECK(t0.x_part[0].first.second == 1);
    CHECK(t0.h_exps.is_zero());
    CHECK(t0.d_exps == MIndex(std::vector<int>{-1, 1}));
    CHECK(d.terms[0].second == Scalar(1));
    const BHTriple& t1 = d.terms[1].first;
    CHECK(t1.x_part.empty());
    CHECK(t1.h_exps == MIndex::unit(n, 0));
    CHECK(t1.d_exps == MIndex(std::vector<int>{-1, 1}));
    CHECK(d.terms[1].second == Scalar(1));
    CHECK(recombine(d, cache.provider(), n) == u);
  }
  SUBCASE("h1 is pure B_n") {
    int n = 2;
    XCache cache(n);
    UElem u = u_gen(gen_h(n, 0));
    BHDecomposition d = decompose_BH(u, 4, cache.provider(), n);
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].first.x_part.empty());
    CHECK(d.terms[0].first.h_exps == MIndex::unit(n, 0));
    CHECK(d.terms[0].first.d_exps.is_zero());
  }
  SUBCASE("t1^2 d1 over n = 1") {
    int n = 1;
    XCache cache(n);
    UElem u = u_gen(Gen{MIndex(std::vector<int>{2}), 0});
    BHDecomposition d = decompose_BH(u, 4, cache.provider(), n);
    CHECK(recombine(d, cache.provider(), n) == u);
    // z_{1,1,1} d1^{-1} + h1^2 d1^{-1} - h1 d1^{-1}
    REQUIRE(d.terms.size() == 3);
    CHECK(d.terms[0].first.x_part.size() == 1);
    CHECK(d.terms[0].first.d_exps == MIndex(std::vector<int>{-1}));
  }
}

TEST_CASE("decompose_BH round-trips the generator set") {
  int n = 2;
  XCache cache(n);
  std::vector<UElem> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gens.push_back(u_gen(Gen{MIndex::unit(n, i), j}));
      for (int l = 0; l < n; ++l)
        gens.push_back(u_gen(Gen{MIndex::unit(n, i).plus_unit(l), j}));
    }
  gens.push_back(u_gen(Gen{MIndex(std::vector<int>{2, 0}), 0}));
  gens.push_back(u_gen(Gen{MIndex(std::vector<int>{3, 0}), 0}));
  for (const UElem& u : gens) {
    BHDecomposition d = decompose_BH(u, 6, cache.provider(), n);
    CHECK(recombine(d, cache.provider(), n) == u);
  }
}

TEST_CASE("h_monomial_basis") {
  SUBCASE("degree 0") {
    XCache cache(2);
    HBasisResult r = h_monomial_basis(2, 0, cache);
    REQUIRE(r.monomials.size() == 1);
    CHECK(r.monomials[0].factors.empty());
    CHECK(r.rank == 1);
    CHECK(r.independent);
  }
  SUBCASE("n = 1, degree <= 3") {
    XCache cache(1);
    HBasisResult r = h_monomial_basis(1, 3, cache);
    REQUIRE(r.monomials.size() == 3);  // 1, X_{2,1}, X_{3,1}
    CHECK(r.rank == 3);
    CHECK(r.independent);
    for (const auto& mono : r.monomials) {
      UElem u = u_one();
      for (const auto& [mj, exp] : mono.factors)
        u = mul(u, u_pow(cache.get(mj.first, mj.second).elem, exp));
      CHECK(centralizes(u, 1).ok);
    }
  }
}

TEST_CASE("decompose_BH round-trips random localized elements") {
  int n = 2;
  XCache cache(n);
  std::mt19937_64 rng(999);
  std::uniform_int_distribution<int> dir(0, 1), deg(0, 2), exps(-2, 2), len(1, 3);
  for (int it = 0; it < 25; ++it) {
    Word w;
    int k = len(rng);
    for (int t = 0; t < k; ++t) {
      MIndex m(n);
      for (int q = deg(rng); q > 0; --q) m[dir(rng)] += 1;
      w.push_back({Gen{m, dir(rng)}, 1});
    }
    int e = exps(rng);
    if (e != 0) w.push_back({gen_partial(n, dir(rng)), e});
    UElem u = normal_word(w, Scalar(Rat(2 * exps(rng) + 1, 3)));
    BHDecomposition d = decompose_BH(u, 10, cache.provider(), n);
    CHECK(recombine(d, cache.provider(), n) == u);
  }
}
