#include <doctest.h>

#include "glrep/glrep.hpp"

using namespace wnlie;

TEST_CASE("exterior powers") {
  SUBCASE("k = 0 is trivial") {
    GlRep v = exterior_power(2, 0);
    CHECK(v.dim == 1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(v.e(i, j).is_zero());
  }
  SUBCASE("k = 1, n = 2: natural module") {
    GlRep v = exterior_power(2, 1);
    CHECK(v.dim == 2);
    CHECK(v.e(0, 1).at(0, 1) == Scalar(1));  // E_{12} e_2 = e_1
    CHECK(v.e(0, 1).at(1, 1) == Scalar(0));
    CHECK(v.weights[0] == std::vector<Scalar>{Scalar(1), Scalar(0)});
  }
  SUBCASE("k = n is the determinant line") {
    GlRep v = exterior_power(3, 3);
    CHECK(v.dim == 1);
    for (int i = 0; i < 3; ++i) CHECK(v.e(i, i).at(0, 0) == Scalar(1));
    CHECK(v.weights[0] == std::vector<Scalar>(3, Scalar(1)));
  }
  SUBCASE("k = 2, n = 3 has a sign") {
    GlRep v = exterior_power(3, 2);
    CHECK(v.dim == 3);
    validate_glrep(v);
  }
  CHECK_THROWS_AS(exterior_power(2, 3), error);
}

TEST_CASE("highest weight modules") {
  SUBCASE("natural module as V(1,0)") {
    GlRep v = highest_weight_module(2, {Scalar(1), Scalar(0)});
    CHECK(v.dim == 2);
  }
  SUBCASE("V(2,0) is the symmetric square, dim 3") {
    GlRep v = highest_weight_module(2, {Scalar(2), Scalar(0)});
    CHECK(v.dim == 3);
    auto ws = weight_spaces(v);
    CHECK(ws.size() == 3);  // weights (2,0), (1,1), (0,2)
    for (const auto& [w, idx] : ws) CHECK(idx.size() == 1);
  }
  SUBCASE("V(2,1), n = 2: dim 2 via the Weyl formula") {
    GlRep v = highest_weight_module(2, {Scalar(2), Scalar(1)});
    CHECK(Scalar(v.dim) == weyl_dimension({Scalar(2), Scalar(1)}));
  }
  SUBCASE("symbolic determinant twist") {
    Scalar a = Scalar::param(0, 1);
    GlRep v = highest_weight_module(2, {a + Scalar(1), a});
    CHECK(v.dim == 2);
    CHECK(v.weights[0] == std::vector<Scalar>{a + Scalar(1), a});
    CHECK(v.e(0, 0).at(0, 0) == a + Scalar(1));
    validate_glrep(v);
  }
  SUBCASE("V(2,1,0), n = 3: the adjoint-type module, dim 8") {
    GlRep v = highest_weight_module(3, {Scalar(2), Scalar(1), Scalar(0)});
    CHECK(v.dim == 8);
  }
  SUBCASE("rejects non-dominant weights") {
    CHECK_THROWS_AS(highest_weight_module(2, {Scalar(0), Scalar(1)}), error);
    CHECK_THROWS_AS(highest_weight_module(2, {Scalar(Rat(1, 2)), Scalar(0)}), error);
  }
}

TEST_CASE("weight spaces of the natural module") {
  GlRep v = exterior_power(2, 1);
  auto ws = weight_spaces(v);
  REQUIRE(ws.size() == 2);
  CHECK(ws.at({Scalar(1), Scalar(0)}) == std::vector<int>{0});
  CHECK(ws.at({Scalar(0), Scalar(1)}) == std::vector<int>{1});
}

TEST_CASE("E_{ij} shifts weights by e_i - e_j") {
  GlRep v = highest_weight_module(2, {Scalar(2), Scalar(0)});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int b = 0; b < v.dim; ++b)
        for (int r = 0; r < v.dim; ++r) {
          if (v.e(i, j).at(r, b).is_zero()) continue;
          std::vector<Scalar> expect = v.weights[static_cast<size_t>(b)];
          expect[static_cast<size_t>(i)] += Scalar(1);
          expect[static_cast<size_t>(j)] -= Scalar(1);
          CHECK(v.weights[static_cast<size_t>(r)] == expect);
        }
}

TEST_CASE("Weyl dimension oracle on exterior powers") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n; ++k) {
      GlRep v = exterior_power(n, k);
      CHECK(weyl_dimension(*v.lambda) == Scalar(v.dim));
    }
}

TEST_CASE("weight space of the trivial module") {
  GlRep v = exterior_power(3, 0);
  auto ws = weight_spaces(v);
  REQUIRE(ws.size() == 1);
  CHECK(ws.begin()->second == std::vector<int>{0});
  CHECK(ws.begin()->first == std::vector<Scalar>(3, Scalar(0)));
}
