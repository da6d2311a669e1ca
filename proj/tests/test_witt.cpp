#include <doctest.h>

#include <functional>
#include <random>

#include "witt/generator_expr.hpp"
#include "witt/witt.hpp"

using namespace wnlie;

namespace {

WittTerm rnd_term(std::mt19937_64& rng, int n, int max_deg) {
  std::uniform_int_distribution<int> dir(0, n - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  int total = deg(rng);
  MIndex m(n);
  for (int k = 0; k < total; ++k) m[dir(rng)] += 1;
  return make_term(m, dir(rng));
}

}  // namespace

TEST_CASE("bracket examples") {
  int n = 2;
  WittElem d1 = witt_partial(n, 0);
  WittElem h1 = witt_h(n, 0);
  CHECK(bracket(d1, h1) == d1);

  WittElem t1d2 = witt_term_elem(MIndex::unit(n, 0), 1);
  WittElem t2d1 = witt_term_elem(MIndex::unit(n, 1), 0);
  CHECK(bracket(t1d2, t2d1) == witt_h(n, 0) - witt_h(n, 1));

  CHECK(bracket(witt_h(n, 0), witt_h(n, 1)).is_zero());
}

TEST_CASE("bracket dimension mismatch") {
  CHECK_THROWS_AS(bracket(witt_partial(1, 0), witt_partial(2, 0)), error);
}

TEST_CASE("antisymmetry and Jacobi on random terms") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n) {
    for (int it = 0; it < 40; ++it) {
      WittElem x = WittElem::single(rnd_term(rng, n, 4));
      WittElem y = WittElem::single(rnd_term(rng, n, 4));
      WittElem z = WittElem::single(rnd_term(rng, n, 4));
      CHECK(bracket(x, y) == -bracket(y, x));
      WittElem jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                     bracket(z, bracket(x, y));
      CHECK(jac.is_zero());
    }
  }
}

TEST_CASE("ad d_i is nilpotent, with the degree bound") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    int n = 2;
    WittElem x = WittElem::single(rnd_term(rng, n, 4));
    long maxm = 0;
    for (const auto& [t, c] : x) maxm = std::max(maxm, t.degree());
    for (int i = 0; i < n; ++i) {
      WittElem cur = x;
      long steps = 0;
      while (!cur.is_zero() && steps <= maxm + 1) {
        cur = bracket(witt_partial(n, i), cur);
        ++steps;
      }
      CHECK(cur.is_zero());
      CHECK(steps <= maxm + 1);
    }
  }
}

TEST_CASE("weight of t^m d_j under ad h_k") {
  int n = 3;
  std::mt19937_64 rng(13);
  for (int it = 0; it < 25; ++it) {
    WittTerm t = rnd_term(rng, n, 4);
    for (int k = 0; k < n; ++k) {
      WittElem lhs = bracket(witt_h(n, k), WittElem::single(t));
      long w = t.m[k] - (t.j == k ? 1 : 0);
      CHECK(lhs == WittElem::single(t).scaled(Scalar(w)));
    }
  }
}

TEST_CASE("diagonal twist") {
  int n = 1;
  WittElem d1 = witt_partial(n, 0);
  CHECK(diagonal_twist({Scalar(2)}, d1) == d1.scaled(Scalar(2)));
  // identity twist
  std::mt19937_64 rng(3);
  WittElem x = WittElem::single(rnd_term(rng, 2, 3));
  CHECK(diagonal_twist({Scalar(1), Scalar(1)}, x) == x);
  CHECK_THROWS_AS(diagonal_twist({Scalar(0), Scalar(1)}, x), error);
}

TEST_CASE("diagonal twist is a Lie homomorphism") {
  std::mt19937_64 rng(17);
  int n = 2;
  Scalar c1 = Scalar::param(0, 2), c2 = Scalar::param(1, 2);
  std::vector<Scalar> c{c1 + Scalar(1), c2 - Scalar(2)};
  for (int it = 0; it < 25; ++it) {
    WittElem x = WittElem::single(rnd_term(rng, n, 3));
    WittElem y = WittElem::single(rnd_term(rng, n, 3));
    CHECK(diagonal_twist(c, bracket(x, y)) ==
          bracket(diagonal_twist(c, x), diagonal_twist(c, y)));
  }
}

TEST_CASE("express_generator evaluates back to t^m d_j") {
  SUBCASE("t1^3 d1, n = 2") {
    MIndex m(std::vector<int>{3, 0});
    auto tree = express_generator(m, 0);
    CHECK(tree->eval() == witt_term_elem(m, 0));
  }
  SUBCASE("t1 t2 t3 d2, n = 3") {
    MIndex m(std::vector<int>{1, 1, 1});
    auto tree = express_generator(m, 1);
    CHECK(tree->eval() == witt_term_elem(m, 1));
  }
  SUBCASE("|m| = 2 rejected") {
    CHECK_THROWS_AS(express_generator(MIndex(std::vector<int>{2, 0}), 0), error);
  }
  SUBCASE("n = 1 rejected") {
    CHECK_THROWS_AS(express_generator(MIndex(std::vector<int>{3}), 0), error);
  }
}

TEST_CASE("express_generator covers all four recursion cases") {
  // m_j = 0
  auto a = express_generator(MIndex(std::vector<int>{3, 0}), 1);
  CHECK(a->rec_case == GenExpr::Case::mj_zero);
  CHECK(a->eval() == witt_term_elem(MIndex(std::vector<int>{3, 0}), 1));
  // m_j != 0,3
  auto b = express_generator(MIndex(std::vector<int>{2, 1}), 0);
  CHECK(b->rec_case == GenExpr::Case::mj_generic);
  CHECK(b->eval() == witt_term_elem(MIndex(std::vector<int>{2, 1}), 0));
  // m_j = 3, |m| = 3
  auto c = express_generator(MIndex(std::vector<int>{3, 0}), 0);
  CHECK(c->rec_case == GenExpr::Case::mj3_total3);
  CHECK(c->eval() == witt_term_elem(MIndex(std::vector<int>{3, 0}), 0));
  // m_j = 3, |m| > 3
  auto d = express_generator(MIndex(std::vector<int>{3, 2}), 0);
  CHECK(d->rec_case == GenExpr::Case::mj3_deep);
  CHECK(d->eval() == witt_term_elem(MIndex(std::vector<int>{3, 2}), 0));
}

TEST_CASE("express_generator leaves have |m| <= 2") {
  std::function<void(const GenExprPtr&)> walk = [&](const GenExprPtr& e) {
    if (e->kind == GenExpr::Kind::term) {
      CHECK(e->term.degree() <= 2);
      return;
    }
    for (const auto& ch : e->children) walk(ch);
  };
  for (int j = 0; j < 3; ++j)
    walk(express_generator(MIndex(std::vector<int>{2, 1, 2}), j));
}
