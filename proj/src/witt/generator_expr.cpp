#include "witt/generator_expr.hpp"

#include <sstream>

namespace wnlie {

namespace {

GenExprPtr leaf(const MIndex& m, int j) {
  auto e = std::make_shared<GenExpr>();
  e->kind = GenExpr::Kind::term;
  e->term = make_term(m, j);
  return e;
}

GenExprPtr node_bracket(GenExprPtr l, GenExprPtr r, GenExpr::Case c) {
  auto e = std::make_shared<GenExpr>();
  e->kind = GenExpr::Kind::bracket;
  e->rec_case = c;
  e->children = {std::move(l), std::move(r)};
  return e;
}

GenExprPtr node_scale(const Scalar& f, GenExprPtr child, GenExpr::Case c) {
  auto e = std::make_shared<GenExpr>();
  e->kind = GenExpr::Kind::scale;
  e->rec_case = c;
  e->factor = f;
  e->children = {std::move(child)};
  return e;
}

GenExprPtr node_sum(std::vector<GenExprPtr> children, GenExpr::Case c) {
  auto e = std::make_shared<GenExpr>();
  e->kind = GenExpr::Kind::sum;
  e->rec_case = c;
  e->children = std::move(children);
  return e;
}

GenExprPtr expand(const MIndex& m, int j) {
  if (m.total() <= 2) return leaf(m, j);
  int n = m.size();
  int mj = m[j];
  if (mj == 0) {
    // [t^{m-e_i} d_j, t_j t_i d_j] with the smallest i having m_i > 0.
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (m[k] > 0) {
        i = k;
        break;
      }
    return node_bracket(expand(m.plus_unit(i, -1), j),
                        leaf(MIndex::unit(n, j).plus_unit(i), j),
                        GenExpr::Case::mj_zero);
  }
  if (mj != 3) {
    Scalar f = Scalar(1) / Scalar(3 - mj);
    return node_scale(f,
                      node_bracket(expand(m.plus_unit(j, -1), j),
                                   leaf(MIndex::unit(n, j).plus_unit(j), j),
                                   GenExpr::Case::mj_generic),
                      GenExpr::Case::mj_generic);
  }
  if (m.total() == 3) {
    // m = 3 e_j: [t_j d_i, t_j^2 t_i d_j] + t_j^2 t_i d_i, smallest i != j.
    int i = j == 0 ? 1 : 0;
    MIndex big = MIndex::unit(n, j).plus_unit(j).plus_unit(i);  // 2e_j + e_i
    return node_sum({node_bracket(leaf(MIndex::unit(n, j), i), expand(big, j),
                                  GenExpr::Case::mj3_total3),
                     expand(big, i)},
                    GenExpr::Case::mj3_total3);
  }
  // m_j = 3, |m| > 3.
  MIndex cube = MIndex::unit(n, j).plus_unit(j, 2);  // 3 e_j
  return node_scale(Scalar(Rat(1, 2)),
                    node_bracket(expand(m.plus_unit(j, -2), j), expand(cube, j),
                                 GenExpr::Case::mj3_deep),
                    GenExpr::Case::mj3_deep);
}

}  // namespace

GenExprPtr express_generator(const MIndex& m, int j) {
  if (m.size() < 2)
    fail(errc::domain_error, "generator recursion needs n > 1 (n = 1 uses the d_i family)");
  if (!m.nonneg()) fail(errc::domain_error, "exponents must be nonnegative");
  if (m.total() < 3)
    fail(errc::domain_error, "|m| < 3: already a generator with |m| <= 2");
  if (j < 0 || j >= m.size()) fail(errc::bad_argument, "direction index out of range");
  return expand(m, j);
}

WittElem GenExpr::eval() const {
  switch (kind) {
    case Kind::term:
      return WittElem::single(term);
    case Kind::bracket:
      return bracket(children[0]->eval(), children[1]->eval());
    case Kind::scale:
      return children[0]->eval().scaled(factor);
    case Kind::sum: {
      WittElem r;
      for (const auto& c : children) r += c->eval();
      return r;
    }
  }
  fail(errc::internal_error, "bad expression node");
}

std::string GenExpr::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::term:
      os << term.str();
      break;
    case Kind::bracket:
      os << "[" << children[0]->str() << ", " << children[1]->str() << "]";
      break;
    case Kind::scale:
      os << "(" << factor.str() << ")*" << children[0]->str();
      break;
    case Kind::sum: {
      os << "(";
      for (size_t i = 0; i < children.size(); ++i)
        os << (i ? " + " : "") << children[i]->str();
      os << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace wnlie
