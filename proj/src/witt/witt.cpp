#include "witt/witt.hpp"

#include <sstream>

#include "kernel/format.hpp"

namespace wnlie {

std::string WittTerm::str() const {
  std::ostringstream os;
  for (int i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    os << "t" << (i + 1);
    if (m[i] != 1) os << "^" << m[i];
    os << "*";
  }
  os << "d" << (j + 1);
  return os.str();
}

WittTerm make_term(const MIndex& m, int j) {
  if (!m.nonneg()) fail(errc::domain_error, "vector field exponents must be nonnegative");
  if (j < 0 || j >= m.size()) fail(errc::bad_argument, "direction index out of range");
  return WittTerm{m, j};
}

WittElem witt_partial(int n, int j) {
  return WittElem::single(make_term(MIndex(n), j));
}

WittElem witt_h(int n, int i) {
  return WittElem::single(make_term(MIndex::unit(n, i), i));
}

WittElem witt_euler(int n) {
  WittElem e;
  for (int i = 0; i < n; ++i) e += witt_h(n, i);
  return e;
}

WittElem witt_term_elem(const MIndex& m, int j) {
  return WittElem::single(make_term(m, j));
}

WittElem bracket(const WittTerm& a, const WittTerm& b) {
  if (a.n() != b.n()) fail(errc::dimension_mismatch, "bracket dimension mismatch");
  WittElem r;
  MIndex sum = a.m.plus(b.m);
  int ri = b.m[a.j];
  if (ri != 0) r.add(WittTerm{sum.plus_unit(a.j, -1), b.j}, Scalar(ri));
  int mj = a.m[b.j];
  if (mj != 0) r.add(WittTerm{sum.plus_unit(b.j, -1), a.j}, Scalar(-mj));
  return r;
}

WittElem bracket(const WittElem& x, const WittElem& y) {
  WittElem r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r += bracket(a, b).scaled(ca * cb);
  return r;
}

WittElem diagonal_twist(const std::vector<Scalar>& c, const WittElem& x) {
  for (const Scalar& ci : c)
    if (ci.is_zero()) fail(errc::bad_argument, "twist factors must be nonzero");
  WittElem r;
  for (const auto& [t, coeff] : x) {
    if (t.n() != static_cast<int>(c.size()))
      fail(errc::dimension_mismatch, "twist dimension mismatch");
    Scalar f = c[static_cast<size_t>(t.j)];
    for (int i = 0; i < t.n(); ++i) f = f * c[static_cast<size_t>(i)].pow(-t.m[i]);
    r.add(t, coeff * f);
  }
  return r;
}

std::string witt_str(const WittElem& x, const std::vector<std::string>& params) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : x) {
    append_term(os, first, c, t.str(), params);
    first = false;
  }
  return os.str();
}

}  // namespace wnlie
