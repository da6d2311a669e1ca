#pragma once

#include <string>
#include <vector>

#include "kernel/mindex.hpp"
#include "kernel/sparse_combo.hpp"

namespace wnlie {

/// Basis vector field t^m ∂_j with m nonnegative; j is 0-based internally.
struct WittTerm {
  MIndex m;
  int j = 0;

  int n() const { return m.size(); }
  long degree() const { return m.total(); }
  bool operator==(const WittTerm& o) const { return m == o.m && j == o.j; }
  bool operator<(const WittTerm& o) const {
    if (m != o.m) return m < o.m;
    return j < o.j;
  }
  std::string str() const;
};

using WittElem = SparseCombo<WittTerm>;

WittTerm make_term(const MIndex& m, int j);
WittElem witt_partial(int n, int j);          // ∂_j
WittElem witt_h(int n, int i);                // h_i = t_i ∂_i
WittElem witt_euler(int n);                   // E_n = sum of h_i
WittElem witt_term_elem(const MIndex& m, int j);

/// [t^m ∂_i, t^r ∂_j] = r_i t^{m+r-e_i} ∂_j - m_j t^{m+r-e_j} ∂_i,
/// extended bilinearly.
WittElem bracket(const WittElem& x, const WittElem& y);
WittElem bracket(const WittTerm& a, const WittTerm& b);

/// Automorphism induced by t_i -> c_i^{-1} t_i: t^m ∂_j -> c^{-m} c_j t^m ∂_j.
WittElem diagonal_twist(const std::vector<Scalar>& c, const WittElem& x);

std::string witt_str(const WittElem& x, const std::vector<std::string>& params = {});

}  // namespace wnlie
