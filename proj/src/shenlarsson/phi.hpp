#pragma once

#include <utility>
#include <vector>

#include "pbw/pbw.hpp"

namespace wnlie {

/// Normally ordered Weyl-algebra word t^t ∂^d (t before ∂, exponents >= 0).
struct WeylMono {
  MIndex t, d;
  bool operator==(const WeylMono& o) const { return t == o.t && d == o.d; }
  bool operator<(const WeylMono& o) const {
    if (t != o.t) return t < o.t;
    return d < o.d;
  }
  std::string str() const;
};

/// PBW word in U(gl_n), generators E_{ij} ordered by (i,j).
struct GlMono {
  std::vector<std::pair<std::pair<int, int>, int>> f;
  bool operator==(const GlMono& o) const { return f == o.f; }
  bool operator<(const GlMono& o) const { return f < o.f; }
  std::string str() const;
};

using PhiKey = std::pair<WeylMono, GlMono>;
using PhiImage = SparseCombo<PhiKey>;

PhiImage phi_one(int n);
PhiImage phi_mul(const PhiImage& a, const PhiImage& b, int n);

/// φ(t^m ∂_k) = t^m ∂_k ⊗ 1 + sum_i m_i t^{m-e_i} ⊗ E_{ik}, extended
/// multiplicatively; requires u free of negative ∂ powers.
PhiImage phi(const UElem& u, int n);

std::string phi_str(const PhiImage& x, const std::vector<std::string>& params = {});

}  // namespace wnlie
