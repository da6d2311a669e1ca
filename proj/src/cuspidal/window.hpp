#pragma once

#include "cuspidal/hrep.hpp"
#include "pbw/decompose.hpp"

namespace wnlie {

/// Basis key of G_1(V) = C[∂^{±1}] ⊗ V: the slice exponent r and a V index.
struct WinKey {
  MIndex r;
  int v = 0;
  bool operator==(const WinKey& o) const { return r == o.r && v == o.v; }
  bool operator<(const WinKey& o) const {
    if (r != o.r) return r < o.r;
    return v < o.v;
  }
};

using WinVec = SparseCombo<WinKey>;

/// The induced weight module G_1(V) carried on a finite window of slices
/// r in [-R, R]^n. The four operator families are the closed induced-action
/// formulas
///   h_k (∂^r ⊗ v) = (α_k - r_k) ∂^r ⊗ v
///   ∂_k (∂^r ⊗ v) = ∂^{r+e_k} ⊗ v
///   t_i∂_j (∂^r ⊗ v) = ∂^{r+e_j-e_i} ⊗ (z_{i,j} + α_i - r_i + 1 - δ_ij) v
///   t_it_j∂_j (∂^r ⊗ v) = ∂^{r-e_i} ⊗ (z_{i,j,j} + (α_j-r_j)(z_{i,j} + α_i-r_i+1)) v
/// and act on arbitrary slices; the radius only scopes the checks. An
/// independent route acts any localized element through decompose_BH and the
/// B_n ⊗ H_n structure.
class WeightWindow {
 public:
  WeightWindow(std::shared_ptr<HRep> rho, std::vector<Scalar> alpha, int radius,
               XCache& cache);

  int n() const { return rho_->n(); }
  int radius() const { return radius_; }
  const std::vector<Scalar>& alpha() const { return alpha_; }
  const HRep& rho() const { return *rho_; }

  bool in_window(const MIndex& r) const;
  std::shared_ptr<HRep> rho_ptr() const { return rho_; }
  XCache& cache() const { return *cache_; }
  std::vector<MIndex> slices(int radius) const;  // all r in [-radius, radius]^n

  WinVec act_h(int k, const WinVec& w) const;
  WinVec act_d(int k, int exp, const WinVec& w) const;
  WinVec act_td(int i, int j, const WinVec& w) const;
  WinVec act_ttd(int i, int j, const WinVec& w) const;

  /// Slice-to-slice matrices of the root-vector families.
  Mat slice_td(int i, int j, const MIndex& r) const;
  Mat slice_tEn(int i, const MIndex& r) const;

  /// Independent action of a localized element through its B_n ⊗ H_n
  /// coordinates; X parts act by HRep matrices, h parts by the slice
  /// scalars, ∂ parts by slice shifts.
  WinVec act_elem(const UElem& u, const WinVec& w) const;

  /// Weight of the r slice: α - r.
  std::vector<Scalar> slice_weight(const MIndex& r) const;

 private:
  std::shared_ptr<HRep> rho_;
  std::vector<Scalar> alpha_;
  int radius_;
  XCache* cache_;
};

struct SliceDet {
  std::string op;
  MIndex slice;
  Scalar det;
  bool zero = false;
};

struct CuspidalityReport {
  bool cuspidal_on_window = false;
  bool alpha_symbolic = false;
  std::vector<SliceDet> dets;
  struct Vanishing {
    std::string op;
    MIndex slice;
    std::vector<long> alpha;
  };
  std::vector<Vanishing> vanishing_specializations;
};

/// Slice determinants of ∂_i, t_i∂_j (i != j) and t_iE_n over the window;
/// cuspidal iff every determinant is a nonzero Scalar. With symbolic α the
/// integer specializations in [-scan, scan]^n that kill some determinant are
/// reported as the excluded set.
CuspidalityReport cuspidality_check(const WeightWindow& win, int scan_radius);

}  // namespace wnlie
