#pragma once

#include <memory>

#include "centralizer/centralizer.hpp"
#include "glrep/glrep.hpp"
#include "shenlarsson/tensor.hpp"

namespace wnlie {

/// Finite-dimensional H_n-module: matrices for the z generators (and,
/// derived from them, any X_{m,j}). Built either from a gl_n-module via the
/// closed action formulas
///   z_{i,j} v = (E_{ij} - E_{ii}) v,                 z_i v = 2(E_ii^3 - 3E_ii^2 + 2E_ii) v,
///   z_{i,l,k} v = (E_ll E_ii - E_ik E_ll - E_lk E_ii + δ_il E_il
///                  + (δ_lk - δ_il) E_ik + (δ_ik - δ_il) E_lk) v,
/// cross-checked against the localized action inside T(A_n^1, V), or by
/// restriction to an H-invariant subspace (the Whittaker modules W(δ_k)).
class HRep {
 public:
  static std::shared_ptr<HRep> from_glrep(const GlRep& v, XCache& cache,
                                          bool crosscheck = true);
  static std::shared_ptr<HRep> restriction(std::shared_ptr<const HRep> ambient,
                                           const std::vector<std::vector<Scalar>>& basis);
  /// Rebuild from explicit z tables (deserialization); X matrices are then
  /// available through the bracket recursion (n > 1 only).
  static std::shared_ptr<HRep> from_tables(int n, int dim, std::vector<Mat> zij,
                                           std::vector<Mat> zilj, std::vector<Mat> zi);

  int n() const { return n_; }
  int dim() const { return dim_; }

  const Mat& z_ij(int i, int j) const;
  const Mat& z_ilj(int i, int l, int k) const;
  const Mat& z_i(int i) const;
  const Mat& z_matrix(const ZGen& z) const;

  /// Matrix of X_{m,j}: the matrix-bracket mirror of the construction
  /// recursion for n > 1, the localized tensor route for n = 1.
  const Mat& x_matrix(const MIndex& m, int j, XCache& cache);

  const GlRep* glrep() const { return glrep_ ? &*glrep_ : nullptr; }

 private:
  int n_ = 0, dim_ = 0;
  std::vector<Mat> zij_, zilj_, zi_;
  std::map<std::pair<MIndex, int>, Mat> xmat_, raw_xmat_;
  std::optional<GlRep> glrep_;
  std::shared_ptr<const HRep> ambient_;
  std::vector<std::vector<Scalar>> basis_;  // restriction embedding

  Mat restrict_of(const Mat& ambient_mat) const;
  const Mat& raw_x_matrix(const MIndex& m, int j, XCache& cache);
};

/// Applies a localized H_n element inside T(A_n^1, V) to 1 ⊗ e_b; the result
/// must stay in 1 ⊗ V (it is a Whittaker vector). Returns the matrix.
Mat tensor_route_matrix(const UElem& x, const GlRep& v);

/// The Whittaker module W(δ_k) = wh_1(im π_{k-1}) as an HRep restriction of
/// the closed-formula action on Λ^k, together with its embedding vectors.
struct WhittakerHRep {
  std::shared_ptr<HRep> rep;
  std::vector<TenVec> embedding;  // vectors inside 1 ⊗ Λ^k
};
WhittakerHRep make_whittaker_hrep(int n, int k, XCache& cache, long bound = 3);

}  // namespace wnlie
