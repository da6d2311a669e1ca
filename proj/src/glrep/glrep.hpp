#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kernel/linalg.hpp"
#include "kernel/mindex.hpp"

namespace wnlie {

/// Finite-dimensional gl_n-module: matrices for every E_{ij}, with each
/// basis vector a simultaneous eigenvector of the E_{ii} (weights may be
/// shifted by a symbolic determinant power, so they are Scalars).
struct GlRep {
  int n = 0;
  int dim = 0;
  std::vector<Mat> E;  // n*n entries, E[i*n+j]
  std::vector<std::vector<Scalar>> weights;
  std::optional<std::vector<Scalar>> lambda;

  const Mat& e(int i, int j) const { return E[static_cast<size_t>(i * n + j)]; }
  Mat& e(int i, int j) { return E[static_cast<size_t>(i * n + j)]; }

  bool operator==(const GlRep& o) const;
};

/// Commutation relations, weight eigenvectors, and (when lambda is present)
/// the highest-weight invariants; throws verification_failure on violation.
void validate_glrep(const GlRep& v);

GlRep exterior_power(int n, int k);
GlRep tensor_rep(const GlRep& a, const GlRep& b);

/// Simple module V(λ) for λ with nonnegative-integer successive differences;
/// λ_n may be any Scalar (realized as a symbolic determinant twist). Built as
/// the lowering closure of the product of column highest-weight vectors in a
/// tensor product of exterior powers; dimension cross-checked against the
/// Weyl dimension formula.
GlRep highest_weight_module(int n, const std::vector<Scalar>& lambda);

struct VecScalarLess {
  bool operator()(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      int c = a[i].compare(b[i]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

std::map<std::vector<Scalar>, std::vector<int>, VecScalarLess> weight_spaces(const GlRep& v);

/// Independent oracle: prod_{i<j} (λ_i - λ_j + j - i)/(j - i).
Scalar weyl_dimension(const std::vector<Scalar>& lambda);

}  // namespace wnlie
