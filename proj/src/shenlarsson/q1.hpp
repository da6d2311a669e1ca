#pragma once

#include "centralizer/centralizer.hpp"
#include "pbw/pbw.hpp"

namespace wnlie {

/// Element of Q_1 = U(W_n) ⊗_{U(Δ_n)} C_1, stored ∂-free over the PBW
/// monomials in the positive part L_n (every ∂^s is absorbed at the wall:
/// ∂_i v_1 = v_1). The monomial degree is the Whittaker degree grading.
using Q1Vec = SparseCombo<PBWMonomial>;

Q1Vec q1_vacuum();

/// Straightens x · w and substitutes every right-side ∂ power by 1. Localized
/// x is fine: each ∂_i acts unipotently on the degree filtration, so the
/// nilpotent-ad expansion terminates per vector.
Q1Vec q1_action(const UElem& x, const Q1Vec& w, int n);

bool q1_is_whittaker(const Q1Vec& v, int n);

/// Θ(x)(v_1) = x v_1 for x in H_n; verifies membership and that the image is
/// a Whittaker vector.
Q1Vec theta_of(const UElem& x, int n);

long q1_degree(const Q1Vec& v);

/// The E_n-weight part of the Whittaker degree pair (degree, weight): a
/// monomial in generators t^m d_j carries weight sum e·(|m| - 1).
long q1_weight(const Q1Vec& v);

struct Q1WhitDims {
  long bound = 0;
  std::vector<int> kernel_dims;      // per degree 0..bound, cumulative
  std::vector<int> monomial_counts;  // ordered X-monomials of degree <= d
  bool dims_match = false;
  bool solvable = false;  // every kernel vector is a Y-monomial combination
};

/// Per-degree dimensions of wh_1(Q_1) against the count of ordered
/// X-monomial images (the asserted spanning set), with an exact solve of
/// every kernel vector in terms of those images.
Q1WhitDims q1_whittaker_dimensions(int n, long bound, XCache& cache);

}  // namespace wnlie
