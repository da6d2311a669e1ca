#pragma once

#include <functional>

#include "pbw/pbw.hpp"

namespace wnlie {

/// Supplies the normalized H_n generator X_{m,j}; implemented by the
/// centralizer module, passed in here to keep the triangular elimination
/// independent of how the X family is built.
using XProvider = std::function<UElem(const MIndex& m, int j)>;

/// One coordinate of the decomposition U_∂ = B_n ⊗ H_n: an ordered monomial
/// in the X generators, an h monomial, and a ∂ monomial (integer exponents).
struct BHTriple {
  std::vector<std::pair<std::pair<MIndex, int>, int>> x_part;
  MIndex h_exps;
  MIndex d_exps;

  std::string str() const;
};

struct BHDecomposition {
  std::vector<std::pair<BHTriple, Scalar>> terms;
};

/// Coordinates of u in the triangular basis {X-monomial · h^r · ∂^s}, found
/// by greedy elimination against leading terms. The leading term of X_{m,j}
/// is (t^m ∂_j) ∂^{m-e_j}, so the candidate triple of a normal monomial can
/// be read off its factors directly. Throws degree_bound_exceeded when a
/// leading monomial above the bound appears.
BHDecomposition decompose_BH(const UElem& u, long degree_bound,
                             const XProvider& provider, int n);

/// The candidate triple whose normal form has the given monomial as leading
/// term in the elimination order.
BHTriple bh_candidate(const PBWMonomial& mono, int n);

/// Elimination order: X-filtration degree, then total degree, then the
/// monomial order.
bool bh_elim_less(const PBWMonomial& a, const PBWMonomial& b);

/// Normal form of one triple (used to recombine and to act through B_n⊗H_n).
UElem triple_element(const BHTriple& t, const XProvider& provider, int n);

/// Recombines the coordinates through normal_form; equals the decomposed
/// element exactly.
UElem recombine(const BHDecomposition& d, const XProvider& provider, int n);

}  // namespace wnlie
