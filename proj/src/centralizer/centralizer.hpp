#pragma once

#include <map>
#include <string>
#include <vector>

#include "pbw/decompose.hpp"
#include "pbw/pbw.hpp"

namespace wnlie {

/// One of the distinguished centralizer elements: z_{i,j}, z_{i,l,j} or z_i.
struct ZGen {
  enum class Kind { zij, zilj, zi };
  Kind kind;
  int i = -1, l = -1, j = -1;
  UElem elem;  // normal form; verified to centralize at build time

  std::string name() const;
};

ZGen make_z_ij(int n, int i, int j);
ZGen make_z_ilj(int n, int i, int l, int j);
ZGen make_z_i(int n, int i);

/// Shape data of the single-frame normal form
///   X_{m,j} = (t^m d_j) ∂^{m-e_j} + sum_r (t^r d_j) g_r(h) ∂^{r-e_j}:
/// per frame exponent r the h-polynomial g_r
/// (right-multiplied convention), recorded as h-exponent -> coefficient.
/// Corrections carried by a Cartan frame (pure polynomials in the h's, e.g.
/// the -h_i of z_{i,j} or the h_2^2 + h_2 of z_{2,2,1}) are collected in
/// `cartan`; they have no constant term and total degree at most |m|.
///
/// deg g_r <= |m| - |r| always holds; the closed n = 1 family attains the
/// bound at every frame, while for n >= 2 some frames fall short of it (no
/// choice of X_{m,j} fixes that, since retouching by lower X's cannot raise
/// a frame's degree). degrees_exact records whether every nonzero g_r
/// attains the bound.
struct XShape {
  bool ok = false;
  bool degrees_exact = false;
  std::string issue;
  std::map<MIndex, SparseCombo<MIndex>> g;  // r -> g_r, non-Cartan frames
  SparseCombo<MIndex> cartan;
};

using XMonoFactors = std::vector<std::pair<std::pair<MIndex, int>, int>>;

struct XGen {
  MIndex m;
  int j = 0;
  UElem elem;
  std::string trace;  // recursion case / closed formula that produced it
  // Pure X-monomial corrections subtracted from the raw commutator to reach
  // the displayed shape (in raw-generator products), with their coefficients.
  std::vector<std::pair<XMonoFactors, Scalar>> reductions;
  XShape shape;
};

/// Shared read-only cache of built X generators. Construction follows the
/// four-case bracket recursion for n > 1 (smallest admissible i when several
/// apply) and the closed d_i formula for n = 1; every element is verified to
/// centralize and to match the single-frame shape before it is cached.
///
/// The bracket recursion lands in H_n but picks up products of lower X's on
/// top of the displayed single-frame form (already X_{(2,1),1} contains
/// (t_2 d_1)(t_1^2 d_1) d_2). The displayed element exists and is unique, so
/// build() reduces the raw commutator: repeatedly subtract, at the largest
/// offending monomial, the matching pure X-monomial product of raw
/// generators. Each step strictly descends the elimination order, and a
/// candidate with a nonzero B_n part aborts loudly.
class XCache {
 public:
  explicit XCache(int n) : n_(n) {}

  const XGen& get(const MIndex& m, int j);
  XProvider provider();
  int n() const { return n_; }

  /// The unreduced recursion output (still a verified H_n element).
  const UElem& raw(const MIndex& m, int j);

 private:
  XGen build(const MIndex& m, int j);
  UElem build_raw(const MIndex& m, int j);

  int n_;
  std::map<std::pair<MIndex, int>, UElem> raw_;
  std::map<std::pair<MIndex, int>, XGen> cache_;
};

/// Checks the normal form of a centralizer element against the single-frame
/// shape: a single leading monomial (t^m ∂_j) ∂^{m-e_j} with coefficient 1,
/// every other monomial carried by a frame (t^r ∂_j) with 0 < |r| < |m| and
/// ∂ exponents r - e_j, and deg g_r = |m| - |r| for each nonzero g_r.
XShape analyze_x_shape(const UElem& x, const MIndex& m, int j);

struct HBasisEntry {
  std::vector<std::pair<std::pair<MIndex, int>, int>> factors;  // ((m,j),exp)
  long degree = 0;
  std::string str() const;
};

struct HBasisResult {
  std::vector<HBasisEntry> monomials;
  int rank = 0;
  bool independent = false;
};

/// Ordered X-monomials of filtration degree <= max_degree, with linear
/// independence verified by rank computation over their normal forms.
HBasisResult h_monomial_basis(int n, long max_degree, XCache& cache);

}  // namespace wnlie
