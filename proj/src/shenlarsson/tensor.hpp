#pragma once

#include <memory>

#include "glrep/glrep.hpp"
#include "pbw/pbw.hpp"
#include "weylmod/weylmod.hpp"

namespace wnlie {

/// Basis key of T(P, V): (exponent key of P) ⊗ (basis index of V).
struct TenKey {
  MIndex p;
  int v = 0;
  bool operator==(const TenKey& o) const { return p == o.p && v == o.v; }
  bool operator<(const TenKey& o) const {
    if (p != o.p) return p < o.p;
    return v < o.v;
  }
};

using TenVec = SparseCombo<TenKey>;

struct TensorModule {
  std::shared_ptr<const DnModule> P;
  std::shared_ptr<const GlRep> V;
  int n() const { return P->n(); }
};

/// Action of a localized normal-form element through φ: the Weyl side acts
/// on P (∂^{-1} through the module's inverse), the gl side on V.
TenVec tensor_action(const UElem& x, const TenVec& w, const TensorModule& M);

/// The sorted subsets indexing the exterior-power basis (shared with glrep).
std::vector<std::vector<int>> exterior_basis(int n, int k);

/// π_k: T(P, Λ^k) -> T(P, Λ^{k+1}), p ⊗ v -> sum_j (∂_j p) ⊗ (e_j ∧ v).
TenVec pi_map(int k, const TenVec& w, const DnModule& P);

struct WhittakerModuleDesc {
  enum class Kind { tensor, im_pi, ker_pi };
  Kind kind = Kind::tensor;
  std::shared_ptr<const GlRep> V;  // tensor kind
  int k = -1;                      // pi kinds: the index of pi_k
};

struct WhittakerResult {
  int dim = 0;
  bool stable = false;  // kernel dimension unchanged from bound-1 to bound
  long bound = 0;
  std::vector<TenVec> basis;
  int ambient_exterior_k = -1;  // the Λ side the basis vectors live in (pi kinds)
};

/// Exact joint kernel of (∂_i - 1) on the degree-truncated module over
/// A_n^1; for tensor modules the answer must be 1 ⊗ V.
WhittakerResult whittaker_space(const WhittakerModuleDesc& desc, int n, long bound);

std::string tenvec_str(const TenVec& w, const std::vector<std::string>& params = {},
                       const std::vector<Scalar>* mu = nullptr);

}  // namespace wnlie
