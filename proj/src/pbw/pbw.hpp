#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/witt.hpp"

namespace wnlie {

/// PBW generator of the localized enveloping algebra U_∂: either a vector
/// field t^m ∂_j with |m| >= 1 (this includes h_j when m = e_j), or a ∂_j
/// (m = 0). The total order — non-∂ generators by (|m|, m lex, j), then the
/// ∂ generators by j — makes brackets strictly drop filtration degree, which
/// is what terminates the straightening.
struct Gen {
  MIndex m;
  int j = 0;

  bool is_partial() const { return m.is_zero(); }
  bool is_cartan() const { return m.total() == 1 && m[j] == 1; }
  long degree() const { return m.total(); }
  WittTerm term() const { return WittTerm{m, j}; }

  bool operator==(const Gen& o) const { return m == o.m && j == o.j; }
  bool operator<(const Gen& o) const;
  std::string str() const;
};

Gen gen_partial(int n, int j);
Gen gen_h(int n, int i);

/// One straightening word / normal monomial: factors in strictly increasing
/// generator order, exponents positive except on ∂ generators where any
/// nonzero integer is allowed (localization at the Ore set of ∂ powers).
struct PBWMonomial {
  std::vector<std::pair<Gen, int>> f;

  long degree() const;    // sum of exp * |m| over factors
  long x_degree() const;  // same, restricted to non-Cartan generators
  bool is_one() const { return f.empty(); }
  bool has_partials() const;
  bool has_negative_partial() const;

  bool operator==(const PBWMonomial& o) const { return f == o.f; }
  bool operator<(const PBWMonomial& o) const;
  std::string str() const;
};

using UElem = SparseCombo<PBWMonomial>;
using Word = std::vector<std::pair<Gen, int>>;

UElem u_one();
UElem u_scalar(const Scalar& c);
UElem u_gen(const Gen& g, int exp = 1);
UElem u_from_witt(const WittElem& x);

/// Straightens an arbitrary word of generator powers into normal form.
/// Negative powers are allowed on ∂ generators only; they commute rightward
/// through the finite nilpotent-ad expansion
///   ∂_i^{-1} u = sum_k (-1)^k (ad ∂_i)^k(u) ∂_i^{-(k+1)}.
UElem normal_word(const Word& w, const Scalar& coeff = Scalar(1));

/// Normal form of a product of elements already in normal form.
UElem mul(const UElem& a, const UElem& b);
UElem mul(std::vector<UElem> factors);
UElem u_pow(const UElem& a, int k);  // k >= 0

/// normal_form(xy) - normal_form(yx); on degree-1 elements this agrees with
/// the Witt bracket.
UElem commutator(const UElem& x, const UElem& y);

struct CentralizerCheck {
  bool ok = false;
  std::string against;  // generator the witness commutator is against
  UElem witness;        // first nonzero commutator
};

/// Membership test for H_n: all 2n commutators [u, ∂_i], [u, h_i] vanish.
CentralizerCheck centralizes(const UElem& u, int n);

std::string u_str(const UElem& x, const std::vector<std::string>& params = {});

/// Largest |m| filtration degree among the monomials (0 for scalars).
long u_degree(const UElem& x);

}  // namespace wnlie
