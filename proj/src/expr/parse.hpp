#pragma once

#include <string>
#include <vector>

#include "pbw/pbw.hpp"
#include "weylmod/weylmod.hpp"

namespace wnlie {

/// Parsers for the CLI expression grammars. All report errors with the
/// 0-based position and the expected token.
///
/// Element grammar: terms `t<i>`, `d<i>`, `h<i>`, `E`; operators `* / ^ + -`,
/// brackets `[x,y]` (the commutator), parentheses; integer exponents,
/// negative only on `d<i>`; scalar literals are integers, `p/q` rationals
/// and declared parameter names. A run of `t` powers binds to the next `d`:
/// `t1^2*t2*d3` is the single generator t^(2,1,0) ∂_3.
UElem parse_u_expr(const std::string& text, int n, const std::vector<std::string>& params);

/// Element expression restricted to W_n (degree-one monomials only).
WittElem parse_witt_expr(const std::string& text, int n,
                         const std::vector<std::string>& params);

/// Scalar literal expression.
Scalar parse_scalar(const std::string& text, const std::vector<std::string>& params);

/// Comma-separated scalar vector, e.g. "2,0" or "a1,a1+1/2".
std::vector<Scalar> parse_scalar_vector(const std::string& text,
                                        const std::vector<std::string>& params);

/// Polynomial vectors in the t's: `t1^2*t2 + 3` (negative exponents only
/// when allow_negative, for Laurent keys).
PVec parse_pvec(const std::string& text, int n, const std::vector<std::string>& params,
                bool allow_negative);

/// Localized Weyl-algebra operator: sums of scalar-weighted words in t_i and
/// d_i with integer exponents (negative only on d): `t1*d1^-1 - 2*d2`.
struct WeylFactor {
  bool is_t = false;
  int index = 0;
  int exp = 1;
};
struct WeylOp {
  std::vector<std::pair<Scalar, std::vector<WeylFactor>>> terms;
};
WeylOp parse_weyl_op(const std::string& text, int n,
                     const std::vector<std::string>& params);

/// Applies a parsed Weyl operator to a module vector, factors right to left.
PVec apply_weyl_op(const WeylOp& op, const DnModule& mod, const PVec& v);

/// Comma-separated integer vector, e.g. "2,1" for a multi-index.
MIndex parse_mindex(const std::string& text, int n);

}  // namespace wnlie
