#pragma once

#include <optional>
#include <vector>

#include "kernel/scalar.hpp"

namespace wnlie {

struct SeparationVerdict {
  bool disjoint = false;
  int witness_index = -1;  // coordinate whose difference is non-integral
  std::vector<long long> colliding_shift;  // λ - γ when the blocks collide
};

/// Decides S_{γ+Z^n} ∩ S_{λ+Z^n} = ∅ through the eigenvalue dichotomy of the
/// pair (x - x^2, x^3 - x^2): two scalars share it iff x = y or {x,y}={0,1}.
/// Collision happens exactly when λ - γ ∈ Z^n.
SeparationVerdict separation_check(const std::vector<Scalar>& gamma,
                                   const std::vector<Scalar>& lambda);

/// Exact polynomial-system solve behind the dichotomy: verifies the
/// factorizations
///   (x - x^2) - (y - y^2)   = (x - y)(1 - x - y)
///   (x^3 - x^2) - (y^3 - y^2) = (x - y)(x^2 + xy + y^2 - x - y)
/// and that on the branch y = 1 - x the second factor reduces to x(x - 1),
/// so the solution variety is {x = y} ∪ {(0,1), (1,0)}.
bool verify_separation_dichotomy();

}  // namespace wnlie
