#include "cuspidal/separation.hpp"

namespace wnlie {

SeparationVerdict separation_check(const std::vector<Scalar>& gamma,
                                   const std::vector<Scalar>& lambda) {
  if (gamma.size() != lambda.size())
    fail(errc::dimension_mismatch, "weight length mismatch");
  SeparationVerdict v;
  std::vector<long long> shift;
  for (size_t i = 0; i < gamma.size(); ++i) {
    auto d = is_integer_constant(lambda[i] - gamma[i]);
    if (!d) {
      v.disjoint = true;
      v.witness_index = static_cast<int>(i);
      return v;
    }
    shift.push_back(*d);
  }
  v.disjoint = false;
  v.colliding_shift = std::move(shift);
  return v;
}

bool verify_separation_dichotomy() {
  Scalar x = Scalar::param(0, 2), y = Scalar::param(1, 2);
  Scalar one(1);
  Scalar p1 = (x - x * x) - (y - y * y);
  Scalar p2 = (x * x * x - x * x) - (y * y * y - y * y);
  if (!(p1 == (x - y) * (one - x - y))) return false;
  Scalar q = x * x + x * y + y * y - x - y;
  if (!(p2 == (x - y) * q)) return false;
  // On the x != y branch, y = 1 - x turns q into x(x-1).
  std::vector<std::optional<Scalar>> subst{std::nullopt, one - x};
  Scalar q_sub = q.substituted(subst);
  if (!(q_sub == x * x - x)) return false;
  if (!(q_sub == x * (x - one))) return false;
  // The roots 0, 1 pair up to the swap {x,y} = {0,1}; spot-check the shared
  // eigenvalue pair and a non-colliding rational point.
  auto pair_of = [&](const Scalar& s) {
    return std::make_pair(s - s * s, s * s * s - s * s);
  };
  if (!(pair_of(Scalar(0)) == pair_of(Scalar(1)))) return false;
  if (pair_of(Scalar(2)) == pair_of(Scalar(0))) return false;
  return true;
}

}  // namespace wnlie
