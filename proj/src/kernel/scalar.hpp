#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kernel/poly.hpp"

namespace wnlie {

/// Element of the exact coefficient field Q(a_1,...,a_p): a reduced fraction
/// of multivariate polynomials. Canonical form: gcd(num, den) = 1, the
/// denominator's lex-leading coefficient is 1, and zero is 0/1 — so two
/// Scalars are equal iff their representations are identical. All arithmetic
/// is exact; there is no floating point anywhere.
class Scalar {
 public:
  Scalar() : num_(), den_(Rat(1)) {}
  Scalar(long v) : num_(Rat(v)), den_(Rat(1)) {}
  explicit Scalar(const Rat& q) : num_(q), den_(Rat(1)) {}
  static Scalar param(int index, int count);
  static Scalar fraction(const Poly& num, const Poly& den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  int arity() const { return std::max(num_.arity(), den_.arity()); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inv() const;
  Scalar pow(int k) const;  // any integer k (negative inverts)

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  int compare(const Scalar& o) const;

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  /// The constant rational value, if this Scalar does not depend on any
  /// parameter.
  std::optional<Rat> as_rational() const;

  /// Substitute Scalars for a subset of the parameters (nullopt entries stay
  /// symbolic). The result keeps the same parameter list.
  Scalar substituted(const std::vector<std::optional<Scalar>>& values) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void reduce();

  Poly num_, den_;
};

/// The integer n iff s is a constant rational that is an integer.
std::optional<long long> is_integer_constant(const Scalar& s);

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const {
    return a.compare(b) < 0;
  }
};

}  // namespace wnlie
