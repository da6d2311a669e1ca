#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kernel/errors.hpp"

namespace wnlie {

using Rat = mpq_class;

/// Multivariate polynomial over Q in a fixed list of formal parameters.
///
/// Exponent keys always have size == arity(); zero coefficients are never
/// stored, so structural equality is semantic equality. A Poly of arity 0 is
/// a plain rational constant and combines freely with any arity (constants
/// are promoted on demand); mixing two genuinely different parameter lists
/// is an error.
class Poly {
 public:
  using Exps = std::vector<int>;
  using TermMap = std::map<Exps, Rat>;

  Poly() : arity_(0) {}
  explicit Poly(const Rat& c, int arity = 0);
  explicit Poly(long c, int arity = 0) : Poly(Rat(c), arity) {}

  static Poly param(int index, int arity);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rat> constant_value() const;

  const TermMap& terms() const { return terms_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly pow(int k) const;  // k >= 0

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Total order (arity, then term-wise lex); used for canonical map keys.
  int compare(const Poly& o) const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int v) const;
  int max_var() const;  // largest var index that occurs, -1 if none

  /// Coefficient of v^k, as a polynomial of the same arity with exps[v]==0.
  Poly coeff_in(int v, int k) const;

  /// Leading rational coefficient w.r.t. the lex term order.
  Rat leading_coeff() const;

  Poly scaled(const Rat& c) const;

  /// Promote a constant to the given arity (no-op if arity matches).
  Poly promoted(int arity) const;

  std::string str(const std::vector<std::string>& names = {}) const;

  friend Poly poly_gcd(const Poly& a, const Poly& b);
  friend Poly poly_divexact(const Poly& a, const Poly& b);

 private:
  void add_term(const Exps& e, const Rat& c);
  static void match(const Poly& a, const Poly& b, Poly& pa, Poly& pb);

  int arity_;
  TermMap terms_;
};

/// gcd over Q[a_1..a_p], normalized primitive with positive integer-coprime
/// coefficients and positive leading coefficient. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Exact division; throws errc::internal_error if the division is not exact.
Poly poly_divexact(const Poly& a, const Poly& b);

}  // namespace wnlie
