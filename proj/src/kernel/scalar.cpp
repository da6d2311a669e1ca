#include "kernel/scalar.hpp"

#include <sstream>

namespace wnlie {

Scalar Scalar::param(int index, int count) {
  Scalar s;
  s.num_ = Poly::param(index, count);
  s.den_ = Poly(Rat(1), count);
  return s;
}

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(errc::division_by_zero, "zero denominator");
  Scalar s;
  s.num_ = num;
  s.den_ = den;
  s.reduce();
  return s;
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1), den_.arity());
  } else {
    Poly g = poly_gcd(num_, den_);
    if (!(g == Poly(Rat(1), g.arity()))) {
      num_ = poly_divexact(num_, g);
      den_ = poly_divexact(den_, g);
    }
  }
  Rat lead = den_.leading_coeff();
  if (lead != 1) {
    num_ = num_.scaled(Rat(1) / lead);
    den_ = den_.scaled(Rat(1) / lead);
  }
}

bool Scalar::is_one() const {
  return den_.is_constant() && num_ == Poly(Rat(1), num_.arity());
}

namespace {

// Straightening coefficients are overwhelmingly plain rationals; skip the
// polynomial machinery for them.
inline bool both_rational(const Scalar& a, const Scalar& b, Rat& x, Rat& y) {
  auto ra = a.as_rational();
  if (!ra) return false;
  auto rb = b.as_rational();
  if (!rb) return false;
  x = *ra;
  y = *rb;
  return true;
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  Rat x, y;
  if (both_rational(*this, o, x, y)) return Scalar(Rat(x + y));
  return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  Rat x, y;
  if (both_rational(*this, o, x, y)) return Scalar(Rat(x - y));
  return fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  Rat x, y;
  if (both_rational(*this, o, x, y)) return Scalar(Rat(x * y));
  return fraction(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) fail(errc::division_by_zero, "scalar division by zero");
  return fraction(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  return fraction(den_, num_);
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  Scalar r(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

int Scalar::compare(const Scalar& o) const {
  int c = num_.compare(o.num_);
  if (c != 0) return c;
  return den_.compare(o.den_);
}

std::optional<Rat> Scalar::as_rational() const {
  auto n = num_.constant_value();
  auto d = den_.constant_value();
  if (!n || !d) return std::nullopt;
  Rat q = *n / *d;
  q.canonicalize();
  return q;
}

std::optional<long long> is_integer_constant(const Scalar& s) {
  auto q = s.as_rational();
  if (!q) return std::nullopt;
  if (q->get_den() != 1) return std::nullopt;
  if (!q->get_num().fits_slong_p())
    fail(errc::internal_error, "integer constant out of range");
  return q->get_num().get_si();
}

namespace {

Scalar eval_poly(const Poly& p, const std::vector<std::optional<Scalar>>& values) {
  Scalar acc;
  for (const auto& [e, c] : p.terms()) {
    Scalar term{Rat(c)};
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Scalar base = (i < values.size() && values[i])
                        ? *values[i]
                        : Scalar::param(static_cast<int>(i), p.arity());
      term = term * base.pow(e[i]);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

Scalar Scalar::substituted(const std::vector<std::optional<Scalar>>& values) const {
  Scalar n = eval_poly(num_, values);
  Scalar d = eval_poly(den_, values);
  return n / d;
}

std::string Scalar::str(const std::vector<std::string>& names) const {
  if (den_.is_constant()) {
    auto d = den_.constant_value();
    if (*d == 1) return num_.str(names);
  }
  std::ostringstream os;
  bool nsimple = num_.terms().size() <= 1;
  os << (nsimple ? "" : "(") << num_.str(names) << (nsimple ? "" : ")");
  os << "/";
  bool dsimple = den_.terms().size() == 1;
  os << (dsimple ? "" : "(") << den_.str(names) << (dsimple ? "" : ")");
  return os.str();
}

}  // namespace wnlie
