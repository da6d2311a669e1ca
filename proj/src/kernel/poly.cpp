#include "kernel/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wnlie {

Poly::Poly(const Rat& c, int arity) : arity_(arity) {
  if (sgn(c) == 0) return;
  Rat q = c;
  q.canonicalize();
  terms_.emplace(Exps(static_cast<size_t>(arity), 0), q);
}

Poly Poly::param(int index, int arity) {
  if (index < 0 || index >= arity)
    fail(errc::bad_argument, "parameter index out of range");
  Poly p;
  p.arity_ = arity;
  Exps e(static_cast<size_t>(arity), 0);
  e[static_cast<size_t>(index)] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exps& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<Rat> Poly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Rat(0);
  return terms_.begin()->second;
}

void Poly::add_term(const Exps& e, const Rat& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (sgn(c) != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Poly Poly::promoted(int arity) const {
  if (arity_ == arity) return *this;
  if (!is_constant())
    fail(errc::param_mismatch, "cannot combine scalars over different parameter lists");
  Poly p;
  p.arity_ = arity;
  if (!terms_.empty())
    p.terms_.emplace(Exps(static_cast<size_t>(arity), 0), terms_.begin()->second);
  return p;
}

void Poly::match(const Poly& a, const Poly& b, Poly& pa, Poly& pb) {
  int ar = std::max(a.arity_, b.arity_);
  pa = a.promoted(ar);
  pb = b.promoted(ar);
}

Poly Poly::operator+(const Poly& o) const {
  Poly a, b;
  match(*this, o, a, b);
  for (const auto& [e, c] : b.terms_) a.add_term(e, c);
  return a;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  Poly a, b;
  match(*this, o, a, b);
  Poly r;
  r.arity_ = a.arity_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exps e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) fail(errc::bad_argument, "negative polynomial power");
  Poly r(Rat(1), arity_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (is_constant() || o.is_constant()) {
    Poly a, b;
    match(*this, o, a, b);
    return a.terms_ == b.terms_;
  }
  return arity_ == o.arity_ && terms_ == o.terms_;
}

int Poly::compare(const Poly& o) const {
  if (arity_ != o.arity_) return arity_ < o.arity_ ? -1 : 1;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
    int c = cmp(it->second, jt->second);
    if (c != 0) return c;
  }
  if (it != terms_.end()) return 1;
  if (jt != o.terms_.end()) return -1;
  return 0;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(int v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(v)]);
  return d;
}

int Poly::max_var() const {
  int m = -1;
  for (const auto& [e, c] : terms_)
    for (int i = static_cast<int>(e.size()) - 1; i > m; --i)
      if (e[static_cast<size_t>(i)] != 0) m = i;
  return m;
}

Poly Poly::coeff_in(int v, int k) const {
  Poly r;
  r.arity_ = arity_;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<size_t>(v)] != k) continue;
    Exps f = e;
    f[static_cast<size_t>(v)] = 0;
    r.add_term(f, c);
  }
  return r;
}

Rat Poly::leading_coeff() const {
  if (terms_.empty()) return Rat(0);
  return terms_.rbegin()->second;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r;
  r.arity_ = arity_;
  if (sgn(c) == 0) return r;
  Rat f = c;
  f.canonicalize();
  for (const auto& [e, q] : terms_) r.terms_.emplace(e, q * f);
  return r;
}

namespace {

// gcd of numerators / lcm of denominators, sign of the lex-leading term.
Rat rational_content(const Poly& p) {
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (num_gcd == 0) return Rat(0);
  Rat r(num_gcd, den_lcm);
  r.canonicalize();
  if (sgn(p.leading_coeff()) < 0) r = -r;
  return r;
}

Poly make_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Rat c = rational_content(p);
  return p.scaled(Rat(1) / c);
}

// Pseudo-remainder of a by b in the variable v (b has positive degree in v).
Poly pseudo_rem(const Poly& a, const Poly& b, int v) {
  int db = b.degree_in(v);
  Poly lb = b.coeff_in(v, db);
  Poly r = a;
  while (!r.is_zero()) {
    int dr = r.degree_in(v);
    if (dr < db) break;
    Poly lr = r.coeff_in(v, dr);
    Poly shift = Poly::param(v, std::max(r.arity(), b.arity())).pow(dr - db);
    r = r * lb - lr * shift * b;
  }
  return r;
}

Poly content_in(const Poly& p, int v);

Poly gcd_impl(Poly a, Poly b) {
  if (a.is_zero()) return make_primitive(b);
  if (b.is_zero()) return make_primitive(a);
  if (a.is_constant() || b.is_constant())
    return Poly(Rat(1), std::max(a.arity(), b.arity()));
  int ar = std::max(a.arity(), b.arity());
  a = a.promoted(ar);
  b = b.promoted(ar);
  int v = std::max(a.max_var(), b.max_var());
  int da = a.degree_in(v);
  int db = b.degree_in(v);
  if (da == 0 || db == 0) {
    // The v-free operand can only share the other one's v-content.
    const Poly& flat = da == 0 ? a : b;
    const Poly& tall = da == 0 ? b : a;
    return gcd_impl(flat, content_in(tall, v));
  }
  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly c = gcd_impl(ca, cb);
  Poly g = poly_divexact(a, ca);
  Poly h = poly_divexact(b, cb);
  if (g.degree_in(v) < h.degree_in(v)) std::swap(g, h);
  // Primitive PRS.
  while (true) {
    Poly r = pseudo_rem(g, h, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return make_primitive(c);
    g = h;
    Poly cr = content_in(r, v);
    h = poly_divexact(r, cr);
  }
  Poly ch = content_in(h, v);
  return make_primitive(c * poly_divexact(h, ch));
}

Poly content_in(const Poly& p, int v) {
  Poly c(Rat(0), p.arity());
  for (int k = 0; k <= p.degree_in(v); ++k) {
    Poly ck = p.coeff_in(v, k);
    if (!ck.is_zero()) c = gcd_impl(c, ck);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  int ar = std::max(a.arity(), b.arity());
  Poly aa = a.promoted(ar);
  Poly bb = b.promoted(ar);
  if (bb.is_constant())
    return aa.scaled(Rat(1) / *bb.constant_value());
  int v = bb.max_var();
  int db = bb.degree_in(v);
  Poly lb = bb.coeff_in(v, db);
  Poly q(Rat(0), ar);
  Poly r = aa;
  while (!r.is_zero()) {
    int dr = r.degree_in(v);
    if (dr < db) fail(errc::internal_error, "inexact polynomial division");
    Poly qc = poly_divexact(r.coeff_in(v, dr), lb);
    Poly t = qc * Poly::param(v, ar).pow(dr - db);
    q = q + t;
    r = r - t * bb;
  }
  return q;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat q = c;
    if (first) {
      if (sgn(q) < 0) {
        os << "-";
        q = -q;
      }
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
      if (sgn(q) < 0) q = -q;
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool coeff_shown = !has_var || q != 1;
    if (coeff_shown) os << q.get_str();
    bool need_star = coeff_shown;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      if (i < names.size())
        os << names[i];
      else
        os << "a" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "parse_error";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::param_mismatch: return "param_mismatch";
    case errc::division_by_zero: return "division_by_zero";
    case errc::domain_error: return "domain_error";
    case errc::not_invertible: return "not_invertible";
    case errc::degree_bound_exceeded: return "degree_bound_exceeded";
    case errc::unstable_truncation: return "unstable_truncation";
    case errc::verification_failure: return "verification_failure";
    case errc::bad_argument: return "bad_argument";
    case errc::internal_error: return "internal_error";
  }
  return "unknown";
}

}  // namespace wnlie
