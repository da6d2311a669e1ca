#include "weylmod/weylmod.hpp"

#include <sstream>

#include "kernel/format.hpp"

namespace wnlie {

TwistedPolyModule::TwistedPolyModule(std::vector<Scalar> a) : a_(std::move(a)) {}

PVec TwistedPolyModule::act_t(int i, const PVec& v) const {
  PVec r;
  for (const auto& [m, c] : v) r.add(m.plus_unit(i), c);
  return r;
}

PVec TwistedPolyModule::act_d(int i, const PVec& v) const {
  PVec r;
  const Scalar& a = a_[static_cast<size_t>(i)];
  for (const auto& [m, c] : v) {
    if (m[i] > 0) r.add(m.plus_unit(i, -1), c * Scalar(m[i]));
    if (!a.is_zero()) r.add(m, c * a);
  }
  return r;
}

PVec TwistedPolyModule::act_dinv(int i, const PVec& v) const {
  const Scalar& a = a_[static_cast<size_t>(i)];
  if (a.is_zero())
    fail(errc::not_invertible, "∂_" + std::to_string(i + 1) + " is not invertible on A_n^a with a_i = 0");
  // (∂_i + a_i)^{-1} via the finite Neumann series; ∂_i is nilpotent on
  // each polynomial.
  PVec r;
  PVec term = v;
  Scalar coeff = a.inv();
  int guard = 0;
  while (!term.is_zero()) {
    r += term.scaled(coeff);
    PVec next;
    for (const auto& [m, c] : term)
      if (m[i] > 0) next.add(m.plus_unit(i, -1), c * Scalar(m[i]));
    term = next;
    coeff = -coeff * a.inv();
    if (++guard > 10000) fail(errc::internal_error, "Neumann series failed to terminate");
  }
  return r;
}

std::string TwistedPolyModule::describe() const {
  std::ostringstream os;
  os << "A^a with a = (";
  for (size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i].str();
  os << ")";
  return os.str();
}

TwistedLaurentModule::TwistedLaurentModule(std::vector<Scalar> mu) : mu_(std::move(mu)) {}

PVec TwistedLaurentModule::act_t(int i, const PVec& v) const {
  PVec r;
  for (const auto& [m, c] : v) r.add(m.plus_unit(i), c);
  return r;
}

PVec TwistedLaurentModule::act_d(int i, const PVec& v) const {
  PVec r;
  for (const auto& [m, c] : v)
    r.add(m.plus_unit(i, -1), c * (mu_[static_cast<size_t>(i)] + Scalar(m[i])));
  return r;
}

PVec TwistedLaurentModule::act_dinv(int i, const PVec& v) const {
  PVec r;
  for (const auto& [m, c] : v) {
    Scalar f = mu_[static_cast<size_t>(i)] + Scalar(m[i] + 1);
    if (f.is_zero())
      fail(errc::not_invertible,
           "∂_" + std::to_string(i + 1) + " is not invertible on P(mu): mu_i + m_i + 1 = 0 at m = " +
               m.str());
    r.add(m.plus_unit(i), c / f);
  }
  return r;
}

std::string TwistedLaurentModule::describe() const {
  std::ostringstream os;
  os << "P(mu) with mu = (";
  for (size_t i = 0; i < mu_.size(); ++i) os << (i ? "," : "") << mu_[i].str();
  os << ")";
  return os.str();
}

SimplicityVerdict is_simple_witness(const TwistedLaurentModule& p) {
  SimplicityVerdict v;
  const auto& mu = p.mu();
  for (size_t i = 0; i < mu.size(); ++i) {
    auto c = is_integer_constant(mu[i]);
    if (!c) continue;
    v.generically_simple = false;
    v.bad_index = static_cast<int>(i);
    MIndex m(p.n());
    m[static_cast<int>(i)] = static_cast<int>(-*c);
    v.witness_key = m;
    v.detail = "mu_" + std::to_string(i + 1) + " = " + std::to_string(*c) +
               " is an integer; ∂_" + std::to_string(i + 1) + " annihilates t^(mu+m) at m = " +
               m.str();
    return v;
  }
  v.generically_simple = true;
  v.detail = "every mu_i is non-integral; P(mu) is simple";
  return v;
}

std::string pvec_str(const PVec& v, const std::vector<std::string>& params,
                     const std::vector<Scalar>* mu) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    const auto& m = it->first;
    const auto& c = it->second;
    std::ostringstream key;
    bool any = false;
    for (int i = 0; i < m.size(); ++i) {
      std::string e;
      if (mu) {
        Scalar exp = (*mu)[static_cast<size_t>(i)] + Scalar(m[i]);
        if (exp.is_zero()) continue;
        e = exp.str(params);
      } else {
        if (m[i] == 0) continue;
        e = std::to_string(m[i]);
      }
      if (any) key << "*";
      any = true;
      key << "t" << (i + 1);
      if (e != "1") key << "^" << (e.find_first_of("+-*/ ") == std::string::npos ? e : "(" + e + ")");
    }
    append_term(os, first, c, key.str(), params);
    first = false;
  }
  return os.str();
}

}  // namespace wnlie
