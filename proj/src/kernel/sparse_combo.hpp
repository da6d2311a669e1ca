#pragma once

#include <map>

#include "kernel/scalar.hpp"

namespace wnlie {

/// Sparse K-linear combination of basis keys. Zero coefficients are never
/// stored, so equality of the underlying maps is equality of elements.
template <typename B, typename Less = std::less<B>>
class SparseCombo {
 public:
  using Map = std::map<B, Scalar, Less>;

  SparseCombo() = default;
  static SparseCombo single(const B& key, const Scalar& c = Scalar(1)) {
    SparseCombo s;
    s.add(key, c);
    return s;
  }

  void add(const B& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  SparseCombo operator+(const SparseCombo& o) const {
    SparseCombo r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
  }
  SparseCombo operator-(const SparseCombo& o) const {
    SparseCombo r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
  }
  SparseCombo operator-() const {
    SparseCombo r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  SparseCombo scaled(const Scalar& s) const {
    SparseCombo r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) {
      Scalar v = c * s;
      if (!v.is_zero()) r.terms_.emplace(k, v);
    }
    return r;
  }
  SparseCombo& operator+=(const SparseCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  SparseCombo& operator-=(const SparseCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar coeff(const B& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool operator==(const SparseCombo& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
      Less less;
      if (less(it->first, jt->first) || less(jt->first, it->first)) return false;
      if (!(it->second == jt->second)) return false;
    }
    return true;
  }
  bool operator!=(const SparseCombo& o) const { return !(*this == o); }

  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  Map terms_;
};

}  // namespace wnlie
