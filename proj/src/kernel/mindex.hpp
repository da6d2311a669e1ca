#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "kernel/errors.hpp"

namespace wnlie {

/// An n-tuple of integer exponents (the m of t^m). Contexts that require
/// nonnegative entries check with nonneg().
class MIndex {
 public:
  MIndex() = default;
  explicit MIndex(int n) : e_(static_cast<size_t>(n), 0) {}
  explicit MIndex(std::vector<int> e) : e_(std::move(e)) {}

  static MIndex unit(int n, int i) {
    MIndex m(n);
    m.e_[static_cast<size_t>(i)] = 1;
    return m;
  }

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }

  /// |m| = sum of the entries.
  long total() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }
  bool nonneg() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
  }

  MIndex plus(const MIndex& o) const {
    check(o);
    MIndex r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  MIndex minus(const MIndex& o) const {
    check(o);
    MIndex r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  MIndex plus_unit(int i, int k = 1) const {
    MIndex r = *this;
    r.e_[static_cast<size_t>(i)] += k;
    return r;
  }

  bool operator==(const MIndex& o) const { return e_ == o.e_; }
  bool operator!=(const MIndex& o) const { return e_ != o.e_; }
  bool operator<(const MIndex& o) const { return e_ < o.e_; }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
    os << ")";
    return os.str();
  }

 private:
  void check(const MIndex& o) const {
    if (e_.size() != o.e_.size())
      fail(errc::dimension_mismatch, "multi-index dimension mismatch");
  }

  std::vector<int> e_;
};

}  // namespace wnlie
