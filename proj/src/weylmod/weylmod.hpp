#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kernel/mindex.hpp"
#include "kernel/sparse_combo.hpp"

namespace wnlie {

/// Sparse vector in a monomial-indexed D_n-module (keys t^m, or t^{mu+m}).
using PVec = SparseCombo<MIndex>;

/// A simple weight-free D_n-module presented through the action of the Weyl
/// generators on exponent keys. The twist data lives in the module; the
/// operators themselves stay abstract.
class DnModule {
 public:
  virtual ~DnModule() = default;
  virtual int n() const = 0;
  virtual PVec act_t(int i, const PVec& v) const = 0;
  virtual PVec act_d(int i, const PVec& v) const = 0;
  virtual PVec act_dinv(int i, const PVec& v) const = 0;
  virtual bool nonneg_keys() const = 0;
  virtual std::string describe() const = 0;
};

/// A_n^a: the polynomial module twisted by ∂_i -> ∂_i + a_i. For nonzero a_i
/// the twisted ∂_i is invertible through the finite Neumann series
/// (∂_i + a_i)^{-1} = sum_k (-1)^k a_i^{-(k+1)} ∂_i^k.
class TwistedPolyModule : public DnModule {
 public:
  TwistedPolyModule(std::vector<Scalar> a);
  int n() const override { return static_cast<int>(a_.size()); }
  PVec act_t(int i, const PVec& v) const override;
  PVec act_d(int i, const PVec& v) const override;
  PVec act_dinv(int i, const PVec& v) const override;
  bool nonneg_keys() const override { return true; }
  std::string describe() const override;
  const std::vector<Scalar>& twist() const { return a_; }

 private:
  std::vector<Scalar> a_;
};

/// P(mu) = t^mu C[t_1^{±1},...,t_n^{±1}]: keys are the m of t^{mu+m}.
class TwistedLaurentModule : public DnModule {
 public:
  TwistedLaurentModule(std::vector<Scalar> mu);
  int n() const override { return static_cast<int>(mu_.size()); }
  PVec act_t(int i, const PVec& v) const override;
  PVec act_d(int i, const PVec& v) const override;
  PVec act_dinv(int i, const PVec& v) const override;
  bool nonneg_keys() const override { return false; }
  std::string describe() const override;
  const std::vector<Scalar>& mu() const { return mu_; }

 private:
  std::vector<Scalar> mu_;
};

struct SimplicityVerdict {
  bool generically_simple = false;
  int bad_index = -1;       // coordinate with integral mu_i (when not simple)
  MIndex witness_key;       // exponent m with mu_i + m_i = 0: ∂_i kills t^{mu+m}
  std::string detail;
};

/// P(mu) is simple iff no mu_i is an integer; otherwise exhibits the exponent
/// annihilated by ∂_i.
SimplicityVerdict is_simple_witness(const TwistedLaurentModule& p);

std::string pvec_str(const PVec& v, const std::vector<std::string>& params = {},
                     const std::vector<Scalar>* mu = nullptr);

}  // namespace wnlie
