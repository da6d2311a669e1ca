#include "cuspidal/window.hpp"

#include <functional>

namespace wnlie {

WeightWindow::WeightWindow(std::shared_ptr<HRep> rho, std::vector<Scalar> alpha,
                           int radius, XCache& cache)
    : rho_(std::move(rho)), alpha_(std::move(alpha)), radius_(radius), cache_(&cache) {
  if (static_cast<int>(alpha_.size()) != rho_->n())
    fail(errc::dimension_mismatch, "alpha length mismatch");
  if (radius_ < 1) fail(errc::bad_argument, "window radius must be >= 1");
}

bool WeightWindow::in_window(const MIndex& r) const {
  for (int i = 0; i < r.size(); ++i)
    if (r[i] < -radius_ || r[i] > radius_) return false;
  return true;
}

std::vector<MIndex> WeightWindow::slices(int radius) const {
  std::vector<MIndex> out;
  std::vector<int> e(static_cast<size_t>(n()), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n()) {
      out.push_back(MIndex(e));
      return;
    }
    for (int v = -radius; v <= radius; ++v) {
      e[static_cast<size_t>(pos)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Scalar> WeightWindow::slice_weight(const MIndex& r) const {
  std::vector<Scalar> w(static_cast<size_t>(n()));
  for (int i = 0; i < n(); ++i) w[static_cast<size_t>(i)] = alpha_[static_cast<size_t>(i)] - Scalar(r[i]);
  return w;
}

WinVec WeightWindow::act_h(int k, const WinVec& w) const {
  WinVec out;
  for (const auto& [key, c] : w)
    out.add(key, c * (alpha_[static_cast<size_t>(k)] - Scalar(key.r[k])));
  return out;
}

WinVec WeightWindow::act_d(int k, int exp, const WinVec& w) const {
  WinVec out;
  for (const auto& [key, c] : w) out.add(WinKey{key.r.plus_unit(k, exp), key.v}, c);
  return out;
}

WinVec WeightWindow::act_td(int i, int j, const WinVec& w) const {
  WinVec out;
  for (const auto& [key, c] : w) {
    MIndex r2 = key.r.plus_unit(j).plus_unit(i, -1);
    Scalar shift = alpha_[static_cast<size_t>(i)] - Scalar(key.r[i]) + Scalar(1) -
                   Scalar(i == j ? 1 : 0);
    const Mat& z = rho_->z_ij(i, j);
    for (int t = 0; t < z.rows(); ++t) {
      Scalar e = z.at(t, key.v) + (t == key.v ? shift : Scalar(0));
      if (!e.is_zero()) out.add(WinKey{r2, t}, c * e);
    }
  }
  return out;
}

WinVec WeightWindow::act_ttd(int i, int j, const WinVec& w) const {
  WinVec out;
  for (const auto& [key, c] : w) {
    MIndex r2 = key.r.plus_unit(i, -1);
    Scalar aj = alpha_[static_cast<size_t>(j)] - Scalar(key.r[j]);
    Scalar ai1 = alpha_[static_cast<size_t>(i)] - Scalar(key.r[i]) + Scalar(1);
    const Mat& zjj = rho_->z_ilj(i, j, j);
    const Mat& zij = rho_->z_ij(i, j);
    for (int t = 0; t < zjj.rows(); ++t) {
      Scalar e = zjj.at(t, key.v) + aj * zij.at(t, key.v) +
                 (t == key.v ? aj * ai1 : Scalar(0));
      if (!e.is_zero()) out.add(WinKey{r2, t}, c * e);
    }
  }
  return out;
}

Mat WeightWindow::slice_td(int i, int j, const MIndex& r) const {
  Scalar shift = alpha_[static_cast<size_t>(i)] - Scalar(r[i]) + Scalar(1) -
                 Scalar(i == j ? 1 : 0);
  return rho_->z_ij(i, j) + Mat::identity(rho_->dim()).scaled(shift);
}

Mat WeightWindow::slice_tEn(int i, const MIndex& r) const {
  Mat m(rho_->dim(), rho_->dim());
  Scalar ai1 = alpha_[static_cast<size_t>(i)] - Scalar(r[i]) + Scalar(1);
  for (int j = 0; j < n(); ++j) {
    Scalar aj = alpha_[static_cast<size_t>(j)] - Scalar(r[j]);
    m = m + rho_->z_ilj(i, j, j) + rho_->z_ij(i, j).scaled(aj) +
        Mat::identity(rho_->dim()).scaled(aj * ai1);
  }
  return m;
}

WinVec WeightWindow::act_elem(const UElem& u, const WinVec& w) const {
  long bound = u_degree(u) + 2;
  BHDecomposition d = decompose_BH(u, bound, cache_->provider(), n());
  WinVec out;
  for (const auto& [t, c] : d.terms) {
    for (const auto& [key, cw] : w) {
      MIndex r2 = key.r;
      for (int k = 0; k < n(); ++k) r2[k] += t.d_exps[k];
      Scalar f = c * cw;
      for (int k = 0; k < n(); ++k)
        for (int e = 0; e < t.h_exps[k]; ++e)
          f = f * (alpha_[static_cast<size_t>(k)] - Scalar(r2[k]));
      if (f.is_zero()) continue;
      std::vector<Scalar> vec(static_cast<size_t>(rho_->dim()));
      vec[static_cast<size_t>(key.v)] = f;
      for (auto it = t.x_part.rbegin(); it != t.x_part.rend(); ++it) {
        const Mat& xm = rho_->x_matrix(it->first.first, it->first.second, *cache_);
        for (int e = 0; e < it->second; ++e) vec = xm.apply(vec);
      }
      for (int b = 0; b < rho_->dim(); ++b)
        if (!vec[static_cast<size_t>(b)].is_zero()) out.add(WinKey{r2, b}, vec[static_cast<size_t>(b)]);
    }
  }
  return out;
}

CuspidalityReport cuspidality_check(const WeightWindow& win, int scan_radius) {
  CuspidalityReport rep;
  int n = win.n();
  rep.alpha_symbolic = false;
  for (const Scalar& a : win.alpha())
    if (!a.as_rational()) rep.alpha_symbolic = true;

  bool all_nonzero = true;
  auto record = [&](const std::string& op, const MIndex& r, const Scalar& d) {
    bool zero = d.is_zero();
    if (zero) all_nonzero = false;
    rep.dets.push_back(SliceDet{op, r, d, zero});
  };
  for (const MIndex& r : win.slices(win.radius())) {
    for (int i = 0; i < n; ++i) {
      record("d" + std::to_string(i + 1), r, Scalar(1));  // slice shift, identity
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        record("t" + std::to_string(i + 1) + "*d" + std::to_string(j + 1), r,
               det(win.slice_td(i, j, r)));
      }
      record("t" + std::to_string(i + 1) + "*E", r, det(win.slice_tEn(i, r)));
    }
  }
  rep.cuspidal_on_window = all_nonzero;

  if (rep.alpha_symbolic && scan_radius >= 0) {
    std::vector<long> a(static_cast<size_t>(n), 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        std::vector<Scalar> alpha_c;
        for (long v : a) alpha_c.push_back(Scalar(v));
        // re-evaluate the root-vector determinants at the integer alpha
        WeightWindow spec(win.rho_ptr(), alpha_c, win.radius(), win.cache());
        for (const MIndex& r : spec.slices(spec.radius())) {
          for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
              if (i == j) continue;
              if (det(spec.slice_td(i, j, r)).is_zero())
                rep.vanishing_specializations.push_back(
                    {"t" + std::to_string(i + 1) + "*d" + std::to_string(j + 1), r, a});
            }
            if (det(spec.slice_tEn(i, r)).is_zero())
              rep.vanishing_specializations.push_back({"t" + std::to_string(i + 1) + "*E", r, a});
          }
        }
        return;
      }
      for (long v = -scan_radius; v <= scan_radius; ++v) {
        a[static_cast<size_t>(pos)] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  return rep;
}

}  // namespace wnlie
