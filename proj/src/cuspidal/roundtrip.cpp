#include "cuspidal/roundtrip.hpp"

#include <algorithm>
#include <functional>

namespace wnlie {

namespace {

// The Whittaker-side induced module G(V) = U(h_n) ⊗ V, truncated at h-degree
// <= bound. Keys reuse TenKey with p holding the h exponents. Generators act
// through their B_n ⊗ H_n coordinates: ∂^s by the substitution h_k -> h_k+s_k
// (∂_k acts by 1 on V), h^c by left multiplication, X parts by the HRep.
class GVModel {
 public:
  GVModel(std::shared_ptr<HRep> rho, XCache& cache, long bound)
      : rho_(std::move(rho)), cache_(&cache), bound_(bound) {}

  int n() const { return rho_->n(); }
  int vdim() const { return rho_->dim(); }
  long bound() const { return bound_; }

  TenVec act_triple(const BHTriple& t, const TenVec& w) const {
    TenVec out;
    for (const auto& [key, c] : w) {
      // ∂^s: substitute h_k -> h_k + s_k
      SparseCombo<MIndex> keys = SparseCombo<MIndex>::single(key.p, c);
      for (int k = 0; k < n(); ++k) {
        long s = t.d_exps[k];
        if (s == 0) continue;
        SparseCombo<MIndex> next;
        for (const auto& [a, ca] : keys) {
          long ak = a[k];
          Rat binom(1);
          Scalar spow(1);
          // (h_k + s)^{ak} = sum_t C(ak,t) s^{ak-t} h_k^t, highest first
          for (long tt = ak; tt >= 0; --tt) {
            MIndex a2 = a;
            a2[k] = static_cast<int>(tt);
            next.add(a2, ca * Scalar(binom) * spow);
            binom = binom * Rat(tt) / Rat(ak - tt + 1);
            spow = spow * Scalar(s);
          }
        }
        keys = next;
      }
      // h^c: left multiplication
      for (const auto& [a, ca] : keys) {
        MIndex a2 = a.plus(t.h_exps);
        if (a2.total() > bound_)
          fail(errc::unstable_truncation, "G(V) truncation bound too small");
        // X part on the V side
        std::vector<Scalar> vec(static_cast<size_t>(vdim()));
        vec[static_cast<size_t>(key.v)] = ca;
        for (auto it = t.x_part.rbegin(); it != t.x_part.rend(); ++it) {
          const Mat& xm = rho_->x_matrix(it->first.first, it->first.second, *cache_);
          for (int e = 0; e < it->second; ++e) vec = xm.apply(vec);
        }
        for (int b = 0; b < vdim(); ++b)
          if (!vec[static_cast<size_t>(b)].is_zero()) out.add(TenKey{a2, b}, vec[static_cast<size_t>(b)]);
      }
    }
    return out;
  }

  TenVec act_gen(const Gen& g, int exp, const TenVec& w) const {
    UElem u = u_gen(g, exp);
    BHDecomposition d = decompose_BH(u, u_degree(u) + 2, cache_->provider(), n());
    TenVec out;
    for (const auto& [t, c] : d.terms) out += act_triple(t, w).scaled(c);
    return out;
  }

  TenVec act_word(const std::vector<std::pair<Gen, int>>& word, const TenVec& w) const {
    TenVec cur = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const auto& [g, e] = *it;
      if (g.is_partial())
        cur = act_gen(g, e, cur);
      else
        for (int t = 0; t < e; ++t) cur = act_gen(g, 1, cur);
    }
    return cur;
  }

 private:
  std::shared_ptr<HRep> rho_;
  XCache* cache_;
  long bound_;
};

// Defining words of the z generators, as (coefficient, factor word) pairs.
std::vector<std::pair<Scalar, std::vector<std::pair<Gen, int>>>> z_words(const ZGen& z, int n) {
  using W = std::vector<std::pair<Gen, int>>;
  auto td = [&](int i, int j) { return Gen{MIndex::unit(n, i), j}; };
  auto ttd = [&](int i, int l, int j) { return Gen{MIndex::unit(n, i).plus_unit(l), j}; };
  auto dd = [&](int i) { return gen_partial(n, i); };
  auto h = [&](int i) { return gen_h(n, i); };
  std::vector<std::pair<Scalar, W>> out;
  if (z.kind == ZGen::Kind::zij) {
    int i = z.i, j = z.j;
    out.push_back({Scalar(1), W{{td(i, j), 1}, {dd(i), 1}, {dd(j), -1}}});
    out.push_back({Scalar(-1), W{{h(i), 1}}});
  } else if (z.kind == ZGen::Kind::zilj) {
    int i = z.i, l = z.l, j = z.j;
    out.push_back({Scalar(1), W{{ttd(i, l, j), 1}, {dd(i), 1}, {dd(l), 1}, {dd(j), -1}}});
    out.push_back({Scalar(-1), W{{td(i, j), 1}, {dd(i), 1}, {dd(j), -1}, {h(l), 1}}});
    out.push_back({Scalar(-1), W{{td(l, j), 1}, {dd(l), 1}, {dd(j), -1}, {h(i), 1}}});
    out.push_back({Scalar(1), W{{h(l), 1}, {h(i), 1}}});
    if (i == l) out.push_back({Scalar(1), W{{td(i, l), 1}}});
  } else {
    int i = z.i;
    Gen t3{MIndex::unit(n, i).plus_unit(i, 2), i};
    Gen t2{MIndex::unit(n, i).plus_unit(i), i};
    // (t^3 d) d^2 - 3 (t^2 d)(h - 1) d + 2 h(h-1)(h-2)
    out.push_back({Scalar(1), W{{t3, 1}, {dd(i), 2}}});
    out.push_back({Scalar(-3), W{{t2, 1}, {h(i), 1}, {dd(i), 1}}});
    out.push_back({Scalar(3), W{{t2, 1}, {dd(i), 1}}});
    out.push_back({Scalar(2), W{{h(i), 3}}});
    out.push_back({Scalar(-6), W{{h(i), 2}}});
    out.push_back({Scalar(4), W{{h(i), 1}}});
  }
  return out;
}

std::vector<ZGen> all_z(int n) {
  std::vector<ZGen> zs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      zs.push_back(make_z_ij(n, i, j));
      for (int l = 0; l < n; ++l) zs.push_back(make_z_ilj(n, i, l, j));
    }
    zs.push_back(make_z_i(n, i));
  }
  return zs;
}

}  // namespace

RoundtripReport roundtrip_F_G(std::shared_ptr<HRep> rho, const std::vector<Scalar>& alpha,
                              int radius, long bound, XCache& cache) {
  RoundtripReport rep;
  int n = rho->n();
  int d = rho->dim();
  // The z defining words raise the h-degree by up to 3 in intermediates.
  GVModel gv(rho, cache, std::max(bound, 4L));

  // --- F(G(V)) = V: the Whittaker space of U(h_n) ⊗ V.
  std::vector<TenKey> keys;
  {
    std::vector<int> e(static_cast<size_t>(n), 0);
    std::function<void(int, long)> rec = [&](int pos, long left) {
      if (pos == n) {
        for (int b = 0; b < d; ++b) keys.push_back(TenKey{MIndex(e), b});
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[static_cast<size_t>(pos)] = v;
        rec(pos + 1, left - v);
      }
      e[static_cast<size_t>(pos)] = 0;
    };
    rec(0, bound);
  }
  std::map<TenKey, int> index;
  for (size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);
  int dim = static_cast<int>(keys.size());

  Mat stacked(n * dim, dim);
  for (int c = 0; c < dim; ++c) {
    TenVec v = TenVec::single(keys[static_cast<size_t>(c)]);
    for (int i = 0; i < n; ++i) {
      TenVec img = gv.act_gen(gen_partial(n, i), 1, v) - v;
      for (const auto& [k, cc] : img) stacked.at(i * dim + index.at(k), c) = cc;
    }
  }
  auto kernel = nullspace(stacked);
  rep.fg_kernel_ok = static_cast<int>(kernel.size()) == d;
  if (rep.fg_kernel_ok) {
    SpanBuilder vspan(d);
    for (const auto& kv : kernel) {
      for (int c = 0; c < dim; ++c) {
        if (kv[static_cast<size_t>(c)].is_zero()) continue;
        if (!keys[static_cast<size_t>(c)].p.is_zero()) {
          rep.fg_kernel_ok = false;
          rep.detail = "Whittaker vector of G(V) not supported on 1 ⊗ V";
        }
      }
      if (!rep.fg_kernel_ok) break;
      std::vector<Scalar> vcomp(static_cast<size_t>(d));
      for (int b = 0; b < d; ++b) vcomp[static_cast<size_t>(b)] = kv[static_cast<size_t>(index.at(TenKey{MIndex(n), b}))];
      vspan.insert(vcomp);
    }
    if (rep.fg_kernel_ok && vspan.rank() != d) {
      rep.fg_kernel_ok = false;
      rep.detail = "wh_1(G(V)) does not span 1 ⊗ V";
    }
  } else {
    rep.detail = "dim wh_1(G(V)) = " + std::to_string(kernel.size()) +
                 ", expected " + std::to_string(d);
  }

  // --- the H_n matrices agree on 1 ⊗ V, via the defining words.
  rep.fg_matrices_ok = true;
  for (const ZGen& z : all_z(n)) {
    const Mat& zm = rho->z_matrix(z);
    for (int b = 0; b < d && rep.fg_matrices_ok; ++b) {
      TenVec in = TenVec::single(TenKey{MIndex(n), b});
      TenVec got;
      for (const auto& [c, word] : z_words(z, n)) got += gv.act_word(word, in).scaled(c);
      TenVec want;
      for (int r = 0; r < d; ++r)
        if (!zm.at(r, b).is_zero()) want.add(TenKey{MIndex(n), r}, zm.at(r, b));
      if (got != want) {
        rep.fg_matrices_ok = false;
        rep.detail = "G(V) action of " + z.name() + " disagrees with the HRep matrix";
      }
    }
  }

  // --- F_1(G_1(V)) = V: the α slice of the weight window, through the
  // closed window operator families.
  WeightWindow win(rho, alpha, radius, cache);
  rep.f1g1_ok = true;
  for (int i = 0; i < n && rep.f1g1_ok; ++i)
    for (int j = 0; j < n && rep.f1g1_ok; ++j) {
      for (int b = 0; b < d && rep.f1g1_ok; ++b) {
        WinVec v0 = WinVec::single(WinKey{MIndex(n), b});
        // z_{i,j} = (t_i ∂_j) ∂_i ∂_j^{-1} - h_i
        WinVec got = win.act_td(i, j, win.act_d(i, 1, win.act_d(j, -1, v0))) -
                     win.act_h(i, v0);
        WinVec want;
        const Mat& zm = rho->z_ij(i, j);
        for (int r = 0; r < d; ++r)
          if (!zm.at(r, b).is_zero()) want.add(WinKey{MIndex(n), r}, zm.at(r, b));
        if (got != want) {
          rep.f1g1_ok = false;
          rep.detail = "window composite for z[" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + "] disagrees";
        }
        // z_{i,j,j} = (t_i t_j ∂_j) ∂_i + δ_ij (t_i ∂_j) - (t_i ∂_j) ∂_i ∂_j^{-1} h_j
        WinVec got2 = win.act_ttd(i, j, win.act_d(i, 1, v0)) -
                      win.act_td(i, j, win.act_d(i, 1, win.act_d(j, -1, win.act_h(j, v0))));
        if (i == j) got2 += win.act_td(i, j, v0);
        WinVec want2;
        const Mat& zm2 = rho->z_ilj(i, j, j);
        for (int r = 0; r < d; ++r)
          if (!zm2.at(r, b).is_zero()) want2.add(WinKey{MIndex(n), r}, zm2.at(r, b));
        if (got2 != want2) {
          rep.f1g1_ok = false;
          rep.detail = "window composite for z[" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + "," + std::to_string(j + 1) + "] disagrees";
        }
      }
    }

  // --- support: every window weight lies in α + Z^n.
  rep.support_ok = true;
  for (const MIndex& r : win.slices(radius)) {
    std::vector<Scalar> w = win.slice_weight(r);
    for (int i = 0; i < n; ++i)
      if (!is_integer_constant(w[static_cast<size_t>(i)] - alpha[static_cast<size_t>(i)]))
        rep.support_ok = false;
  }
  return rep;
}

}  // namespace wnlie
