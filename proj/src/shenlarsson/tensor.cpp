#include "shenlarsson/tensor.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "kernel/format.hpp"

namespace wnlie {

namespace {

// Group a TenVec by V-index into P-side vectors for the module actions.
std::map<int, PVec> split_v(const TenVec& w) {
  std::map<int, PVec> by_v;
  for (const auto& [k, c] : w) by_v[k.v].add(k.p, c);
  return by_v;
}

TenVec join_v(const std::map<int, PVec>& by_v) {
  TenVec out;
  for (const auto& [v, p] : by_v)
    for (const auto& [m, c] : p) out.add(TenKey{m, v}, c);
  return out;
}

TenVec apply_p_op(const TenVec& w, const std::function<PVec(const PVec&)>& op) {
  std::map<int, PVec> by_v = split_v(w);
  std::map<int, PVec> out;
  for (const auto& [v, p] : by_v) out[v] = op(p);
  return join_v(out);
}

TenVec apply_gl(const TenVec& w, const Mat& e) {
  TenVec out;
  for (const auto& [k, c] : w)
    for (int r = 0; r < e.rows(); ++r) {
      const Scalar& m = e.at(r, k.v);
      if (!m.is_zero()) out.add(TenKey{k.p, r}, c * m);
    }
  return out;
}

// One application of the generator t^m ∂_j through φ.
TenVec apply_gen(const Gen& g, const TenVec& w, const TensorModule& M) {
  const DnModule& P = *M.P;
  if (g.is_partial())
    return apply_p_op(w, [&](const PVec& p) { return P.act_d(g.j, p); });
  // t^m ∂_j ⊗ 1
  TenVec out = apply_p_op(w, [&](const PVec& p) {
    PVec q = P.act_d(g.j, p);
    for (int i = 0; i < g.m.size(); ++i)
      for (int t = 0; t < g.m[i]; ++t) q = P.act_t(i, q);
    return q;
  });
  // sum_i m_i t^{m-e_i} ⊗ E_{ij}
  for (int i = 0; i < g.m.size(); ++i) {
    if (g.m[i] == 0) continue;
    TenVec part = apply_gl(w, M.V->e(i, g.j));
    part = apply_p_op(part, [&](const PVec& p) {
      PVec q = p;
      for (int l = 0; l < g.m.size(); ++l) {
        int reps = g.m[l] - (l == i ? 1 : 0);
        for (int t = 0; t < reps; ++t) q = P.act_t(l, q);
      }
      return q;
    });
    out += part.scaled(Scalar(g.m[i]));
  }
  return out;
}

}  // namespace

TenVec tensor_action(const UElem& x, const TenVec& w, const TensorModule& M) {
  TenVec out;
  for (const auto& [mono, coeff] : x) {
    TenVec cur = w;
    // factors act right to left
    for (auto it = mono.f.rbegin(); it != mono.f.rend(); ++it) {
      const auto& [g, e] = *it;
      if (g.is_partial() && e < 0) {
        for (int t = 0; t < -e; ++t)
          cur = apply_p_op(cur, [&](const PVec& p) { return M.P->act_dinv(g.j, p); });
      } else {
        for (int t = 0; t < e; ++t) cur = apply_gen(g, cur, M);
      }
    }
    out += cur.scaled(coeff);
  }
  return out;
}

std::vector<std::vector<int>> exterior_basis(int n, int k) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return subsets;
}

TenVec pi_map(int k, const TenVec& w, const DnModule& P) {
  int n = P.n();
  if (k < 0 || k >= n) fail(errc::bad_argument, "pi index out of range");
  std::vector<std::vector<int>> dom = exterior_basis(n, k);
  std::vector<std::vector<int>> cod = exterior_basis(n, k + 1);
  std::map<std::vector<int>, int> cod_index;
  for (size_t b = 0; b < cod.size(); ++b) cod_index[cod[b]] = static_cast<int>(b);

  TenVec out;
  for (const auto& [key, c] : w) {
    if (key.v < 0 || key.v >= static_cast<int>(dom.size()))
      fail(errc::bad_argument, "input is not a Λ^k-side vector");
    const std::vector<int>& s = dom[static_cast<size_t>(key.v)];
    for (int j = 0; j < n; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      int before = static_cast<int>(
          std::lower_bound(s.begin(), s.end(), j) - s.begin());
      int sign = before % 2 == 0 ? 1 : -1;
      std::vector<int> t = s;
      t.insert(std::lower_bound(t.begin(), t.end(), j), j);
      PVec p = PVec::single(key.p, c);
      PVec dp = P.act_d(j, p);
      for (const auto& [m, cc] : dp)
        out.add(TenKey{m, cod_index.at(t)}, cc * Scalar(sign));
    }
  }
  return out;
}

namespace {

std::vector<MIndex> poly_keys_up_to(int n, long bound) {
  std::vector<MIndex> keys;
  std::vector<int> e(static_cast<size_t>(n), 0);
  std::function<void(int, long)> rec = [&](int pos, long left) {
    if (pos == n) {
      keys.push_back(MIndex(e));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    e[static_cast<size_t>(pos)] = 0;
  };
  rec(0, bound);
  std::sort(keys.begin(), keys.end(), [](const MIndex& a, const MIndex& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return keys;
}

struct Truncation {
  std::vector<TenKey> keys;
  std::map<TenKey, int> index;
  int dim = 0;
};

Truncation make_truncation(int n, int vdim, long bound) {
  Truncation t;
  for (const MIndex& m : poly_keys_up_to(n, bound))
    for (int v = 0; v < vdim; ++v) t.keys.push_back(TenKey{m, v});
  for (size_t i = 0; i < t.keys.size(); ++i) t.index[t.keys[i]] = static_cast<int>(i);
  t.dim = static_cast<int>(t.keys.size());
  return t;
}

std::vector<Scalar> coords_of(const TenVec& w, const Truncation& t) {
  std::vector<Scalar> v(static_cast<size_t>(t.dim));
  for (const auto& [k, c] : w) {
    auto it = t.index.find(k);
    if (it == t.index.end())
      fail(errc::internal_error, "vector escaped the truncation");
    v[static_cast<size_t>(it->second)] = c;
  }
  return v;
}

struct KernelData {
  int dim;
  std::vector<std::vector<Scalar>> basis;  // ambient coordinates
};

// Joint kernel of (∂_i - 1) restricted to the span of the given ambient
// vectors (the whole space when subspace is empty and full = true).
KernelData joint_whittaker_kernel(const TensorModule& M, const Truncation& t,
                                  const std::vector<std::vector<Scalar>>& subspace,
                                  bool full) {
  int n = M.n();
  std::vector<std::vector<Scalar>> cols;
  if (full) {
    cols.reserve(static_cast<size_t>(t.dim));
    for (const TenKey& k : t.keys) {
      std::vector<Scalar> v(static_cast<size_t>(t.dim));
      v[static_cast<size_t>(t.index.at(k))] = Scalar(1);
      cols.push_back(std::move(v));
    }
  } else {
    cols = subspace;
  }
  int w = static_cast<int>(cols.size());
  Mat stacked(n * t.dim, w);
  for (int c = 0; c < w; ++c) {
    TenVec vec;
    for (int r = 0; r < t.dim; ++r)
      if (!cols[static_cast<size_t>(c)][static_cast<size_t>(r)].is_zero())
        vec.add(t.keys[static_cast<size_t>(r)], cols[static_cast<size_t>(c)][static_cast<size_t>(r)]);
    for (int i = 0; i < n; ++i) {
      TenVec img = tensor_action(u_gen(gen_partial(n, i)), vec, M) - vec;
      std::vector<Scalar> iv = coords_of(img, t);
      for (int r = 0; r < t.dim; ++r) stacked.at(i * t.dim + r, c) = iv[static_cast<size_t>(r)];
    }
  }
  KernelData out;
  auto ns = nullspace(stacked);
  out.dim = static_cast<int>(ns.size());
  for (const auto& x : ns) {
    std::vector<Scalar> amb(static_cast<size_t>(t.dim));
    for (int c = 0; c < w; ++c) {
      if (x[static_cast<size_t>(c)].is_zero()) continue;
      for (int r = 0; r < t.dim; ++r)
        amb[static_cast<size_t>(r)] += x[static_cast<size_t>(c)] * cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
    }
    out.basis.push_back(std::move(amb));
  }
  return out;
}

KernelData whittaker_at_bound(const WhittakerModuleDesc& desc, int n, long bound,
                              TensorModule& M_out, Truncation& t_out, int& ext_k) {
  std::vector<Scalar> ones(static_cast<size_t>(n), Scalar(1));
  auto P = std::make_shared<TwistedPolyModule>(ones);
  if (desc.kind == WhittakerModuleDesc::Kind::tensor) {
    TensorModule M{P, desc.V};
    Truncation t = make_truncation(n, desc.V->dim, bound);
    M_out = M;
    t_out = t;
    ext_k = -1;
    return joint_whittaker_kernel(M, t, {}, true);
  }
  int k = desc.k;
  auto dom_V = std::make_shared<GlRep>(exterior_power(n, k));
  auto cod_V = std::make_shared<GlRep>(exterior_power(n, k + 1));
  TensorModule Mdom{P, dom_V};
  TensorModule Mcod{P, cod_V};
  Truncation tdom = make_truncation(n, dom_V->dim, bound);
  Truncation tcod = make_truncation(n, cod_V->dim, bound);

  if (desc.kind == WhittakerModuleDesc::Kind::im_pi) {
    SpanBuilder span(tcod.dim);
    std::vector<std::vector<Scalar>> image;
    for (const TenKey& key : tdom.keys) {
      TenVec img = pi_map(k, TenVec::single(key), *P);
      std::vector<Scalar> v = coords_of(img, tcod);
      if (span.insert(v)) image.push_back(std::move(v));
    }
    M_out = Mcod;
    t_out = tcod;
    ext_k = k + 1;
    return joint_whittaker_kernel(Mcod, tcod, image, false);
  }

  // kernel of pi_k inside T(A^1, Λ^k)
  Mat pim(tcod.dim, tdom.dim);
  for (int c = 0; c < tdom.dim; ++c) {
    TenVec img = pi_map(k, TenVec::single(tdom.keys[static_cast<size_t>(c)]), *P);
    std::vector<Scalar> v = coords_of(img, tcod);
    for (int r = 0; r < tcod.dim; ++r) pim.at(r, c) = v[static_cast<size_t>(r)];
  }
  auto ker = nullspace(pim);
  M_out = Mdom;
  t_out = tdom;
  ext_k = k;
  return joint_whittaker_kernel(Mdom, tdom, ker, false);
}

}  // namespace

WhittakerResult whittaker_space(const WhittakerModuleDesc& desc, int n, long bound) {
  if (bound < 1) fail(errc::bad_argument, "truncation bound must be >= 1");
  TensorModule M;
  Truncation t;
  int ext_k = -1;
  KernelData prev = whittaker_at_bound(desc, n, bound - 1, M, t, ext_k);
  KernelData cur = whittaker_at_bound(desc, n, bound, M, t, ext_k);
  WhittakerResult res;
  res.dim = cur.dim;
  res.stable = prev.dim == cur.dim;
  res.bound = bound;
  res.ambient_exterior_k = ext_k;
  for (const auto& amb : cur.basis) {
    TenVec v;
    for (int r = 0; r < t.dim; ++r)
      if (!amb[static_cast<size_t>(r)].is_zero())
        v.add(t.keys[static_cast<size_t>(r)], amb[static_cast<size_t>(r)]);
    res.basis.push_back(std::move(v));
  }
  return res;
}

std::string tenvec_str(const TenVec& w, const std::vector<std::string>& params,
                       const std::vector<Scalar>* mu) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : w) {
    PVec p = PVec::single(k.p);
    std::string ps = pvec_str(p, params, mu);
    std::string basis = (ps == "1" ? "1" : ps) + "(x)e" + std::to_string(k.v + 1);
    append_term(os, first, c, basis, params);
    first = false;
  }
  return os.str();
}

}  // namespace wnlie
