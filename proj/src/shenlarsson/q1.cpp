#include "shenlarsson/q1.hpp"

#include <functional>

#include "kernel/linalg.hpp"

namespace wnlie {

Q1Vec q1_vacuum() { return Q1Vec::single(PBWMonomial{}); }

namespace {

Q1Vec absorb_partials(const UElem& u) {
  Q1Vec out;
  for (const auto& [mono, c] : u) {
    PBWMonomial stripped;
    for (const auto& [g, e] : mono.f)
      if (!g.is_partial()) stripped.f.push_back({g, e});
    out.add(stripped, c);
  }
  return out;
}

}  // namespace

Q1Vec q1_action(const UElem& x, const Q1Vec& w, int n) {
  (void)n;
  UElem wu;
  for (const auto& [mono, c] : w) wu.add(mono, c);
  return absorb_partials(mul(x, wu));
}

bool q1_is_whittaker(const Q1Vec& v, int n) {
  for (int i = 0; i < n; ++i)
    if (q1_action(u_gen(gen_partial(n, i)), v, n) != v) return false;
  return true;
}

Q1Vec theta_of(const UElem& x, int n) {
  CentralizerCheck c = centralizes(x, n);
  if (!c.ok)
    fail(errc::domain_error, "theta_of requires an H_n element; the argument fails against " + c.against);
  Q1Vec img = q1_action(x, q1_vacuum(), n);
  if (!q1_is_whittaker(img, n))
    fail(errc::verification_failure, "Theta image of an H_n element is not a Whittaker vector");
  return img;
}

long q1_degree(const Q1Vec& v) {
  long d = 0;
  for (const auto& [m, c] : v) d = std::max(d, m.degree());
  return d;
}

long q1_weight(const Q1Vec& v) {
  long w = 0;
  for (const auto& [m, c] : v) {
    long mw = 0;
    for (const auto& [g, e] : m.f) mw += e * (g.degree() - 1);
    w = std::max(w, mw);
  }
  return w;
}

namespace {

// PBW monomials in the |m| >= 1 generators with degree <= bound.
std::vector<PBWMonomial> q1_basis(int n, long bound) {
  std::vector<Gen> gens;
  std::vector<int> e(static_cast<size_t>(n), 0);
  std::vector<MIndex> ms;
  std::function<void(int, long)> rec = [&](int pos, long left) {
    if (pos == n) {
      MIndex m(e);
      if (m.total() >= 1) ms.push_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    e[static_cast<size_t>(pos)] = 0;
  };
  rec(0, bound);
  for (const MIndex& m : ms)
    for (int j = 0; j < n; ++j) gens.push_back(Gen{m, j});
  std::sort(gens.begin(), gens.end());

  std::vector<PBWMonomial> out;
  PBWMonomial cur;
  std::function<void(size_t, long)> walk = [&](size_t pos, long left) {
    if (pos == gens.size()) {
      out.push_back(cur);
      return;
    }
    walk(pos + 1, left);
    long d = gens[pos].degree();
    int maxe = d > 0 ? static_cast<int>(left / d) : 0;
    for (int ex = 1; ex <= maxe; ++ex) {
      cur.f.push_back({gens[pos], ex});
      walk(pos + 1, left - ex * d);
      cur.f.pop_back();
    }
  };
  walk(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Q1WhitDims q1_whittaker_dimensions(int n, long bound, XCache& cache) {
  Q1WhitDims res;
  res.bound = bound;

  std::vector<PBWMonomial> keys = q1_basis(n, bound);
  std::map<PBWMonomial, int> index;
  for (size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);
  int dim = static_cast<int>(keys.size());

  auto coords = [&](const Q1Vec& v) {
    std::vector<Scalar> out(static_cast<size_t>(dim));
    for (const auto& [m, c] : v) {
      auto it = index.find(m);
      if (it == index.end()) fail(errc::internal_error, "vector escaped the Q1 truncation");
      out[static_cast<size_t>(it->second)] = c;
    }
    return out;
  };

  // X-monomial images of v_1, by degree.
  std::vector<std::pair<long, Q1Vec>> images;
  {
    HBasisResult basis = h_monomial_basis(n, bound, cache);
    for (const auto& mono : basis.monomials) {
      UElem u = u_one();
      for (const auto& [mj, exp] : mono.factors)
        u = mul(u, u_pow(cache.get(mj.first, mj.second).elem, exp));
      images.push_back({mono.degree, q1_action(u, q1_vacuum(), n)});
    }
  }

  std::vector<std::vector<Scalar>> kernel_top;
  for (long d = 0; d <= bound; ++d) {
    std::vector<int> sub;
    for (size_t i = 0; i < keys.size(); ++i)
      if (keys[i].degree() <= d) sub.push_back(static_cast<int>(i));
    int sdim = static_cast<int>(sub.size());
    Mat stacked(n * sdim, sdim);
    std::map<int, int> subindex;
    for (int c = 0; c < sdim; ++c) subindex[sub[static_cast<size_t>(c)]] = c;
    for (int c = 0; c < sdim; ++c) {
      Q1Vec v = Q1Vec::single(keys[static_cast<size_t>(sub[static_cast<size_t>(c)])]);
      for (int i = 0; i < n; ++i) {
        Q1Vec img = q1_action(u_gen(gen_partial(n, i)), v, n) - v;
        std::vector<Scalar> iv = coords(img);
        for (int r = 0; r < dim; ++r) {
          if (iv[static_cast<size_t>(r)].is_zero()) continue;
          auto it = subindex.find(r);
          if (it == subindex.end())
            fail(errc::internal_error, "Whittaker operator raised the Q1 degree");
          stacked.at(i * sdim + it->second, c) = iv[static_cast<size_t>(r)];
        }
      }
    }
    auto ns = nullspace(stacked);
    res.kernel_dims.push_back(static_cast<int>(ns.size()));
    int count = 0;
    for (const auto& [deg, img] : images)
      if (deg <= d) ++count;
    res.monomial_counts.push_back(count);
    if (d == bound) {
      for (const auto& x : ns) {
        std::vector<Scalar> amb(static_cast<size_t>(dim));
        for (int c = 0; c < sdim; ++c)
          amb[static_cast<size_t>(sub[static_cast<size_t>(c)])] = x[static_cast<size_t>(c)];
        kernel_top.push_back(std::move(amb));
      }
    }
  }

  res.dims_match = res.kernel_dims == res.monomial_counts;

  SpanBuilder span(dim);
  for (const auto& [deg, img] : images) span.insert(coords(img));
  res.solvable = true;
  for (const auto& kv : kernel_top)
    if (!span.contains(kv)) res.solvable = false;

  return res;
}

}  // namespace wnlie
