#include "centralizer/centralizer.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "kernel/linalg.hpp"

namespace wnlie {

namespace {

void verify_central(const UElem& e, int n, const std::string& what) {
  CentralizerCheck c = centralizes(e, n);
  if (!c.ok)
    fail(errc::verification_failure,
         what + " failed centralizer verification against " + c.against +
             ": [" + what + ", " + c.against + "] = " + u_str(c.witness));
}

UElem h_shifted(int n, int i, long shift) {
  // h_i + shift
  return u_gen(gen_h(n, i)) + u_scalar(Scalar(shift));
}

Rat binom(long nn, long kk) {
  Rat r(1);
  for (long t = 0; t < kk; ++t) {
    Rat f(nn - t, t + 1);
    f.canonicalize();
    r *= f;
  }
  return r;
}

}  // namespace

std::string ZGen::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::zij: os << "z[" << i + 1 << "," << j + 1 << "]"; break;
    case Kind::zilj: os << "z[" << i + 1 << "," << l + 1 << "," << j + 1 << "]"; break;
    case Kind::zi: os << "z[" << i + 1 << "]"; break;
  }
  return os.str();
}

ZGen make_z_ij(int n, int i, int j) {
  if (i < 0 || i >= n || j < 0 || j >= n) fail(errc::bad_argument, "z index out of range");
  UElem e = normal_word({{Gen{MIndex::unit(n, i), j}, 1},
                         {gen_partial(n, i), 1},
                         {gen_partial(n, j), -1}});
  e -= u_gen(gen_h(n, i));
  ZGen z{ZGen::Kind::zij, i, -1, j, e};
  verify_central(z.elem, n, z.name());
  return z;
}

ZGen make_z_ilj(int n, int i, int l, int j) {
  if (i < 0 || i >= n || l < 0 || l >= n || j < 0 || j >= n)
    fail(errc::bad_argument, "z index out of range");
  MIndex til = MIndex::unit(n, i).plus_unit(l);
  UElem e = normal_word({{Gen{til, j}, 1},
                         {gen_partial(n, i), 1},
                         {gen_partial(n, l), 1},
                         {gen_partial(n, j), -1}});
  e -= normal_word({{Gen{MIndex::unit(n, i), j}, 1},
                    {gen_partial(n, i), 1},
                    {gen_partial(n, j), -1},
                    {gen_h(n, l), 1}});
  e -= normal_word({{Gen{MIndex::unit(n, l), j}, 1},
                    {gen_partial(n, l), 1},
                    {gen_partial(n, j), -1},
                    {gen_h(n, i), 1}});
  e += normal_word({{gen_h(n, l), 1}, {gen_h(n, i), 1}});
  if (i == l) e += u_gen(Gen{MIndex::unit(n, i), l});
  ZGen z{ZGen::Kind::zilj, i, l, j, e};
  verify_central(z.elem, n, z.name());
  return z;
}

ZGen make_z_i(int n, int i) {
  if (i < 0 || i >= n) fail(errc::bad_argument, "z index out of range");
  MIndex m3 = MIndex::unit(n, i).plus_unit(i, 2);
  MIndex m2 = MIndex::unit(n, i).plus_unit(i);
  UElem e = normal_word({{Gen{m3, i}, 1}, {gen_partial(n, i), 2}});
  e -= mul({u_gen(Gen{m2, i}), h_shifted(n, i, -1), u_gen(gen_partial(n, i))})
           .scaled(Scalar(3));
  e += mul({u_gen(gen_h(n, i)), h_shifted(n, i, -1), h_shifted(n, i, -2)})
           .scaled(Scalar(2));
  ZGen z{ZGen::Kind::zi, i, -1, -1, e};
  verify_central(z.elem, n, z.name());
  return z;
}

XShape analyze_x_shape(const UElem& x, const MIndex& m, int j) {
  XShape s;
  int n = m.size();
  long md = m.total();
  bool lead_found = false;
  std::map<MIndex, SparseCombo<MIndex>> left_g;
  SparseCombo<MIndex> pure;  // monomials in the h's alone

  auto reject = [&](const std::string& why) {
    s.ok = false;
    s.issue = why;
    return s;
  };

  for (const auto& [mono, c] : x) {
    MIndex h_exps(n), d_exps(n);
    const Gen* frame = nullptr;
    int frame_exp = 0;
    bool bad = false;
    for (const auto& [g, e] : mono.f) {
      if (g.is_partial()) {
        d_exps[g.j] += e;
      } else if (g.is_cartan()) {
        h_exps[g.j] += e;
      } else if (frame) {
        bad = true;
      } else {
        frame = &g;
        frame_exp = e;
      }
    }
    if (bad || (frame && frame_exp != 1))
      return reject("monomial " + mono.str() + " carries more than one non-Cartan factor");
    if (!frame) {
      if (!d_exps.is_zero())
        return reject("pure Cartan monomial " + mono.str() + " has ∂ factors");
      pure.add(h_exps, c);
      continue;
    }
    const MIndex& r = frame->m;
    MIndex want = r.minus(MIndex::unit(n, frame->j));
    if (d_exps != want)
      return reject("monomial " + mono.str() + " has ∂ exponents not matching its frame");
    if (r == m && frame->j == j && h_exps.is_zero()) {
      if (lead_found) return reject("duplicate leading monomial");
      if (!(c == Scalar(1))) return reject("leading coefficient is " + c.str() + ", not 1");
      lead_found = true;
      continue;
    }
    if (frame->j != j)
      return reject("monomial " + mono.str() + " has frame direction " +
                    std::to_string(frame->j + 1) + ", expected " + std::to_string(j + 1));
    if (r.total() <= 0 || r.total() >= md)
      return reject("frame degree |r| = " + std::to_string(r.total()) + " out of range");
    left_g[r].add(h_exps, c);
  }
  if (!lead_found) return reject("leading monomial (t^m d_j) ∂^{m-e_j} missing");

  // Pure Cartan part: a Cartan frame h_k carries polynomial corrections with
  // no constant term; its degree budget is |m| (frame plus g of degree
  // |m| - 1). Covers the |m| = 1 base case, where the correction is -h_i.
  s.degrees_exact = true;
  if (!pure.is_zero()) {
    long deg = 0;
    for (const auto& [a, c] : pure) {
      if (a.is_zero()) return reject("pure Cartan part has a constant term");
      deg = std::max(deg, a.total());
    }
    if (deg > md)
      return reject("pure Cartan part has degree " + std::to_string(deg) +
                    " above the bound " + std::to_string(md));
    if (deg != md) s.degrees_exact = false;
    s.cartan = pure;
  }

  // Frames with r != e_j: convert to the display's right-multiplied
  // convention. Only the h factors that precede the frame in the PBW order
  // commute across it, picking up h_k -> h_k + r_k - δ_{kj}.
  for (const auto& [r, hatg] : left_g) {
    Gen frame_gen{r, j};
    SparseCombo<MIndex> g;
    for (const auto& [a, c] : hatg) {
      SparseCombo<MIndex> term;
      term.add(MIndex(n), c);
      for (int k = 0; k < n; ++k) {
        bool left_of_frame = gen_h(n, k) < frame_gen;
        long ck = left_of_frame ? r[k] - (k == j ? 1 : 0) : 0;
        for (int t = 0; t < a[k]; ++t) {
          SparseCombo<MIndex> next;
          for (const auto& [b, cb] : term) {
            next.add(b.plus_unit(k), cb);
            if (ck != 0) next.add(b, cb * Scalar(ck));
          }
          term = next;
        }
      }
      g += term;
    }
    long deg = 0;
    for (const auto& [a, c] : g) deg = std::max(deg, a.total());
    if (deg > md - r.total())
      return reject("deg g_r for r = " + r.str() + " is " + std::to_string(deg) +
                    " above the bound " + std::to_string(md - r.total()));
    if (deg != md - r.total()) s.degrees_exact = false;
    s.g[r] = g;
  }

  // Reconstruction guard: the extracted data must rebuild x exactly.
  {
    Word lead_word{{Gen{m, j}, 1}};
    for (int k = 0; k < n; ++k) {
      int e = m[k] - (k == j ? 1 : 0);
      if (e != 0) lead_word.push_back({gen_partial(n, k), e});
    }
    UElem rebuilt = normal_word(lead_word);
    for (const auto& [r, g] : s.g) {
      for (const auto& [a, c] : g) {
        Word w{{Gen{r, j}, 1}};
        for (int k = 0; k < n; ++k)
          if (a[k] != 0) w.push_back({gen_h(n, k), a[k]});
        for (int k = 0; k < n; ++k) {
          int e = r[k] - (k == j ? 1 : 0);
          if (e != 0) w.push_back({gen_partial(n, k), e});
        }
        rebuilt += normal_word(w, c);
      }
    }
    for (const auto& [a, c] : s.cartan) {
      Word w;
      for (int k = 0; k < n; ++k)
        if (a[k] != 0) w.push_back({gen_h(n, k), a[k]});
      rebuilt += normal_word(w, c);
    }
    if (rebuilt != x) return reject("shape data does not rebuild the element");
  }
  s.ok = true;
  return s;
}

const XGen& XCache::get(const MIndex& m, int j) {
  auto key = std::make_pair(m, j);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  XGen x = build(m, j);
  return cache_.emplace(std::move(key), std::move(x)).first->second;
}

XProvider XCache::provider() {
  return [this](const MIndex& m, int j) { return get(m, j).elem; };
}

const UElem& XCache::raw(const MIndex& m, int j) {
  auto key = std::make_pair(m, j);
  auto it = raw_.find(key);
  if (it != raw_.end()) return it->second;
  UElem e = build_raw(m, j);
  return raw_.emplace(std::move(key), std::move(e)).first->second;
}

namespace {

// Monomials a displayed X_{m,j} may contain: the leading term, single
// direction-j frames with matching ∂ exponents and |r| < |m|, and pure
// Cartan monomials without ∂ factors.
bool display_conforming(const PBWMonomial& mono, const MIndex& m, int j) {
  int n = m.size();
  MIndex h(n), d(n);
  const Gen* frame = nullptr;
  int frame_exp = 0;
  for (const auto& [g, e] : mono.f) {
    if (g.is_partial()) {
      d[g.j] += e;
    } else if (g.is_cartan()) {
      h[g.j] += e;
    } else {
      if (frame) return false;
      frame = &g;
      frame_exp = e;
    }
  }
  if (!frame) return d.is_zero() && !h.is_zero();
  if (frame_exp != 1) return false;
  if (d != frame->m.minus(MIndex::unit(n, frame->j))) return false;
  if (frame->m == m && frame->j == j) return h.is_zero();
  return frame->j == j && frame->m.total() < m.total();
}

}  // namespace

namespace {

std::string trace_of(const MIndex& m, int j, int n) {
  if (n == 1) return "closed formula (n = 1, m = " + std::to_string(m.total()) + ")";
  if (m.total() == 1) {
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (m[k] == 1) i = k;
    return "base z[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
  }
  if (m.total() == 2) {
    int i = -1, l = -1;
    for (int k = 0; k < n; ++k) {
      if (m[k] >= 1 && i < 0) i = k;
      if (m[k] >= 1) l = k;
    }
    if (m[i] == 2) l = i;
    return "base z[" + std::to_string(i + 1) + "," + std::to_string(l + 1) + "," +
           std::to_string(j + 1) + "]";
  }
  int mj = m[j];
  if (mj == 0) {
    int i = -1;
    for (int k = 0; k < n; ++k)
      if (m[k] > 0) {
        i = k;
        break;
      }
    return "case m_j = 0 with i = " + std::to_string(i + 1);
  }
  if (mj != 3) return "case m_j != 0,3";
  if (m.total() == 3)
    return "case m_j = 3, |m| = 3 with i = " + std::to_string((j == 0 ? 1 : 0) + 1);
  return "case m_j = 3, |m| > 3";
}

}  // namespace

XGen XCache::build(const MIndex& m, int j) {
  XGen x;
  x.m = m;
  x.j = j;
  x.elem = raw(m, j);

  if (n_ > 1) {
    // Reduce to the displayed shape by pure X-monomial products of raw
    // generators; the largest offending monomial is always the leading term
    // of such a product.
    for (int guard = 0; ; ++guard) {
      if (guard > 4096)
        fail(errc::internal_error, "X shape reduction failed to terminate");
      const PBWMonomial* worst = nullptr;
      for (const auto& [mono, c] : x.elem) {
        if (display_conforming(mono, m, j)) continue;
        if (!worst || bh_elim_less(*worst, mono)) worst = &mono;
      }
      if (!worst) break;
      BHTriple t = bh_candidate(*worst, n_);
      if (!t.h_exps.is_zero() || !t.d_exps.is_zero())
        fail(errc::verification_failure,
             "X[" + m.str() + "," + std::to_string(j + 1) +
                 "] reduction hit a non-H_n candidate at " + worst->str());
      Scalar c = x.elem.coeff(*worst);
      UElem prod = u_one();
      for (const auto& [mj, e] : t.x_part)
        prod = mul(prod, u_pow(raw(mj.first, mj.second), e));
      x.elem -= prod.scaled(c);
      x.reductions.push_back({t.x_part, c});
    }
  }

  std::string label = "X[" + m.str() + "," + std::to_string(j + 1) + "]";
  x.trace = trace_of(m, j, n_);
  if (!x.reductions.empty())
    x.trace += "; reduced " + std::to_string(x.reductions.size()) + " correction monomials";
  verify_central(x.elem, n_, label);
  x.shape = analyze_x_shape(x.elem, m, j);
  if (!x.shape.ok)
    fail(errc::verification_failure, label + " shape verification failed: " + x.shape.issue);
  return x;
}

UElem XCache::build_raw(const MIndex& m, int j) {
  if (!m.nonneg() || m.total() < 1 || m == MIndex::unit(n_, j))
    fail(errc::bad_argument, "X_{m,j} requires |m| >= 1 and m != e_j");
  if (j < 0 || j >= n_) fail(errc::bad_argument, "direction index out of range");

  UElem out;

  if (n_ == 1) {
    // Closed formula in the d_i = t^{i+1} ∂ family; no localization appears.
    long mm = m.total() - 1;  // builds X_{mm+1,1}
    auto d = [&](long i) {
      return i < 0 ? u_gen(gen_partial(1, 0))
                   : u_gen(Gen{MIndex(std::vector<int>{static_cast<int>(i) + 1}), 0});
    };
    UElem e = mul(d(mm), u_pow(d(-1), static_cast<int>(mm)));
    for (long k = 1; k <= mm - 1; ++k) {
      UElem term = d(k);
      for (long i = 1; i <= mm - k; ++i) term = mul(term, h_shifted(1, 0, -i));
      term = mul(term, u_pow(d(-1), static_cast<int>(k)));
      Rat c = binom(mm + 1, k + 1) * ((mm - k) % 2 == 0 ? 1 : -1);
      e += term.scaled(Scalar(c));
    }
    UElem tail = u_one();
    for (long i = 0; i <= mm; ++i) tail = mul(tail, h_shifted(1, 0, -i));
    e += tail.scaled(Scalar(Rat((mm % 2 == 0 ? 1 : -1) * mm)));
    out = e;
  } else if (m.total() == 1) {
    int i = -1;
    for (int k = 0; k < n_; ++k)
      if (m[k] == 1) i = k;
    out = make_z_ij(n_, i, j).elem;
  } else if (m.total() == 2) {
    int i = -1, l = -1;
    for (int k = 0; k < n_; ++k) {
      if (m[k] >= 1 && i < 0) i = k;
      if (m[k] >= 1) l = k;
    }
    if (m[i] == 2) l = i;
    out = make_z_ilj(n_, i, l, j).elem;
  } else {
    int mj = m[j];
    if (mj == 0) {
      int i = -1;
      for (int k = 0; k < n_; ++k)
        if (m[k] > 0) {
          i = k;
          break;
        }
      out = commutator(raw(m.plus_unit(i, -1), j), raw(MIndex::unit(n_, j).plus_unit(i), j));
    } else if (mj != 3) {
      out = commutator(raw(m.plus_unit(j, -1), j), raw(MIndex::unit(n_, j).plus_unit(j), j))
                .scaled(Scalar(1) / Scalar(3 - mj));
    } else if (m.total() == 3) {
      int i = j == 0 ? 1 : 0;
      MIndex big = MIndex::unit(n_, j).plus_unit(j).plus_unit(i);
      out = commutator(raw(MIndex::unit(n_, j), i), raw(big, j)) + raw(big, i);
    } else {
      out = commutator(raw(m.plus_unit(j, -2), j), raw(MIndex::unit(n_, j).plus_unit(j, 2), j))
                .scaled(Scalar(Rat(1, 2)));
    }
  }

  verify_central(out, n_, "X[" + m.str() + "," + std::to_string(j + 1) + "] (raw)");
  return out;
}



std::string HBasisEntry::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mj, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << "X[" << mj.first.str() << "," << (mj.second + 1) << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

void enumerate_monomials(const std::vector<std::pair<MIndex, int>>& gens,
                         size_t pos, long budget,
                         std::vector<std::pair<std::pair<MIndex, int>, int>>& cur,
                         std::vector<HBasisEntry>& out, long degree) {
  if (pos == gens.size()) {
    out.push_back(HBasisEntry{cur, degree});
    return;
  }
  long d = gens[pos].first.total();
  enumerate_monomials(gens, pos + 1, budget, cur, out, degree);
  for (int e = 1; e * d <= budget; ++e) {
    cur.push_back({gens[pos], e});
    enumerate_monomials(gens, pos + 1, budget - e * d, cur, out, degree + e * d);
    cur.pop_back();
  }
}

}  // namespace

HBasisResult h_monomial_basis(int n, long max_degree, XCache& cache) {
  // X generators of degree <= max_degree in their PBW generator order.
  std::vector<std::pair<MIndex, int>> gens;
  std::vector<int> e(static_cast<size_t>(n), 0);
  // enumerate m with 1 <= |m| <= max_degree lexicographically per degree
  std::vector<MIndex> ms;
  std::function<void(int, long)> rec = [&](int pos, long left) {
    if (pos == n) {
      MIndex m{e};
      if (m.total() >= 1) ms.push_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    e[static_cast<size_t>(pos)] = 0;
  };
  rec(0, max_degree);
  std::sort(ms.begin(), ms.end(), [](const MIndex& a, const MIndex& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  for (const MIndex& m : ms)
    for (int j = 0; j < n; ++j)
      if (m != MIndex::unit(n, j)) gens.push_back({m, j});

  HBasisResult res;
  std::vector<std::pair<std::pair<MIndex, int>, int>> cur;
  enumerate_monomials(gens, 0, max_degree, cur, res.monomials, 0);
  std::sort(res.monomials.begin(), res.monomials.end(),
            [](const HBasisEntry& a, const HBasisEntry& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.factors < b.factors;
            });

  // Independence rank over the U_∂ normal-form coordinates.
  std::map<PBWMonomial, int> index;
  std::vector<UElem> elems;
  for (const HBasisEntry& mono : res.monomials) {
    UElem u = u_one();
    for (const auto& [mj, exp] : mono.factors)
      u = mul(u, u_pow(cache.get(mj.first, mj.second).elem, exp));
    for (const auto& [key, c] : u)
      index.emplace(key, static_cast<int>(index.size()));
    elems.push_back(std::move(u));
  }
  SpanBuilder span(static_cast<int>(index.size()));
  res.independent = true;
  for (const UElem& u : elems) {
    std::vector<Scalar> v(index.size());
    for (const auto& [key, c] : u) v[static_cast<size_t>(index.at(key))] = c;
    if (!span.insert(v)) res.independent = false;
  }
  res.rank = span.rank();
  return res;
}

}  // namespace wnlie
