#include "shenlarsson/phi.hpp"

#include <sstream>

#include "kernel/format.hpp"

namespace wnlie {

std::string WeylMono::str() const {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    os << (any ? "*" : "") << "t" << (i + 1);
    if (t[i] != 1) os << "^" << t[i];
    any = true;
  }
  for (int i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    os << (any ? "*" : "") << "d" << (i + 1);
    if (d[i] != 1) os << "^" << d[i];
    any = true;
  }
  return any ? os.str() : "1";
}

std::string GlMono::str() const {
  if (f.empty()) return "1";
  std::ostringstream os;
  bool any = false;
  for (const auto& [ij, e] : f) {
    os << (any ? "*" : "") << "E" << (ij.first + 1) << (ij.second + 1);
    if (e != 1) os << "^" << e;
    any = true;
  }
  return os.str();
}

PhiImage phi_one(int n) {
  return PhiImage::single({WeylMono{MIndex(n), MIndex(n)}, GlMono{}});
}

namespace {

// ∂^b t^c = sum_k k! C(b,k) C(c,k) t^{c-k} ∂^{b-k}, variable by variable.
SparseCombo<WeylMono> weyl_mul(const WeylMono& a, const WeylMono& b) {
  int n = a.t.size();
  SparseCombo<WeylMono> acc = SparseCombo<WeylMono>::single(WeylMono{b.t, MIndex(n)});
  for (int i = 0; i < n; ++i) {
    if (a.d[i] == 0) continue;
    SparseCombo<WeylMono> next;
    for (const auto& [w, c] : acc) {
      long bi = a.d[i], ci = w.t[i];
      Rat binom(1);
      for (long k = 0; k <= std::min(bi, ci); ++k) {
        if (k > 0) binom = binom * Rat(bi - k + 1) * Rat(ci - k + 1) / Rat(k);
        WeylMono w2 = w;
        w2.t[i] -= static_cast<int>(k);
        w2.d[i] += static_cast<int>(bi - k);
        next.add(w2, c * Scalar(binom));
      }
    }
    acc = next;
  }
  // prepend t^a, append ∂^b-part of the right factor
  SparseCombo<WeylMono> out;
  for (const auto& [w, c] : acc) {
    WeylMono w2 = w;
    w2.t = w2.t.plus(a.t);
    w2.d = w2.d.plus(b.d);
    out.add(w2, c);
  }
  return out;
}

using GlWord = std::vector<std::pair<std::pair<int, int>, int>>;

void gl_push(std::map<GlWord, Scalar>& work, GlWord w, const Scalar& c) {
  if (c.is_zero()) return;
  GlWord r;
  for (const auto& [g, e] : w) {
    if (e == 0) continue;
    if (!r.empty() && r.back().first == g)
      r.back().second += e;
    else
      r.emplace_back(g, e);
  }
  auto it = work.find(r);
  if (it == work.end())
    work.emplace(std::move(r), c);
  else {
    it->second += c;
    if (it->second.is_zero()) work.erase(it);
  }
}

SparseCombo<GlMono> gl_normalize(std::map<GlWord, Scalar> work) {
  SparseCombo<GlMono> out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const GlWord& w = node.key();
    const Scalar& c = node.mapped();
    size_t bad = static_cast<size_t>(-1);
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i + 1].first < w[i].first) {
        bad = i;
        break;
      }
    if (bad == static_cast<size_t>(-1)) {
      out.add(GlMono{w}, c);
      continue;
    }
    const auto [a, ea] = w[bad];
    const auto [b, eb] = w[bad + 1];
    GlWord prefix(w.begin(), w.begin() + static_cast<long>(bad));
    GlWord suffix(w.begin() + static_cast<long>(bad) + 2, w.end());
    auto assemble = [&](std::initializer_list<std::pair<std::pair<int, int>, int>> mid) {
      GlWord r = prefix;
      for (const auto& p : mid) r.push_back(p);
      r.insert(r.end(), suffix.begin(), suffix.end());
      return r;
    };
    gl_push(work, assemble({{a, ea - 1}, {b, 1}, {a, 1}, {b, eb - 1}}), c);
    // [E_ab, E_cd] = δ_bc E_ad - δ_da E_cb
    if (a.second == b.first)
      gl_push(work, assemble({{a, ea - 1}, {{a.first, b.second}, 1}, {b, eb - 1}}), c);
    if (b.second == a.first)
      gl_push(work, assemble({{a, ea - 1}, {{b.first, a.second}, 1}, {b, eb - 1}}), -c);
  }
  return out;
}

}  // namespace

PhiImage phi_mul(const PhiImage& a, const PhiImage& b, int n) {
  (void)n;
  PhiImage out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      SparseCombo<WeylMono> wpart = weyl_mul(ka.first, kb.first);
      GlWord word = ka.second.f;
      word.insert(word.end(), kb.second.f.begin(), kb.second.f.end());
      std::map<GlWord, Scalar> work;
      gl_push(work, word, Scalar(1));
      SparseCombo<GlMono> gpart = gl_normalize(std::move(work));
      Scalar c = ca * cb;
      for (const auto& [w, cw] : wpart)
        for (const auto& [g, cg] : gpart) out.add({w, g}, c * cw * cg);
    }
  return out;
}

PhiImage phi(const UElem& u, int n) {
  PhiImage out;
  for (const auto& [mono, coeff] : u) {
    PhiImage acc = phi_one(n);
    for (const auto& [g, e] : mono.f) {
      if (e < 0)
        fail(errc::domain_error, "phi is defined on U(W_n): negative ∂ power present");
      PhiImage gen;
      if (g.is_partial()) {
        WeylMono w{MIndex(n), MIndex(n)};
        w.d[g.j] = 1;
        gen.add({w, GlMono{}}, Scalar(1));
      } else {
        WeylMono w{g.m, MIndex(n)};
        w.d[g.j] = 1;
        gen.add({w, GlMono{}}, Scalar(1));
        for (int i = 0; i < n; ++i) {
          if (g.m[i] == 0) continue;
          WeylMono w2{g.m.plus_unit(i, -1), MIndex(n)};
          gen.add({w2, GlMono{{{{i, g.j}, 1}}}}, Scalar(g.m[i]));
        }
      }
      for (int t = 0; t < e; ++t) acc = phi_mul(acc, gen, n);
    }
    out += acc.scaled(coeff);
  }
  return out;
}

std::string phi_str(const PhiImage& x, const std::vector<std::string>& params) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    std::string basis = it->first.first.str() + "(x)" + it->first.second.str();
    append_term(os, first, it->second, basis, params);
    first = false;
  }
  return os.str();
}

}  // namespace wnlie
