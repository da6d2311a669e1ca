#include "pbw/pbw.hpp"

#include <sstream>

#include "kernel/format.hpp"

namespace wnlie {

bool Gen::operator<(const Gen& o) const {
  bool pa = is_partial(), pb = o.is_partial();
  if (pa != pb) return pb;  // every |m| >= 1 generator precedes every ∂
  if (pa) return j < o.j;
  long da = degree(), db = o.degree();
  if (da != db) return da < db;
  if (m != o.m) return m < o.m;
  return j < o.j;
}

std::string Gen::str() const {
  if (is_partial()) return "d" + std::to_string(j + 1);
  if (is_cartan()) return "h" + std::to_string(j + 1);
  return "(" + term().str() + ")";
}

Gen gen_partial(int n, int j) { return Gen{MIndex(n), j}; }
Gen gen_h(int n, int i) { return Gen{MIndex::unit(n, i), i}; }

long PBWMonomial::degree() const {
  long d = 0;
  for (const auto& [g, e] : f) d += g.degree() * e;
  return d;
}

long PBWMonomial::x_degree() const {
  long d = 0;
  for (const auto& [g, e] : f)
    if (!g.is_partial() && !g.is_cartan()) d += g.degree() * e;
  return d;
}

bool PBWMonomial::has_partials() const {
  for (const auto& [g, e] : f)
    if (g.is_partial()) return true;
  return false;
}

bool PBWMonomial::has_negative_partial() const {
  for (const auto& [g, e] : f)
    if (g.is_partial() && e < 0) return true;
  return false;
}

bool PBWMonomial::operator<(const PBWMonomial& o) const {
  long da = degree(), db = o.degree();
  if (da != db) return da < db;
  return f < o.f;
}

std::string PBWMonomial::str() const {
  if (f.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : f) {
    if (!first) os << "*";
    first = false;
    os << g.str();
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

UElem u_one() { return UElem::single(PBWMonomial{}); }

UElem u_scalar(const Scalar& c) { return UElem::single(PBWMonomial{}, c); }

UElem u_gen(const Gen& g, int exp) {
  if (exp == 0) return u_one();
  if (!g.is_partial() && exp < 0)
    fail(errc::domain_error, "negative power on a non-∂ generator");
  return UElem::single(PBWMonomial{{{g, exp}}});
}

UElem u_from_witt(const WittElem& x) {
  UElem r;
  for (const auto& [t, c] : x)
    r.add(PBWMonomial{{{Gen{t.m, t.j}, 1}}}, c);
  return r;
}

namespace {

// Drops zero exponents and merges adjacent powers of the same generator.
Word compact(const Word& w) {
  Word r;
  for (const auto& [g, e] : w) {
    if (e == 0) continue;
    if (!r.empty() && r.back().first == g) {
      r.back().second += e;
      if (r.back().second == 0) r.pop_back();
    } else {
      r.emplace_back(g, e);
    }
  }
  return r;
}

void push_word(std::map<Word, Scalar>& work, Word w, const Scalar& c) {
  if (c.is_zero()) return;
  w = compact(w);
  auto it = work.find(w);
  if (it == work.end()) {
    work.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) work.erase(it);
  }
}

// Rewrites the adjacent pair at position i; pushes the resulting words.
void rewrite_pair(std::map<Word, Scalar>& work, const Word& w, size_t i,
                  const Scalar& coeff) {
  const auto& [a, ea] = w[i];
  const auto& [b, eb] = w[i + 1];
  Word prefix(w.begin(), w.begin() + static_cast<long>(i));
  Word suffix(w.begin() + static_cast<long>(i) + 2, w.end());
  auto assemble = [&](std::initializer_list<std::pair<Gen, int>> mid) {
    Word r = prefix;
    for (const auto& p : mid) r.push_back(p);
    r.insert(r.end(), suffix.begin(), suffix.end());
    return r;
  };

  if (a.is_partial() && b.is_partial()) {
    // Distinct ∂ generators commute.
    push_word(work, assemble({{b, eb}, {a, ea}}), coeff);
    return;
  }

  if (!a.is_partial()) {
    // a b = b a + [a, b], peeling one factor from each power.
    push_word(work, assemble({{a, ea - 1}, {b, 1}, {a, 1}, {b, eb - 1}}), coeff);
    WittElem br = bracket(a.term(), b.term());
    for (const auto& [t, c] : br)
      push_word(work, assemble({{a, ea - 1}, {Gen{t.m, t.j}, 1}, {b, eb - 1}}),
                coeff * c);
    return;
  }

  // a is a ∂ power, b is a |m| >= 1 generator.
  if (ea > 0) {
    push_word(work, assemble({{a, ea - 1}, {b, 1}, {a, 1}, {b, eb - 1}}), coeff);
    int mi = b.m[a.j];
    if (mi != 0)
      push_word(work,
                assemble({{a, ea - 1}, {Gen{b.m.plus_unit(a.j, -1), b.j}, 1},
                          {b, eb - 1}}),
                coeff * Scalar(mi));
    return;
  }

  // Negative ∂ power: the finite nilpotent-ad expansion of ∂^{-1} b.
  int mi = b.m[a.j];
  Scalar c(1);
  long falling = 1;
  for (int k = 0; k <= mi; ++k) {
    Gen gk{b.m.plus_unit(a.j, -k), b.j};
    Scalar term_coeff = coeff * Scalar((k % 2 == 0 ? 1 : -1) * falling);
    push_word(work,
              assemble({{a, ea + 1}, {gk, 1}, {a, -k - 1}, {b, eb - 1}}),
              term_coeff);
    falling *= (mi - k);
  }
  (void)c;
}

// Index of the first out-of-order adjacent pair, or npos when normal.
size_t first_violation(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    const Gen& a = w[i].first;
    const Gen& b = w[i + 1].first;
    if (a == b) return i;  // only via freshly assembled words; merge
    if (b < a) return i;
    if (a.is_partial() && !b.is_partial()) return i;
  }
  return static_cast<size_t>(-1);
}

UElem normalize(std::map<Word, Scalar> work) {
  UElem out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    size_t i = first_violation(w);
    if (i == static_cast<size_t>(-1)) {
      for (const auto& [g, e] : w)
        if (!g.is_partial() && e < 0)
          fail(errc::internal_error, "negative power escaped onto a non-∂ generator");
      out.add(PBWMonomial{w}, c);
      continue;
    }
    if (w[i].first == w[i + 1].first) {
      Word r = w;
      r[i].second += r[i + 1].second;
      r.erase(r.begin() + static_cast<long>(i) + 1);
      if (r[i].second == 0) r.erase(r.begin() + static_cast<long>(i));
      push_word(work, std::move(r), c);
      continue;
    }
    rewrite_pair(work, w, i, c);
  }
  return out;
}

}  // namespace

UElem normal_word(const Word& w, const Scalar& coeff) {
  for (const auto& [g, e] : w) {
    if (!g.is_partial() && e < 0)
      fail(errc::domain_error, "negative power on a non-∂ generator");
    if (!g.m.nonneg()) fail(errc::domain_error, "generator exponents must be nonnegative");
  }
  std::map<Word, Scalar> work;
  push_word(work, w, coeff);
  return normalize(std::move(work));
}

UElem mul(const UElem& a, const UElem& b) {
  std::map<Word, Scalar> work;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Word w = ma.f;
      w.insert(w.end(), mb.f.begin(), mb.f.end());
      push_word(work, std::move(w), ca * cb);
    }
  return normalize(std::move(work));
}

UElem mul(std::vector<UElem> factors) {
  UElem r = u_one();
  for (const UElem& f : factors) r = mul(r, f);
  return r;
}

UElem u_pow(const UElem& a, int k) {
  if (k < 0) fail(errc::domain_error, "negative power of a general element");
  UElem r = u_one();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

UElem commutator(const UElem& x, const UElem& y) {
  return mul(x, y) - mul(y, x);
}

CentralizerCheck centralizes(const UElem& u, int n) {
  for (int i = 0; i < n; ++i) {
    UElem c = commutator(u, u_gen(gen_partial(n, i)));
    if (!c.is_zero()) return {false, "d" + std::to_string(i + 1), c};
  }
  for (int i = 0; i < n; ++i) {
    UElem c = commutator(u, u_gen(gen_h(n, i)));
    if (!c.is_zero()) return {false, "h" + std::to_string(i + 1), c};
  }
  return {true, "", UElem{}};
}

std::string u_str(const UElem& x, const std::vector<std::string>& params) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest filtration degree first.
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    append_term(os, first, it->second, it->first.is_one() ? "" : it->first.str(), params);
    first = false;
  }
  return os.str();
}

long u_degree(const UElem& x) {
  long d = 0;
  for (const auto& [m, c] : x) d = std::max(d, m.degree());
  return d;
}

}  // namespace wnlie
