#include "pbw/decompose.hpp"

#include <sstream>

namespace wnlie {

bool bh_elim_less(const PBWMonomial& a, const PBWMonomial& b) {
  long xa = a.x_degree(), xb = b.x_degree();
  if (xa != xb) return xa < xb;
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.f < b.f;
}

BHTriple bh_candidate(const PBWMonomial& mono, int n) {
  BHTriple t;
  t.h_exps = MIndex(n);
  t.d_exps = MIndex(n);
  for (const auto& [g, e] : mono.f) {
    if (g.is_partial()) {
      t.d_exps[g.j] += e;
    } else if (g.is_cartan()) {
      t.h_exps[g.j] += e;
    } else {
      t.x_part.push_back({{g.m, g.j}, e});
      for (int i = 0; i < n; ++i) t.d_exps[i] -= e * g.m[i];
      t.d_exps[g.j] += e;
    }
  }
  return t;
}

namespace {

const PBWMonomial* leading(const UElem& u) {
  const PBWMonomial* best = nullptr;
  for (const auto& [m, c] : u)
    if (!best || bh_elim_less(*best, m)) best = &m;
  return best;
}

}  // namespace

UElem triple_element(const BHTriple& t, const XProvider& provider, int n) {
  UElem r = u_one();
  for (const auto& [mj, e] : t.x_part)
    r = mul(r, u_pow(provider(mj.first, mj.second), e));
  Word tail;
  for (int i = 0; i < n; ++i)
    if (t.h_exps[i] != 0) tail.push_back({gen_h(n, i), t.h_exps[i]});
  for (int i = 0; i < n; ++i)
    if (t.d_exps[i] != 0) tail.push_back({gen_partial(n, i), t.d_exps[i]});
  if (!tail.empty()) r = mul(r, normal_word(tail));
  return r;
}

BHDecomposition decompose_BH(const UElem& u, long degree_bound,
                             const XProvider& provider, int n) {
  BHDecomposition out;
  UElem work = u;
  bool have_prev = false;
  PBWMonomial prev;
  while (!work.is_zero()) {
    const PBWMonomial* lead = leading(work);
    if (lead->degree() > degree_bound)
      fail(errc::degree_bound_exceeded,
           "decomposition leading degree " + std::to_string(lead->degree()) +
               " exceeds bound " + std::to_string(degree_bound));
    if (have_prev && !bh_elim_less(*lead, prev))
      fail(errc::internal_error, "BH elimination failed to descend");
    prev = *lead;
    have_prev = true;
    Scalar c = work.coeff(*lead);
    BHTriple t = bh_candidate(*lead, n);
    work -= triple_element(t, provider, n).scaled(c);
    out.terms.push_back({std::move(t), c});
  }
  return out;
}

UElem recombine(const BHDecomposition& d, const XProvider& provider, int n) {
  UElem r;
  for (const auto& [t, c] : d.terms)
    r += triple_element(t, provider, n).scaled(c);
  return r;
}

std::string BHTriple::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& [mj, e] : x_part) {
    if (any) os << "*";
    any = true;
    os << "X[" << mj.first.str() << "," << (mj.second + 1) << "]";
    if (e != 1) os << "^" << e;
  }
  for (int i = 0; i < h_exps.size(); ++i) {
    if (h_exps[i] == 0) continue;
    if (any) os << "*";
    any = true;
    os << "h" << (i + 1);
    if (h_exps[i] != 1) os << "^" << h_exps[i];
  }
  for (int i = 0; i < d_exps.size(); ++i) {
    if (d_exps[i] == 0) continue;
    if (any) os << "*";
    any = true;
    os << "d" << (i + 1);
    if (d_exps[i] != 1) os << "^" << d_exps[i];
  }
  if (!any) os << "1";
  return os.str();
}

}  // namespace wnlie
