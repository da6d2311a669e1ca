#include "glrep/glrep.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace wnlie {

bool GlRep::operator==(const GlRep& o) const {
  return n == o.n && dim == o.dim && E == o.E && weights == o.weights &&
         lambda == o.lambda;
}

void validate_glrep(const GlRep& v) {
  for (int i = 0; i < v.n; ++i)
    for (int j = 0; j < v.n; ++j)
      for (int k = 0; k < v.n; ++k)
        for (int l = 0; l < v.n; ++l) {
          Mat lhs = mat_commutator(v.e(i, j), v.e(k, l));
          Mat rhs(v.dim, v.dim);
          if (j == k) rhs = rhs + v.e(i, l);
          if (l == i) rhs = rhs - v.e(k, j);
          if (lhs != rhs)
            fail(errc::verification_failure, "gl_n commutation relations violated");
        }
  for (int b = 0; b < v.dim; ++b)
    for (int i = 0; i < v.n; ++i)
      for (int r = 0; r < v.dim; ++r) {
        Scalar want = r == b ? v.weights[static_cast<size_t>(b)][static_cast<size_t>(i)]
                             : Scalar(0);
        if (!(v.e(i, i).at(r, b) == want))
          fail(errc::verification_failure, "basis vector is not a weight eigenvector");
      }
  if (v.lambda) {
    int hw = -1;
    for (int b = 0; b < v.dim; ++b)
      if (v.weights[static_cast<size_t>(b)] == *v.lambda) {
        hw = b;
        break;
      }
    if (hw < 0) fail(errc::verification_failure, "highest weight vector missing");
    for (int i = 0; i < v.n; ++i)
      for (int j = i + 1; j < v.n; ++j)
        for (int r = 0; r < v.dim; ++r)
          if (!v.e(i, j).at(r, hw).is_zero())
            fail(errc::verification_failure,
                 "highest weight vector not annihilated by the raising operators");
  }
}

GlRep exterior_power(int n, int k) {
  if (k < 0 || k > n) fail(errc::bad_argument, "exterior power degree out of range");
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

  std::map<std::vector<int>, int> index;
  for (size_t b = 0; b < subsets.size(); ++b)
    index[subsets[b]] = static_cast<int>(b);

  GlRep v;
  v.n = n;
  v.dim = static_cast<int>(subsets.size());
  v.E.assign(static_cast<size_t>(n * n), Mat(v.dim, v.dim));
  for (size_t b = 0; b < subsets.size(); ++b) {
    const auto& s = subsets[b];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool has_j = std::binary_search(s.begin(), s.end(), j);
        if (!has_j) continue;
        if (i == j) {
          v.e(i, j).at(static_cast<int>(b), static_cast<int>(b)) += Scalar(1);
          continue;
        }
        if (std::binary_search(s.begin(), s.end(), i)) continue;
        std::vector<int> t;
        int between = 0;
        for (int x : s) {
          if (x == j) continue;
          if (x > std::min(i, j) && x < std::max(i, j)) ++between;
          t.push_back(x);
        }
        t.push_back(i);
        std::sort(t.begin(), t.end());
        int sign = between % 2 == 0 ? 1 : -1;
        v.e(i, j).at(index.at(t), static_cast<int>(b)) += Scalar(sign);
      }
  }
  for (const auto& s : subsets) {
    std::vector<Scalar> w(static_cast<size_t>(n), Scalar(0));
    for (int x : s) w[static_cast<size_t>(x)] = Scalar(1);
    v.weights.push_back(std::move(w));
  }
  std::vector<Scalar> lam(static_cast<size_t>(n), Scalar(0));
  for (int i = 0; i < k; ++i) lam[static_cast<size_t>(i)] = Scalar(1);
  v.lambda = lam;
  validate_glrep(v);
  return v;
}

GlRep tensor_rep(const GlRep& a, const GlRep& b) {
  if (a.n != b.n) fail(errc::dimension_mismatch, "tensor of reps over different gl_n");
  GlRep v;
  v.n = a.n;
  v.dim = a.dim * b.dim;
  v.E.assign(static_cast<size_t>(v.n * v.n), Mat(v.dim, v.dim));
  auto idx = [&](int p, int q) { return p * b.dim + q; };
  for (int i = 0; i < v.n; ++i)
    for (int j = 0; j < v.n; ++j) {
      Mat& m = v.e(i, j);
      for (int p = 0; p < a.dim; ++p)
        for (int q = 0; q < b.dim; ++q) {
          for (int r = 0; r < a.dim; ++r)
            if (!a.e(i, j).at(r, p).is_zero())
              m.at(idx(r, q), idx(p, q)) += a.e(i, j).at(r, p);
          for (int r = 0; r < b.dim; ++r)
            if (!b.e(i, j).at(r, q).is_zero())
              m.at(idx(p, r), idx(p, q)) += b.e(i, j).at(r, q);
        }
    }
  for (int p = 0; p < a.dim; ++p)
    for (int q = 0; q < b.dim; ++q) {
      std::vector<Scalar> w(static_cast<size_t>(v.n));
      for (int i = 0; i < v.n; ++i)
        w[static_cast<size_t>(i)] = a.weights[static_cast<size_t>(p)][static_cast<size_t>(i)] +
                                    b.weights[static_cast<size_t>(q)][static_cast<size_t>(i)];
      v.weights.push_back(std::move(w));
    }
  return v;
}

Scalar weyl_dimension(const std::vector<Scalar>& lambda) {
  int n = static_cast<int>(lambda.size());
  Scalar d(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar num = lambda[static_cast<size_t>(i)] - lambda[static_cast<size_t>(j)] +
                   Scalar(j - i);
      d = d * num / Scalar(j - i);
    }
  return d;
}

GlRep highest_weight_module(int n, const std::vector<Scalar>& lambda) {
  if (static_cast<int>(lambda.size()) != n)
    fail(errc::dimension_mismatch, "highest weight length mismatch");
  std::vector<long> rel(static_cast<size_t>(n));
  for (int i = 0; i + 1 < n; ++i) {
    auto d = is_integer_constant(lambda[static_cast<size_t>(i)] -
                                 lambda[static_cast<size_t>(i + 1)]);
    if (!d || *d < 0)
      fail(errc::domain_error,
           "not a dominant integral weight: lambda_" + std::to_string(i + 1) +
               " - lambda_" + std::to_string(i + 2) +
               " must be a nonnegative integer");
  }
  Scalar shift = lambda[static_cast<size_t>(n - 1)];
  for (int i = 0; i < n; ++i) {
    auto d = is_integer_constant(lambda[static_cast<size_t>(i)] - shift);
    rel[static_cast<size_t>(i)] = *d;
  }

  GlRep v;
  long top = rel[0];
  if (top == 0) {
    v.n = n;
    v.dim = 1;
    v.E.assign(static_cast<size_t>(n * n), Mat(1, 1));
    for (int i = 0; i < n; ++i) v.e(i, i).at(0, 0) = shift;
    v.weights.push_back(lambda);
    v.lambda = lambda;
    validate_glrep(v);
    return v;
  }

  // Tensor product of the Young-diagram column exterior powers.
  GlRep big;
  bool first = true;
  for (long c = 1; c <= top; ++c) {
    int height = 0;
    for (int i = 0; i < n; ++i)
      if (rel[static_cast<size_t>(i)] >= c) ++height;
    GlRep col = exterior_power(n, height);
    col.lambda.reset();
    big = first ? col : tensor_rep(big, col);
    first = false;
  }

  // Lowering closure of the product of column highest-weight vectors (the
  // all-zero tensor index, since each column's e_{1..k} is its first basis
  // vector).
  using WKey = std::vector<long>;
  std::map<WKey, SpanBuilder> spans;
  std::map<WKey, std::vector<std::vector<Scalar>>> vecs;  // construction order
  std::deque<std::pair<WKey, std::vector<Scalar>>> queue;

  auto wkey_of_index = [&](int b) {
    WKey w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      w[static_cast<size_t>(i)] =
          *is_integer_constant(big.weights[static_cast<size_t>(b)][static_cast<size_t>(i)]);
    return w;
  };

  std::vector<Scalar> hw(static_cast<size_t>(big.dim), Scalar(0));
  hw[0] = Scalar(1);
  WKey hw_w = wkey_of_index(0);
  spans.emplace(hw_w, SpanBuilder(big.dim));
  spans.at(hw_w).insert(hw);
  vecs[hw_w].push_back(hw);
  queue.push_back({hw_w, hw});

  while (!queue.empty()) {
    auto [w, vec] = queue.front();
    queue.pop_front();
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<Scalar> img = big.e(i + 1, i).apply(vec);
      if (std::all_of(img.begin(), img.end(), [](const Scalar& s) { return s.is_zero(); }))
        continue;
      WKey w2 = w;
      w2[static_cast<size_t>(i)] -= 1;
      w2[static_cast<size_t>(i + 1)] += 1;
      auto it = spans.find(w2);
      if (it == spans.end()) it = spans.emplace(w2, SpanBuilder(big.dim)).first;
      if (it->second.insert(img)) {
        vecs[w2].push_back(img);
        queue.push_back({w2, img});
      }
    }
  }

  // Order: weights descending lex from the highest weight, construction
  // order inside a weight space.
  std::vector<std::pair<WKey, std::vector<Scalar>>> basis;
  for (auto it = vecs.rbegin(); it != vecs.rend(); ++it)
    for (const auto& vec : it->second) basis.push_back({it->first, vec});

  v.n = n;
  v.dim = static_cast<int>(basis.size());
  v.E.assign(static_cast<size_t>(n * n), Mat(v.dim, v.dim));
  // global index per weight class, in construction order
  std::map<WKey, std::vector<int>> global;
  for (size_t b = 0; b < basis.size(); ++b)
    global[basis[b].first].push_back(static_cast<int>(b));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (size_t b = 0; b < basis.size(); ++b) {
        std::vector<Scalar> img = big.e(i, j).apply(basis[b].second);
        if (std::all_of(img.begin(), img.end(), [](const Scalar& s) { return s.is_zero(); }))
          continue;
        WKey w2 = basis[b].first;
        w2[static_cast<size_t>(i)] += 1;
        w2[static_cast<size_t>(j)] -= 1;
        auto sp = spans.find(w2);
        auto coords = sp == spans.end() ? std::nullopt : sp->second.coords(img);
        if (!coords)
          fail(errc::internal_error, "lowering closure is not E_{ij}-invariant");
        const auto& gl = global.at(w2);
        for (size_t t = 0; t < coords->size(); ++t)
          if (!(*coords)[t].is_zero())
            v.e(i, j).at(gl[t], static_cast<int>(b)) = (*coords)[t];
      }
    }

  for (const auto& [w, vec] : basis) {
    std::vector<Scalar> ws(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ws[static_cast<size_t>(i)] = Scalar(w[static_cast<size_t>(i)]) + shift;
    v.weights.push_back(std::move(ws));
  }
  // determinant twist: shift every E_{ii}
  if (!shift.is_zero())
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < v.dim; ++b) v.e(i, i).at(b, b) += shift;
  v.lambda = lambda;

  Scalar wd = weyl_dimension(lambda);
  if (!(wd == Scalar(v.dim)))
    fail(errc::verification_failure,
         "dimension " + std::to_string(v.dim) + " disagrees with the Weyl formula " +
             wd.str());
  validate_glrep(v);
  return v;
}

std::map<std::vector<Scalar>, std::vector<int>, VecScalarLess> weight_spaces(const GlRep& v) {
  std::map<std::vector<Scalar>, std::vector<int>, VecScalarLess> out;
  for (int b = 0; b < v.dim; ++b) out[v.weights[static_cast<size_t>(b)]].push_back(b);
  return out;
}

}  // namespace wnlie
