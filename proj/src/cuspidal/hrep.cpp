#include "cuspidal/hrep.hpp"

namespace wnlie {

const Mat& HRep::z_ij(int i, int j) const { return zij_[static_cast<size_t>(i * n_ + j)]; }
const Mat& HRep::z_ilj(int i, int l, int k) const {
  return zilj_[static_cast<size_t>((i * n_ + l) * n_ + k)];
}
const Mat& HRep::z_i(int i) const { return zi_[static_cast<size_t>(i)]; }

const Mat& HRep::z_matrix(const ZGen& z) const {
  switch (z.kind) {
    case ZGen::Kind::zij: return z_ij(z.i, z.j);
    case ZGen::Kind::zilj: return z_ilj(z.i, z.l, z.j);
    case ZGen::Kind::zi: return z_i(z.i);
  }
  fail(errc::internal_error, "bad z kind");
}

Mat tensor_route_matrix(const UElem& x, const GlRep& v) {
  int n = v.n;
  std::vector<Scalar> ones(static_cast<size_t>(n), Scalar(1));
  TensorModule M{std::make_shared<TwistedPolyModule>(ones),
                 std::make_shared<GlRep>(v)};
  Mat out(v.dim, v.dim);
  for (int b = 0; b < v.dim; ++b) {
    TenVec img = tensor_action(x, TenVec::single(TenKey{MIndex(n), b}), M);
    for (const auto& [key, c] : img) {
      if (!key.p.is_zero())
        fail(errc::verification_failure,
             "H_n element did not preserve 1 ⊗ V inside T(A_n^1, V)");
      out.at(key.v, b) = c;
    }
  }
  return out;
}

std::shared_ptr<HRep> HRep::from_glrep(const GlRep& v, XCache& cache, bool crosscheck) {
  auto h = std::make_shared<HRep>();
  int n = v.n;
  h->n_ = n;
  h->dim_ = v.dim;
  h->glrep_ = v;
  h->zij_.assign(static_cast<size_t>(n * n), Mat(v.dim, v.dim));
  h->zilj_.assign(static_cast<size_t>(n * n * n), Mat(v.dim, v.dim));
  h->zi_.assign(static_cast<size_t>(n), Mat(v.dim, v.dim));
  Mat id = Mat::identity(v.dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h->zij_[static_cast<size_t>(i * n + j)] = v.e(i, j) - v.e(i, i);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k) {
        Mat m = v.e(l, l) * v.e(i, i) - v.e(i, k) * v.e(l, l) - v.e(l, k) * v.e(i, i);
        if (i == l) m = m + v.e(i, l);
        int c_ik = (l == k ? 1 : 0) - (i == l ? 1 : 0);
        if (c_ik != 0) m = m + v.e(i, k).scaled(Scalar(c_ik));
        int c_lk = (i == k ? 1 : 0) - (i == l ? 1 : 0);
        if (c_lk != 0) m = m + v.e(l, k).scaled(Scalar(c_lk));
        h->zilj_[static_cast<size_t>((i * n + l) * n + k)] = m;
      }
  for (int i = 0; i < n; ++i) {
    Mat e = v.e(i, i);
    h->zi_[static_cast<size_t>(i)] =
        (e * e * e - (e * e).scaled(Scalar(3)) + e.scaled(Scalar(2))).scaled(Scalar(2));
  }

  // z_{i,i,i} and z_i are polynomials in the diagonal E_{ii}: record and
  // enforce that they act diagonally in the weight basis.
  for (int i = 0; i < n; ++i) {
    const Mat& a = h->zilj_[static_cast<size_t>((i * n + i) * n + i)];
    const Mat& b = h->zi_[static_cast<size_t>(i)];
    for (int r = 0; r < v.dim; ++r)
      for (int c = 0; c < v.dim; ++c)
        if (r != c && (!a.at(r, c).is_zero() || !b.at(r, c).is_zero()))
          fail(errc::verification_failure, "z_{i,i,i} or z_i is not diagonal");
  }

  if (crosscheck) {
    for (int i = 0; i < n; ++i) {
      if (tensor_route_matrix(make_z_i(n, i).elem, v) != h->z_i(i))
        fail(errc::verification_failure, "z_i closed formula disagrees with the tensor route");
      for (int j = 0; j < n; ++j) {
        if (tensor_route_matrix(make_z_ij(n, i, j).elem, v) != h->z_ij(i, j))
          fail(errc::verification_failure, "z_{i,j} closed formula disagrees with the tensor route");
        for (int l = 0; l < n; ++l)
          if (tensor_route_matrix(make_z_ilj(n, i, l, j).elem, v) != h->z_ilj(i, l, j))
            fail(errc::verification_failure,
                 "z_{i,l,k} closed formula disagrees with the tensor route");
      }
    }
    (void)cache;
  }
  return h;
}

std::shared_ptr<HRep> HRep::from_tables(int n, int dim, std::vector<Mat> zij,
                                        std::vector<Mat> zilj, std::vector<Mat> zi) {
  if (static_cast<int>(zij.size()) != n * n || static_cast<int>(zilj.size()) != n * n * n ||
      static_cast<int>(zi.size()) != n)
    fail(errc::bad_argument, "z table shape mismatch");
  auto h = std::make_shared<HRep>();
  h->n_ = n;
  h->dim_ = dim;
  h->zij_ = std::move(zij);
  h->zilj_ = std::move(zilj);
  h->zi_ = std::move(zi);
  return h;
}

Mat HRep::restrict_of(const Mat& ambient_mat) const {
  SpanBuilder span(static_cast<int>(basis_[0].size()));
  for (const auto& b : basis_) span.insert(b);
  Mat out(dim_, dim_);
  for (int c = 0; c < dim_; ++c) {
    std::vector<Scalar> img = ambient_mat.apply(basis_[static_cast<size_t>(c)]);
    auto coords = span.coords(img);
    if (!coords)
      fail(errc::verification_failure, "subspace is not invariant under the H_n action");
    for (int r = 0; r < dim_; ++r) out.at(r, c) = (*coords)[static_cast<size_t>(r)];
  }
  return out;
}

std::shared_ptr<HRep> HRep::restriction(std::shared_ptr<const HRep> ambient,
                                        const std::vector<std::vector<Scalar>>& basis) {
  if (basis.empty()) fail(errc::bad_argument, "empty restriction basis");
  auto h = std::make_shared<HRep>();
  h->n_ = ambient->n();
  h->dim_ = static_cast<int>(basis.size());
  h->ambient_ = ambient;
  h->basis_ = basis;
  int n = h->n_;
  h->zij_.reserve(static_cast<size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h->zij_.push_back(h->restrict_of(ambient->z_ij(i, j)));
  h->zilj_.reserve(static_cast<size_t>(n * n * n));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k) h->zilj_.push_back(h->restrict_of(ambient->z_ilj(i, l, k)));
  for (int i = 0; i < n; ++i) h->zi_.push_back(h->restrict_of(ambient->z_i(i)));
  return h;
}

// Matrix mirror of the raw bracket recursion (matrix commutators over the
// z tables).
const Mat& HRep::raw_x_matrix(const MIndex& m, int j, XCache& cache) {
  auto key = std::make_pair(m, j);
  auto it = raw_xmat_.find(key);
  if (it != raw_xmat_.end()) return it->second;

  Mat result(dim_, dim_);
  if (m.total() == 1) {
    int i = -1;
    for (int k = 0; k < n_; ++k)
      if (m[k] == 1) i = k;
    result = z_ij(i, j);
  } else if (m.total() == 2) {
    int i = -1, l = -1;
    for (int k = 0; k < n_; ++k) {
      if (m[k] >= 1 && i < 0) i = k;
      if (m[k] >= 1) l = k;
    }
    if (m[i] == 2) l = i;
    result = z_ilj(i, l, j);
  } else {
    int mj = m[j];
    if (mj == 0) {
      int i = -1;
      for (int k = 0; k < n_; ++k)
        if (m[k] > 0) {
          i = k;
          break;
        }
      result = mat_commutator(raw_x_matrix(m.plus_unit(i, -1), j, cache),
                              raw_x_matrix(MIndex::unit(n_, j).plus_unit(i), j, cache));
    } else if (mj != 3) {
      result = mat_commutator(raw_x_matrix(m.plus_unit(j, -1), j, cache),
                              raw_x_matrix(MIndex::unit(n_, j).plus_unit(j), j, cache))
                   .scaled(Scalar(1) / Scalar(3 - mj));
    } else if (m.total() == 3) {
      int i = j == 0 ? 1 : 0;
      MIndex big = MIndex::unit(n_, j).plus_unit(j).plus_unit(i);
      result = mat_commutator(raw_x_matrix(MIndex::unit(n_, j), i, cache),
                              raw_x_matrix(big, j, cache)) +
               raw_x_matrix(big, i, cache);
    } else {
      result = mat_commutator(raw_x_matrix(m.plus_unit(j, -2), j, cache),
                              raw_x_matrix(MIndex::unit(n_, j).plus_unit(j, 2), j, cache))
                   .scaled(Scalar(Rat(1, 2)));
    }
  }
  return raw_xmat_.emplace(std::move(key), std::move(result)).first->second;
}

const Mat& HRep::x_matrix(const MIndex& m, int j, XCache& cache) {
  auto key = std::make_pair(m, j);
  auto it = xmat_.find(key);
  if (it != xmat_.end()) return it->second;

  Mat result(dim_, dim_);
  if (ambient_) {
    result = restrict_of(const_cast<HRep&>(*ambient_).x_matrix(m, j, cache));
  } else if (n_ == 1) {
    result = tensor_route_matrix(cache.get(m, j).elem, *glrep_);
  } else {
    // The same raw recursion and shape reduction as the element build, with
    // matrix commutators in place of element commutators.
    result = raw_x_matrix(m, j, cache);
    const XGen& x = cache.get(m, j);
    for (const auto& [factors, c] : x.reductions) {
      Mat prod = Mat::identity(dim_);
      for (const auto& [mj, e] : factors)
        prod = prod * mat_pow(raw_x_matrix(mj.first, mj.second, cache), e);
      result = result - prod.scaled(c);
    }
  }
  return xmat_.emplace(std::move(key), std::move(result)).first->second;
}

WhittakerHRep make_whittaker_hrep(int n, int k, XCache& cache, long bound) {
  if (k < 1 || k > n) fail(errc::bad_argument, "W(δ_k) needs 1 <= k <= n (W(δ_0) ≅ W(δ_1))");
  WhittakerModuleDesc desc;
  desc.kind = WhittakerModuleDesc::Kind::im_pi;
  desc.k = k - 1;
  WhittakerResult res = whittaker_space(desc, n, bound);
  if (!res.stable)
    fail(errc::unstable_truncation, "wh_1(im pi) dimension still changing at the bound");
  GlRep lam = exterior_power(n, k);
  std::vector<std::vector<Scalar>> emb;
  for (const TenVec& v : res.basis) {
    std::vector<Scalar> col(static_cast<size_t>(lam.dim));
    for (const auto& [key, c] : v) {
      if (!key.p.is_zero())
        fail(errc::internal_error, "Whittaker vector not supported on 1 ⊗ V");
      col[static_cast<size_t>(key.v)] = c;
    }
    emb.push_back(std::move(col));
  }
  auto ambient = HRep::from_glrep(lam, cache, false);
  return WhittakerHRep{HRep::restriction(ambient, emb), res.basis};
}

}  // namespace wnlie
