#include "kernel/linalg.hpp"

#include <algorithm>

namespace wnlie {

Mat Mat::identity(int d) {
  Mat m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(errc::dimension_mismatch, "matrix shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(errc::dimension_mismatch, "matrix shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) fail(errc::dimension_mismatch, "matrix shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    fail(errc::dimension_mismatch, "matrix/vector shape mismatch");
  std::vector<Scalar> r(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[static_cast<size_t>(j)].is_zero()) continue;
      r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    }
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat mat_commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat mat_pow(const Mat& a, int k) {
  Mat r = Mat::identity(a.rows());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> echelonize(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = m.at(r, c).inv();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(echelonize(m).size()); }

Scalar det(Mat m) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "det of non-square matrix");
  Scalar d(1);
  for (int c = 0; c < m.cols(); ++c) {
    int p = -1;
    for (int i = c; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d = d * m.at(c, c);
    Scalar inv = m.at(c, c).inv();
    for (int i = c + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c) * inv;
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::vector<std::vector<Scalar>> nullspace(const Mat& m) {
  Mat e = m;
  std::vector<int> pivots = echelonize(e);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(m.cols()));
    v[static_cast<size_t>(c)] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -e.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    fail(errc::dimension_mismatch, "solve shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivots = echelonize(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(static_cast<size_t>(m.cols()));
  for (size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

std::optional<int> SpanBuilder::insert(const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != dim_)
    fail(errc::dimension_mismatch, "span vector dimension mismatch");
  std::vector<Scalar> w = v;
  std::vector<Scalar> expr(static_cast<size_t>(added_));
  reduce(w, expr);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (!w[static_cast<size_t>(j)].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return std::nullopt;
  int idx = added_++;
  Scalar inv = w[static_cast<size_t>(pivot)].inv();
  for (auto& s : w) s = s * inv;
  expr.resize(static_cast<size_t>(added_));
  // expr currently holds the reduction of v over earlier rows; the row we
  // store represents inv*(v - sum expr_k * added_k).
  for (auto& s : expr) s = -s * inv;
  expr[static_cast<size_t>(idx)] = inv;
  rows_.push_back(Row{std::move(w), std::move(expr), pivot});
  return idx;
}

void SpanBuilder::reduce(std::vector<Scalar>& v, std::vector<Scalar>& expr) const {
  for (const Row& row : rows_) {
    const Scalar& c = v[static_cast<size_t>(row.pivot)];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int j = 0; j < dim_; ++j) {
      if (row.vec[static_cast<size_t>(j)].is_zero()) continue;
      v[static_cast<size_t>(j)] -= f * row.vec[static_cast<size_t>(j)];
    }
    for (size_t k = 0; k < row.expr.size() && k < expr.size(); ++k) {
      if (row.expr[k].is_zero()) continue;
      expr[k] += f * row.expr[k];
    }
  }
}

std::optional<std::vector<Scalar>> SpanBuilder::coords(
    const std::vector<Scalar>& v) const {
  std::vector<Scalar> w = v;
  std::vector<Scalar> expr(static_cast<size_t>(added_));
  reduce(w, expr);
  for (const Scalar& s : w)
    if (!s.is_zero()) return std::nullopt;
  return expr;
}

bool SpanBuilder::contains(const std::vector<Scalar>& v) const {
  return coords(v).has_value();
}

}  // namespace wnlie
