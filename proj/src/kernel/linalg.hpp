#pragma once

#include <optional>
#include <vector>

#include "kernel/scalar.hpp"

namespace wnlie {

/// Dense matrix over the exact scalar field.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
  static Mat identity(int d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[idx(i, j)]; }
  const Scalar& at(int i, int j) const { return a_[idx(i, j)]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
           static_cast<size_t>(j);
  }
  int rows_, cols_;
  std::vector<Scalar> a_;
};

Mat mat_commutator(const Mat& a, const Mat& b);
Mat mat_pow(const Mat& a, int k);

int rank(Mat m);
Scalar det(Mat m);

/// Basis of the right nullspace {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(const Mat& m);

/// One exact solution of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b);

/// Incremental span of row vectors with coordinate recovery: insert() keeps a
/// reduced echelon copy plus the expression of each pivot row over the
/// vectors that were actually added (dependent vectors are discarded and get
/// no index); coords() writes a vector in terms of the added vectors.
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim) {}

  /// Returns the index of the newly added vector, or nullopt if dependent.
  std::optional<int> insert(const std::vector<Scalar>& v);
  std::optional<std::vector<Scalar>> coords(const std::vector<Scalar>& v) const;
  bool contains(const std::vector<Scalar>& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

 private:
  struct Row {
    std::vector<Scalar> vec;   // reduced, leading entry 1
    std::vector<Scalar> expr;  // coordinates over added vectors
    int pivot;
  };
  void reduce(std::vector<Scalar>& v, std::vector<Scalar>& expr) const;

  int dim_;
  int added_ = 0;
  std::vector<Row> rows_;
};

}  // namespace wnlie
