#pragma once

#include "cy2/rational.hpp"

#include <optional>
#include <vector>

namespace cy2 {

/// Dense matrix over exact rationals. Row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Rat& s) const;

  /// Gauss-Jordan inverse; nullopt if singular.
  std::optional<Mat> inverse() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Rank by fraction-free (Bareiss) elimination after clearing denominators.
int rank(const Mat& m);

/// Basis of the right nullspace {x : Mx = 0}, via rational RREF.
/// Each basis vector has length m.cols().
std::vector<std::vector<Rat>> nullspace(const Mat& m);

/// Incremental span of vectors in k^dim, kept in echelon form.
/// Used for word-span closures (simplicity and cyclicity certificates).
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  /// Reduces v against the basis; if independent, inserts it and returns true.
  bool insert(std::vector<Rat> v);
  bool contains(std::vector<Rat> v) const;

  int size() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  bool full() const { return size() == dim_; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  int dim_;
  std::vector<std::vector<Rat>> rows_;  // echelon: pivots_[i] = pivot column of rows_[i]
  std::vector<int> pivots_;
};

}  // namespace cy2
