#include "cy2/matrix.hpp"

#include <cassert>

namespace cy2 {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Rat& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

std::optional<Mat> Mat::inverse() const {
  assert(rows_ == cols_);
  int n = rows_;
  Mat work = *this;
  Mat inv = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    Rat p = work.at(col, col);
    for (int c = 0; c < n; ++c) {
      work.at(col, c) /= p;
      inv.at(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = work.at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) {
        work.at(r, c) -= f * work.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

int rank(const Mat& m) {
  // Clear denominators row by row, then Bareiss fraction-free elimination.
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (int i = 0; i < rows; ++i) {
    Int lcm = 1;
    for (int j = 0; j < cols; ++j) {
      Int d = denominator(m.at(i, j));
      lcm = boost::multiprecision::lcm(lcm, d);
    }
    for (int j = 0; j < cols; ++j) {
      const Rat& x = m.at(i, j);
      a[i][j] = numerator(x) * (lcm / denominator(x));
    }
  }
  int r = 0;
  Int prev = 1;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

std::vector<std::vector<Rat>> nullspace(const Mat& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    Rat p = a[r][col];
    for (int j = col; j < cols; ++j) a[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rat f = a[i][col];
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols);
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool SpanBasis::insert(std::vector<Rat> v) {
  assert(static_cast<int>(v.size()) == dim_);
  for (size_t i = 0; i < rows_.size(); ++i) {
    Rat x = v[pivots_[i]];  // by value: the loop overwrites v[pivots_[i]]
    if (x == 0) continue;
    for (int j = 0; j < dim_; ++j) v[j] -= x * rows_[i][j];
  }
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Rat p = v[pivot];
  for (int j = 0; j < dim_; ++j) v[j] /= p;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool SpanBasis::contains(std::vector<Rat> v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    Rat x = v[pivots_[i]];
    if (x == 0) continue;
    for (int j = 0; j < dim_; ++j) v[j] -= x * rows_[i][j];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace cy2
