#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stod/exec.hpp"

namespace stod {

// Dense row-major matrix of doubles. Small bespoke type instead of a
// linear-algebra library: every numeric kernel in this project needs an
// explicit serial loop and an OpenMP loop over independent rows/entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
  }

  static Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows_; ++r) {
      if (static_cast<int>(rows[r].size()) != m.cols_)
        throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(int r, int c) { return data_[idx(r, c)]; }
  double operator()(int r, int c) const { return data_[idx(r, c)]; }

  double* row(int r) { return data_.data() + idx(r, 0); }
  const double* row(int r) const { return data_.data() + idx(r, 0); }
  std::span<const double> row_span(int r) const {
    return {data_.data() + idx(r, 0), static_cast<std::size_t>(cols_)};
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  void fill(double v) { data_.assign(data_.size(), v); }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  Matrix& add_in_place(const Matrix& o) {
    if (!same_shape(o)) throw std::invalid_argument("Matrix::add_in_place: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

using Vector = std::vector<double>;

inline void check_shapes(const Matrix& a, const Matrix& b, const char* where) {
  if (a.cols() != b.rows())
    throw std::invalid_argument(std::string(where) + ": shape mismatch " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " * " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
}

// C = A * B. Rows of C are independent work items, so the parallel path
// is bit-identical to the serial one.
inline Matrix matmul(const Matrix& a, const Matrix& b, Exec exec = Exec::Serial) {
  check_shapes(a, b, "matmul");
  Matrix c(a.rows(), b.cols());
  const long n = a.rows();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
  for (long i = 0; i < n; ++i) {
    const double* arow = a.row(static_cast<int>(i));
    double* crow = c.row(static_cast<int>(i));
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = arow[k];
      if (aik == 0.0) continue;
      const double* brow = b.row(k);
      for (int j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  (void)exec;
  return c;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_norm(std::span<const double> a) { return dot(a, a); }

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::fabs(a(r, c) - b(r, c)));
  return m;
}

}  // namespace stod
