#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g2solv/field.hpp"

namespace g2solv {

template <class S>
using Vector = std::vector<S>;

/// Pivot / singular-value threshold for rank decisions in double precision.
inline constexpr double kNumericRankTolerance = 1e-10;

/// Dense row-major matrix over a scalar field.
template <Field S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, FieldTraits<S>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldTraits<S>::one();
    return m;
  }

  /// Stacks blocks with equal column count on top of each other.
  static Matrix vstack(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = 0;
    const std::size_t cols = blocks.front().cols();
    for (const auto& b : blocks) {
      if (b.cols() != cols) throw InvalidInput("vstack: column counts differ");
      rows += b.rows();
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
      std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(r0 * cols));
      r0 += b.rows();
    }
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& x) { return FieldTraits<S>::is_zero(x); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    Matrix<T> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Vector<S> apply(std::span<const S> v) const {
    if (v.size() != cols_) throw InvalidInput("matrix-vector size mismatch");
    Vector<S> out(rows_, FieldTraits<S>::zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      S acc = FieldTraits<S>::zero();
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!FieldTraits<S>::is_zero((*this)(i, j))) acc += (*this)(i, j) * v[j];
      }
      out[i] = std::move(acc);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (FieldTraits<S>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!FieldTraits<S>::is_zero(b(k, j))) out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
template <class S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination. Exact fields pivot on the first nonzero entry;
/// double uses partial pivoting and treats |x| < tol as zero.
template <Field S>
Echelon<S> row_reduce(Matrix<S> m, double tol = kNumericRankTolerance) {
  using FT = FieldTraits<S>;
  const auto negligible = [tol](const S& x) {
    if constexpr (FT::exact) {
      return FT::is_zero(x);
    } else {
      return FT::magnitude(x) < tol;
    }
  };
  Echelon<S> out;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    std::optional<std::size_t> pivot;
    double best = 0.0;
    for (std::size_t r = prow; r < m.rows(); ++r) {
      if (negligible(m(r, col))) continue;
      if constexpr (FT::exact) {
        pivot = r;
        break;
      } else {
        if (FT::magnitude(m(r, col)) > best) {
          best = FT::magnitude(m(r, col));
          pivot = r;
        }
      }
    }
    if (!pivot) continue;
    if (*pivot != prow) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(prow, c), m(*pivot, c));
    }
    const S inv = FT::one() / m(prow, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(prow, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || FT::is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!FT::is_zero(m(prow, c))) m(r, c) -= factor * m(prow, c);
      }
      if constexpr (!FT::exact) m(r, col) = 0.0;
    }
    out.pivot_cols.push_back(col);
    ++prow;
  }
  out.reduced = std::move(m);
  return out;
}

namespace detail {
std::vector<Vector<double>> numeric_kernel(const Matrix<double>& m, double tol);
}

/// Basis of the nullspace. Exact fields: every returned v satisfies m*v = 0
/// identically. double: right singular vectors with singular value < tol.
template <Field S>
std::vector<Vector<S>> kernel(const Matrix<S>& m, double tol = kNumericRankTolerance) {
  if constexpr (!FieldTraits<S>::exact) {
    return detail::numeric_kernel(m, tol);
  } else {
    const Echelon<S> e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vector<S>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) continue;
      Vector<S> v(m.cols(), FieldTraits<S>::zero());
      v[free] = FieldTraits<S>::one();
      for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }
}

template <class S>
struct LinearSolution {
  enum class Status { unique, affine, inconsistent };
  Status status = Status::inconsistent;
  Vector<S> particular;
  std::vector<Vector<S>> kernel;
  /// Index of an original equation that reduces to 0 = nonzero.
  std::optional<std::size_t> inconsistent_row;

  bool consistent() const { return status != Status::inconsistent; }
};

/// Solves m*x = rhs exactly. Underdetermined systems return the affine
/// solution set as particular solution plus kernel basis.
template <ExactField S>
LinearSolution<S> solve_linear(const Matrix<S>& m, std::span<const S> rhs) {
  if (rhs.size() != m.rows()) throw InvalidInput("solve_linear: rhs length does not match rows");
  // Augment with the rhs and an identity block that tracks row operations,
  // so an inconsistent reduced row can be traced back to an original row.
  const std::size_t n = m.cols();
  Matrix<S> aug(m.rows(), n + 1 + m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
    aug(r, n + 1 + r) = FieldTraits<S>::one();
  }
  // Only eliminate on the coefficient columns.
  Echelon<S> e;
  {
    Matrix<S> work = aug;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < n && prow < work.rows(); ++col) {
      std::optional<std::size_t> pivot;
      for (std::size_t r = prow; r < work.rows(); ++r) {
        if (!FieldTraits<S>::is_zero(work(r, col))) {
          pivot = r;
          break;
        }
      }
      if (!pivot) continue;
      if (*pivot != prow)
        for (std::size_t c = 0; c < work.cols(); ++c) std::swap(work(prow, c), work(*pivot, c));
      const S inv = FieldTraits<S>::one() / work(prow, col);
      for (std::size_t c = 0; c < work.cols(); ++c) work(prow, c) *= inv;
      for (std::size_t r = 0; r < work.rows(); ++r) {
        if (r == prow || FieldTraits<S>::is_zero(work(r, col))) continue;
        const S factor = work(r, col);
        for (std::size_t c = 0; c < work.cols(); ++c)
          if (!FieldTraits<S>::is_zero(work(prow, c))) work(r, c) -= factor * work(prow, c);
      }
      e.pivot_cols.push_back(col);
      ++prow;
    }
    e.reduced = std::move(work);
  }

  LinearSolution<S> sol;
  for (std::size_t r = e.rank(); r < m.rows(); ++r) {
    if (!FieldTraits<S>::is_zero(e.reduced(r, n))) {
      sol.status = LinearSolution<S>::Status::inconsistent;
      // Any original row with a nonzero multiplier participates; report the last one.
      for (std::size_t k = 0; k < m.rows(); ++k)
        if (!FieldTraits<S>::is_zero(e.reduced(r, n + 1 + k))) sol.inconsistent_row = k;
      return sol;
    }
  }
  sol.particular.assign(n, FieldTraits<S>::zero());
  for (std::size_t r = 0; r < e.rank(); ++r) sol.particular[e.pivot_cols[r]] = e.reduced(r, n);
  sol.kernel = kernel(m);
  sol.status = sol.kernel.empty() ? LinearSolution<S>::Status::unique : LinearSolution<S>::Status::affine;
  return sol;
}

/// Max-magnitude entry of m*v; exactly zero for exact kernels.
template <Field S>
double residual_magnitude(const Matrix<S>& m, std::span<const S> v) {
  double worst = 0.0;
  for (const S& x : m.apply(v)) worst = std::max(worst, FieldTraits<S>::magnitude(x));
  return worst;
}

}  // namespace g2solv
