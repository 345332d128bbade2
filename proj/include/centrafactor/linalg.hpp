#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "centrafactor/error.hpp"

namespace centrafactor {

/// Dense row-major matrix of doubles. Only what the small symmetric
/// problems in this library need.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Row-major initializer, e.g. from_rows({{1, 2}, {3, 4}}).
  static Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw ContractViolation("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double> column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void set_column(std::size_t c, std::span<const double> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  std::vector<std::vector<double>> to_rows() const {
    std::vector<std::vector<double>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ContractViolation("matrix product dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

/// Largest absolute entry of a - b.
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ContractViolation("shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

inline double trace(const Matrix& a) {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

/// Aligned decimal table for debug output.
inline std::string to_string(const Matrix& m, int precision = 4) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%*.*f", precision + 5, precision, m(i, j));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

inline double mean(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

/// Population (divide-by-n) variance.
inline double population_variance(std::span<const double> xs) {
  const double mu = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return ss / static_cast<double>(xs.size());
}

namespace detail {

// Relative zero-variance test: spreads below ~1e-12 of the column scale
// are rounding noise (e.g. centralities of vertex-transitive graphs).
inline bool is_degenerate(std::span<const double> xs, double variance) {
  double scale = 0.0;
  for (double x : xs) scale = std::max(scale, std::abs(x));
  return !(variance > 0.0) || std::sqrt(variance) <= 1e-12 * std::max(scale, 1e-300);
}

inline std::string column_name(std::span<const std::string> names, std::size_t c) {
  return c < names.size() ? names[c] : "column " + std::to_string(c);
}

}  // namespace detail

/// Z-scores every column (mean 0, population sd 1). `names` labels columns
/// in DegenerateColumn errors.
inline Matrix standardize_columns(const Matrix& m, std::span<const std::string> names = {}) {
  if (m.rows() == 0) throw ContractViolation("standardize_columns of an empty matrix");
  Matrix z(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto col = m.column(c);
    const double mu = mean(col);
    const double var = population_variance(col);
    if (detail::is_degenerate(col, var)) throw DegenerateColumn(c, detail::column_name(names, c));
    const double sd = std::sqrt(var);
    for (std::size_t r = 0; r < m.rows(); ++r) z(r, c) = (col[r] - mu) / sd;
  }
  return z;
}

/// Pearson correlation matrix of the columns, computed as (1/n) ZᵀZ of the
/// standardized data. The diagonal is set to exactly 1.
inline Matrix correlation_matrix(const Matrix& data, std::span<const std::string> names = {}) {
  if (data.rows() < 3) throw ContractViolation("correlation_matrix needs at least 3 rows");
  const Matrix z = standardize_columns(data, names);
  const std::size_t p = z.cols();
  const double n = static_cast<double>(z.rows());
  Matrix r(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    r(i, i) = 1.0;
    for (std::size_t j = i + 1; j < p; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < z.rows(); ++k) s += z(k, i) * z(k, j);
      const double rho = std::clamp(s / n, -1.0, 1.0);
      r(i, j) = r(j, i) = rho;
    }
  }
  return r;
}

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  Matrix eigenvectors;              // column j pairs with eigenvalues[j]
};

/// Flips the sign of `v` so its largest-magnitude entry is positive; ties
/// (within 1e-12) go to the lowest index.
inline void canonicalize_sign(std::span<double> v) {
  double largest = 0.0;
  for (double x : v) largest = std::max(largest, std::abs(x));
  for (double& x : v) {
    if (std::abs(x) >= largest - 1e-12) {
      if (x < 0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

inline void canonicalize_column_signs(Matrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto col = m.column(c);
    canonicalize_sign(col);
    m.set_column(c, col);
  }
}

/// Cyclic Jacobi eigensolver for real symmetric matrices.
///
/// Sweeps over all (p, q) pairs with the classical stable rotation until
/// the off-diagonal Frobenius norm drops below `tol`. Eigenpairs come
/// back sorted by descending eigenvalue with canonical eigenvector signs.
inline EigenDecomposition jacobi_eigen(const Matrix& input, double tol = 1e-12,
                                       int max_sweeps = 100) {
  const std::size_t n = input.rows();
  if (n == 0 || input.cols() != n) throw ContractViolation("jacobi_eigen needs a square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(input(i, j) - input(j, i)) > 1e-12)
        throw ContractViolation("jacobi_eigen input is not symmetric");

  Matrix a = input;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);
  Matrix v = Matrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (double off = off_norm(); off >= tol; off = off_norm()) {
    if (sweep++ == max_sweeps) throw NumericalError("Jacobi eigensolver did not converge", off);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Negligible against both diagonal entries: zero it outright.
        if (sweep > 3 && std::abs(apq) * 1e18 < std::abs(a(p, p)) &&
            std::abs(apq) * 1e18 < std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    auto col = v.column(order[j]);
    canonicalize_sign(col);
    out.eigenvectors.set_column(j, col);
  }
  return out;
}

/// V·diag(λ)·Vᵀ.
inline Matrix reconstruct(const EigenDecomposition& e) {
  const Matrix& v = e.eigenvectors;
  Matrix out(v.rows(), v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.rows(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < e.eigenvalues.size(); ++k) s += v(i, k) * e.eigenvalues[k] * v(j, k);
      out(i, j) = s;
    }
  return out;
}

}  // namespace centrafactor
