#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "centrafactor/error.hpp"
#include "centrafactor/linalg.hpp"

namespace centrafactor {

/// Smallest m whose leading eigenvalues sum to at least threshold·p,
/// p being the number of eigenvalues (the matrix dimension).
inline std::size_t retained_factor_count_by_variance(std::span<const double> eigenvalues,
                                                     double threshold = 0.99,
                                                     std::size_t dimension = 0) {
  const double p = static_cast<double>(dimension ? dimension : eigenvalues.size());
  double cumulative = 0.0;
  for (std::size_t m = 0; m < eigenvalues.size(); ++m) {
    cumulative += eigenvalues[m];
    if (cumulative >= threshold * p) return m + 1;
  }
  return dimension ? dimension : eigenvalues.size();
}

/// Loadings(i, j) = v_j(i)·√λ_j for the first m eigenpairs. Rounding-level
/// negative eigenvalues are clamped to 0.
inline Matrix initial_loadings(const EigenDecomposition& e, std::size_t m) {
  const std::size_t p = e.eigenvectors.rows();
  if (m < 1 || m > e.eigenvalues.size())
    throw ContractViolation("factor count " + std::to_string(m) + " outside [1, " +
                            std::to_string(e.eigenvalues.size()) + "]");
  Matrix l(p, m);
  for (std::size_t j = 0; j < m; ++j) {
    const double lambda = e.eigenvalues[j];
    if (lambda < -1e-9) throw ContractViolation("negative eigenvalue " + std::to_string(lambda));
    const double scale = std::sqrt(std::max(lambda, 0.0));
    for (std::size_t i = 0; i < p; ++i) l(i, j) = e.eigenvectors(i, j) * scale;
  }
  return l;
}

/// Row sums of squared loadings.
inline std::vector<double> communalities(const Matrix& loadings) {
  std::vector<double> h2(loadings.rows(), 0.0);
  for (std::size_t i = 0; i < loadings.rows(); ++i)
    for (double x : loadings.row(i)) h2[i] += x * x;
  return h2;
}

/// Kaiser's varimax criterion Σ_j [ mean_i ℓ⁴ − (mean_i ℓ²)² ].
inline double varimax_criterion(const Matrix& l) {
  const double p = static_cast<double>(l.rows());
  double total = 0.0;
  for (std::size_t j = 0; j < l.cols(); ++j) {
    double s2 = 0.0, s4 = 0.0;
    for (std::size_t i = 0; i < l.rows(); ++i) {
      const double sq = l(i, j) * l(i, j);
      s2 += sq;
      s4 += sq * sq;
    }
    total += s4 / p - (s2 / p) * (s2 / p);
  }
  return total;
}

struct VarimaxOptions {
  double tol = 1e-10;
  int max_sweeps = 500;
  bool kaiser_normalize = false;
};

struct VarimaxResult {
  Matrix loadings;  // input · rotation
  Matrix rotation;  // orthogonal m×m
  int sweeps = 0;
  std::vector<std::string> warnings;
};

namespace detail {

// Angle maximizing the criterion over the (j, k) plane. Over a planar
// rotation the criterion is a constant plus a sinusoid in 4φ, so the
// closed form is the exact optimum for the pair.
inline double varimax_pair_angle(const Matrix& l, std::size_t j, std::size_t k) {
  const double p = static_cast<double>(l.rows());
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    const double x = l(i, j), y = l(i, k);
    const double u = x * x - y * y;
    const double v = 2.0 * x * y;
    a += u;
    b += v;
    c += u * u - v * v;
    d += 2.0 * u * v;
  }
  const double num = d - 2.0 * a * b / p;
  const double den = c - (a * a - b * b) / p;
  return 0.25 * std::atan2(num, den);
}

inline void rotate_pair(Matrix& m, std::size_t j, std::size_t k, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double x = m(i, j), y = m(i, k);
    m(i, j) = c * x + s * y;
    m(i, k) = -s * x + c * y;
  }
}

}  // namespace detail

/// Orthogonal varimax rotation by cyclic pairwise planar rotations.
///
/// Sweeps every factor pair with its optimal angle until a sweep improves
/// the criterion by less than `tol`. The result's columns are ordered by
/// descending sum of squares and each is flipped so its largest-magnitude
/// entry is positive; `rotation` absorbs the reordering and flips, so
/// loadings == input · rotation always holds. With kaiser_normalize the
/// rows are scaled to unit length for the rotation and scaled back after.
inline VarimaxResult varimax(const Matrix& input, const VarimaxOptions& opts = {}) {
  const std::size_t p = input.rows();
  const std::size_t m = input.cols();
  VarimaxResult out{input, Matrix::identity(m), 0, {}};
  if (m < 2) return out;

  std::vector<double> row_scale(p, 1.0);
  Matrix work = input;
  if (opts.kaiser_normalize) {
    const auto h2 = communalities(input);
    for (std::size_t i = 0; i < p; ++i) {
      if (h2[i] <= 0.0) continue;
      row_scale[i] = std::sqrt(h2[i]);
      for (std::size_t j = 0; j < m; ++j) work(i, j) /= row_scale[i];
    }
  }

  Matrix rot = Matrix::identity(m);
  double criterion = varimax_criterion(work);
  bool converged = false;
  while (out.sweeps < opts.max_sweeps) {
    ++out.sweeps;
    for (std::size_t j = 0; j + 1 < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const double phi = detail::varimax_pair_angle(work, j, k);
        detail::rotate_pair(work, j, k, phi);
        detail::rotate_pair(rot, j, k, phi);
      }
    const double next = varimax_criterion(work);
    const double gain = next - criterion;
    criterion = next;
    if (gain < opts.tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    out.warnings.push_back("varimax did not converge within " + std::to_string(opts.max_sweeps) +
                           " sweeps");

  // Recompute from the accumulated rotation so loadings = input · rotation
  // holds to rounding, independent of the per-sweep updates.
  Matrix rotated = input * rot;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> col_ss(m, 0.0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < p; ++i) col_ss[j] += rotated(i, j) * rotated(i, j);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return col_ss[a] > col_ss[b]; });

  out.loadings = Matrix(p, m);
  out.rotation = Matrix(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    auto col = rotated.column(order[j]);
    auto rcol = rot.column(order[j]);
    const auto before = col;
    canonicalize_sign(col);
    if (!before.empty() && col != before)
      for (double& r : rcol) r = -r;
    out.loadings.set_column(j, col);
    out.rotation.set_column(j, rcol);
  }
  return out;
}

/// For each row, every factor whose |loading| is within tie_tol of the row
/// maximum. Factor indices are 0-based.
inline std::vector<std::vector<std::size_t>> dominant_factor_map(const Matrix& loadings,
                                                                 double tie_tol = 1e-6) {
  std::vector<std::vector<std::size_t>> out(loadings.rows());
  for (std::size_t i = 0; i < loadings.rows(); ++i) {
    double best = 0.0;
    for (double x : loadings.row(i)) best = std::max(best, std::abs(x));
    for (std::size_t j = 0; j < loadings.cols(); ++j)
      if (std::abs(loadings(i, j)) >= best - tie_tol) out[i].push_back(j);
  }
  return out;
}

struct FitOptions {
  double communality_threshold = 0.98;
  double variance_threshold = 0.99;
  std::size_t max_factors = 3;
  double tie_tol = 1e-6;
  VarimaxOptions varimax;
};

struct FactorModel {
  std::size_t factor_count = 0;
  std::size_t variance_retention_count = 0;
  Matrix loadings;  // rotated, p×m
  std::vector<double> communalities;
  std::vector<std::vector<std::size_t>> dominant;  // 0-based factor indices per metric
  Matrix rotation;
  bool kaiser_normalize = false;
  std::vector<std::string> warnings;

  bool operator==(const FactorModel&) const = default;
};

/// Tries m = 1, 2, ... max_factors on an eigenstructure and keeps the
/// smallest m whose rotated loadings give every metric a communality of at
/// least the threshold. `e` may hold only the leading eigenpairs; the
/// variance rule is always measured against the eigenvector dimension.
inline FactorModel fit_factor_model(const EigenDecomposition& e, const FitOptions& opts = {}) {
  const std::size_t p = e.eigenvectors.rows();
  const std::size_t limit = std::min({opts.max_factors, p, e.eigenvalues.size()});
  std::vector<double> last_h2;
  for (std::size_t m = 1; m <= limit; ++m) {
    const Matrix initial = initial_loadings(e, m);
    VarimaxResult rotated = varimax(initial, opts.varimax);
    auto h2 = communalities(rotated.loadings);
    if (*std::min_element(h2.begin(), h2.end()) >= opts.communality_threshold) {
      FactorModel model;
      model.factor_count = m;
      model.variance_retention_count =
          retained_factor_count_by_variance(e.eigenvalues, opts.variance_threshold, p);
      model.dominant = dominant_factor_map(rotated.loadings, opts.tie_tol);
      model.loadings = std::move(rotated.loadings);
      model.communalities = std::move(h2);
      model.rotation = std::move(rotated.rotation);
      model.kaiser_normalize = opts.varimax.kaiser_normalize;
      model.warnings = std::move(rotated.warnings);
      return model;
    }
    last_h2 = std::move(h2);
  }
  throw ModelNotFound(limit, last_h2);
}

/// Eigendecomposes a correlation matrix and fits as above.
inline FactorModel fit_factor_model(const Matrix& correlation, const FitOptions& opts = {}) {
  return fit_factor_model(jacobi_eigen(correlation), opts);
}

}  // namespace centrafactor
