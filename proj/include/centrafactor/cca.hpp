#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "centrafactor/error.hpp"
#include "centrafactor/linalg.hpp"

namespace centrafactor {

enum class Regime { StrongPositive, StrongNegative, WeakModerate };

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::StrongPositive: return "strong_positive";
    case Regime::StrongNegative: return "strong_negative";
    case Regime::WeakModerate: return "weak_moderate";
  }
  return "unknown";
}

inline Regime regime_from_string(const std::string& s) {
  if (s == "strong_positive") return Regime::StrongPositive;
  if (s == "strong_negative") return Regime::StrongNegative;
  if (s == "weak_moderate") return Regime::WeakModerate;
  throw ContractViolation("unknown regime '" + s + "'");
}

inline Regime classify_regime(double ccc, double strong_threshold = 0.79) {
  if (ccc >= strong_threshold) return Regime::StrongPositive;
  if (ccc <= -strong_threshold) return Regime::StrongNegative;
  return Regime::WeakModerate;
}

struct CcaResult {
  double ccc = 0.0;
  std::array<double, 2> weights_x{};  // on standardized columns
  std::array<double, 2> weights_y{};
  Regime regime = Regime::WeakModerate;

  bool operator==(const CcaResult&) const = default;
};

namespace detail {

using Mat2 = std::array<std::array<double, 2>, 2>;

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

inline Mat2 transpose(const Mat2& a) { return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }

inline Mat2 inverse_checked(const Mat2& a, const char* set_name) {
  // Eigenvalues of a symmetric 2×2 covariance for the condition number.
  const double mid = 0.5 * (a[0][0] + a[1][1]);
  const double rad = std::hypot(0.5 * (a[0][0] - a[1][1]), a[0][1]);
  const double hi = mid + rad;
  const double lo = mid - rad;
  if (!(lo > 0.0) || hi / lo >= 1e12)
    throw DegenerateSet(std::string(set_name) + " covariance is singular or ill-conditioned");
  const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  return {{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
}

inline void orient(std::array<double, 2>& w) {
  const double norm = std::hypot(w[0], w[1]);
  w[0] /= norm;
  w[1] /= norm;
  if (w[0] < 0.0 || (w[0] == 0.0 && w[1] < 0.0)) {
    w[0] = -w[0];
    w[1] = -w[1];
  }
}

}  // namespace detail

/// First canonical correlation between two column pairs.
///
/// Both sets are z-scored; |ccc|² is the top eigenvalue of
/// Σxx⁻¹ Σxy Σyy⁻¹ Σyx (2×2, closed form). Each weight vector is unit
/// length with a nonnegative first component, and the sign of the
/// returned ccc is the correlation of the variates under that orientation.
inline CcaResult cca_first(const Matrix& x, const Matrix& y, double strong_threshold = 0.79,
                           std::span<const std::string> names = {}) {
  if (x.cols() != 2 || y.cols() != 2) throw ContractViolation("cca_first expects two n×2 sets");
  if (x.rows() != y.rows()) throw ContractViolation("cca_first sets differ in row count");
  if (x.rows() < 4) throw ContractViolation("cca_first needs at least 4 rows");

  const std::span<const std::string> x_names = names.size() >= 4 ? names.subspan(0, 2) : names;
  const std::span<const std::string> y_names =
      names.size() >= 4 ? names.subspan(2, 2) : std::span<const std::string>{};
  const Matrix zx = standardize_columns(x, x_names);
  const Matrix zy = standardize_columns(y, y_names);
  const double n = static_cast<double>(x.rows());

  auto cross = [&](const Matrix& a, const Matrix& b) {
    detail::Mat2 c{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i) * b(r, j);
        c[i][j] = s / n;
      }
    return c;
  };
  const auto sxx = cross(zx, zx);
  const auto syy = cross(zy, zy);
  const auto sxy = cross(zx, zy);
  const auto syx = detail::transpose(sxy);

  const auto sxx_inv = detail::inverse_checked(sxx, "x-set");
  const auto syy_inv = detail::inverse_checked(syy, "y-set");
  const auto product = detail::mul(detail::mul(sxx_inv, sxy), detail::mul(syy_inv, syx));

  // Top eigenpair of the (non-symmetric, real-spectrum) 2×2 product.
  const double a = product[0][0], b = product[0][1], c = product[1][0], d = product[1][1];
  const double half_trace = 0.5 * (a + d);
  const double disc = std::max(0.0, 0.25 * (a - d) * (a - d) + b * c);
  const double lambda = half_trace + std::sqrt(disc);
  std::array<double, 2> wx{b, lambda - a};
  const std::array<double, 2> alt{lambda - d, c};
  if (std::hypot(alt[0], alt[1]) > std::hypot(wx[0], wx[1])) wx = alt;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), 1e-300});
  if (std::hypot(wx[0], wx[1]) <= 1e-12 * scale) wx = {1.0, 0.0};  // product ∝ I: any direction
  detail::orient(wx);

  const auto m = detail::mul(syy_inv, syx);
  std::array<double, 2> wy{m[0][0] * wx[0] + m[0][1] * wx[1], m[1][0] * wx[0] + m[1][1] * wx[1]};
  if (std::hypot(wy[0], wy[1]) == 0.0) wy = {1.0, 0.0};  // uncorrelated sets
  detail::orient(wy);

  // Pearson correlation of the variates zx·wx and zy·wy.
  auto quad = [](const detail::Mat2& s, const std::array<double, 2>& u, const std::array<double, 2>& v) {
    return u[0] * (s[0][0] * v[0] + s[0][1] * v[1]) + u[1] * (s[1][0] * v[0] + s[1][1] * v[1]);
  };
  const double ccc = std::clamp(quad(sxy, wx, wy) / std::sqrt(quad(sxx, wx, wx) * quad(syy, wy, wy)),
                                -1.0, 1.0);
  return {ccc, wx, wy, classify_regime(ccc, strong_threshold)};
}

}  // namespace centrafactor
