#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "ck/errors.hpp"
#include "ck/linalg.hpp"

namespace ck {

using MetricField = std::function<Matrix(const Vector&)>;
using VectorMap = std::function<Vector(const Vector&)>;

struct FdOptions {
  double step = 1e-4;
  bool richardson = true;
};

namespace detail {

inline Matrix jacobian_once(const VectorMap& f, const Vector& x, double h) {
  Vector xp = x, xm = x;
  xp(0) += h;  // probe output size cheaply
  xm(0) -= h;
  const Vector f0 = (f(xp) - f(xm)) / (2.0 * h);
  Matrix j(f0.size(), x.size());
  j.col(0) = f0;
  for (int k = 1; k < x.size(); ++k) {
    Vector a = x, b = x;
    a(k) += h;
    b(k) -= h;
    j.col(k) = (f(a) - f(b)) / (2.0 * h);
  }
  return j;
}

}  // namespace detail

/// Jacobian of a smooth map by central differences; one Richardson step
/// removes the leading O(h^2) error term.
inline Matrix numeric_jacobian(const VectorMap& f, const Vector& x, const FdOptions& opts = {1e-5, true}) {
  const Matrix coarse = detail::jacobian_once(f, x, opts.step);
  if (!opts.richardson) return coarse;
  const Matrix fine = detail::jacobian_once(f, x, opts.step / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

/// Christoffel symbols of the second kind at x, from central differences of
/// the metric; result[l](i,j) = Gamma^l_{ij}.
inline std::vector<Matrix> christoffel_symbols(const MetricField& metric, const Vector& x,
                                               double h) {
  const int n = static_cast<int>(x.size());
  const Matrix g0 = metric(x);
  Eigen::FullPivLU<Matrix> lu(g0);
  if (!lu.isInvertible())
    throw degeneracy_error("metric is degenerate at the evaluation point");
  const Matrix ginv = lu.inverse();

  std::vector<Matrix> dg(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Vector a = x, b = x;
    a(k) += h;
    b(k) -= h;
    dg[static_cast<std::size_t>(k)] = (metric(a) - metric(b)) / (2.0 * h);
  }

  std::vector<Matrix> gamma(static_cast<std::size_t>(n), Matrix::Zero(n, n));
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double s = 0.0;
        for (int m = 0; m < n; ++m)
          s += ginv(l, m) * (dg[static_cast<std::size_t>(i)](m, j) +
                             dg[static_cast<std::size_t>(j)](m, i) -
                             dg[static_cast<std::size_t>(m)](i, j));
        gamma[static_cast<std::size_t>(l)](i, j) = 0.5 * s;
        gamma[static_cast<std::size_t>(l)](j, i) = 0.5 * s;
      }
  return gamma;
}

namespace detail {

inline double sectional_once(const MetricField& metric, const Vector& x, const Vector& u,
                             const Vector& v, double h) {
  const int n = static_cast<int>(x.size());
  const auto gamma = christoffel_symbols(metric, x, h);

  // dgamma[k][l](i,j) = d_k Gamma^l_{ij}
  std::vector<std::vector<Matrix>> dgamma(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Vector a = x, b = x;
    a(k) += h;
    b(k) -= h;
    const auto gp = christoffel_symbols(metric, a, h);
    const auto gm = christoffel_symbols(metric, b, h);
    auto& slot = dgamma[static_cast<std::size_t>(k)];
    slot.resize(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l)
      slot[static_cast<std::size_t>(l)] =
          (gp[static_cast<std::size_t>(l)] - gm[static_cast<std::size_t>(l)]) / (2.0 * h);
  }

  // w = R(u, v) v with R^l_{kij} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
  //                              + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik}
  Vector w = Vector::Zero(n);
  for (int l = 0; l < n; ++l) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (u(i) * v(j) == 0.0) continue;
        for (int k = 0; k < n; ++k) {
          double r = dgamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)](j, k) -
                     dgamma[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)](i, k);
          for (int m = 0; m < n; ++m)
            r += gamma[static_cast<std::size_t>(l)](i, m) * gamma[static_cast<std::size_t>(m)](j, k) -
                 gamma[static_cast<std::size_t>(l)](j, m) * gamma[static_cast<std::size_t>(m)](i, k);
          acc += r * u(i) * v(j) * v(k);
        }
      }
    w(l) = acc;
  }

  const Matrix g0 = metric(x);
  const double guu = u.dot(g0 * u);
  const double gvv = v.dot(g0 * v);
  const double guv = u.dot(g0 * v);
  const double den = guu * gvv - guv * guv;
  const double scale = std::max({std::abs(guu * gvv), guv * guv, 1e-30});
  if (std::abs(den) <= 1e-10 * std::max(scale, 1.0))
    throw degeneracy_error("tangent 2-plane is degenerate for this metric");
  return u.dot(g0 * w) / den;
}

}  // namespace detail

/// Sectional curvature K(u, v) at x by finite differences of the metric.
inline double sectional_curvature_fd(const MetricField& metric, const Vector& x, const Vector& u,
                                     const Vector& v, const FdOptions& opts = {}) {
  const double coarse = detail::sectional_once(metric, x, u, v, opts.step);
  if (!opts.richardson) return coarse;
  const double fine = detail::sectional_once(metric, x, u, v, opts.step / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

/// Pullback of a metric field through a smooth map: J^T g(f(x)) J.
inline Matrix pullback_metric(const VectorMap& f, const MetricField& metric, const Vector& x,
                              const FdOptions& opts = {1e-5, true}) {
  const Matrix j = numeric_jacobian(f, x, opts);
  return j.transpose() * metric(f(x)) * j;
}

/// Pullback of a constant ambient form through a smooth map: J^T A J.
inline Matrix pullback_form(const VectorMap& f, const Matrix& ambient_form, const Vector& x,
                            const FdOptions& opts = {1e-5, true}) {
  const Matrix j = numeric_jacobian(f, x, opts);
  return j.transpose() * ambient_form * j;
}

}  // namespace ck
