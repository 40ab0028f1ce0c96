#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ck/errors.hpp"
#include "ck/linalg.hpp"
#include "ck/numeric.hpp"
#include "ck/signature.hpp"
#include "ck/trig.hpp"
#include "ck/vector_rep.hpp"

namespace ck {

namespace tol {
inline constexpr double chart = 1e-10;     // |x^0| (or chart denominator) below this is off-chart
inline constexpr double on_sphere = 1e-8;  // accepted constraint residual on input points
inline constexpr double identity = 1e-12;  // default for algebraic identities
}  // namespace tol

/// Ambient coordinates (x^0, ..., x^N) of a point of the rank-one space,
/// constrained to the unit "sphere" of the invariant form.
struct WeierstrassPoint {
  Vector coords;
};

/// Projective chart eta^i = x^i / x^0 on the x^0 > 0 patch.
struct BeltramiPoint {
  Vector coords;
};

/// Geodesic parallel coordinates (a^1, ..., a^N).
struct ParallelCoords {
  Vector coords;
};

/// Geodesic polar coordinates (theta^1 radial, theta^2..theta^N angular).
struct PolarCoords {
  Vector coords;
};

enum class Chart { beltrami, parallel, polar, fiber };

inline const char* chart_name(Chart c) {
  switch (c) {
    case Chart::beltrami: return "beltrami";
    case Chart::parallel: return "parallel";
    case Chart::polar: return "polar";
    default: return "fiber";
  }
}

struct MetricAtPoint {
  Matrix matrix;
  Chart chart = Chart::beltrami;
};

/// One invariant foliation: the position (1-based) of the vanished constant
/// in the signature, its rank-adapted display name, and the signatures of
/// the space of leaves (base) and of each leaf (fiber).
struct FoliationEntry {
  int omega_position = 0;
  std::string selector;
  OmegaSignature base;
  OmegaSignature fiber;
};

struct FoliationReport {
  std::vector<FoliationEntry> entries;
  bool empty() const { return entries.empty(); }
};

inline WeierstrassPoint origin(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  Vector x = Vector::Zero(n + 1);
  x(0) = 1.0;
  return {x};
}

/// | (x^0)^2 + sum_l omega_{0l} (x^l)^2 - 1 |
inline double sphere_residual(const OmegaSignature& sig, const WeierstrassPoint& p) {
  const int n = sig.n();
  if (p.coords.size() != n + 1) throw std::invalid_argument("point dimension mismatch");
  double s = p.coords(0) * p.coords(0);
  for (int l = 1; l <= n; ++l) s += sig.product(0, l) * p.coords(l) * p.coords(l);
  return std::abs(s - 1.0);
}

/// Linear action of a group element on Weierstrass coordinates.
inline WeierstrassPoint act(const GroupElement& e, const WeierstrassPoint& p) {
  if (e.matrix.rows() != p.coords.size()) throw std::invalid_argument("dimension mismatch");
  if (sphere_residual(e.signature, p) > tol::on_sphere)
    throw std::invalid_argument("input point violates the sphere constraint");
  return {e.matrix * p.coords};
}

inline WeierstrassPoint parallel_to_weierstrass(const OmegaSignature& sig,
                                                const ParallelCoords& a) {
  const int n = sig.n();
  if (a.coords.size() != n) throw std::invalid_argument("coordinate dimension mismatch");
  Vector x(n + 1);
  // Trailing products of labeled cosines: tail(i) = prod_{l=i..N} Ck(a^l).
  std::vector<double> tail(static_cast<std::size_t>(n) + 2, 1.0);
  for (int l = n; l >= 1; --l)
    tail[static_cast<std::size_t>(l)] =
        ck_cosine(sig.product(0, l), a.coords(l - 1)) * tail[static_cast<std::size_t>(l) + 1];
  x(0) = tail[1];
  for (int i = 1; i <= n; ++i)
    x(i) = ck_sine(sig.product(0, i), a.coords(i - 1)) * tail[static_cast<std::size_t>(i) + 1];
  return {x};
}

/// exp(theta^N J_{N-1,N}) ... exp(theta^2 J_{12}) exp(theta^1 P_1) applied
/// to the origin, innermost factor first.
inline WeierstrassPoint polar_to_weierstrass(const OmegaSignature& sig, const PolarCoords& t) {
  const int n = sig.n();
  if (t.coords.size() != n) throw std::invalid_argument("coordinate dimension mismatch");
  Vector x = origin(n).coords;
  for (int j = 1; j <= n; ++j)
    x = one_param_subgroup_matrix(sig, GeneratorIndex(j - 1, j), t.coords(j - 1)) * x;
  return {x};
}

inline BeltramiPoint weierstrass_to_beltrami(const WeierstrassPoint& p,
                                             double chart_tol = tol::chart) {
  const int n = static_cast<int>(p.coords.size()) - 1;
  if (n < 1) throw std::invalid_argument("point has too few coordinates");
  if (std::abs(p.coords(0)) <= chart_tol)
    throw chart_error("point lies outside the Beltrami chart (x^0 too small)");
  Vector eta(n);
  for (int i = 1; i <= n; ++i) eta(i - 1) = p.coords(i) / p.coords(0);
  return {eta};
}

/// Matrix of the main metric at the origin:
/// diag(1, kappa_{12}, ..., kappa_{1N}) = diag(1, omega_2, omega_2 omega_3, ...).
inline MetricAtPoint metric_at_origin_rank1(const OmegaSignature& sig) {
  const int n = sig.n();
  Matrix m = Matrix::Zero(n, n);
  for (int i = 1; i <= n; ++i) m(i - 1, i - 1) = sig.product(1, i);
  return {m, Chart::beltrami};
}

/// Inverse of the Beltrami chart on the x^0 > 0 patch.
inline WeierstrassPoint beltrami_to_weierstrass(const OmegaSignature& sig,
                                                const BeltramiPoint& pt) {
  const int n = sig.n();
  if (pt.coords.size() != n) throw std::invalid_argument("coordinate dimension mismatch");
  const Matrix lambda = metric_at_origin_rank1(sig).matrix;
  const double denom = 1.0 + sig.omega(1) * pt.coords.dot(lambda * pt.coords);
  if (denom <= tol::chart)
    throw chart_error("point lies outside the x^0 > 0 Beltrami patch");
  const double x0 = 1.0 / std::sqrt(denom);
  Vector x(n + 1);
  x(0) = x0;
  for (int i = 1; i <= n; ++i) x(i) = pt.coords(i - 1) * x0;
  return {x};
}

/// Main metric in Beltrami coordinates:
/// [(1 + k1 |eta|^2) |deta|^2 - k1 <eta|deta>^2] / (1 + k1 |eta|^2)^2,
/// norms taken with the origin form Lambda^(1).
inline MetricAtPoint beltrami_metric(const OmegaSignature& sig, const BeltramiPoint& pt) {
  const int n = sig.n();
  if (pt.coords.size() != n) throw std::invalid_argument("coordinate dimension mismatch");
  const double k1 = sig.omega(1);
  const Matrix lambda = metric_at_origin_rank1(sig).matrix;
  const Vector w = lambda * pt.coords;
  const double denom = 1.0 + k1 * pt.coords.dot(w);
  if (std::abs(denom) <= tol::chart)
    throw chart_error("point lies on the singular locus of the Beltrami metric");
  Matrix g = (denom * lambda - k1 * w * w.transpose()) / (denom * denom);
  return {g, Chart::beltrami};
}

/// Main metric in geodesic parallel coordinates (diagonal).
inline MetricAtPoint parallel_metric(const OmegaSignature& sig, const ParallelCoords& a) {
  const int n = sig.n();
  if (a.coords.size() != n) throw std::invalid_argument("coordinate dimension mismatch");
  std::vector<double> tail(static_cast<std::size_t>(n) + 2, 1.0);
  for (int l = n; l >= 2; --l) {
    const double c = ck_cosine(sig.product(0, l), a.coords(l - 1));
    tail[static_cast<std::size_t>(l)] = c * c * tail[static_cast<std::size_t>(l) + 1];
  }
  Matrix g = Matrix::Zero(n, n);
  g(0, 0) = tail[2];
  for (int i = 2; i <= n; ++i)
    g(i - 1, i - 1) = sig.product(1, i) * tail[static_cast<std::size_t>(i) + 1];
  return {g, Chart::parallel};
}

/// Subsidiary metric on the fiber directions (P_a, ..., P_N):
/// diag(1, kappa_{a,a+1}, ..., kappa_{aN}). Defined for every signature;
/// meaningful as a new metric when omega_a = 0.
inline MetricAtPoint subsidiary_metric_rank1(const OmegaSignature& sig, int a) {
  const int n = sig.n();
  if (a < 2 || a > n) throw std::invalid_argument("fiber selector must lie in 2..N");
  const int dim = n - a + 1;
  Matrix g = Matrix::Zero(dim, dim);
  for (int i = a; i <= n; ++i) g(i - a, i - a) = sig.product(a, i);
  return {g, Chart::fiber};
}

/// Invariant foliations of the rank-one space: one entry per vanishing
/// constant omega_a (a = 2..N), in increasing a; nested when several vanish.
inline FoliationReport foliation_report_rank1(const OmegaSignature& sig) {
  const int n = sig.n();
  FoliationReport report;
  const auto& w = sig.omegas();
  for (int a = 2; a <= n; ++a) {
    if (sig.omega(a) != 0.0) continue;
    std::vector<double> base(w.begin(), w.begin() + (a - 1));
    std::vector<double> fiber;
    fiber.push_back(0.0);
    fiber.insert(fiber.end(), w.begin() + a, w.end());
    report.entries.push_back({a, "kappa_" + std::to_string(a), OmegaSignature(base),
                              OmegaSignature(fiber)});
  }
  return report;
}

/// Metric field of the Beltrami chart, for finite-difference machinery.
inline MetricField beltrami_metric_field(const OmegaSignature& sig) {
  return [sig](const Vector& x) { return beltrami_metric(sig, BeltramiPoint{x}).matrix; };
}

/// Sectional curvature of the plane span{u, v} at a Beltrami point. Constant
/// and equal to omega_1 whenever the main metric is non-degenerate.
inline double sectional_curvature_rank1(const OmegaSignature& sig, const BeltramiPoint& pt,
                                        const Vector& u, const Vector& v,
                                        const FdOptions& opts = {}) {
  for (int a = 2; a <= sig.n(); ++a)
    if (sig.omega(a) == 0.0)
      throw degeneracy_error(
          "main metric is degenerate; use the foliation report and subsidiary metrics");
  if (u.size() != sig.n() || v.size() != sig.n())
    throw std::invalid_argument("tangent vector dimension mismatch");
  return sectional_curvature_fd(beltrami_metric_field(sig), pt.coords, u, v, opts);
}

/// Max-norm of (J^T Lambda_0 J - omega_1 * parallel metric) at a, where J is
/// the numerical Jacobian of the parallel chart embedding. The ambient flat
/// form restricted to the sphere is proportional to omega_1; this measures
/// how well the closed-form chart metric matches that restriction.
inline double ambient_pullback_check_rank1(const OmegaSignature& sig, const ParallelCoords& a) {
  const Matrix lambda0 = invariant_form_rank1(sig);
  const VectorMap embed = [&sig](const Vector& x) {
    return parallel_to_weierstrass(sig, ParallelCoords{x}).coords;
  };
  const Matrix pulled = pullback_form(embed, lambda0, a.coords);
  const Matrix expected = sig.omega(1) * parallel_metric(sig, a).matrix;
  return max_abs(Matrix(pulled - expected));
}

/// Group action expressed in the Beltrami chart (fractional-linear map).
inline BeltramiPoint beltrami_action(const GroupElement& e, const BeltramiPoint& pt,
                                     double chart_tol = tol::chart) {
  const int n = e.signature.n();
  if (pt.coords.size() != n) throw std::invalid_argument("coordinate dimension mismatch");
  Vector lift(n + 1);
  lift(0) = 1.0;
  lift.tail(n) = pt.coords;
  const Vector image = e.matrix * lift;
  if (std::abs(image(0)) <= chart_tol)
    throw chart_error("group action maps the point off the Beltrami chart");
  return {Vector(image.tail(n) / image(0))};
}

}  // namespace ck
