#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ck/errors.hpp"
#include "ck/generators.hpp"
#include "ck/linalg.hpp"
#include "ck/numeric.hpp"
#include "ck/rank_one.hpp"
#include "ck/signature.hpp"
#include "ck/vector_rep.hpp"

namespace ck {

/// Coordinates x^{ij} (i < j, lexicographic) of a line of the rank-one
/// space, as a point of the bivector ambient space R^{N(N+1)/2}.
struct PlueckerPoint {
  Vector coords;
};

/// Rank-two Beltrami chart on the x^{01} > 0 patch:
/// eta^i = x^{0,i+1}/x^{01} (momentum-like), xi^i = x^{1,i+1}/x^{01}
/// (position-like), i = 1..N-1.
struct RankTwoBeltrami {
  Vector eta;
  Vector xi;
};

/// Rank-adapted name of a generator of the rank-two picture.
struct RankTwoGenerator {
  enum class Kind { j12, p1, p2, j };
  Kind kind = Kind::j12;
  int i = 0;
  int j = 0;

  static RankTwoGenerator rotation_12() { return {Kind::j12, 0, 0}; }
  static RankTwoGenerator translation_1(int i) { return {Kind::p1, i, 0}; }
  static RankTwoGenerator translation_2(int i) { return {Kind::p2, i, 0}; }
  static RankTwoGenerator rotation(int i, int j) { return {Kind::j, i, j}; }
};

namespace detail {

inline void require_rank_two(const OmegaSignature& sig) {
  if (sig.n() < 3)
    throw std::invalid_argument("rank-two module requires N >= 3 (for N = 2 the space has rank one)");
}

inline int ambient_dim(int n) { return generator_count(n); }

inline int derive_n(const PlueckerPoint& x) {
  const int d = static_cast<int>(x.coords.size());
  for (int n = 1; generator_count(n) <= d; ++n)
    if (generator_count(n) == d) return n;
  throw std::invalid_argument("coordinate count is not of the form N(N+1)/2");
}

}  // namespace detail

/// Rank-adapted name and sign of an abstract generator:
/// Omega_{ab} = sign * (named generator). Only Omega_{01} carries sign -1
/// (it names -J_(1)(2)).
inline std::pair<RankTwoGenerator, double> rank_adapted_name(const GeneratorIndex& g) {
  if (g.a == 0 && g.b == 1) return {RankTwoGenerator::rotation_12(), -1.0};
  if (g.a == 0) return {RankTwoGenerator::translation_2(g.b - 1), 1.0};
  if (g.a == 1) return {RankTwoGenerator::translation_1(g.b - 1), 1.0};
  return {RankTwoGenerator::rotation(g.a - 1, g.b - 1), 1.0};
}

inline GeneratorIndex abstract_index(const RankTwoGenerator& g) {
  switch (g.kind) {
    case RankTwoGenerator::Kind::j12: return GeneratorIndex(0, 1);
    case RankTwoGenerator::Kind::p2: return GeneratorIndex(0, g.i + 1);
    case RankTwoGenerator::Kind::p1: return GeneratorIndex(1, g.i + 1);
    default: return GeneratorIndex(g.i + 1, g.j + 1);
  }
}

inline std::string to_string(const RankTwoGenerator& g) {
  switch (g.kind) {
    case RankTwoGenerator::Kind::j12: return "J_(1)(2)";
    case RankTwoGenerator::Kind::p1: return "P_(1)" + std::to_string(g.i);
    case RankTwoGenerator::Kind::p2: return "P_(2)" + std::to_string(g.i);
    default: return "J_" + std::to_string(g.i) + std::to_string(g.j);
  }
}

/// Bivector (antisymmetrized-square) representation of the named rank-two
/// generators, in closed form. Matrix indices are lexicographic pairs.
inline Matrix bivector_generator(const OmegaSignature& sig, const RankTwoGenerator& gen) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  const int d = detail::ambient_dim(n);
  Matrix m = Matrix::Zero(d, d);
  const auto at = [n](int p, int q) { return lex_index(GeneratorIndex(p, q), n); };
  const double kap2 = sig.omega(1);

  switch (gen.kind) {
    case RankTwoGenerator::Kind::j12: {
      for (int s = 2; s <= n; ++s) {
        m(at(0, s), at(1, s)) += kap2;
        m(at(1, s), at(0, s)) += -1.0;
      }
      break;
    }
    case RankTwoGenerator::Kind::p1: {
      const int j = gen.i;
      if (j < 1 || j > n - 1) throw std::invalid_argument("translation index out of range");
      const double k0j = sig.product(1, j + 1);
      for (int s = j + 2; s <= n; ++s) {
        m(at(1, s), at(j + 1, s)) += -k0j;
        m(at(j + 1, s), at(1, s)) += 1.0;
      }
      m(at(0, 1), at(0, j + 1)) += -k0j;
      m(at(0, j + 1), at(0, 1)) += 1.0;
      for (int s = 2; s <= j; ++s) {
        m(at(1, s), at(s, j + 1)) += k0j;
        m(at(s, j + 1), at(1, s)) += -1.0;
      }
      break;
    }
    case RankTwoGenerator::Kind::p2: {
      const int j = gen.i;
      if (j < 1 || j > n - 1) throw std::invalid_argument("translation index out of range");
      const double k0j = sig.product(1, j + 1);
      for (int s = j + 2; s <= n; ++s) {
        m(at(0, s), at(j + 1, s)) += -kap2 * k0j;
        m(at(j + 1, s), at(0, s)) += 1.0;
      }
      for (int s = 1; s <= j; ++s) {
        m(at(0, s), at(s, j + 1)) += kap2 * k0j;
        m(at(s, j + 1), at(0, s)) += -1.0;
      }
      break;
    }
    case RankTwoGenerator::Kind::j: {
      const int i = gen.i, j = gen.j;
      if (i < 1 || j <= i || j > n - 1) throw std::invalid_argument("rotation indices out of range");
      const double kij = sig.product(i + 1, j + 1);
      for (int s = j + 2; s <= n; ++s) {
        m(at(i + 1, s), at(j + 1, s)) += -kij;
        m(at(j + 1, s), at(i + 1, s)) += 1.0;
      }
      for (int s = 0; s <= i; ++s) {
        m(at(s, i + 1), at(s, j + 1)) += -kij;
        m(at(s, j + 1), at(s, i + 1)) += 1.0;
      }
      for (int s = i + 2; s <= j; ++s) {
        m(at(i + 1, s), at(s, j + 1)) += kij;
        m(at(s, j + 1), at(i + 1, s)) += -1.0;
      }
      break;
    }
  }
  return m;
}

/// Bivector representation of an abstract generator Omega_{ab}.
inline Matrix bivector_rep_of(const OmegaSignature& sig, const GeneratorIndex& g) {
  const auto [name, sign] = rank_adapted_name(g);
  return sign * bivector_generator(sig, name);
}

/// Diagonal matrix of the invariant quadratic form on the bivector ambient
/// space: 1 at (01); kappa_{0i} at (0,i+1); kappa_(2) kappa_{0i} at (1,i+1);
/// kappa_(2) kappa_{0i} kappa_{0j} at (i+1,j+1).
inline Matrix invariant_form_rank2(const OmegaSignature& sig) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  const int d = detail::ambient_dim(n);
  const double kap2 = sig.omega(1);
  Matrix m = Matrix::Zero(d, d);
  for (const auto& g : all_generators(n)) {
    double v;
    if (g.a == 0 && g.b == 1) v = 1.0;
    else if (g.a == 0) v = sig.product(1, g.b);
    else if (g.a == 1) v = kap2 * sig.product(1, g.b);
    else v = kap2 * sig.product(1, g.a) * sig.product(1, g.b);
    m(lex_index(g, n), lex_index(g, n)) = v;
  }
  return m;
}

/// | x^T Lambda_0^(2) x - 1 |
inline double rank2_sphere_residual(const OmegaSignature& sig, const PlueckerPoint& x) {
  detail::require_rank_two(sig);
  if (x.coords.size() != detail::ambient_dim(sig.n()))
    throw std::invalid_argument("point dimension mismatch");
  const Matrix lambda = invariant_form_rank2(sig);
  return std::abs(x.coords.dot(lambda * x.coords) - 1.0);
}

/// One residual x^{ij}x^{kl} - x^{ik}x^{jl} + x^{il}x^{jk} per 4-subset
/// i<j<k<l; all vanish exactly on decomposable bivectors.
inline std::vector<double> pluecker_residuals(const PlueckerPoint& x) {
  const int n = detail::derive_n(x);
  const auto at = [&x, n](int p, int q) { return x.coords(lex_index(GeneratorIndex(p, q), n)); };
  std::vector<double> out;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          out.push_back(at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k));
  return out;
}

inline double max_pluecker_residual(const PlueckerPoint& x) {
  double m = 0.0;
  for (double r : pluecker_residuals(x)) m = std::max(m, std::abs(r));
  return m;
}

/// Wedge of two rank-one points, normalized onto unit sphere of the
/// bivector form, oriented by x^{01} > 0 whenever x^{01} != 0.
inline PlueckerPoint pluecker_from_line(const OmegaSignature& sig, const WeierstrassPoint& p,
                                        const WeierstrassPoint& q) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  if (sphere_residual(sig, p) > tol::on_sphere || sphere_residual(sig, q) > tol::on_sphere)
    throw std::invalid_argument("line endpoints must satisfy the sphere constraint");
  Vector x(detail::ambient_dim(n));
  for (const auto& g : all_generators(n))
    x(lex_index(g, n)) = p.coords(g.a) * q.coords(g.b) - p.coords(g.b) * q.coords(g.a);
  const double scale = max_abs(x);
  if (scale <= 1e-12) throw degeneracy_error("points are proportional; they span no line");
  const Matrix lambda = invariant_form_rank2(sig);
  const double norm = x.dot(lambda * x);
  if (std::abs(norm) <= 1e-12 * scale * scale)
    throw degeneracy_error("bivector of the line has null sphere norm; unsupported by this chart");
  if (norm < 0.0)
    throw degeneracy_error("bivector of the line has negative sphere norm; not on the unit orbit");
  x /= std::sqrt(norm);
  const int i01 = lex_index(GeneratorIndex(0, 1), n);
  if (x(i01) < 0.0) x = -x;
  return {x};
}

/// Reconstructs the full Pluecker point from the essential coordinates
/// x^{0j}, x^{1j} (j = 2..N): the inessential x^{kl} come from the 01kl
/// Pluecker relations and x^{01} > 0 from the sphere equation.
inline PlueckerPoint eliminate_inessential(const OmegaSignature& sig, const Vector& x0j,
                                           const Vector& x1j) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  if (x0j.size() != n - 1 || x1j.size() != n - 1)
    throw std::invalid_argument("expected N-1 essential coordinates per row");
  const Matrix lambda = invariant_form_rank2(sig);
  const auto at = [n](int p, int q) { return lex_index(GeneratorIndex(p, q), n); };

  double a = 0.0;
  for (int s = 2; s <= n; ++s) {
    a += lambda(at(0, s), at(0, s)) * x0j(s - 2) * x0j(s - 2);
    a += lambda(at(1, s), at(1, s)) * x1j(s - 2) * x1j(s - 2);
  }
  double b = 0.0;
  for (int k = 2; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      const double w = x0j(k - 2) * x1j(l - 2) - x0j(l - 2) * x1j(k - 2);
      b += lambda(at(k, l), at(k, l)) * w * w;
    }

  // (x^{01})^2 solves u^2 + (A - 1) u + B = 0; the branch connected to the
  // origin (u -> 1 as the essentials vanish) is the + root.
  const double disc = (1.0 - a) * (1.0 - a) - 4.0 * b;
  if (disc < 0.0)
    throw chart_error("no real solution for x^{01}; essentials leave the chart patch");
  const double u = 0.5 * ((1.0 - a) + std::sqrt(disc));
  if (u <= 0.0) throw chart_error("x^{01} is not positive; essentials leave the chart patch");
  const double x01 = std::sqrt(u);
  if (x01 <= tol::chart) throw chart_error("x^{01} below chart tolerance");

  Vector x = Vector::Zero(detail::ambient_dim(n));
  x(at(0, 1)) = x01;
  for (int s = 2; s <= n; ++s) {
    x(at(0, s)) = x0j(s - 2);
    x(at(1, s)) = x1j(s - 2);
  }
  for (int k = 2; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      x(at(k, l)) = (x0j(k - 2) * x1j(l - 2) - x0j(l - 2) * x1j(k - 2)) / x01;
  return {x};
}

inline RankTwoBeltrami rank2_beltrami(const PlueckerPoint& x, double chart_tol = tol::chart) {
  const int n = detail::derive_n(x);
  const auto at = [n](int p, int q) { return lex_index(GeneratorIndex(p, q), n); };
  const double x01 = x.coords(at(0, 1));
  if (x01 <= chart_tol) throw chart_error("point lies outside the x^{01} > 0 chart patch");
  Vector eta(n - 1), xi(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    eta(i - 1) = x.coords(at(0, i + 1)) / x01;
    xi(i - 1) = x.coords(at(1, i + 1)) / x01;
  }
  return {eta, xi};
}

/// Inverse of the rank-two Beltrami chart (the embedding map).
inline PlueckerPoint rank2_chart_to_pluecker(const OmegaSignature& sig,
                                             const RankTwoBeltrami& pt) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  if (pt.eta.size() != n - 1 || pt.xi.size() != n - 1)
    throw std::invalid_argument("chart coordinate dimension mismatch");
  const auto at = [n](int p, int q) { return lex_index(GeneratorIndex(p, q), n); };
  Vector lift = Vector::Zero(detail::ambient_dim(n));
  lift(at(0, 1)) = 1.0;
  for (int i = 1; i <= n - 1; ++i) {
    lift(at(0, i + 1)) = pt.eta(i - 1);
    lift(at(1, i + 1)) = pt.xi(i - 1);
  }
  for (int r = 1; r <= n - 1; ++r)
    for (int s = r + 1; s <= n - 1; ++s)
      lift(at(r + 1, s + 1)) = pt.eta(r - 1) * pt.xi(s - 1) - pt.eta(s - 1) * pt.xi(r - 1);
  const Matrix lambda = invariant_form_rank2(sig);
  const double q = lift.dot(lambda * lift);  // equals 1 + k1 |(eta,xi)|^2
  if (q <= tol::chart) throw chart_error("point lies outside the x^{01} > 0 chart patch");
  return {Vector(lift / std::sqrt(q))};
}

/// Main metric of the rank-two space at the origin, in the tangent basis
/// (P_(1)1..P_(1)N-1, P_(2)1..P_(2)N-1): diag(Pi, kappa_(2) Pi) with
/// Pi = diag(1, kappa_{12}, ..., kappa_{1,N-1}).
inline MetricAtPoint metric_at_origin_rank2(const OmegaSignature& sig) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  const int dim = 2 * (n - 1);
  const double kap2 = sig.omega(1);
  Matrix g = Matrix::Zero(dim, dim);
  for (int i = 1; i <= n - 1; ++i) {
    const double pi = sig.product(2, i + 1);
    g(i - 1, i - 1) = pi;
    g(n - 1 + i - 1, n - 1 + i - 1) = kap2 * pi;
  }
  return {g, Chart::beltrami};
}

namespace detail {

struct Rank2FormParts {
  double s = 0.0;  // |(eta, xi)|^2 in the kappa norm
  Matrix t;        // quadratic form of |(deta, dxi)|^2 (cross terms expanded)
  Vector v;        // gradient form: <(eta,xi)|(deta,dxi)> = v . dz
};

inline Rank2FormParts rank2_form_parts(const OmegaSignature& sig, const RankTwoBeltrami& pt) {
  const int n = sig.n();
  const int dim = 2 * (n - 1);
  const double kap2 = sig.omega(1);
  const Matrix base = metric_at_origin_rank2(sig).matrix;

  Vector z(dim);
  z.head(n - 1) = pt.eta;
  z.tail(n - 1) = pt.xi;

  Rank2FormParts parts;
  parts.s = z.dot(base * z);
  parts.t = base;
  parts.v = base * z;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      const double coeff = kap2 * sig.product(2, i + 1) * sig.product(1, j + 1);
      if (coeff == 0.0) continue;
      const double cross = pt.eta(i - 1) * pt.xi(j - 1) - pt.eta(j - 1) * pt.xi(i - 1);
      Vector grad = Vector::Zero(dim);
      grad(i - 1) = pt.xi(j - 1);                 // d/d eta^i
      grad(j - 1) = -pt.xi(i - 1);                // d/d eta^j
      grad(n - 1 + j - 1) = pt.eta(i - 1);        // d/d xi^j
      grad(n - 1 + i - 1) = -pt.eta(j - 1);       // d/d xi^i
      parts.s += coeff * cross * cross;
      parts.t += coeff * grad * grad.transpose();
      parts.v += coeff * cross * grad;
    }
  return parts;
}

}  // namespace detail

/// Main metric in rank-two Beltrami coordinates, ordered (eta, xi):
/// [(1 + k1 S) T - k1 v v^T] / (1 + k1 S)^2 with S, T, v the kappa-norm
/// shorthands (the differentials of eta^i xi^j - eta^j xi^i are expanded by
/// the product rule into T and v).
inline MetricAtPoint rank2_metric(const OmegaSignature& sig, const RankTwoBeltrami& pt) {
  detail::require_rank_two(sig);
  if (pt.eta.size() != sig.n() - 1 || pt.xi.size() != sig.n() - 1)
    throw std::invalid_argument("chart coordinate dimension mismatch");
  const double k1 = sig.omega(2);
  const auto parts = detail::rank2_form_parts(sig, pt);
  const double denom = 1.0 + k1 * parts.s;
  if (std::abs(denom) <= tol::chart)
    throw chart_error("point lies on the singular locus of the rank-two metric");
  Matrix g = (denom * parts.t - k1 * parts.v * parts.v.transpose()) / (denom * denom);
  return {g, Chart::beltrami};
}

/// Selector tag for the fiber spanned by the P_(2) translations.
struct P2Block {};

/// Subsidiary metric on the fiber f_(2) = <P_(2)1, ..., P_(2)N-1>:
/// diag(1, kappa_{12}, ..., kappa_{1,N-1}).
inline MetricAtPoint subsidiary_metric_rank2(const OmegaSignature& sig, P2Block) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  Matrix g = Matrix::Zero(n - 1, n - 1);
  for (int i = 1; i <= n - 1; ++i) g(i - 1, i - 1) = sig.product(2, i + 1);
  return {g, Chart::fiber};
}

/// Subsidiary metric on the fiber f_a = <P_(1)a.., P_(2)a..> (a = 2..N-1):
/// kappa_{ai} on the P_(1) block and kappa_(2) kappa_{ai} on the P_(2) block.
inline MetricAtPoint subsidiary_metric_rank2(const OmegaSignature& sig, int a) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  if (a < 2 || a > n - 1) throw std::invalid_argument("fiber selector must lie in 2..N-1");
  const int block = n - a;
  const double kap2 = sig.omega(1);
  Matrix g = Matrix::Zero(2 * block, 2 * block);
  for (int i = a; i <= n - 1; ++i) {
    const double kai = sig.product(a + 1, i + 1);
    g(i - a, i - a) = kai;
    g(block + i - a, block + i - a) = kap2 * kai;
  }
  return {g, Chart::fiber};
}

/// Invariant foliations of the rank-two space: one entry when kappa_(2)
/// (= omega_1) vanishes, plus one per vanishing kappa_a (= omega_{a+1}),
/// a = 2..N-1.
inline FoliationReport foliation_report_rank2(const OmegaSignature& sig) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  const auto& w = sig.omegas();
  FoliationReport report;
  if (sig.omega(1) == 0.0) {
    std::vector<double> base(w.begin() + 1, w.end());
    std::vector<double> fiber;
    fiber.push_back(0.0);
    fiber.insert(fiber.end(), w.begin() + 2, w.end());
    report.entries.push_back({1, "kappa_(2)", OmegaSignature(base), OmegaSignature(fiber)});
  }
  for (int a = 2; a <= n - 1; ++a) {
    if (sig.omega(a + 1) != 0.0) continue;
    std::vector<double> base(w.begin(), w.begin() + a);
    std::vector<double> fiber(w.begin(), w.begin() + 2);
    fiber.insert(fiber.end(), w.begin() + a + 1, w.end());
    report.entries.push_back({a + 1, "kappa_" + std::to_string(a), OmegaSignature(base),
                              OmegaSignature(fiber)});
  }
  return report;
}

inline MetricField rank2_metric_field(const OmegaSignature& sig) {
  const int block = sig.n() - 1;
  return [sig, block](const Vector& z) {
    RankTwoBeltrami pt{z.head(block), z.tail(block)};
    return rank2_metric(sig, pt).matrix;
  };
}

/// Sectional curvature at the origin of the rank-two space. Equals
/// kappa_1 (= omega_2) on planes spanned by P_(a)i,P_(a)j or P_(1)i,P_(2)i
/// and vanishes when both indices differ.
inline double sectional_curvature_rank2_origin(const OmegaSignature& sig, const Vector& u,
                                               const Vector& v, const FdOptions& opts = {}) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  if (sig.omega(1) == 0.0)
    throw degeneracy_error("main metric is degenerate (kappa_(2) = 0); use the foliation report");
  for (int a = 3; a <= n; ++a)
    if (sig.omega(a) == 0.0)
      throw degeneracy_error("main metric is degenerate; use the foliation report");
  if (u.size() != 2 * (n - 1) || v.size() != 2 * (n - 1))
    throw std::invalid_argument("tangent vector dimension mismatch");
  return sectional_curvature_fd(rank2_metric_field(sig), Vector::Zero(2 * (n - 1)), u, v, opts);
}

/// Induced action of a vector-representation group matrix on bivectors:
/// [G wedge G]_{(cd),(ab)} = G_{ca} G_{db} - G_{da} G_{cb}. Exact closed
/// form of the bivector representation at group level.
inline Matrix wedge_square_group(const Matrix& g) {
  const int n = static_cast<int>(g.rows()) - 1;
  const int d = detail::ambient_dim(n);
  Matrix out(d, d);
  const auto pairs = all_generators(n);
  for (int row = 0; row < d; ++row) {
    const auto& cd = pairs[static_cast<std::size_t>(row)];
    for (int col = 0; col < d; ++col) {
      const auto& ab = pairs[static_cast<std::size_t>(col)];
      out(row, col) = g(cd.a, ab.a) * g(cd.b, ab.b) - g(cd.b, ab.a) * g(cd.a, ab.b);
    }
  }
  return out;
}

inline Matrix bivector_of(const GroupElement& e) { return wedge_square_group(e.matrix); }

/// Deterministic bivector-representation word (wedge square of the
/// corresponding vector-representation word).
inline Matrix random_bivector_element(const OmegaSignature& sig, std::uint64_t seed,
                                      int word_length) {
  return bivector_of(random_group_element(sig, seed, word_length));
}

inline PlueckerPoint act_rank2(const OmegaSignature& sig, const Matrix& bivector_word,
                               const PlueckerPoint& x) {
  if (bivector_word.rows() != x.coords.size()) throw std::invalid_argument("dimension mismatch");
  if (rank2_sphere_residual(sig, x) > tol::on_sphere)
    throw std::invalid_argument("input point violates the bivector sphere constraint");
  return {bivector_word * x.coords};
}

/// Group action expressed in the rank-two Beltrami chart.
inline RankTwoBeltrami rank2_beltrami_action(const OmegaSignature& sig,
                                             const Matrix& bivector_word,
                                             const RankTwoBeltrami& pt,
                                             double chart_tol = tol::chart) {
  detail::require_rank_two(sig);
  const int n = sig.n();
  const auto at = [n](int p, int q) { return lex_index(GeneratorIndex(p, q), n); };
  // Unnormalized polynomial lift; the projective quotient cancels the scale.
  Vector lift = Vector::Zero(detail::ambient_dim(n));
  lift(at(0, 1)) = 1.0;
  for (int i = 1; i <= n - 1; ++i) {
    lift(at(0, i + 1)) = pt.eta(i - 1);
    lift(at(1, i + 1)) = pt.xi(i - 1);
  }
  for (int r = 1; r <= n - 1; ++r)
    for (int s = r + 1; s <= n - 1; ++s)
      lift(at(r + 1, s + 1)) = pt.eta(r - 1) * pt.xi(s - 1) - pt.eta(s - 1) * pt.xi(r - 1);
  const Vector image = bivector_word * lift;
  const double x01 = image(at(0, 1));
  if (std::abs(x01) <= chart_tol)
    throw chart_error("group action maps the point off the rank-two chart");
  RankTwoBeltrami out{Vector(n - 1), Vector(n - 1)};
  for (int i = 1; i <= n - 1; ++i) {
    out.eta(i - 1) = image(at(0, i + 1)) / x01;
    out.xi(i - 1) = image(at(1, i + 1)) / x01;
  }
  return out;
}

/// The exceptional N=3 Grassmannian quadratic invariant
/// x^{01}x^{23} - x^{02}x^{13} + x^{03}x^{12}.
inline double grassmann_invariant_n3(const PlueckerPoint& x) {
  if (detail::derive_n(x) != 3)
    throw std::invalid_argument("the quadratic Grassmannian invariant exists only for N = 3");
  const auto at = [](int p, int q) { return lex_index(GeneratorIndex(p, q), 3); };
  return x.coords(at(0, 1)) * x.coords(at(2, 3)) - x.coords(at(0, 2)) * x.coords(at(1, 3)) +
         x.coords(at(0, 3)) * x.coords(at(1, 2));
}

}  // namespace ck
