#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ck/bracket.hpp"
#include "ck/classify.hpp"
#include "ck/killing.hpp"
#include "ck/linalg.hpp"
#include "ck/rank_one.hpp"
#include "ck/rank_two.hpp"
#include "ck/signature.hpp"
#include "ck/vector_rep.hpp"

namespace ck {

struct VerifyOptions {
  std::vector<int> dims = {2, 3, 4};
  std::uint64_t seed = 0;
  std::optional<double> tolerance_override;  // CK_TOLERANCE, when set
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline void push_check(SuiteResult& suite, const VerifyOptions& opts, const std::string& name,
                       double residual, double tolerance) {
  if (opts.tolerance_override) tolerance = *opts.tolerance_override;
  suite.checks.push_back({name, residual, tolerance, residual <= tolerance});
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  return base * 1000003ull + a * 7919ull + b * 104729ull + 1ull;
}

/// Random signatures with small integer entries (exact double arithmetic).
inline OmegaSignature random_integer_signature(int n, SeededRng& rng, bool allow_zero) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (auto& x : w) {
    int v = rng.next_index(allow_zero ? 5 : 4) - 2;  // {-2..2} or {-2,-1,1,2}
    if (!allow_zero && v >= 0) v += 1;
    x = static_cast<double>(v);
  }
  return OmegaSignature(w);
}

inline Vector random_vector(SeededRng& rng, int n, double half_width) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.next_in(-half_width, half_width);
  return v;
}

inline BracketResult jacobi_sum(const OmegaSignature& sig, const GeneratorIndex& x,
                                const GeneratorIndex& y, const GeneratorIndex& z) {
  BracketResult total;
  const auto nest = [&](const GeneratorIndex& a, const GeneratorIndex& b,
                        const GeneratorIndex& c) {
    for (const auto& t : bracket(sig, a, b).terms()) total.add(bracket(sig, t.gen, c), t.coeff);
  };
  nest(x, y, z);
  nest(y, z, x);
  nest(z, x, y);
  return total;
}

inline double max_coeff(const BracketResult& r) {
  double m = 0.0;
  for (const auto& t : r.terms()) m = std::max(m, std::abs(t.coeff));
  return m;
}

}  // namespace detail

/// Structure constants: vector-representation commutators against the
/// bracket table, antisymmetry, Jacobi identity. Exact (tolerance 0) over
/// canonical and random integer signatures.
inline SuiteResult verify_brackets(const VerifyOptions& opts) {
  SuiteResult suite{"brackets", {}};
  for (int n : opts.dims) {
    double res_comm = 0.0, res_anti = 0.0, res_jacobi = 0.0;
    std::vector<OmegaSignature> sigs = canonical_signatures(n);
    SeededRng rng(detail::mix_seed(opts.seed, static_cast<std::uint64_t>(n)));
    for (int k = 0; k < 20; ++k) sigs.push_back(detail::random_integer_signature(n, rng, true));
    const auto gens = all_generators(n);
    for (const auto& sig : sigs) {
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
          const Matrix xi = vector_generator(sig, gens[i]);
          const Matrix xj = vector_generator(sig, gens[j]);
          const Matrix comm = xi * xj - xj * xi;
          const BracketResult br = bracket(sig, gens[i], gens[j]);
          res_comm = std::max(res_comm, max_abs(Matrix(comm - vector_rep_of(sig, br))));
          BracketResult anti = br;
          anti.add(bracket(sig, gens[j], gens[i]));
          res_anti = std::max(res_anti, detail::max_coeff(anti));
        }
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
          for (std::size_t k = j + 1; k < gens.size(); ++k)
            res_jacobi = std::max(
                res_jacobi, detail::max_coeff(detail::jacobi_sum(sig, gens[i], gens[j], gens[k])));
    }
    const std::string tag = " (N=" + std::to_string(n) + ")";
    detail::push_check(suite, opts, "commutators match structure constants" + tag, res_comm, 0.0);
    detail::push_check(suite, opts, "brackets are antisymmetric" + tag, res_anti, 0.0);
    detail::push_check(suite, opts, "Jacobi identity" + tag, res_jacobi, 0.0);
  }
  return suite;
}

/// Killing-Cartan form: adjoint-trace route against the diagonal closed
/// form, degeneracy pattern for a single vanishing constant, ad-invariance.
inline SuiteResult verify_killing(const VerifyOptions& opts) {
  SuiteResult suite{"killing", {}};
  for (int n : opts.dims) {
    const auto gens = all_generators(n);
    double res_closed = 0.0, res_null = 0.0, res_adinv = 0.0;
    for (const auto& sig : canonical_signatures(n)) {
      const Matrix km = killing_matrix(sig);
      res_closed = std::max(res_closed, max_abs(Matrix(km - killing_matrix_closed_form(sig))));

      int zero_count = 0, zero_at = 0;
      for (int a = 1; a <= n; ++a)
        if (sig.omega(a) == 0.0) {
          ++zero_count;
          zero_at = a;
        }
      if (zero_count == 1) {
        for (const auto& g : gens) {
          const bool in_p = g.a < zero_at && g.b >= zero_at;
          const double diag = km(lex_index(g, n), lex_index(g, n));
          if (in_p)
            res_null = std::max(res_null, std::abs(diag));
          else if (diag == 0.0)
            res_null = std::max(res_null, 1.0);
        }
      }

      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
          for (std::size_t k = j; k < gens.size(); ++k) {
            // g([X,Y],Z) + g(Y,[X,Z]) must vanish
            double s = 0.0;
            for (const auto& t : bracket(sig, gens[i], gens[j]).terms())
              s += t.coeff * km(lex_index(t.gen, n), lex_index(gens[k], n));
            for (const auto& t : bracket(sig, gens[i], gens[k]).terms())
              s += t.coeff * km(lex_index(gens[j], n), lex_index(t.gen, n));
            res_adinv = std::max(res_adinv, std::abs(s));
          }
    }
    const std::string tag = " (N=" + std::to_string(n) + ")";
    detail::push_check(suite, opts, "trace form equals -2(N-1) omega_ab diagonal" + tag,
                       res_closed, 0.0);
    detail::push_check(suite, opts, "degenerate block is exactly the antiinvariant subspace" + tag,
                       res_null, 0.0);
    detail::push_check(suite, opts, "ad-invariance of the trace form" + tag, res_adinv, 0.0);
  }
  return suite;
}

/// Isometry properties of the vector and bivector representations, and
/// invariance of the chart metrics under the group action.
inline SuiteResult verify_isometry(const VerifyOptions& opts) {
  SuiteResult suite{"isometry", {}};
  for (int n : opts.dims) {
    double res_form = 0.0, res_sphere = 0.0;
    double res_form2 = 0.0, res_sphere2 = 0.0;
    double res_bel = 0.0, res_rank2 = 0.0;
    for (const auto& sig : canonical_signatures(n)) {
      const Matrix lambda2 = n >= 3 ? invariant_form_rank2(sig) : Matrix();
      for (std::uint64_t s = 0; s < 50; ++s) {
        const auto word_seed = detail::mix_seed(opts.seed, s, static_cast<std::uint64_t>(n));
        const GroupElement e = random_group_element(sig, word_seed, 12);
        res_form = std::max(res_form, isometry_residual(e));

        SeededRng rng(detail::mix_seed(opts.seed, s + 1000, static_cast<std::uint64_t>(n)));
        const WeierstrassPoint p =
            parallel_to_weierstrass(sig, ParallelCoords{detail::random_vector(rng, n, 0.5)});
        res_sphere = std::max(res_sphere, sphere_residual(sig, act(e, p)));

        if (n >= 3) {
          const Matrix b = bivector_of(e);
          res_form2 = std::max(res_form2, max_abs(Matrix(b.transpose() * lambda2 * b - lambda2)));
          const PlueckerPoint x = eliminate_inessential(
              sig, detail::random_vector(rng, n - 1, 0.3), detail::random_vector(rng, n - 1, 0.3));
          res_sphere2 = std::max(res_sphere2, rank2_sphere_residual(sig, act_rank2(sig, b, x)));
        }
      }
    }
    const std::string tag = " (N=" + std::to_string(n) + ")";
    detail::push_check(suite, opts, "vector words preserve the ambient form" + tag, res_form, 1e-9);
    detail::push_check(suite, opts, "sphere constraint preserved" + tag, res_sphere, 1e-10);
    if (n >= 3) {
      detail::push_check(suite, opts, "bivector words preserve the ambient form" + tag, res_form2,
                         1e-9);
      detail::push_check(suite, opts, "bivector sphere constraint preserved" + tag, res_sphere2,
                         1e-10);
    }

    // Chart-metric invariance needs a non-degenerate main metric.
    for (const auto& sig : canonical_signatures(n)) {
      bool rank1_ok = true;
      for (int a = 2; a <= n; ++a) rank1_ok = rank1_ok && sig.omega(a) != 0.0;
      if (rank1_ok) {
        const auto field = beltrami_metric_field(sig);
        for (std::uint64_t s = 0; s < 5; ++s) {
          SeededRng rng(detail::mix_seed(opts.seed, s + 7, static_cast<std::uint64_t>(n)));
          const GroupElement e = random_group_element(
              sig, detail::mix_seed(opts.seed, s + 21, static_cast<std::uint64_t>(n)), 4);
          const Vector eta = detail::random_vector(rng, n, 0.25);
          try {
            const VectorMap map = [&](const Vector& x) {
              return beltrami_action(e, BeltramiPoint{x}).coords;
            };
            const Matrix pulled = pullback_metric(map, field, eta);
            res_bel = std::max(res_bel, max_abs(Matrix(pulled - field(eta))));
          } catch (const chart_error&) {
            // image fell off the chart for this sample; other seeds cover it
          }
        }
      }
      if (n >= 3 && sig.omega(1) != 0.0) {
        bool rank2_ok = true;
        for (int a = 3; a <= n; ++a) rank2_ok = rank2_ok && sig.omega(a) != 0.0;
        if (rank2_ok) {
          const auto field2 = rank2_metric_field(sig);
          const int block = n - 1;
          for (std::uint64_t s = 0; s < 5; ++s) {
            SeededRng rng(detail::mix_seed(opts.seed, s + 31, static_cast<std::uint64_t>(n)));
            const Matrix b = random_bivector_element(
                sig, detail::mix_seed(opts.seed, s + 43, static_cast<std::uint64_t>(n)), 4);
            const Vector z = detail::random_vector(rng, 2 * block, 0.2);
            try {
              const VectorMap map2 = [&](const Vector& x) {
                const RankTwoBeltrami img = rank2_beltrami_action(
                    sig, b, RankTwoBeltrami{x.head(block), x.tail(block)});
                Vector out(2 * block);
                out.head(block) = img.eta;
                out.tail(block) = img.xi;
                return out;
              };
              const Matrix pulled = pullback_metric(map2, field2, z);
              res_rank2 = std::max(res_rank2, max_abs(Matrix(pulled - field2(z))));
            } catch (const chart_error&) {
            }
          }
        }
      }
    }
    detail::push_check(suite, opts, "Beltrami metric invariant under the action" + tag, res_bel,
                       1e-8);
    if (n >= 3)
      detail::push_check(suite, opts, "rank-two metric invariant under the action" + tag,
                         res_rank2, 1e-8);
  }
  return suite;
}

/// Pluecker machinery: decomposability, invariance of the relations,
/// chart round trips, line equivariance, the N=3 Grassmannian invariant.
inline SuiteResult verify_pluecker(const VerifyOptions& opts) {
  SuiteResult suite{"pluecker", {}};
  for (int n : opts.dims) {
    if (n < 3) continue;
    double res_dec = 0.0, res_inv = 0.0, res_round = 0.0, res_equi = 0.0, res_grass = 0.0;
    for (const auto& sig : canonical_signatures(n)) {
      for (std::uint64_t s = 0; s < 8; ++s) {
        SeededRng rng(detail::mix_seed(opts.seed, s + 57, static_cast<std::uint64_t>(n)));
        const GroupElement e = random_group_element(
            sig, detail::mix_seed(opts.seed, s + 71, static_cast<std::uint64_t>(n)), 6);
        const Matrix b = bivector_of(e);

        // lines from pairs of nearby sphere points
        const WeierstrassPoint p =
            parallel_to_weierstrass(sig, ParallelCoords{detail::random_vector(rng, n, 0.4)});
        const WeierstrassPoint q =
            parallel_to_weierstrass(sig, ParallelCoords{detail::random_vector(rng, n, 0.4)});
        try {
          const PlueckerPoint x = pluecker_from_line(sig, p, q);
          res_dec = std::max(res_dec, max_pluecker_residual(x));
          const PlueckerPoint y = act_rank2(sig, b, x);
          res_inv = std::max(res_inv, max_pluecker_residual(y));

          PlueckerPoint moved = pluecker_from_line(sig, act(e, p), act(e, q));
          Vector image = (b * x.coords).eval();
          const int i01 = lex_index(GeneratorIndex(0, 1), n);
          if (std::abs(image(i01)) > 1e-6) {
            if (image(i01) < 0.0) image = -image;
            res_equi = std::max(res_equi, max_abs(Vector(image - moved.coords)));
          }
        } catch (const degeneracy_error&) {
          // degenerate or null line for this signature; other draws cover it
        }

        const PlueckerPoint z = eliminate_inessential(
            sig, detail::random_vector(rng, n - 1, 0.3), detail::random_vector(rng, n - 1, 0.3));
        res_round = std::max(res_round, max_pluecker_residual(z));
        res_round = std::max(res_round, rank2_sphere_residual(sig, z));
        const RankTwoBeltrami chart = rank2_beltrami(z);
        const PlueckerPoint z2 = rank2_chart_to_pluecker(sig, chart);
        res_round = std::max(res_round, max_abs(Vector(z.coords - z2.coords)));

        if (n == 3) {
          const double before = grassmann_invariant_n3(z);
          const double after = grassmann_invariant_n3(PlueckerPoint{Vector(b * z.coords)});
          res_grass = std::max(res_grass, std::abs(after - before));
        }
      }
    }
    const std::string tag = " (N=" + std::to_string(n) + ")";
    detail::push_check(suite, opts, "lines produce zero Pluecker residuals" + tag, res_dec, 1e-12);
    detail::push_check(suite, opts, "Pluecker relations preserved by the action" + tag, res_inv,
                       1e-9);
    detail::push_check(suite, opts, "essential-coordinate round trip" + tag, res_round, 1e-12);
    detail::push_check(suite, opts, "line embedding is equivariant" + tag, res_equi, 1e-9);
    if (n == 3)
      detail::push_check(suite, opts, "Grassmannian quadratic invariant preserved" + tag,
                         res_grass, 1e-9);
  }
  return suite;
}

/// Sectional curvature: omega_1 everywhere in rank one, the omega_2 / zero
/// pattern at the rank-two origin.
inline SuiteResult verify_curvature(const VerifyOptions& opts) {
  SuiteResult suite{"curvature", {}};
  for (int n : opts.dims) {
    if (n < 2) continue;
    double res1 = 0.0;
    for (double w1 : {1.0, 0.0, -1.0})
      for (double w2 : {1.0, -1.0}) {
        std::vector<double> w(static_cast<std::size_t>(n), 1.0);
        w[0] = w1;
        w[1] = w2;
        const OmegaSignature sig(w);
        for (std::uint64_t s = 0; s < 2; ++s) {
          SeededRng rng(detail::mix_seed(opts.seed, s + 11, static_cast<std::uint64_t>(n)));
          const Vector eta = detail::random_vector(rng, n, 0.25);
          for (int tries = 0; tries < 50; ++tries) {
            const Vector u = detail::random_vector(rng, n, 1.0);
            const Vector v = detail::random_vector(rng, n, 1.0);
            try {
              const double k = sectional_curvature_rank1(sig, BeltramiPoint{eta}, u, v);
              res1 = std::max(res1, std::abs(k - w1));
              break;
            } catch (const degeneracy_error&) {
              continue;  // near-null plane; redraw
            }
          }
        }
      }
    const std::string tag = " (N=" + std::to_string(n) + ")";
    detail::push_check(suite, opts, "rank-one sectional curvature equals omega_1" + tag, res1,
                       1e-4);

    if (n >= 3) {
      double res_same = 0.0, res_disj = 0.0;
      const int block = n - 1;
      for (double w1 : {1.0, -1.0})
        for (double w2 : {1.0, 0.0, -1.0}) {
          std::vector<double> w(static_cast<std::size_t>(n), 1.0);
          w[0] = w1;
          w[1] = w2;
          const OmegaSignature sig(w);
          const auto axis = [&](int idx) {
            Vector v = Vector::Zero(2 * block);
            v(idx) = 1.0;
            return v;
          };
          // same-index planes: P_(1)i ^ P_(1)j, P_(2)i ^ P_(2)j, P_(1)i ^ P_(2)i
          res_same = std::max(res_same,
                              std::abs(sectional_curvature_rank2_origin(sig, axis(0), axis(1)) - w2));
          res_same = std::max(
              res_same,
              std::abs(sectional_curvature_rank2_origin(sig, axis(block), axis(block + 1)) - w2));
          res_same = std::max(
              res_same, std::abs(sectional_curvature_rank2_origin(sig, axis(0), axis(block)) - w2));
          // disjoint indices: P_(1)1 ^ P_(2)2
          res_disj = std::max(
              res_disj, std::abs(sectional_curvature_rank2_origin(sig, axis(0), axis(block + 1))));
        }
      detail::push_check(suite, opts, "rank-two origin curvature equals omega_2 on paired planes" + tag,
                         res_same, 1e-4);
      detail::push_check(suite, opts, "rank-two origin curvature vanishes on disjoint planes" + tag,
                         res_disj, 1e-4);
    }
  }
  return suite;
}

inline std::vector<std::string> verify_suite_names() {
  return {"brackets", "killing", "isometry", "pluecker", "curvature"};
}

inline std::vector<SuiteResult> run_verify(const std::string& which, const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  const auto want = [&](const char* name) { return which == "all" || which == name; };
  if (want("brackets")) out.push_back(verify_brackets(opts));
  if (want("killing")) out.push_back(verify_killing(opts));
  if (want("isometry")) out.push_back(verify_isometry(opts));
  if (want("pluecker")) out.push_back(verify_pluecker(opts));
  if (want("curvature")) out.push_back(verify_curvature(opts));
  if (out.empty()) throw std::invalid_argument("unknown verification suite: " + which);
  return out;
}

}  // namespace ck
