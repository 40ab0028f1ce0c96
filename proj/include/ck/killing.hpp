#pragma once

#include "ck/bracket.hpp"
#include "ck/generators.hpp"
#include "ck/linalg.hpp"
#include "ck/signature.hpp"

namespace ck {

/// Adjoint matrix of a generator in the lexicographic basis of the algebra;
/// column h holds the coefficients of [g, Omega_h].
struct AdjointMatrix {
  Matrix matrix;  // order N(N+1)/2
  int n = 0;
};

inline AdjointMatrix adjoint_matrix(const OmegaSignature& sig, const GeneratorIndex& g) {
  const int n = sig.n();
  const int dim = generator_count(n);
  Matrix m = Matrix::Zero(dim, dim);
  const auto gens = all_generators(n);
  for (int col = 0; col < dim; ++col) {
    const BracketResult r = bracket(sig, g, gens[static_cast<std::size_t>(col)]);
    for (const auto& t : r.terms()) m(lex_index(t.gen, n), col) += t.coeff;
  }
  return {m, n};
}

/// Killing-Cartan form g(X, Y) = Trace(ad X . ad Y), computed from scratch.
inline double killing_form(const OmegaSignature& sig, const GeneratorIndex& g1,
                           const GeneratorIndex& g2) {
  const AdjointMatrix a1 = adjoint_matrix(sig, g1);
  const AdjointMatrix a2 = adjoint_matrix(sig, g2);
  return (a1.matrix * a2.matrix).trace();
}

/// Full Gram matrix of the Killing-Cartan form over the lexicographic basis,
/// assembled from adjoint traces (valid for every signature, contracted or
/// not).
inline Matrix killing_matrix(const OmegaSignature& sig) {
  const int n = sig.n();
  const int dim = generator_count(n);
  const auto gens = all_generators(n);
  std::vector<Matrix> ads;
  ads.reserve(static_cast<std::size_t>(dim));
  for (const auto& g : gens) ads.push_back(adjoint_matrix(sig, g).matrix);
  Matrix m = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const double v = (ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)]).trace();
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

/// The same form in closed shape: diag(-2 (N-1) omega_{ab}) over the pair
/// basis. Kept separate so the trace route can be checked against it.
inline Matrix killing_matrix_closed_form(const OmegaSignature& sig) {
  const int n = sig.n();
  const int dim = generator_count(n);
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& g : all_generators(n))
    m(lex_index(g, n), lex_index(g, n)) = -2.0 * (n - 1) * sig.product(g.a, g.b);
  return m;
}

}  // namespace ck
