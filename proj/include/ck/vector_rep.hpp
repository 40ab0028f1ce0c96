#pragma once

#include <cmath>

#include "ck/bracket.hpp"
#include "ck/generators.hpp"
#include "ck/linalg.hpp"
#include "ck/signature.hpp"
#include "ck/trig.hpp"

namespace ck {

/// Vector (fundamental) representation of Omega_{ab} on R^{N+1}:
/// -omega_{ab} in row a, column b and +1 in row b, column a.
inline Matrix vector_generator(const OmegaSignature& sig, const GeneratorIndex& g) {
  const int n = sig.n();
  if (g.b > n) throw std::invalid_argument("generator index out of range for signature");
  Matrix m = Matrix::Zero(n + 1, n + 1);
  m(g.a, g.b) = -sig.product(g.a, g.b);
  m(g.b, g.a) = 1.0;
  return m;
}

/// Matrix of the invariant quadratic form on the ambient space R^{N+1}:
/// diag(1, omega_{01}, omega_{02}, ..., omega_{0N}).
inline Matrix invariant_form_rank1(const OmegaSignature& sig) {
  const int n = sig.n();
  Matrix m = Matrix::Zero(n + 1, n + 1);
  for (int l = 0; l <= n; ++l) m(l, l) = sig.product(0, l);
  return m;
}

/// The matrix of a linear combination of generators (used to compare matrix
/// commutators against abstract brackets).
inline Matrix vector_rep_of(const OmegaSignature& sig, const BracketResult& combo) {
  const int n = sig.n();
  Matrix m = Matrix::Zero(n + 1, n + 1);
  for (const auto& t : combo.terms()) m += t.coeff * vector_generator(sig, t.gen);
  return m;
}

struct GroupElement {
  Matrix matrix;
  OmegaSignature signature;
};

/// Closed form of exp(x * Omega_{ab}): identity off the (a,b) plane, the
/// labeled rotation block on it. Exact and branch-free for every omega_{ab}.
inline Matrix one_param_subgroup_matrix(const OmegaSignature& sig, const GeneratorIndex& g,
                                        double x) {
  const int n = sig.n();
  if (g.b > n) throw std::invalid_argument("generator index out of range for signature");
  const double w = sig.product(g.a, g.b);
  Matrix m = Matrix::Identity(n + 1, n + 1);
  m(g.a, g.a) = ck_cosine(w, x);
  m(g.b, g.b) = ck_cosine(w, x);
  m(g.a, g.b) = -w * ck_sine(w, x);
  m(g.b, g.a) = ck_sine(w, x);
  return m;
}

inline GroupElement one_param_subgroup(const OmegaSignature& sig, const GeneratorIndex& g,
                                       double x) {
  return {one_param_subgroup_matrix(sig, g, x), sig};
}

/// Deterministic word of one-parameter subgroup elements, generators chosen
/// uniformly and parameters drawn from [-1, 1].
inline GroupElement random_group_element(const OmegaSignature& sig, std::uint64_t seed,
                                         int word_length) {
  if (word_length < 1) throw std::invalid_argument("word_length must be >= 1");
  const int n = sig.n();
  SeededRng rng(seed);
  const auto gens = all_generators(n);
  Matrix m = Matrix::Identity(n + 1, n + 1);
  for (int k = 0; k < word_length; ++k) {
    const GeneratorIndex g = gens[static_cast<std::size_t>(rng.next_index(generator_count(n)))];
    const double x = rng.next_in(-1.0, 1.0);
    m = m * one_param_subgroup_matrix(sig, g, x);
  }
  return {m, sig};
}

/// max |M^T Lambda M - Lambda|; zero (to rounding) for genuine group elements.
inline double isometry_residual(const GroupElement& e) {
  const Matrix lambda = invariant_form_rank1(e.signature);
  return max_abs(Matrix(e.matrix.transpose() * lambda * e.matrix - lambda));
}

}  // namespace ck
