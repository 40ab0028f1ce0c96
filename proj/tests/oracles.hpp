#pragma once

// Independent numerical oracles used only by the test suites. These must not
// share code paths with the library implementations they check: the matrix
// exponential is a truncated series with scaling and squaring, the bivector
// oracle is assembled directly from the derivation action on wedge pairs,
// and derivatives come from plain central differences.

#include <cmath>
#include <functional>

#include "ck/generators.hpp"
#include "ck/linalg.hpp"

namespace ckt {

using ck::Matrix;
using ck::Vector;

/// exp(A) by scaling-and-squaring plus a Taylor series run to machine-level
/// stagnation (term below 1e-16 * scale).
inline Matrix expm_series(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  double norm = 0.0;
  for (int i = 0; i < n; ++i) norm = std::max(norm, a.row(i).cwiseAbs().sum());
  int squarings = 0;
  Matrix scaled = a;
  while (norm > 0.5) {
    norm /= 2.0;
    scaled /= 2.0;
    ++squarings;
  }
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-16) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// Induced action of a linear map X on wedge pairs e_a ^ e_b (lexicographic
/// order): X(e_a) ^ e_b + e_a ^ X(e_b), re-expressed on the pair basis.
inline Matrix wedge_square_algebra(const Matrix& x) {
  const int n = static_cast<int>(x.rows()) - 1;
  const int d = ck::generator_count(n);
  Matrix out = Matrix::Zero(d, d);
  const auto pairs = ck::all_generators(n);
  for (int col = 0; col < d; ++col) {
    const int a = pairs[static_cast<std::size_t>(col)].a;
    const int b = pairs[static_cast<std::size_t>(col)].b;
    for (int c = 0; c <= n; ++c) {
      if (x(c, a) != 0.0 && c != b) {
        const int row = ck::lex_index(ck::GeneratorIndex(std::min(c, b), std::max(c, b)), n);
        out(row, col) += (c < b ? 1.0 : -1.0) * x(c, a);
      }
      if (x(c, b) != 0.0 && c != a) {
        const int row = ck::lex_index(ck::GeneratorIndex(std::min(a, c), std::max(a, c)), n);
        out(row, col) += (a < c ? 1.0 : -1.0) * x(c, b);
      }
    }
  }
  return out;
}

/// Central-difference derivative.
inline double fd_derivative(const std::function<double(double)>& f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// cosh by its Taylor series (reference value independent of <cmath>).
inline double cosh_series(double x) {
  double sum = 1.0, term = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= x * x / static_cast<double>((2 * k - 1) * (2 * k));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

}  // namespace ckt
