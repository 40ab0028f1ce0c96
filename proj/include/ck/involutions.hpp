#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ck/generators.hpp"
#include "ck/signature.hpp"

namespace ck {

/// Sign of the involutive automorphism Theta^(m) on Omega_{ab}:
/// -1 when a < m <= b (the generator crosses the m cut), +1 otherwise.
inline int theta_sign(int m, const GeneratorIndex& g) {
  if (m < 1) throw std::invalid_argument("theta index must be >= 1");
  return (g.a < m && g.b >= m) ? -1 : +1;
}

/// Cartan-like decomposition so = p^(m) + h^(m) induced by Theta^(m);
/// p holds the antiinvariant generators, h the invariant ones.
struct CartanSplit {
  int m = 1;
  std::vector<GeneratorIndex> p_generators;
  std::vector<GeneratorIndex> h_generators;
};

inline CartanSplit cartan_split(const OmegaSignature& sig, int m) {
  if (m < 1 || m > sig.n()) throw std::invalid_argument("involution index out of range");
  CartanSplit s;
  s.m = m;
  for (const auto& g : all_generators(sig.n())) {
    (theta_sign(m, g) < 0 ? s.p_generators : s.h_generators).push_back(g);
  }
  return s;
}

/// Signatures of the two direct summands of h^(m):
/// so_{omega_1..omega_{m-1}}(m) and so_{omega_{m+1}..omega_N}(N+1-m).
/// A summand of a trivial (one-dimensional ambient) algebra is reported as
/// nullopt.
inline std::pair<std::optional<OmegaSignature>, std::optional<OmegaSignature>>
h_subalgebra_signatures(const OmegaSignature& sig, int m) {
  if (m < 1 || m > sig.n()) throw std::invalid_argument("involution index out of range");
  const auto& w = sig.omegas();
  std::optional<OmegaSignature> left, right;
  if (m >= 2)
    left = OmegaSignature(std::vector<double>(w.begin(), w.begin() + (m - 1)));
  if (m <= sig.n() - 1)
    right = OmegaSignature(std::vector<double>(w.begin() + m, w.end()));
  return {std::move(left), std::move(right)};
}

/// Rank of the symmetrical homogeneous space S^(m): the number of
/// independent invariants of a generic pair of its elements.
inline int rank_of_space(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("space index out of range");
  return std::min(m, n + 1 - m);
}

}  // namespace ck
