#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ck {

/// Names the generator Omega_{ab} of so_{omega...}(N+1), 0 <= a < b <= N.
struct GeneratorIndex {
  int a = 0;
  int b = 1;

  GeneratorIndex() = default;
  GeneratorIndex(int a_, int b_) : a(a_), b(b_) {
    if (a < 0 || b <= a) throw std::invalid_argument("generator index requires 0 <= a < b");
  }

  bool operator==(const GeneratorIndex& o) const { return a == o.a && b == o.b; }
  bool operator!=(const GeneratorIndex& o) const { return !(*this == o); }
  bool operator<(const GeneratorIndex& o) const { return a != o.a ? a < o.a : b < o.b; }

  bool shares_index(const GeneratorIndex& o) const {
    return a == o.a || a == o.b || b == o.a || b == o.b;
  }
};

/// Number of generators of so(n+1): n(n+1)/2.
inline int generator_count(int n) { return n * (n + 1) / 2; }

/// Position of (a,b) in the lexicographic pair order
/// (0,1) < (0,2) < ... < (0,n) < (1,2) < ... < (n-1,n).
/// This single ordering is used project-wide (adjoint basis, wedge basis).
inline int lex_index(const GeneratorIndex& g, int n) {
  if (g.b > n) throw std::invalid_argument("generator index out of range for dimension");
  return g.a * n - g.a * (g.a - 1) / 2 + (g.b - g.a - 1);
}

inline GeneratorIndex generator_from_lex(int index, int n) {
  if (index < 0 || index >= generator_count(n))
    throw std::invalid_argument("lexicographic index out of range");
  int a = 0;
  int block = n;  // pairs starting at a
  while (index >= block) {
    index -= block;
    ++a;
    --block;
  }
  return GeneratorIndex(a, a + 1 + index);
}

inline std::vector<GeneratorIndex> all_generators(int n) {
  std::vector<GeneratorIndex> out;
  out.reserve(static_cast<std::size_t>(generator_count(n)));
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  return out;
}

inline std::string to_string(const GeneratorIndex& g) {
  return "Omega_{" + std::to_string(g.a) + "," + std::to_string(g.b) + "}";
}

}  // namespace ck
