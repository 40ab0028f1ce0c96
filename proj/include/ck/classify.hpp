#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ck/signature.hpp"

namespace ck {

/// One cell of the rank-one / rank-two space catalog (nine sign patterns
/// (omega_1, omega_2) per rank, with omega_3.. all positive).
struct CatalogEntry {
  int rank = 1;
  char omega1_sign = '+';
  char omega2_sign = '+';
  std::string name;
  std::string space;
  std::string coset;
  std::string curvature;  // Positive | Zero | Negative
  bool foliated = false;
  std::string base;   // empty unless foliated
  std::string fiber;  // empty unless foliated
};

struct ClassificationRecord {
  std::string structure;  // recursive semidirect decomposition
  std::string alias;      // ISO/IISO/flag-space compact name, when one applies
  std::vector<std::pair<int, int>> pq_counts;  // (p,q) per SO factor, print order
  std::optional<CatalogEntry> catalog_rank1;
  std::optional<CatalogEntry> catalog_rank2;
};

namespace detail {

inline char sign_char(double w) { return w > 0.0 ? '+' : (w < 0.0 ? '-' : '0'); }

/// Inertia (p, q) of diag(1, w_{01}, ..., w_{0k}) for an all-nonzero slice.
inline std::pair<int, int> so_inertia(const std::vector<double>& w) {
  int p = 1, q = 0;
  double prod = 1.0;
  for (double x : w) {
    prod *= x;
    (prod > 0.0 ? p : q) += 1;
  }
  return {p, q};
}

inline std::string so_text(std::pair<int, int> pq) {
  const int hi = std::max(pq.first, pq.second);
  const int lo = std::min(pq.first, pq.second);
  if (lo == 0) return "SO(" + std::to_string(hi) + ")";
  return "SO(" + std::to_string(hi) + "," + std::to_string(lo) + ")";
}

struct StructurePart {
  std::string text;
  std::vector<std::pair<int, int>> pqs;
  bool trivial = false;     // the one-dimensional ambient group SO(1)
  bool composite = false;   // contains a semidirect factor (needs parentheses)
};

inline StructurePart structure_of(const std::vector<double>& w) {
  const int k = static_cast<int>(w.size());
  if (k == 0) return {"SO(1)", {}, true, false};
  int zero = 0;  // first zero position, 1-based
  for (int i = 0; i < k; ++i)
    if (w[static_cast<std::size_t>(i)] == 0.0) {
      zero = i + 1;
      break;
    }
  if (zero == 0) {
    const auto pq = so_inertia(w);
    return {so_text(pq), {pq}, false, false};
  }
  const int dim_t = zero * (k + 1 - zero);
  const StructurePart left =
      structure_of(std::vector<double>(w.begin(), w.begin() + (zero - 1)));
  const StructurePart right = structure_of(std::vector<double>(w.begin() + zero, w.end()));
  const auto wrap = [](const StructurePart& part) {
    return part.composite ? "(" + part.text + ")" : part.text;
  };
  StructurePart out;
  out.composite = true;
  const std::string t = "T_" + std::to_string(dim_t);
  if (left.trivial && right.trivial) {
    out.text = t + " ⊙ SO(1)";
  } else if (left.trivial) {
    out.text = t + " ⊙ " + wrap(right);
    out.pqs = right.pqs;
  } else if (right.trivial) {
    out.text = t + " ⊙ " + wrap(left);
    out.pqs = left.pqs;
  } else {
    // Larger-index factor first, matching the displayed NH decomposition.
    out.text = t + " ⊙ (" + right.text + " ⊗ " + left.text + ")";
    out.pqs = right.pqs;
    out.pqs.insert(out.pqs.end(), left.pqs.begin(), left.pqs.end());
  }
  return out;
}

inline const std::vector<CatalogEntry>& catalog_table() {
  static const std::vector<CatalogEntry> table = {
      // rank-one, rows by omega_2 sign, columns by omega_1 sign
      {1, '+', '+', "Elliptic Space", "S^{[+]+,...,+}", "SO(N+1)/SO(N)", "Positive", false, "", ""},
      {1, '0', '+', "Euclidean Space", "S^{[0]+,...,+}", "ISO(N)/SO(N)", "Zero", false, "", ""},
      {1, '-', '+', "Hyperbolic Space", "S^{[-]+,...,+}", "SO(N,1)/SO(N)", "Negative", false, "", ""},
      {1, '+', '0', "Oscillating NH Spacetime", "S^{[+]0,+,...,+}", "ONH/ISO(N-1)", "Positive",
       true, "S^{[+]}", "S^{[0],+,...,+}"},
      {1, '0', '0', "Galilean Spacetime", "S^{[0]0,+,...,+}", "IISO(N-1)/ISO(N-1)", "Zero", true,
       "S^{[0]}", "S^{[0],+,...,+}"},
      {1, '-', '0', "Expanding NH Spacetime", "S^{[-]0,+,...,+}", "ENH/ISO(N-1)", "Negative", true,
       "S^{[-]}", "S^{[0],+,...,+}"},
      {1, '+', '-', "Anti-DeSitter Spacetime", "S^{[+]-,+,...,+}", "SO(N-1,2)/SO(N-1,1)",
       "Positive", false, "", ""},
      {1, '0', '-', "Minkowskian Spacetime", "S^{[0]-,+,...,+}", "ISO(N-1,1)/SO(N-1,1)", "Zero",
       false, "", ""},
      {1, '-', '-', "DeSitter Spacetime", "S^{[-]-,+,...,+}", "SO(N,1)/SO(N-1,1)", "Negative",
       false, "", ""},
      // rank-two: curvature follows omega_2, foliation appears iff omega_1 = 0
      {2, '+', '+', "Elliptic line-space", "S^{+[+]+,...,+}", "SO(N+1)/SO(2)⊗SO(N-1)",
       "Positive", false, "", ""},
      {2, '0', '+', "Euclidean line-space", "S^{0[+]+,...,+}", "ISO(N)/R⊗SO(N-1)", "Positive",
       true, "S^{[+]+,+}", "S^{[0]+,+}"},
      {2, '-', '+', "Hyperbolic line-space", "S^{-[+]+,...,+}", "SO(N,1)/SO(1,1)⊗SO(N-1)",
       "Positive", false, "", ""},
      {2, '+', '0', "Oscillating NH Phase Space", "S^{+[0]+,...,+}", "ONH/SO(2)⊗SO(N-1)",
       "Zero", false, "", ""},
      {2, '0', '0', "Galilean Phase Space", "S^{0[0]+,...,+}", "IISO(N-1)/R⊗SO(N-1)", "Zero",
       true, "S^{[0]+,+}", "S^{[0]+,+}"},
      {2, '-', '0', "Expanding NH Phase Space", "S^{-[0]+,...,+}", "ENH/SO(1,1)⊗SO(N-1)",
       "Zero", false, "", ""},
      {2, '+', '-', "Anti-DeSitter Phase Space", "S^{+[-]+,...,+}", "SO(N-1,2)/SO(2)⊗SO(N-1)",
       "Negative", false, "", ""},
      {2, '0', '-', "Minkowskian Phase Space", "S^{0[-]+,...,+}", "ISO(N-1,1)/R⊗SO(N-1)",
       "Negative", true, "S^{[-]+,+}", "S^{[0]+,+}"},
      {2, '-', '-', "DeSitter Phase Space", "S^{-[-]+,...,+}", "SO(N,1)/SO(1,1)⊗SO(N-1)",
       "Negative", false, "", ""},
  };
  return table;
}

inline std::optional<CatalogEntry> catalog_lookup(const OmegaSignature& sig, int rank) {
  const int min_n = rank == 1 ? 2 : 3;
  if (sig.n() < min_n) return std::nullopt;
  for (int a = 3; a <= sig.n(); ++a)
    if (sig.omega(a) <= 0.0) return std::nullopt;
  const char s1 = sign_char(sig.omega(1));
  const char s2 = sign_char(sig.omega(2));
  for (const auto& e : catalog_table())
    if (e.rank == rank && e.omega1_sign == s1 && e.omega2_sign == s2) return e;
  return std::nullopt;
}

}  // namespace detail

/// All 18 catalog cells in table order (rank one first).
inline const std::vector<CatalogEntry>& catalog_entries() { return detail::catalog_table(); }

/// Catalog cell for the rank-one space of this signature, matched on the
/// signs of (omega_1, omega_2) with omega_3.. all positive.
inline std::optional<CatalogEntry> space_name_rank1(const OmegaSignature& sig) {
  return detail::catalog_lookup(sig, 1);
}

/// Catalog cell for the rank-two space of this signature (N >= 3).
inline std::optional<CatalogEntry> space_name_rank2(const OmegaSignature& sig) {
  return detail::catalog_lookup(sig, 2);
}

/// Structural decomposition of the CK group for a signature: pseudo-
/// orthogonal SO(p,q) when no constant vanishes, recursive semidirect
/// T_(dim) products otherwise, plus the compact inhomogeneous aliases.
inline ClassificationRecord classify_group(const OmegaSignature& sig) {
  const int n = sig.n();
  const auto& w = sig.omegas();
  ClassificationRecord rec;
  const auto part = detail::structure_of(w);
  rec.structure = part.text;
  rec.pq_counts = part.pqs;

  std::vector<int> zeros;
  for (int a = 1; a <= n; ++a)
    if (sig.omega(a) == 0.0) zeros.push_back(a);
  if (static_cast<int>(zeros.size()) == n) {
    rec.alias = std::string(static_cast<std::size_t>(n), 'I') + "SO(1)";
  } else if (zeros.size() == 1 && zeros[0] == 1) {
    const auto pq = detail::so_inertia(std::vector<double>(w.begin() + 1, w.end()));
    rec.alias = "I" + detail::so_text(pq);
  } else if (zeros.size() == 2 && zeros[0] == 1 && zeros[1] == 2) {
    const auto pq = detail::so_inertia(std::vector<double>(w.begin() + 2, w.end()));
    rec.alias = "II" + detail::so_text(pq);
  }

  rec.catalog_rank1 = space_name_rank1(sig);
  rec.catalog_rank2 = space_name_rank2(sig);
  return rec;
}

}  // namespace ck
