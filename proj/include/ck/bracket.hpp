#pragma once

#include <algorithm>
#include <vector>

#include "ck/generators.hpp"
#include "ck/signature.hpp"

namespace ck {

struct BracketTerm {
  double coeff = 0.0;
  GeneratorIndex gen;
};

/// A formal linear combination of generators. Brackets of basis generators
/// always produce at most one term, but keeping the general form makes
/// Jacobi-type summations uniform.
class BracketResult {
 public:
  BracketResult() = default;

  static BracketResult zero() { return BracketResult(); }

  static BracketResult single(double coeff, GeneratorIndex g) {
    BracketResult r;
    r.add(coeff, g);
    return r;
  }

  void add(double coeff, const GeneratorIndex& g) {
    if (coeff == 0.0) return;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].gen == g) {
        terms_[i].coeff += coeff;
        if (terms_[i].coeff == 0.0) terms_.erase(terms_.begin() + static_cast<long>(i));
        return;
      }
    }
    terms_.push_back({coeff, g});
    std::sort(terms_.begin(), terms_.end(),
              [](const BracketTerm& x, const BracketTerm& y) { return x.gen < y.gen; });
  }

  void add(const BracketResult& other, double scale = 1.0) {
    for (const auto& t : other.terms_) add(scale * t.coeff, t.gen);
  }

  BracketResult negated() const {
    BracketResult r;
    for (const auto& t : terms_) r.add(-t.coeff, t.gen);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }

  // Ref-qualified so that iterating the terms of a temporary result
  // (for (auto& t : bracket(...).terms())) never dangles.
  const std::vector<BracketTerm>& terms() const& { return terms_; }
  std::vector<BracketTerm> terms() && { return std::move(terms_); }

 private:
  std::vector<BracketTerm> terms_;
};

/// Lie bracket [Omega_{g1}, Omega_{g2}] of basis generators. For a < b < c:
///   [Omega_ab, Omega_ac] =  omega_ab Omega_bc
///   [Omega_ab, Omega_bc] = -Omega_ac
///   [Omega_ac, Omega_bc] =  omega_bc Omega_ab
/// Generators sharing no index commute, and [X, X] = 0.
inline BracketResult bracket(const OmegaSignature& sig, const GeneratorIndex& g1,
                             const GeneratorIndex& g2) {
  if (g1.b > sig.n() || g2.b > sig.n())
    throw std::invalid_argument("generator index out of range for signature");
  if (g1 == g2 || !g1.shares_index(g2)) return BracketResult::zero();

  // Exactly one shared index; sort the three distinct indices.
  int shared, x1, x2;
  if (g1.a == g2.a) {
    shared = g1.a;
    x1 = g1.b;
    x2 = g2.b;
  } else if (g1.a == g2.b) {
    shared = g1.a;
    x1 = g1.b;
    x2 = g2.a;
  } else if (g1.b == g2.a) {
    shared = g1.b;
    x1 = g1.a;
    x2 = g2.b;
  } else {
    shared = g1.b;
    x1 = g1.a;
    x2 = g2.a;
  }
  int lo = std::min({shared, x1, x2});
  int hi = std::max({shared, x1, x2});
  int mid = shared + x1 + x2 - lo - hi;

  double coeff;
  GeneratorIndex out;
  GeneratorIndex first;  // the generator that appears on the left in the table form
  if (shared == lo) {
    // [Omega_{lo,mid}, Omega_{lo,hi}] = omega_{lo,mid} Omega_{mid,hi}
    coeff = sig.product(lo, mid);
    out = GeneratorIndex(mid, hi);
    first = GeneratorIndex(lo, mid);
  } else if (shared == mid) {
    // [Omega_{lo,mid}, Omega_{mid,hi}] = -Omega_{lo,hi}
    coeff = -1.0;
    out = GeneratorIndex(lo, hi);
    first = GeneratorIndex(lo, mid);
  } else {
    // [Omega_{lo,hi}, Omega_{mid,hi}] = omega_{mid,hi} Omega_{lo,mid}
    coeff = sig.product(mid, hi);
    out = GeneratorIndex(lo, mid);
    first = GeneratorIndex(lo, hi);
  }
  if (g1 != first) coeff = -coeff;  // antisymmetry
  return BracketResult::single(coeff, out);
}

}  // namespace ck
