#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ck {

/// The N real constants (omega_1, ..., omega_N) that select one member of
/// the 3^N family of orthogonal Cayley-Klein algebras so_{omega...}(N+1).
/// Any finite real values are allowed; scaling each constant to {+1, 0, -1}
/// is a canonical form, not a requirement.
class OmegaSignature {
 public:
  explicit OmegaSignature(std::vector<double> omegas) : omegas_(std::move(omegas)) {
    if (omegas_.empty()) throw std::invalid_argument("signature needs at least one constant");
    for (double w : omegas_) {
      if (!std::isfinite(w)) throw std::invalid_argument("signature constants must be finite");
    }
  }

  int n() const { return static_cast<int>(omegas_.size()); }

  /// omega_a, 1-based, a in 1..n
  double omega(int a) const {
    if (a < 1 || a > n()) throw std::invalid_argument("omega index out of range");
    return omegas_[static_cast<std::size_t>(a - 1)];
  }

  const std::vector<double>& omegas() const { return omegas_; }

  /// Two-index coefficient omega_{ab} = omega_{a+1} * ... * omega_b for
  /// 0 <= a <= b <= n; the empty product omega_{aa} is 1.
  double product(int a, int b) const {
    if (a < 0 || b > n() || a > b) throw std::invalid_argument("omega_product index out of range");
    double p = 1.0;
    for (int l = a + 1; l <= b; ++l) p *= omegas_[static_cast<std::size_t>(l - 1)];
    return p;
  }

  /// Signs scaled to {+1, 0, -1}.
  OmegaSignature canonical() const {
    std::vector<double> s(omegas_.size());
    for (std::size_t i = 0; i < omegas_.size(); ++i)
      s[i] = omegas_[i] > 0.0 ? 1.0 : (omegas_[i] < 0.0 ? -1.0 : 0.0);
    return OmegaSignature(std::move(s));
  }

  bool operator==(const OmegaSignature& other) const { return omegas_ == other.omegas_; }

 private:
  std::vector<double> omegas_;
};

inline double omega_product(const OmegaSignature& sig, int a, int b) { return sig.product(a, b); }

/// All 3^n sign signatures for dimension n, in ternary-counter order
/// (+1, 0, -1 per digit, leftmost digit slowest).
inline std::vector<OmegaSignature> canonical_signatures(int n) {
  if (n < 1) throw std::invalid_argument("canonical_signatures needs n >= 1");
  static constexpr double kValues[3] = {1.0, 0.0, -1.0};
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<OmegaSignature> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<double> w(static_cast<std::size_t>(n));
    std::size_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = kValues[c % 3];
      c /= 3;
    }
    out.emplace_back(std::move(w));
  }
  return out;
}

}  // namespace ck
