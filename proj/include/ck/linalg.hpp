#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace ck {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

inline double symmetry_residual(const Matrix& m) { return max_abs(Matrix(m - m.transpose())); }

/// Portable deterministic uniform doubles (the distribution classes of the
/// standard library are implementation-defined; this is not).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return engine_step(); }

  /// Uniform in [0, 1)
  double next_unit() { return static_cast<double>(engine_step() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi)
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [0, bound)
  int next_index(int bound) { return static_cast<int>(engine_step() % static_cast<std::uint64_t>(bound)); }

 private:
  // splitmix64; tiny, stable across platforms, good enough for test sampling
  std::uint64_t engine_step() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace ck
