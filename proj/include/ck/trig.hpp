#pragma once

#include <cmath>

namespace ck {

// Labeled trigonometric functions. They interpolate between circular
// (omega > 0), parabolic (omega = 0) and hyperbolic (omega < 0) behavior
// and satisfy ck_cosine^2 + omega * ck_sine^2 = 1 for every omega.

inline double ck_cosine(double omega, double x) {
  if (omega > 0.0) return std::cos(std::sqrt(omega) * x);
  if (omega < 0.0) return std::cosh(std::sqrt(-omega) * x);
  return 1.0;
}

inline double ck_sine(double omega, double x) {
  if (omega > 0.0) {
    const double r = std::sqrt(omega);
    return std::sin(r * x) / r;
  }
  if (omega < 0.0) {
    const double r = std::sqrt(-omega);
    return std::sinh(r * x) / r;
  }
  return x;
}

/// d/dx ck_cosine(omega, x) = -omega * ck_sine(omega, x)
inline double ck_cosine_deriv(double omega, double x) {
  return -omega * ck_sine(omega, x);
}

/// d/dx ck_sine(omega, x) = ck_cosine(omega, x)
inline double ck_sine_deriv(double omega, double x) {
  return ck_cosine(omega, x);
}

}  // namespace ck
