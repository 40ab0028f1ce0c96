#pragma once

#include <stdexcept>
#include <string>

namespace ck {

/// A point or parameter left the domain of the coordinate chart in use
/// (x^0 too close to zero, singular locus of a Beltrami-form metric, no
/// real solution for the inessential coordinate, ...).
class chart_error : public std::domain_error {
 public:
  explicit chart_error(const std::string& what) : std::domain_error(what) {}
};

/// An operation that requires a non-degenerate metric (or a non-degenerate
/// tangent 2-plane) was invoked in a degenerate configuration.
class degeneracy_error : public std::domain_error {
 public:
  explicit degeneracy_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace ck
