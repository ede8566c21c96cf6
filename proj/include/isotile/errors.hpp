#pragma once

#include <stdexcept>
#include <string>

namespace isotile {

/// Base class for malformed geometric input (edges, polygons, triangles).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidEdgeError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NotClosedError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The triangle has an angle >= 120 degrees, so the minimal network is not a
/// tripod with an interior junction.
class NoInteriorSteinerPointError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class SingularLatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested area fraction lies outside the open admissible interval of a
/// configuration. Carries the interval so callers can report it.
class InadmissibleAreaError : public std::domain_error {
 public:
  InadmissibleAreaError(const std::string& what, double lo, double hi)
      : std::domain_error(what), lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OptionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace isotile
