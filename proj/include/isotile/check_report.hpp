#pragma once

#include <string>

namespace isotile::numcheck {

/// Outcome of one oracle-versus-closed-form comparison or invariant audit.
/// pass holds exactly when |measured - expected| <= tolerance; detail states
/// whether the tolerance is absolute or relative.
struct CheckReport {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

}  // namespace isotile::numcheck
