#pragma once

#include "torelli/errors.hpp"

namespace torelli {

// Parameters of the surface N_{g,b}: genus g >= 1 crosscaps and b >= 1
// boundary components.  The fundamental group is free on x_1..x_g and
// y_1..y_{b-1}; with b = 1 there are no y generators at all.
struct SurfaceParams {
  int g = 1;
  int b = 1;

  int y_count() const { return b - 1; }

  void validate() const {
    if (g < 1) throw constraint_error("surface parameters need g >= 1");
    if (b < 1) throw constraint_error("surface parameters need b >= 1");
  }

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

}  // namespace torelli
