#pragma once

#include "tiled/exponent.hpp"

namespace fixtures {

/// The 3x3 order used for both the valued-quiver counterexample and the
/// worked liftability example.
inline tiled::ExponentMatrix example6() { return tiled::validate({{0, 2, 4}, {3, 0, 4}, {1, 1, 0}}); }

/// [[R, P], [P, R]].
inline tiled::ExponentMatrix swap_order() { return tiled::validate({{0, 1}, {1, 0}}); }

/// example6 conjugated by diag(pi, 1, 1).
inline tiled::ExponentMatrix example6_shifted() {
  return tiled::validate({{0, 1, 3}, {4, 0, 4}, {2, 1, 0}});
}

}  // namespace fixtures
