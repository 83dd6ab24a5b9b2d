#pragma once

#include <cstddef>
#include <vector>

#include "tiled/perm.hpp"
#include "tiled/quiver.hpp"

namespace tiled {

struct SearchOptions {
  /// Refuse searches over S_n beyond this size (TooLarge).
  std::size_t max_n = 9;
  /// Threads used to split the search by the image of vertex 0. Results do
  /// not depend on this value.
  unsigned workers = 1;
};

/// True iff (i,j) is an arrow exactly when (sigma(i), sigma(j)) is.
bool is_quiver_automorphism(const Quiver& q, const Perm& sigma);

/// All sigma with arrow (i,j) in `from` iff arrow (sigma(i), sigma(j)) in `to`,
/// sorted lexicographically by image. Backtracking over vertices in order,
/// pruned by (in-degree, out-degree, loop) profiles and adjacency to the
/// already assigned vertices.
std::vector<Perm> quiver_isomorphisms(const Quiver& from, const Quiver& to,
                                      const SearchOptions& options = {});

std::vector<Perm> quiver_automorphisms(const Quiver& q, const SearchOptions& options = {});

}  // namespace tiled
