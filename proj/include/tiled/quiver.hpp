#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tiled/exponent.hpp"

namespace tiled {

struct Arrow {
  std::size_t from;
  std::size_t to;

  bool is_loop() const noexcept { return from == to; }
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Directed graph on vertices 0..n-1 with at most one arrow per ordered pair.
/// Loops are allowed.
class Quiver {
 public:
  explicit Quiver(std::size_t n);
  /// Throws OutOfRange for endpoints outside 0..n-1; duplicates collapse.
  Quiver(std::size_t n, std::span<const Arrow> arrows);

  std::size_t size() const noexcept { return n_; }
  bool has_arrow(std::size_t from, std::size_t to) const { return adjacency_[from * n_ + to]; }
  bool has_loop(std::size_t v) const { return has_arrow(v, v); }
  /// Sorted by (from, to).
  std::vector<Arrow> arrows() const;
  std::size_t arrow_count() const;
  std::size_t in_degree(std::size_t v) const;
  std::size_t out_degree(std::size_t v) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t n_;
  std::vector<bool> adjacency_;
};

struct ValuedQuiver {
  Quiver quiver;
  std::map<Arrow, Exponent> values;

  std::optional<Exponent> value(std::size_t from, std::size_t to) const;
};

/// Link graph of the maximal ideals: arrow i -> j iff M_i M_j != M_i ∩ M_j.
Quiver link_graph(const ExponentMatrix& a);

/// Quiver of rad / rad^2: arrow i -> j iff rad_ij < (rad^2)_ij. Computed
/// independently of link_graph; the two always agree.
Quiver link_graph_via_radical(const ExponentMatrix& a);

/// link_graph(a) with v(i,j) = a_ij on each arrow.
ValuedQuiver valued_quiver(const ExponentMatrix& a);

}  // namespace tiled
