#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tiled {

/// A bijection of {0, ..., n-1}. The library indexes vertices from 0; every
/// textual form (cycle notation, one-line image) is 1-based.
///
/// Composition is left to right: compose(s, t) applies s first. This is the
/// order forced by permutation matrices with v(s)_{i, s(i)} = 1, for which
/// v(s) v(t) = v(compose(s, t)).
class Perm {
 public:
  static Perm identity(std::size_t n);

  /// Throws OutOfRange or RepeatedElement if `image` is not a bijection.
  static Perm from_image(std::vector<std::size_t> image);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  Perm inverse() const;
  bool is_identity() const noexcept;
  /// Order in the symmetric group (lcm of cycle lengths).
  std::size_t order() const;

  /// "[2,3,1]"
  std::string one_line() const;
  /// "(1 2 3)(4 5)"; the identity renders as "()".
  std::string cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  /// Lexicographic by image.
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.image_ <=> b.image_; }

 private:
  explicit Perm(std::vector<std::size_t> image) : image_(std::move(image)) {}
  std::vector<std::size_t> image_;
};

/// (s . t)(i) = t(s(i)). Throws DimensionMismatch.
Perm compose(const Perm& s, const Perm& t);

/// Parses cycle notation "(1 2 3)(4 5)" (fixed points may be omitted, commas
/// allowed as separators) or a one-line image "[2,3,1]". Both 1-based.
Perm parse_perm(std::string_view text, std::size_t n);

}  // namespace tiled
