#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tiled {

enum class ErrorKind {
  NotSquare,
  NegativeEntry,
  NonzeroDiagonal,
  TriangleViolation,
  IndexOutOfRange,
  DimensionMismatch,
  LengthMismatch,
  Overflow,
  InvalidSize,
  MalformedSyntax,
  OutOfRange,
  RepeatedElement,
  TooLarge,
  NotQuiverAutomorphism,
  NotAnAutomorphism,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every library operation. `indices` are 1-based, matching
/// the external notation; what() renders as "Kind(i,j,...)" optionally
/// followed by ": detail".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::vector<std::size_t> indices = {}, std::string detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  const std::string& detail() const noexcept { return detail_; }

  /// "Kind(i,j,k)" without the detail text.
  std::string tag() const;

 private:
  ErrorKind kind_;
  std::vector<std::size_t> indices_;
  std::string detail_;
};

// Internal invariant check that stays active in release builds.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw std::logic_error(what);
}

}  // namespace tiled
