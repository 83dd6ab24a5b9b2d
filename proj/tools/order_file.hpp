#pragma once

#include <stdexcept>
#include <string>

#include "tiled/exponent.hpp"

namespace tiled::cli {

/// Unreadable file, malformed JSON, or a document that is not
/// {"alpha": [[int, ...], ...]}.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads an order file. Axioms are not checked here; shape problems surface
/// as NotSquare from LatticeMatrix::from_rows.
LatticeMatrix load_order_file(const std::string& path);

/// {"alpha": [[0,0],[1,0]]}
std::string format_order_file(const ExponentMatrix& a);

}  // namespace tiled::cli
