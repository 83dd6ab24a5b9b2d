#include "tiled/error.hpp"

namespace tiled {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::MalformedSyntax: return "MalformedSyntax";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::RepeatedElement: return "RepeatedElement";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotQuiverAutomorphism: return "NotQuiverAutomorphism";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
  }
  return "Unknown";
}

namespace {

std::string render_tag(ErrorKind kind, const std::vector<std::size_t>& indices) {
  std::string out(to_string(kind));
  if (!indices.empty()) {
    out += '(';
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(indices[i]);
    }
    out += ')';
  }
  return out;
}

std::string render_message(ErrorKind kind, const std::vector<std::size_t>& indices,
                           const std::string& detail) {
  auto out = render_tag(kind, indices);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::vector<std::size_t> indices, std::string detail)
    : std::runtime_error(render_message(kind, indices, detail)),
      kind_(kind),
      indices_(std::move(indices)),
      detail_(std::move(detail)) {}

std::string Error::tag() const { return render_tag(kind_, indices_); }

}  // namespace tiled
