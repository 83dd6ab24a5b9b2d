#include "tiled/perm.hpp"

#include <cctype>
#include <numeric>
#include <optional>

#include "tiled/error.hpp"

namespace tiled {

Perm Perm::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Perm(std::move(image));
}

Perm Perm::from_image(std::vector<std::size_t> image) {
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= image.size()) throw Error(ErrorKind::OutOfRange, {image[i] + 1});
    if (seen[image[i]]) throw Error(ErrorKind::RepeatedElement, {image[i] + 1});
    seen[image[i]] = true;
  }
  return Perm(std::move(image));
}

Perm Perm::inverse() const {
  std::vector<std::size_t> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::vector<bool> visited(size(), false);
  std::size_t result = 1;
  for (std::size_t start = 0; start < size(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !visited[i]; i = image_[i]) {
      visited[i] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Perm::one_line() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i] + 1);
  }
  return out + "]";
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> visited(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (visited[start] || image_[start] == start) continue;
    out += '(';
    for (std::size_t i = start; !visited[i]; i = image_[i]) {
      visited[i] = true;
      if (i != start) out += ' ';
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw Error(ErrorKind::DimensionMismatch, {s.size(), t.size()});
  std::vector<std::size_t> image(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) image[i] = t(s(i));
  return Perm::from_image(std::move(image));
}

namespace {

class PermParser {
 public:
  PermParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Perm parse() {
    skip_space();
    if (at_end()) fail("empty permutation");
    Perm result = peek() == '[' ? one_line() : cycle_product();
    skip_space();
    if (!at_end()) fail("trailing characters");
    return result;
  }

 private:
  Perm one_line() {
    ++pos_;
    std::vector<std::size_t> image;
    skip_space();
    if (peek() != ']') {
      for (;;) {
        image.push_back(point() - 1);
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(']');
    if (image.size() != n_) {
      fail("one-line image has " + std::to_string(image.size()) + " entries, expected " +
           std::to_string(n_));
    }
    return Perm::from_image(std::move(image));
  }

  Perm cycle_product() {
    std::vector<std::size_t> image(n_);
    std::iota(image.begin(), image.end(), std::size_t{0});
    std::vector<bool> used(n_, false);
    while (true) {
      skip_space();
      if (at_end()) break;
      expect('(');
      std::vector<std::size_t> cycle;
      skip_space();
      while (peek() != ')') {
        auto p = point() - 1;
        if (used[p]) throw Error(ErrorKind::RepeatedElement, {p + 1});
        used[p] = true;
        cycle.push_back(p);
        skip_space();
        if (peek() == ',') ++pos_;
        skip_space();
        if (at_end()) fail("unterminated cycle");
      }
      ++pos_;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return Perm::from_image(std::move(image));
  }

  // A 1-based point in range.
  std::size_t point() {
    skip_space();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::size_t>(peek() - '0');
      if (value > 1'000'000'000) value = 1'000'000'000;
      ++pos_;
    }
    if (pos_ == start) fail("expected a point");
    if (value < 1 || value > n_) throw Error(ErrorKind::OutOfRange, {value});
    return value;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::MalformedSyntax, {}, why + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Perm parse_perm(std::string_view text, std::size_t n) { return PermParser(text, n).parse(); }

}  // namespace tiled
