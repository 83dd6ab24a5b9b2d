#include "tiled/quiver.hpp"

#include "tiled/error.hpp"

namespace tiled {

Quiver::Quiver(std::size_t n) : n_(n), adjacency_(n * n, false) {}

Quiver::Quiver(std::size_t n, std::span<const Arrow> arrows) : Quiver(n) {
  for (const auto& arrow : arrows) {
    if (arrow.from >= n) throw Error(ErrorKind::OutOfRange, {arrow.from + 1});
    if (arrow.to >= n) throw Error(ErrorKind::OutOfRange, {arrow.to + 1});
    adjacency_[arrow.from * n + arrow.to] = true;
  }
}

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (has_arrow(i, j)) out.push_back({i, j});
  return out;
}

std::size_t Quiver::arrow_count() const {
  std::size_t count = 0;
  for (bool b : adjacency_) count += b;
  return count;
}

std::size_t Quiver::in_degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += has_arrow(u, v);
  return d;
}

std::size_t Quiver::out_degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += has_arrow(v, u);
  return d;
}

std::optional<Exponent> ValuedQuiver::value(std::size_t from, std::size_t to) const {
  auto it = values.find({from, to});
  if (it == values.end()) return std::nullopt;
  return it->second;
}

Quiver link_graph(const ExponentMatrix& a) {
  const std::size_t n = a.size();
  std::vector<LatticeMatrix> ideals;
  ideals.reserve(n);
  for (std::size_t k = 0; k < n; ++k) ideals.push_back(maximal_ideal(a, k));

  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (minplus_product(ideals[i], ideals[j]) != intersect(ideals[i], ideals[j]))
        arrows.push_back({i, j});
  return Quiver(n, arrows);
}

Quiver link_graph_via_radical(const ExponentMatrix& a) {
  const auto rad = radical(a);
  const auto rad2 = minplus_product(rad, rad);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (rad(i, j) < rad2(i, j)) arrows.push_back({i, j});
  return Quiver(a.size(), arrows);
}

ValuedQuiver valued_quiver(const ExponentMatrix& a) {
  ValuedQuiver out{link_graph(a), {}};
  // Hom(P_i, P_j) = e_i Λ e_j = P^{a_ij}.
  for (const auto& arrow : out.quiver.arrows()) out.values.emplace(arrow, a(arrow.from, arrow.to));
  return out;
}

}  // namespace tiled
