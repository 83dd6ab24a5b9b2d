#include "tiled/exponent.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "tiled/error.hpp"

namespace tiled {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow);
  return out;
}

Exponent checked_sub(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorKind::Overflow);
  return out;
}

LatticeMatrix::LatticeMatrix(std::size_t n, Exponent fill) : n_(n), entries_(n * n, fill) {}

LatticeMatrix LatticeMatrix::from_rows(const std::vector<std::vector<Exponent>>& rows) {
  const std::size_t n = rows.size();
  LatticeMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::NotSquare, {i + 1});
    std::copy(rows[i].begin(), rows[i].end(), out.entries_.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return out;
}

std::vector<std::vector<Exponent>> LatticeMatrix::rows() const {
  std::vector<std::vector<Exponent>> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  return out;
}

ExponentMatrix validate(const LatticeMatrix& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorKind::InvalidSize, {}, "empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (raw(i, j) < 0) throw Error(ErrorKind::NegativeEntry, {i + 1, j + 1});
  for (std::size_t i = 0; i < n; ++i)
    if (raw(i, i) != 0) throw Error(ErrorKind::NonzeroDiagonal, {i + 1});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (checked_add(raw(i, j), raw(j, k)) < raw(i, k))
          throw Error(ErrorKind::TriangleViolation, {i + 1, j + 1, k + 1});
  return ExponentMatrix(raw);
}

ExponentMatrix validate(const std::vector<std::vector<Exponent>>& raw) {
  return validate(LatticeMatrix::from_rows(raw));
}

ExponentMatrix validate(std::initializer_list<std::vector<Exponent>> raw) {
  return validate(std::vector<std::vector<Exponent>>(raw));
}

LatticeMatrix maximal_ideal(const ExponentMatrix& a, std::size_t k) {
  const std::size_t n = a.size();
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, {k + 1});
  LatticeMatrix m = a.lattice();
  for (std::size_t p = 0; p < n; ++p) {
    if (!a.same_block(p, k)) continue;
    for (std::size_t q = 0; q < n; ++q)
      if (a.same_block(q, k)) m(p, q) = checked_add(m(p, q), 1);
  }
  return m;
}

LatticeMatrix radical(const ExponentMatrix& a) {
  LatticeMatrix g = a.lattice();
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < a.size(); ++q)
      if (a.same_block(p, q)) g(p, q) = checked_add(g(p, q), 1);
  return g;
}

LatticeMatrix minplus_product(const LatticeMatrix& a, const LatticeMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, {a.size(), b.size()});
  const std::size_t n = a.size();
  LatticeMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponent best = checked_add(a(i, 0), b(0, j));
      for (std::size_t m = 1; m < n; ++m) best = std::min(best, checked_add(a(i, m), b(m, j)));
      c(i, j) = best;
    }
  return c;
}

LatticeMatrix intersect(const LatticeMatrix& a, const LatticeMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, {a.size(), b.size()});
  LatticeMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = std::max(a(i, j), b(i, j));
  return c;
}

LatticeMatrix conjugate(const LatticeMatrix& lattice, const Perm& sigma,
                        std::span<const Exponent> x) {
  const std::size_t n = lattice.size();
  if (sigma.size() != n) throw Error(ErrorKind::DimensionMismatch, {n, sigma.size()});
  if (x.size() != n) throw Error(ErrorKind::LengthMismatch, {n, x.size()});
  LatticeMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c(sigma(i), sigma(j)) = checked_add(checked_sub(lattice(i, j), x[i]), x[j]);
  return c;
}

LatticeMatrix conjugate(const ExponentMatrix& a, const Perm& sigma, std::span<const Exponent> x) {
  return conjugate(a.lattice(), sigma, x);
}

// Columns i and j give isomorphic projectives iff they differ by a constant c
// (multiplication by pi^c). Reading the difference at rows i and j gives
// c = a_ji - a_ii = a_ji and c = a_jj - a_ij = -a_ij, so a_ij + a_ji = 0 and
// non-negativity forces c = 0: basic means pairwise distinct columns.
bool is_basic(const ExponentMatrix& a) {
  const std::size_t n = a.size();
  std::set<std::vector<Exponent>> columns;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Exponent> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = a(i, j);
    if (!columns.insert(std::move(column)).second) return false;
  }
  return true;
}

bool is_zero_one(const ExponentMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) != 0 && a(i, j) != 1) return false;
  return true;
}

ExponentMatrix hereditary_order(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidSize, {}, "hereditary order needs n >= 1");
  LatticeMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = 1;
  return validate(m);
}

}  // namespace tiled
