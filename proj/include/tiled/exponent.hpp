#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "tiled/perm.hpp"

namespace tiled {

/// Exponent of the uniformizer. The ring, its field of fractions and the
/// uniformizer itself never appear: a lattice (P^{b_ij}) is stored as b.
using Exponent = std::int64_t;

/// Integer exponent matrix of a full tiled lattice. No axioms are checked;
/// entries may be negative (fractional lattices from conjugation).
class LatticeMatrix {
 public:
  explicit LatticeMatrix(std::size_t n, Exponent fill = 0);
  /// Throws NotSquare unless every row has rows.size() entries.
  static LatticeMatrix from_rows(const std::vector<std::vector<Exponent>>& rows);

  std::size_t size() const noexcept { return n_; }
  Exponent operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Exponent& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  std::vector<std::vector<Exponent>> rows() const;

  friend bool operator==(const LatticeMatrix&, const LatticeMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Exponent> entries_;
};

/// Exponent matrix (a_ij) of a tiled order: non-negative, zero diagonal,
/// a_ij + a_jk >= a_ik. Only obtainable through validate().
class ExponentMatrix {
 public:
  std::size_t size() const noexcept { return lattice_.size(); }
  Exponent operator()(std::size_t i, std::size_t j) const { return lattice_(i, j); }
  const LatticeMatrix& lattice() const noexcept { return lattice_; }
  std::vector<std::vector<Exponent>> rows() const { return lattice_.rows(); }

  /// Vertices p and q lie in the same block when a_pq = a_qp = 0, i.e. the
  /// projectives of columns p and q are isomorphic.
  bool same_block(std::size_t p, std::size_t q) const {
    return lattice_(p, q) == 0 && lattice_(q, p) == 0;
  }

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  explicit ExponentMatrix(LatticeMatrix lattice) : lattice_(std::move(lattice)) {}
  friend ExponentMatrix validate(const LatticeMatrix& raw);
  LatticeMatrix lattice_;
};

/// Checks the axioms in the order: entries non-negative (row-major),
/// diagonal zero, triangle inequality (lexicographic in i, j, k). Throws the
/// first violation found: NegativeEntry(i,j), NonzeroDiagonal(i),
/// TriangleViolation(i,j,k), 1-based. Empty matrices are InvalidSize.
ExponentMatrix validate(const LatticeMatrix& raw);
ExponentMatrix validate(const std::vector<std::vector<Exponent>>& raw);
ExponentMatrix validate(std::initializer_list<std::vector<Exponent>> raw);

/// Maximal two-sided ideal M_k: the entries (p,q) with p and q in the block
/// of k get one more power of the uniformizer. For a basic order the block of
/// k is {k} and this is the single entry (k,k).
LatticeMatrix maximal_ideal(const ExponentMatrix& a, std::size_t k);

/// Jacobson radical. Entries inside a block (a_pq = a_qp = 0, in particular
/// the diagonal) are raised by one.
LatticeMatrix radical(const ExponentMatrix& a);

/// Lattice product at the exponent level, C_ij = min_m (A_im + B_mj).
/// Throws DimensionMismatch, or Overflow if a sum leaves the 64-bit range.
LatticeMatrix minplus_product(const LatticeMatrix& a, const LatticeMatrix& b);

/// Lattice intersection, C_ij = max(A_ij, B_ij).
LatticeMatrix intersect(const LatticeMatrix& a, const LatticeMatrix& b);

/// Exponent matrix of v(sigma)^{-1} d(x)^{-1} L d(x) v(sigma), where
/// d(x) = diag(pi^{x_1}, ..., pi^{x_n}). The result C satisfies
/// C(sigma(i), sigma(j)) = L(i,j) - x_i + x_j. Throws LengthMismatch.
LatticeMatrix conjugate(const LatticeMatrix& lattice, const Perm& sigma,
                        std::span<const Exponent> x);
LatticeMatrix conjugate(const ExponentMatrix& a, const Perm& sigma,
                        std::span<const Exponent> x);

bool is_basic(const ExponentMatrix& a);
bool is_zero_one(const ExponentMatrix& a);

/// Basic hereditary order: a_ij = 1 if i > j, else 0. Throws InvalidSize for n = 0.
ExponentMatrix hereditary_order(std::size_t n);

/// Overflow-checked arithmetic on exponents.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_sub(Exponent a, Exponent b);

}  // namespace tiled
