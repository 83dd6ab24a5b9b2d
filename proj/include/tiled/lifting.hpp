#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tiled/automorphisms.hpp"
#include "tiled/exponent.hpp"
#include "tiled/perm.hpp"
#include "tiled/quiver.hpp"

namespace tiled {

/// Exponents x of d(x) = diag(pi^{x_1}, ..., pi^{x_n}), normalized so that
/// min x_i = 0. Vectors differing by a constant give the same conjugation,
/// since scalar matrices are central.
class LiftVector {
 public:
  static LiftVector normalized(std::vector<Exponent> raw);
  static LiftVector zero(std::size_t n) { return LiftVector(std::vector<Exponent>(n, 0)); }

  std::size_t size() const noexcept { return values_.size(); }
  Exponent operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Exponent>& values() const noexcept { return values_; }
  std::span<const Exponent> span() const noexcept { return values_; }
  bool is_zero() const;

  /// "(1,3,0)"
  std::string to_string() const;

  friend bool operator==(const LiftVector&, const LiftVector&) = default;
  friend auto operator<=>(const LiftVector&, const LiftVector&) = default;

 private:
  explicit LiftVector(std::vector<Exponent> values) : values_(std::move(values)) {}
  std::vector<Exponent> values_;
};

/// The monomial matrix d(x) v(sigma): entry pi^{x_i} at (i, sigma(i)).
/// Lifts built by certify() are checked against the conjugation oracle;
/// products and inverses of certified lifts are lifts for the same order.
class MonomialLift {
 public:
  /// Throws NotAnAutomorphism unless conjugate(a, sigma, x) == a.
  static MonomialLift certify(const ExponentMatrix& a, Perm sigma, LiftVector x);
  static MonomialLift identity(std::size_t n);

  std::size_t size() const noexcept { return sigma_.size(); }
  const Perm& permutation() const noexcept { return sigma_; }
  const LiftVector& exponents() const noexcept { return x_; }

  /// Re-runs the conjugation oracle against `a`.
  bool is_automorphism_of(const ExponentMatrix& a) const;

  friend bool operator==(const MonomialLift&, const MonomialLift&) = default;
  friend auto operator<=>(const MonomialLift&, const MonomialLift&) = default;

 private:
  MonomialLift(Perm sigma, LiftVector x) : sigma_(std::move(sigma)), x_(std::move(x)) {}
  friend MonomialLift compose_lifts(const MonomialLift&, const MonomialLift&);
  friend MonomialLift inverse_lift(const MonomialLift&);

  Perm sigma_;
  LiftVector x_;
};

/// d v(s) . e v(t) = d e^s v(s.t): exponents z_i = x_i + y_{s(i)}, normalized.
/// Throws DimensionMismatch.
MonomialLift compose_lifts(const MonomialLift& first, const MonomialLift& second);
MonomialLift inverse_lift(const MonomialLift& lift);

enum class SymbolStyle { Ascii, Unicode };

/// "0" for an absent entry, "1" for pi^0, "pi"/"π" for pi^1, "pi^3"/"π³" otherwise.
std::string render_monomial(std::optional<Exponent> exponent, SymbolStyle style);

/// n x n matrix whose entries are zero or a power of pi.
class MonomialMatrix {
 public:
  explicit MonomialMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  std::optional<Exponent> at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::optional<Exponent> e) { entries_[i * n_ + j] = e; }

  std::vector<std::vector<std::string>> render(SymbolStyle style = SymbolStyle::Ascii) const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::optional<Exponent>> entries_;
};

MonomialMatrix lift_matrix(const MonomialLift& lift);

/// Outcome of x_i - x_j = a_ij - b_{sigma(i) sigma(j)} over all ordered pairs
/// i != j. The constraint graph is complete, so x_1 = 0 and
/// x_j = b_{sigma(1) sigma(j)} - a_1j is the only candidate up to constants;
/// `first_conflict` is the first ordered pair (0-based) it fails.
struct LiftSystemVerdict {
  std::optional<LiftVector> solution;
  std::optional<std::pair<std::size_t, std::size_t>> first_conflict;
};

/// Throws DimensionMismatch.
LiftSystemVerdict analyze_transport_system(const ExponentMatrix& a, const ExponentMatrix& b,
                                           const Perm& sigma);
LiftSystemVerdict analyze_lift_system(const ExponentMatrix& a, const Perm& sigma);
std::optional<LiftVector> solve_lift_system(const ExponentMatrix& a, const Perm& sigma);

/// Solvable lift system and sigma in Aut(Q). A solvable system for a
/// non-automorphism would contradict the lift construction and raises
/// std::logic_error.
bool is_liftable(const ExponentMatrix& a, const Perm& sigma);

/// The finite group of normalized lifts of the liftable automorphisms of the
/// link graph. Aut_R = Inn ⋊ (this group); the inner part is never enumerated.
class LiftableGroup {
 public:
  const ExponentMatrix& order_matrix() const noexcept { return order_; }
  /// Sorted by permutation; the identity lift comes first.
  const std::vector<MonomialLift>& elements() const noexcept { return elements_; }
  const std::vector<MonomialLift>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t aut_q_order() const noexcept { return aut_q_order_; }
  bool is_cyclic() const noexcept { return cyclic_; }
  bool is_abelian() const noexcept { return abelian_; }

  /// The lift with permutation part sigma, or nullptr if sigma is not liftable.
  const MonomialLift* find(const Perm& sigma) const;

 private:
  explicit LiftableGroup(ExponentMatrix order) : order_(std::move(order)) {}
  friend LiftableGroup liftable_subgroup(const ExponentMatrix&, const SearchOptions&);

  ExponentMatrix order_;
  std::vector<MonomialLift> elements_;
  std::vector<MonomialLift> generators_;
  std::map<Perm, std::size_t> index_;
  std::size_t aut_q_order_ = 0;
  bool cyclic_ = false;
  bool abelian_ = false;
};

/// Throws TooLarge when a.size() > options.max_n.
LiftableGroup liftable_subgroup(const ExponentMatrix& a, const SearchOptions& options = {});

struct ValuationMismatch {
  Arrow arrow;
  Exponent value;
  Arrow image;
  Exponent image_value;
};

/// First arrow (i,j), in sorted order, with v(sigma(i), sigma(j)) != v(i,j).
/// Throws NotQuiverAutomorphism if sigma is not in Aut(Q).
std::optional<ValuationMismatch> find_valuation_mismatch(const ExponentMatrix& a, const Perm& sigma);
bool preserves_valuation(const ExponentMatrix& a, const Perm& sigma);

/// Witness that conjugate(a, sigma, x) == b.
struct OrderIsomorphism {
  Perm sigma;
  LiftVector x;
};

/// Every witness, sorted by sigma. Throws DimensionMismatch or TooLarge.
std::vector<OrderIsomorphism> order_isomorphisms(const ExponentMatrix& a, const ExponentMatrix& b,
                                                 const SearchOptions& options = {});
/// The lexicographically first witness. Each witness is checked against the
/// oracle in both directions (the inverse lift maps b back to a).
std::optional<OrderIsomorphism> orders_isomorphic(const ExponentMatrix& a, const ExponentMatrix& b,
                                                  const SearchOptions& options = {});

inline constexpr const char* kStructureStatement = "Aut_R = Inn ⋊ O_Lambda";

struct StructureReport {
  ExponentMatrix order;
  bool basic;
  bool zero_one;
  ValuedQuiver quiver;
  LiftableGroup group;
  /// |O_Lambda| == |Aut(Q)|.
  bool all_liftable;
  /// Basic (0,1)-orders: every quiver automorphism must lift, and this was checked.
  bool all_liftable_guaranteed;

  std::size_t aut_q_order() const noexcept { return group.aut_q_order(); }
  /// "Aut_R = Inn ⋊ O_Lambda, |O_Lambda|=3, cyclic, abelian"
  std::string structure() const;
};

StructureReport aut_structure_report(const ExponentMatrix& a, const SearchOptions& options = {});

}  // namespace tiled
