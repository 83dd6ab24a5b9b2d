#include "tiled/lifting.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tiled/error.hpp"

namespace tiled {

LiftVector LiftVector::normalized(std::vector<Exponent> raw) {
  if (raw.empty()) return LiftVector(std::move(raw));
  const Exponent low = *std::min_element(raw.begin(), raw.end());
  for (auto& v : raw) v = checked_sub(v, low);
  return LiftVector(std::move(raw));
}

bool LiftVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Exponent v) { return v == 0; });
}

std::string LiftVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

MonomialLift MonomialLift::certify(const ExponentMatrix& a, Perm sigma, LiftVector x) {
  MonomialLift lift(std::move(sigma), std::move(x));
  if (!lift.is_automorphism_of(a)) {
    throw Error(ErrorKind::NotAnAutomorphism, {},
                "conjugation by d(x)v(sigma) does not fix the order, sigma=" +
                    lift.sigma_.cycles() + " x=" + lift.x_.to_string());
  }
  return lift;
}

MonomialLift MonomialLift::identity(std::size_t n) {
  return MonomialLift(Perm::identity(n), LiftVector::zero(n));
}

bool MonomialLift::is_automorphism_of(const ExponentMatrix& a) const {
  if (a.size() != size() || x_.size() != size()) return false;
  return conjugate(a, sigma_, x_.span()) == a.lattice();
}

MonomialLift compose_lifts(const MonomialLift& first, const MonomialLift& second) {
  const std::size_t n = first.size();
  if (second.size() != n) throw Error(ErrorKind::DimensionMismatch, {n, second.size()});
  std::vector<Exponent> z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = checked_add(first.x_[i], second.x_[first.sigma_(i)]);
  return MonomialLift(compose(first.sigma_, second.sigma_), LiftVector::normalized(std::move(z)));
}

MonomialLift inverse_lift(const MonomialLift& lift) {
  // (d v(s))^{-1} = v(s^{-1}) d^{-1}: entry pi^{-x_{s^{-1}(i)}} at (i, s^{-1}(i)).
  const Perm inv = lift.sigma_.inverse();
  std::vector<Exponent> y(lift.size());
  for (std::size_t i = 0; i < lift.size(); ++i) y[i] = checked_sub(0, lift.x_[inv(i)]);
  return MonomialLift(inv, LiftVector::normalized(std::move(y)));
}

std::string render_monomial(std::optional<Exponent> exponent, SymbolStyle style) {
  if (!exponent) return "0";
  if (*exponent == 0) return "1";
  const std::string pi = style == SymbolStyle::Unicode ? "π" : "pi";
  if (*exponent == 1) return pi;
  if (style == SymbolStyle::Ascii) return pi + "^" + std::to_string(*exponent);

  static const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = pi;
  if (*exponent < 0) out += "⁻";
  for (char c : std::to_string(*exponent))
    if (c != '-') out += kSuperscripts[c - '0'];
  return out;
}

std::vector<std::vector<std::string>> MonomialMatrix::render(SymbolStyle style) const {
  std::vector<std::vector<std::string>> out(n_, std::vector<std::string>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = render_monomial(at(i, j), style);
  return out;
}

MonomialMatrix lift_matrix(const MonomialLift& lift) {
  MonomialMatrix m(lift.size());
  for (std::size_t i = 0; i < lift.size(); ++i)
    m.set(i, lift.permutation()(i), lift.exponents()[i]);
  return m;
}

LiftSystemVerdict analyze_transport_system(const ExponentMatrix& a, const ExponentMatrix& b,
                                           const Perm& sigma) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorKind::DimensionMismatch, {n, b.size()});
  if (sigma.size() != n) throw Error(ErrorKind::DimensionMismatch, {n, sigma.size()});

  std::vector<Exponent> x(n, 0);
  for (std::size_t j = 1; j < n; ++j) x[j] = checked_sub(b(sigma(0), sigma(j)), a(0, j));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (checked_sub(x[i], x[j]) != checked_sub(a(i, j), b(sigma(i), sigma(j))))
        return {std::nullopt, std::pair{i, j}};
    }
  return {LiftVector::normalized(std::move(x)), std::nullopt};
}

LiftSystemVerdict analyze_lift_system(const ExponentMatrix& a, const Perm& sigma) {
  return analyze_transport_system(a, a, sigma);
}

std::optional<LiftVector> solve_lift_system(const ExponentMatrix& a, const Perm& sigma) {
  return analyze_lift_system(a, sigma).solution;
}

bool is_liftable(const ExponentMatrix& a, const Perm& sigma) {
  const bool solvable = solve_lift_system(a, sigma).has_value();
  const bool automorphism = is_quiver_automorphism(link_graph(a), sigma);
  ensure(!solvable || automorphism, "solvable lift system for a non-automorphism of the link graph");
  return solvable && automorphism;
}

const MonomialLift* LiftableGroup::find(const Perm& sigma) const {
  auto it = index_.find(sigma);
  return it == index_.end() ? nullptr : &elements_[it->second];
}

namespace {

std::set<Perm> generated_subgroup(const std::vector<Perm>& generators, std::size_t n) {
  std::set<Perm> seen{Perm::identity(n)};
  std::deque<Perm> frontier{Perm::identity(n)};
  while (!frontier.empty()) {
    Perm g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      Perm h = compose(g, s);
      if (seen.insert(h).second) frontier.push_back(std::move(h));
    }
  }
  return seen;
}

// Greedy: repeatedly add the element whose addition generates the largest
// subgroup; ties go to the lexicographically smaller permutation.
std::vector<Perm> greedy_generators(const std::vector<Perm>& elements, std::size_t n) {
  std::vector<Perm> generators;
  std::set<Perm> current{Perm::identity(n)};
  while (current.size() < elements.size()) {
    std::optional<Perm> best;
    std::set<Perm> best_span;
    // An element of an evaluated span that sorts after the candidate spanning
    // it cannot beat that candidate.
    std::set<Perm> dominated;
    for (const auto& g : elements) {
      if (current.contains(g) || dominated.contains(g)) continue;
      auto trial = generators;
      trial.push_back(g);
      auto span = generated_subgroup(trial, n);
      if (!best || span.size() > best_span.size()) {
        best = g;
        best_span = span;
      }
      if (span.size() == elements.size()) break;
      for (const auto& h : span)
        if (g < h) dominated.insert(h);
    }
    ensure(best.has_value(), "generator search stalled");
    generators.push_back(*best);
    current = std::move(best_span);
  }
  return generators;
}

}  // namespace

LiftableGroup liftable_subgroup(const ExponentMatrix& a, const SearchOptions& options) {
  const std::size_t n = a.size();
  const auto automorphisms = quiver_automorphisms(link_graph(a), options);

  LiftableGroup group(a);
  group.aut_q_order_ = automorphisms.size();
  for (const auto& sigma : automorphisms) {
    auto x = solve_lift_system(a, sigma);
    if (!x) continue;
    group.index_.emplace(sigma, group.elements_.size());
    group.elements_.push_back(MonomialLift::certify(a, sigma, std::move(*x)));
  }

  ensure(!group.elements_.empty() && group.elements_.front() == MonomialLift::identity(n),
         "identity lift missing");
  ensure(group.aut_q_order_ % group.elements_.size() == 0,
         "liftable subgroup order does not divide |Aut(Q)|");

  std::vector<Perm> perms;
  perms.reserve(group.elements_.size());
  for (const auto& lift : group.elements_) perms.push_back(lift.permutation());
  for (const auto& sigma : greedy_generators(perms, n)) group.generators_.push_back(*group.find(sigma));

  // Closure under right multiplication by generators plus the identity makes
  // the element set exactly the span of the generators.
  for (const auto& g : group.elements_) {
    for (const auto& s : group.generators_) {
      const auto* product = group.find(compose(g.permutation(), s.permutation()));
      ensure(product != nullptr, "liftable set not closed under composition");
      ensure(*product == compose_lifts(g, s), "composed lift differs from solved lift");
    }
    const auto* inverse = group.find(g.permutation().inverse());
    ensure(inverse != nullptr && *inverse == inverse_lift(g), "inverse lift mismatch");
  }

  group.cyclic_ = std::any_of(perms.begin(), perms.end(),
                              [&](const Perm& p) { return p.order() == perms.size(); });
  group.abelian_ = true;
  for (const auto& s : group.generators_)
    for (const auto& t : group.generators_)
      if (compose_lifts(s, t) != compose_lifts(t, s)) group.abelian_ = false;
  return group;
}

std::optional<ValuationMismatch> find_valuation_mismatch(const ExponentMatrix& a, const Perm& sigma) {
  const auto q = link_graph(a);
  if (!is_quiver_automorphism(q, sigma))
    throw Error(ErrorKind::NotQuiverAutomorphism, {}, "sigma=" + sigma.cycles());
  for (const auto& arrow : q.arrows()) {
    const Arrow image{sigma(arrow.from), sigma(arrow.to)};
    const Exponent value = a(arrow.from, arrow.to);
    const Exponent image_value = a(image.from, image.to);
    if (value != image_value) return ValuationMismatch{arrow, value, image, image_value};
  }
  return std::nullopt;
}

bool preserves_valuation(const ExponentMatrix& a, const Perm& sigma) {
  return !find_valuation_mismatch(a, sigma).has_value();
}

std::vector<OrderIsomorphism> order_isomorphisms(const ExponentMatrix& a, const ExponentMatrix& b,
                                                 const SearchOptions& options) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, {a.size(), b.size()});
  // Conjugation carries arrow (i,j) of Q(a) to arrow (sigma(i), sigma(j)) of
  // Q(b), so only link-graph isomorphisms can be witnesses.
  std::vector<OrderIsomorphism> out;
  for (auto& sigma : quiver_isomorphisms(link_graph(a), link_graph(b), options)) {
    auto x = analyze_transport_system(a, b, sigma).solution;
    if (!x) continue;
    ensure(conjugate(a, sigma, x->span()) == b.lattice(), "transport solution fails the oracle");
    const Perm back = sigma.inverse();
    std::vector<Exponent> y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = checked_sub(0, (*x)[back(i)]);
    ensure(conjugate(b, back, y) == a.lattice(), "inverse witness fails the oracle");
    out.push_back({std::move(sigma), std::move(*x)});
  }
  return out;
}

std::optional<OrderIsomorphism> orders_isomorphic(const ExponentMatrix& a, const ExponentMatrix& b,
                                                  const SearchOptions& options) {
  auto all = order_isomorphisms(a, b, options);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::string StructureReport::structure() const {
  std::string out = kStructureStatement;
  out += ", |O_Lambda|=" + std::to_string(group.order());
  out += group.is_cyclic() ? ", cyclic" : ", not cyclic";
  out += group.is_abelian() ? ", abelian" : ", non-abelian";
  return out;
}

StructureReport aut_structure_report(const ExponentMatrix& a, const SearchOptions& options) {
  auto group = liftable_subgroup(a, options);
  const bool basic = is_basic(a);
  const bool zero_one = is_zero_one(a);
  const bool all_liftable = group.order() == group.aut_q_order();
  const bool guaranteed = basic && zero_one;
  ensure(!guaranteed || all_liftable, "basic (0,1)-order with a non-liftable quiver automorphism");
  return StructureReport{a, basic, zero_one, valued_quiver(a), std::move(group), all_liftable,
                         guaranteed};
}

}  // namespace tiled
