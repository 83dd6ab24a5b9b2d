// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. All checks are exact.

#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/cli_harness.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tiled/lifting.hpp"

using namespace tiled;

namespace {

/// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    failed_ += !ok;
  }
  bool passed() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

// Groups computed by criteria 1-5, re-examined by criterion 7.
std::deque<LiftableGroup> computed_groups;

const LiftableGroup& remember(LiftableGroup g) {
  computed_groups.push_back(std::move(g));
  return computed_groups.back();
}

// Sample shared by criteria 6 and 8.
std::vector<ExponentMatrix> random_sample() {
  gen::Rng rng(20240601);
  std::vector<ExponentMatrix> out;
  for (int i = 0; i < 100; ++i) out.push_back(gen::random_order(rng, gen::uniform(rng, 1, 5), 4));
  return out;
}

Perm rotation(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = (i + 1) % n;
  return Perm::from_image(image);
}

void example6_end_to_end(Check& c) {
  const auto a = fixtures::example6();
  const auto q = link_graph(a);
  std::vector<Arrow> off;
  std::size_t loops = 0;
  for (const auto& arrow : q.arrows()) {
    if (arrow.is_loop())
      ++loops;
    else
      off.push_back(arrow);
  }
  c.expect(off == std::vector<Arrow>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}},
           "off-diagonal arrows are not all 6 ordered pairs");
  c.expect(loops == 0 || loops == 3, "loop set is not uniform");
  const auto aut = quiver_automorphisms(q);
  c.expect(aut.size() == 6, "|Aut(Q)| != 6");

  const auto sigma = parse_perm("(1 2 3)", 3);
  const auto x = solve_lift_system(a, sigma);
  c.expect(is_liftable(a, sigma), "(123) not liftable");
  c.expect(x && x->values() == std::vector<Exponent>{1, 3, 0}, "x != (1,3,0)");
  if (x) {
    const auto lift = MonomialLift::certify(a, sigma, *x);
    using S = std::vector<std::vector<std::string>>;
    c.expect(lift_matrix(lift).render(SymbolStyle::Unicode) ==
                 S{{"0", "π", "0"}, {"0", "0", "π³"}, {"1", "0", "0"}},
             "lift matrix differs");
  }
  c.expect(!is_liftable(a, parse_perm("(1 2)", 3)), "(12) liftable");
  const auto& g = remember(liftable_subgroup(a));
  c.expect(g.order() == 3, "|O_Lambda| != 3");
  c.expect(g.is_cyclic(), "O_Lambda not cyclic");
}

void example2_valuation(Check& c) {
  const auto a = fixtures::example6();
  const auto sigma = parse_perm("(1 2 3)", 3);
  c.expect(is_liftable(a, sigma), "(123) not liftable");
  c.expect(!preserves_valuation(a, sigma), "preserves_valuation true");
  const auto vq = valued_quiver(a);
  c.expect(vq.value(0, 1) == 2, "v(1,2) != 2");
  c.expect(vq.value(1, 2) == 4, "v(2,3) != 4");
  const auto m = find_valuation_mismatch(a, sigma);
  c.expect(m && m->arrow == Arrow{0, 1} && m->value == 2 && m->image == Arrow{1, 2} &&
               m->image_value == 4,
           "witness is not v(1,2)=2 vs v(2,3)=4");
}

void hereditary_family(Check& c) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const auto a = hereditary_order(n);
    std::vector<Arrow> cycle;
    for (std::size_t i = 0; i < n; ++i) cycle.push_back({i, (i + 1) % n});
    std::sort(cycle.begin(), cycle.end());
    const auto q = link_graph(a);
    c.expect(q.arrows() == cycle, tag + "link graph is not the n-cycle without loops");
    const auto aut = quiver_automorphisms(q);
    c.expect(aut.size() == n, tag + "|Aut(Q)| != n");
    for (const auto& s : aut) c.expect(is_liftable(a, s), tag + "automorphism " + s.cycles() + " not liftable");
    const auto& g = remember(liftable_subgroup(a));
    c.expect(g.order() == n && g.is_cyclic(), tag + "O_Lambda not cyclic of order n");
    c.expect(g.generators().size() == 1, tag + "expected a single generator");
    for (const auto& gen : g.generators())
      c.expect(conjugate(a, gen.permutation(), gen.exponents().span()) == a.lattice(),
               tag + "generator fails the conjugation oracle");
    c.expect(!g.generators().empty() && g.generators()[0].permutation() == rotation(n),
             tag + "generator is not (1 2 ... n)");
  }
}

void example9_group(Check& c) {
  const auto a = fixtures::swap_order();
  const auto& g = remember(liftable_subgroup(a));
  c.expect(g.order() == 2, "|O_Lambda| != 2");
  c.expect(g.generators().size() == 1, "expected one generator");
  if (!g.generators().empty()) {
    const auto& gen = g.generators()[0];
    c.expect(gen.permutation() == parse_perm("(1 2)", 2), "generator is not the swap");
    c.expect(gen.exponents().values() == std::vector<Exponent>{0, 0}, "x != (0,0)");
    c.expect(lift_matrix(gen).render() == std::vector<std::vector<std::string>>{{"0", "1"}, {"1", "0"}},
             "lift matrix is not [[0,1],[1,0]]");
  }
}

void basic_zero_one_property(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  gen::Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = gen::random_basic_zero_one(rng, gen::uniform(rng, 2, 6));
    c.expect(is_basic(a) && is_zero_one(a), "generator produced a non-basic or non-(0,1) order");
    const auto& g = remember(liftable_subgroup(a));
    std::ostringstream rows;
    for (const auto& row : a.rows()) {
      for (auto v : row) rows << v;
      rows << '/';
    }
    c.expect(g.order() == g.aut_q_order(), "|O_Lambda| != |Aut(Q)| for " + rows.str());
  }
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + "s exceeds 10s");
}

void solver_oracle_equivalence(Check& c, const std::vector<ExponentMatrix>& sample) {
  for (const auto& a : sample) {
    for (const auto& image : oracle::all_images(a.size())) {
      const auto sigma = Perm::from_image(image);
      const auto x = solve_lift_system(a, sigma);
      const auto naive = oracle::bellman_ford_transport(a, a, image);
      c.expect(x.has_value() == naive.has_value(),
               "spanning solver and all-pairs check disagree on " + sigma.cycles());
      if (x) {
        c.expect(conjugate(a, sigma, x->span()) == a.lattice(),
                 "returned x fails the conjugation oracle for " + sigma.cycles());
      } else if (naive) {
        c.expect(conjugate(a, sigma, *naive) != a.lattice(), "solver missed a solution for " + sigma.cycles());
      }
    }
  }
}

void group_laws(Check& c) {
  for (const auto& g : computed_groups) {
    const auto& a = g.order_matrix();
    const auto n = a.size();
    const auto& elements = g.elements();
    c.expect(!elements.empty() && elements.front() == MonomialLift::identity(n), "identity lift missing");
    c.expect(*solve_lift_system(a, Perm::identity(n)) == LiftVector::zero(n), "identity lift is not (id, 0)");
    for (const auto& s : elements) {
      const auto inv = inverse_lift(s);
      c.expect(g.find(inv.permutation()) != nullptr && *g.find(inv.permutation()) == inv,
               "inverse missing");
      c.expect(compose_lifts(s, inv) == MonomialLift::identity(n), "s * s^-1 != identity");
      for (const auto& t : elements) {
        const auto st = compose_lifts(s, t);
        const auto* found = g.find(st.permutation());
        c.expect(found != nullptr && *found == st, "not closed under compose_lifts");
        const auto direct = solve_lift_system(a, compose(s.permutation(), t.permutation()));
        c.expect(direct && *direct == st.exponents(), "compose_lifts differs from the direct solver");
      }
    }
  }
}

void dual_quiver(Check& c, const std::vector<ExponentMatrix>& sample) {
  for (const auto& a : sample) c.expect(link_graph(a) == link_graph_via_radical(a), "constructions differ");
}

void determinism(Check& c) {
  harness::TempFile ex6(harness::kExample6);
  std::set<std::string> outputs;
  for (int run = 0; run < 3; ++run) {
    for (const char* workers : {"1", "4"}) {
      const auto r = harness::run({"report", ex6.path(), "--json", "--workers", workers});
      c.expect(r.code == 0, "report exited with " + std::to_string(r.code));
      outputs.insert(r.out);
    }
  }
  c.expect(outputs.size() == 1, "report --json output varies");
}

}  // namespace

int main() {
  const auto sample = random_sample();
  struct Criterion {
    const char* name;
    std::function<void(Check&)> body;
  };
  // Criterion 7 inspects the groups built by 1-5, so order matters.
  const std::vector<Criterion> criteria{
      {"AC1 3x3 example end-to-end", example6_end_to_end},
      {"AC2 liftable automorphism that breaks the valued quiver", example2_valuation},
      {"AC3 hereditary family n=2..8", hereditary_family},
      {"AC4 2x2 swap order group", example9_group},
      {"AC5 basic (0,1)-orders: every automorphism lifts (200 random)", basic_zero_one_property},
      {"AC6 solver vs conjugation and all-pairs oracles (100 random)",
       [&](Check& c) { solver_oracle_equivalence(c, sample); }},
      {"AC7 group laws on every computed O_Lambda", group_laws},
      {"AC8 link graph equals rad/rad^2 quiver (100 random)", [&](Check& c) { dual_quiver(c, sample); }},
      {"AC9 report --json deterministic across runs and workers", determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.passed() ? "[PASS] " : "[FAIL] ") << criterion.name << " (" << check.count()
              << " checks)\n";
    for (const auto& f : check.failures()) std::cout << "       " << f << "\n";
    failures += !check.passed();
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed\n" : "acceptance criteria failed\n");
  return failures == 0 ? 0 : 1;
}
