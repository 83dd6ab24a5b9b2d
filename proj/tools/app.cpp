#include "app.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "order_file.hpp"
#include "tiled/automorphisms.hpp"
#include "tiled/error.hpp"
#include "tiled/exponent.hpp"
#include "tiled/lifting.hpp"
#include "tiled/perm.hpp"
#include "tiled/quiver.hpp"

namespace tiled::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Raised for exit-code-1 conditions (invalid order, size limit).
struct Rejected {
  std::string message;
};

struct Options {
  std::string path;
  std::string other_path;
  std::string perm;
  std::size_t hereditary_n = 0;
  bool valued = false;
  bool dot = false;
  bool json = false;
  bool unicode = false;
  std::size_t max_n = 9;
  unsigned workers = 1;

  SearchOptions search() const { return {max_n, workers}; }
  SymbolStyle style() const { return unicode ? SymbolStyle::Unicode : SymbolStyle::Ascii; }
};

ExponentMatrix load_valid(const std::string& path) {
  try {
    return validate(load_order_file(path));
  } catch (const Error& e) {
    throw Rejected{e.tag()};
  }
}

std::string index_pair(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string matrix_text(const MonomialLift& lift, SymbolStyle style) {
  std::string out = "[";
  const auto rows = lift_matrix(lift).render(style);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ',';
      out += rows[i][j];
    }
    out += ']';
  }
  return out + "]";
}

std::string too_large_guidance(const Error& e) {
  return e.tag() + ": n exceeds --max-n; raise --max-n to search S_n anyway";
}

int cmd_validate(const Options& opt, std::ostream& out) {
  auto a = load_valid(opt.path);
  out << "valid, n=" << a.size() << "\n";
  return kOk;
}

int cmd_quiver(const Options& opt, std::ostream& out) {
  const auto a = load_valid(opt.path);
  const auto vq = valued_quiver(a);
  const auto arrows = vq.quiver.arrows();
  if (opt.dot) {
    out << "digraph Q {\n";
    for (std::size_t v = 0; v < a.size(); ++v) out << "  \"" << v + 1 << "\";\n";
    for (const auto& arrow : arrows) {
      out << "  \"" << arrow.from + 1 << "\" -> \"" << arrow.to + 1 << "\"";
      if (opt.valued) out << " [label=\"v=" << *vq.value(arrow.from, arrow.to) << "\"]";
      out << ";\n";
    }
    out << "}\n";
    return kOk;
  }
  for (const auto& arrow : arrows) {
    out << arrow.from + 1 << " -> " << arrow.to + 1;
    if (opt.valued) out << " [v=" << *vq.value(arrow.from, arrow.to) << "]";
    out << "\n";
  }
  return kOk;
}

int cmd_lift(const Options& opt, std::ostream& out) {
  const auto a = load_valid(opt.path);
  const Perm sigma = parse_perm(opt.perm, a.size());
  const bool automorphism = is_quiver_automorphism(link_graph(a), sigma);
  const auto verdict = analyze_lift_system(a, sigma);

  out << "sigma = " << sigma.cycles() << "\n";
  if (!automorphism) {
    out << "quiver automorphism: no (the lifting system is not posed for this permutation)\n";
    if (verdict.solution)
      out << "solver: consistent, x = " << verdict.solution->to_string() << "\n";
    else
      out << "solver: inconsistent at ordered pair "
          << index_pair(verdict.first_conflict->first, verdict.first_conflict->second) << "\n";
    out << "liftable: no\n";
    return kOk;
  }

  out << "quiver automorphism: yes\n";
  if (!verdict.solution) {
    out << "liftable: no\n";
    out << "not liftable: first inconsistent ordered pair "
        << index_pair(verdict.first_conflict->first, verdict.first_conflict->second) << "\n";
    return kOk;
  }
  const auto lift = MonomialLift::certify(a, sigma, *verdict.solution);
  out << "liftable: yes\n";
  out << "x = " << lift.exponents().to_string() << "\n";
  out << "matrix = " << matrix_text(lift, opt.style()) << "\n";
  if (auto mismatch = find_valuation_mismatch(a, sigma)) {
    out << "valuation-preserving: no (v" << index_pair(mismatch->arrow.from, mismatch->arrow.to)
        << "=" << mismatch->value << ", v" << index_pair(mismatch->image.from, mismatch->image.to)
        << "=" << mismatch->image_value << ")\n";
  } else {
    out << "valuation-preserving: yes\n";
  }
  return kOk;
}

std::string group_headline(const LiftableGroup& g) {
  std::string line = "|Aut(Q)|=" + std::to_string(g.aut_q_order()) +
                     ", |O_Lambda|=" + std::to_string(g.order());
  line += g.is_cyclic() ? ", cyclic" : ", not cyclic";
  line += g.is_abelian() ? ", abelian" : ", non-abelian";
  return line;
}

void write_generators(const LiftableGroup& g, SymbolStyle style, std::ostream& out) {
  if (g.generators().empty()) {
    out << "generators: none\n";
    return;
  }
  out << "generators:\n";
  for (const auto& lift : g.generators()) {
    out << "  " << lift.permutation().cycles() << "  x = " << lift.exponents().to_string()
        << "  matrix = " << matrix_text(lift, style) << "\n";
  }
}

int cmd_group(const Options& opt, std::ostream& out) {
  const auto a = load_valid(opt.path);
  const auto g = liftable_subgroup(a, opt.search());
  out << group_headline(g) << "\n";
  write_generators(g, opt.style(), out);
  return kOk;
}

nlohmann::json report_json(const StructureReport& r) {
  using nlohmann::json;
  json arrows = json::array();
  json loops = json::array();
  json valued = json::array();
  for (const auto& arrow : r.quiver.quiver.arrows()) {
    arrows.push_back({arrow.from + 1, arrow.to + 1});
    if (arrow.is_loop()) loops.push_back(arrow.from + 1);
    valued.push_back({arrow.from + 1, arrow.to + 1, *r.quiver.value(arrow.from, arrow.to)});
  }
  json generators = json::array();
  for (const auto& lift : r.group.generators()) {
    ensure(lift.is_automorphism_of(r.order), "generator failed re-verification");
    json perm = json::array();
    for (auto v : lift.permutation().image()) perm.push_back(v + 1);
    generators.push_back({{"perm", perm}, {"x", lift.exponents().values()}});
  }
  return json{
      {"n", r.order.size()},
      {"valid", true},
      {"basic", r.basic},
      {"zero_one", r.zero_one},
      {"quiver", arrows},
      {"loops", loops},
      {"valued_arrows", valued},
      {"aut_q_order", r.aut_q_order()},
      {"o_lambda_order", r.group.order()},
      {"is_cyclic", r.group.is_cyclic()},
      {"is_abelian", r.group.is_abelian()},
      {"all_liftable", r.all_liftable},
      {"generators", generators},
      {"structure", kStructureStatement},
  };
}

int cmd_report(const Options& opt, std::ostream& out) {
  const auto a = load_valid(opt.path);
  const auto r = aut_structure_report(a, opt.search());
  if (opt.json) {
    out << report_json(r).dump() << "\n";
    return kOk;
  }
  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "n = " << a.size() << "\n";
  out << "valid: yes\n";
  out << "basic: " << yes_no(r.basic) << "\n";
  out << "(0,1)-order: " << yes_no(r.zero_one) << "\n";
  out << "arrows:";
  for (const auto& arrow : r.quiver.quiver.arrows())
    out << " " << arrow.from + 1 << "->" << arrow.to + 1 << "[v=" << *r.quiver.value(arrow.from, arrow.to)
        << "]";
  out << "\nloops:";
  for (std::size_t v = 0; v < a.size(); ++v)
    if (r.quiver.quiver.has_loop(v)) out << " " << v + 1;
  out << "\n" << group_headline(r.group) << "\n";
  out << "all liftable: " << yes_no(r.all_liftable) << "\n";
  if (r.all_liftable_guaranteed) out << "basic (0,1)-order: every quiver automorphism lifts (confirmed)\n";
  write_generators(r.group, opt.style(), out);
  out << "structure: " << r.structure() << "\n";
  return kOk;
}

int cmd_iso(const Options& opt, std::ostream& out, std::ostream& err) {
  ExponentMatrix a = validate(LatticeMatrix(1));
  ExponentMatrix b = a;
  try {
    a = load_valid(opt.path);
    b = load_valid(opt.other_path);
  } catch (const Rejected& r) {
    err << "error: " << r.message << "\n";
    return kUsage;
  }
  if (a.size() != b.size()) {
    err << "error: size mismatch (" << a.size() << " vs " << b.size() << ")\n";
    return kUsage;
  }
  const auto witness = orders_isomorphic(a, b, opt.search());
  if (!witness) {
    out << "not isomorphic\n";
    return kNegative;
  }
  out << "isomorphic\n";
  out << "sigma = " << witness->sigma.cycles() << "\n";
  out << "x = " << witness->x.to_string() << "\n";
  return kOk;
}

int cmd_hereditary(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.hereditary_n == 0) {
    err << "error: n must be at least 1\n";
    return kUsage;
  }
  out << format_order_file(hereditary_order(opt.hereditary_n)) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphisms, link graphs and liftable automorphisms of tiled orders", "tiled"};
  app.require_subcommand(1);
  Options opt;

  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--max-n", opt.max_n, "Largest n for which S_n is searched")->default_val(9);
    cmd->add_option("--workers", opt.workers, "Worker threads for the search")
        ->default_val(1)
        ->check(CLI::Range(1u, 256u));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the exponent-matrix axioms");
  validate_cmd->add_option("file", opt.path, "Order file")->required();

  auto* quiver_cmd = app.add_subcommand("quiver", "Print the link graph");
  quiver_cmd->add_option("file", opt.path, "Order file")->required();
  quiver_cmd->add_flag("--valued", opt.valued, "Show arrow values");
  quiver_cmd->add_flag("--dot", opt.dot, "Emit a DOT digraph");

  auto* lift_cmd = app.add_subcommand("lift", "Decide liftability of a permutation");
  lift_cmd->add_option("file", opt.path, "Order file")->required();
  lift_cmd->add_option("--perm", opt.perm, "Permutation, \"(1 2 3)\" or \"[2,3,1]\"")->required();
  lift_cmd->add_flag("--unicode", opt.unicode, "Render pi as π");

  auto* group_cmd = app.add_subcommand("group", "Compute the liftable subgroup");
  group_cmd->add_option("file", opt.path, "Order file")->required();
  group_cmd->add_flag("--unicode", opt.unicode, "Render pi as π");
  add_search(group_cmd);

  auto* report_cmd = app.add_subcommand("report", "Full automorphism structure report");
  report_cmd->add_option("file", opt.path, "Order file")->required();
  report_cmd->add_flag("--json", opt.json, "Emit canonical JSON");
  report_cmd->add_flag("--unicode", opt.unicode, "Render pi as π");
  add_search(report_cmd);

  auto* iso_cmd = app.add_subcommand("iso", "Test two tiled orders for isomorphism");
  iso_cmd->add_option("first", opt.path, "Order file")->required();
  iso_cmd->add_option("second", opt.other_path, "Order file")->required();
  add_search(iso_cmd);

  auto* hereditary_cmd = app.add_subcommand("hereditary", "Print the basic hereditary order of size n");
  hereditary_cmd->add_option("n", opt.hereditary_n, "Size")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(opt, out);
    if (quiver_cmd->parsed()) return cmd_quiver(opt, out);
    if (lift_cmd->parsed()) return cmd_lift(opt, out);
    if (group_cmd->parsed()) return cmd_group(opt, out);
    if (report_cmd->parsed()) return cmd_report(opt, out);
    if (iso_cmd->parsed()) return cmd_iso(opt, out, err);
    if (hereditary_cmd->parsed()) return cmd_hereditary(opt, out, err);
  } catch (const Rejected& r) {
    out << r.message << "\n";
    return kNegative;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TooLarge) {
      err << "error: " << too_large_guidance(e) << "\n";
      return kNegative;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tiled::cli
