#include "commands.hpp"

#include "extremal/catalog.hpp"
#include "extremal/text.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace extremal::cli {

namespace {

struct Options {
  std::string format = "plain";
  int guard = kDefaultGuard;
};

class Printer {
 public:
  Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  void result(const std::string& value) { line("result", value); }
  void result(bool value) { result(std::string(value ? "true" : "false")); }

  /// Secondary information, shown as `key: value` in plain mode.
  void field(const std::string& key, const std::string& value) {
    if (machine_)
      out_ << key << '=' << value << '\n';
    else
      out_ << key << ": " << value << '\n';
  }

  /// One element of a list; plain mode prints the bare value.
  void item(const std::string& key, const std::string& value) { line(key, value); }

  void assignment(const Assignment& z) {
    if (!machine_) {
      out_ << format_assignment(z);
      return;
    }
    out_ << "n=" << z.n() << '\n';
    for (const auto& p : z.generators()) out_ << "generator=" << format_partition(p) << '\n';
  }

  void invariant(const InvariantAssignment& f) {
    if (!machine_) {
      out_ << format_invariant(f);
      return;
    }
    out_ << "n=" << f.n() << '\n';
    for (const auto& p : f.generators()) out_ << "generator=" << format_partition(p) << '\n';
  }

  void indicator(const ContractionIndicator& c) {
    if (!machine_) {
      out_ << format_indicator(c);
      return;
    }
    out_ << "n=" << c.n << '\n';
    for (LabelSet b : c.maximal) out_ << "maximal=" << format_labels(b) << '\n';
  }

  void certificate(const Certificate& cert) {
    std::string text;
    for (std::size_t i = 0; i < cert.multipliers.size(); ++i) {
      if (i) text += ',';
      text += to_string(cert.multipliers[i]);
    }
    field("certificate", text);
  }

 private:
  void line(const std::string& key, const std::string& value) {
    if (machine_)
      out_ << key << '=' << value << '\n';
    else
      out_ << value << '\n';
  }

  std::ostream& out_;
  bool machine_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Prefixes parse errors with the file they came from.
template <class F>
auto from_file(const std::string& path, F&& parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

template <class F>
auto from_arg(const std::string& flag, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Error(flag + ": " + e.what());
  }
}

void check_vertex(const LabeledTree& tree, int v) {
  if (v < 0 || v >= tree.vertex_count())
    throw Error("vertex " + std::to_string(v) + " does not exist; the tree has " + std::to_string(tree.vertex_count()));
}

void print_weight_search(Printer& p, const WeightSearch& w) {
  p.result(w.weights.has_value());
  if (w.weights) p.field("weights", format_weights(*w.weights));
  p.field("method", w.method);
  if (w.certificate) p.certificate(*w.certificate);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal assignments of stable labeled trees"};
  app.require_subcommand(1);
  Options opt;
  int jobs = 1;
  app.add_option("--format", opt.format, "Output style")->check(CLI::IsMember({"plain", "machine"}));
  app.add_option("--guard", opt.guard, "Largest n for exhaustive scans over all trees")->check(CLI::Range(3, kMaxLabels));
  app.add_option("--jobs", jobs, "Worker threads (all current workloads run on one)")->check(CLI::PositiveNumber);

  std::vector<std::pair<CLI::App*, std::function<void(Printer&)>>> actions;
  auto leaf = [&](CLI::App* sub, std::function<void(Printer&)> body) { actions.emplace_back(sub, std::move(body)); };

  // trees
  int trees_n = 0, trees_k = 0;
  auto* trees = app.add_subcommand("trees", "List the stable trees with n labels");
  trees->add_option("--n", trees_n)->required();
  trees->add_option("--k", trees_k, "Only trees with this many vertices");
  leaf(trees, [&](Printer& p) {
    if (trees_n < 3) throw Error("--n must be at least 3");
    if (trees_n > opt.guard) throw GuardError("enumerating S(" + std::to_string(trees_n) + ") refused", opt.guard);
    auto list = enumerate_trees(trees_n, trees_k);
    for (const auto& t : list) p.item("tree", format_tree(t));
    p.field("count", std::to_string(list.size()));
  });

  // basic-partition
  std::string tree_text;
  int vertex = 0;
  auto* basic = app.add_subcommand("basic-partition", "Partition of the labels seen from a vertex");
  basic->add_option("--tree", tree_text)->required();
  basic->add_option("--vertex", vertex)->required();
  leaf(basic, [&](Printer& p) {
    LabeledTree t = from_arg("--tree", tree_text, [](const std::string& s) { return parse_tree(s); });
    check_vertex(t, vertex);
    p.result(format_partition(basic_partition(t, vertex)));
  });

  // member
  std::string assign_path;
  auto* member_cmd = app.add_subcommand("member", "Whether an assignment assigns a vertex");
  member_cmd->add_option("--assign", assign_path)->required();
  member_cmd->add_option("--tree", tree_text)->required();
  member_cmd->add_option("--vertex", vertex)->required();
  leaf(member_cmd, [&](Printer& p) {
    Assignment z = from_file(assign_path, [](const std::string& s) { return parse_assignment(s); });
    LabeledTree t = from_arg("--tree", tree_text, [&](const std::string& s) { return parse_tree(s, z.n()); });
    check_vertex(t, vertex);
    p.result(member(z, t, vertex));
  });

  // check-extremal
  auto* check = app.add_subcommand("check-extremal", "Test a generator family for extremality");
  check->add_option("--assign", assign_path)->required();
  leaf(check, [&](Printer& p) {
    Assignment z = from_file(assign_path, [](const std::string& s) { return parse_assignment(s); });
    ExtremalityCheck c = is_extremal(z);
    p.result(c.extremal);
    if (c.witness) {
      p.field("first", format_partition(c.witness->first));
      p.field("second", format_partition(c.witness->second));
      p.field("bound", format_partition(c.witness->bound));
    }
  });

  // smallest
  std::string pairs_path;
  bool invariant_flag = false;
  auto* smallest = app.add_subcommand("smallest", "Smallest extremal assignment assigning given vertices");
  smallest->add_option("--pairs", pairs_path, "One marked tree per line: tree then vertex id")->required();
  smallest->add_flag("--invariant", invariant_flag, "Look for a symmetric assignment");
  leaf(smallest, [&](Printer& p) {
    auto pairs = from_file(pairs_path, [](const std::string& s) { return parse_marked_trees(s); });
    if (invariant_flag) {
      auto f = inv_smallest(pairs);
      if (f)
        p.invariant(*f);
      else
        p.result(std::string("none"));
    } else {
      auto z = smallest_containing(pairs);
      if (z)
        p.assignment(*z);
      else
        p.result(std::string("none"));
    }
  });

  // equivalent
  std::string a_path, b_path;
  auto* equiv = app.add_subcommand("equivalent", "Whether two assignments differ only at isolated 3-valent vertices");
  equiv->add_option("--a", a_path)->required();
  equiv->add_option("--b", b_path)->required();
  leaf(equiv, [&](Printer& p) {
    Assignment a = from_file(a_path, [](const std::string& s) { return parse_assignment(s); });
    Assignment b = from_file(b_path, [](const std::string& s) { return parse_assignment(s); });
    p.result(equivalent(a, b, opt.guard));
  });

  // classify
  int classify_n = 5;
  auto* classify = app.add_subcommand("classify", "Count equivalence classes of smooth assignments");
  classify->add_option("--n", classify_n)->required()->check(CLI::Range(4, kMaxLabels));
  leaf(classify, [&](Printer& p) {
    Classification c = classify_smooth(classify_n, opt.guard);
    p.result(std::to_string(c.representatives.size()));
    if (classify_n == 5) {
      long edge_sets = count_intersecting_edge_sets(5);
      if (edge_sets != static_cast<long>(c.representatives.size()))
        throw Error("cross-check failed: " + std::to_string(edge_sets) + " intersecting edge sets of K5");
    }
  });

  // family
  auto* family = app.add_subcommand("family", "Build a named family of assignments");
  family->require_subcommand(1);
  std::string weights_text, git_text;
  int boggi_n = 0;
  auto* fam_weight = family->add_subcommand("weight", "Assignment of weight data");
  fam_weight->add_option("--weights", weights_text, "Comma separated rationals")->required();
  leaf(fam_weight, [&](Printer& p) {
    p.assignment(weight_assignment(from_arg("--weights", weights_text, [](const std::string& s) { return parse_weights(s); })));
  });
  auto* fam_boggi = family->add_subcommand("boggi", "Assign every vertex without labels");
  fam_boggi->add_option("--n", boggi_n)->required();
  leaf(fam_boggi, [&](Printer& p) { p.assignment(boggi(boggi_n)); });
  auto* fam_git = family->add_subcommand("git", "Assignment of a degree function");
  fam_git->add_option("--params", git_text, "d=<int> gamma=<q> c=<q,...>")->required();
  leaf(fam_git, [&](Printer& p) {
    p.assignment(git_assignment(from_arg("--params", git_text, [](const std::string& s) { return parse_git(s); })));
  });

  // smooth
  auto* smooth = app.add_subcommand("smooth", "Contraction indicators and weight data");
  smooth->require_subcommand(1);
  std::string indicator_path;
  auto* sm_of = smooth->add_subcommand("indicator-of", "Indicator of an assignment");
  sm_of->add_option("--assign", assign_path)->required();
  leaf(sm_of, [&](Printer& p) {
    p.indicator(indicator_of(from_file(assign_path, [](const std::string& s) { return parse_assignment(s); })));
  });
  auto* sm_from = smooth->add_subcommand("from-indicator", "Smooth assignment of an indicator");
  sm_from->add_option("--indicator", indicator_path)->required();
  leaf(sm_from, [&](Printer& p) {
    p.assignment(from_indicator(from_file(indicator_path, [](const std::string& s) { return parse_indicator(s); })));
  });
  auto* sm_is = smooth->add_subcommand("is-weight", "Weight data reproducing the indicator exactly");
  sm_is->add_option("--indicator", indicator_path)->required();
  leaf(sm_is, [&](Printer& p) {
    print_weight_search(p, is_weight_assignment(from_file(indicator_path, [](const std::string& s) { return parse_indicator(s); })));
  });
  auto* sm_super = smooth->add_subcommand("weight-superset", "Weight data contracting at least the indicator");
  sm_super->add_option("--indicator", indicator_path)->required();
  leaf(sm_super, [&](Printer& p) {
    print_weight_search(p, exists_weight_superset(from_file(indicator_path, [](const std::string& s) { return parse_indicator(s); })));
  });

  // invariant
  auto* inv = app.add_subcommand("invariant", "Symmetric assignments given by integer partitions");
  inv->require_subcommand(1);
  std::string shapes_path;
  auto* inv_special = inv->add_subcommand("is-special", "Whether a shape family is special");
  inv_special->add_option("--shapes", shapes_path)->required();
  leaf(inv_special, [&](Printer& p) {
    InvariantAssignment f = from_file(shapes_path, [](const std::string& s) { return parse_invariant(s); });
    SpecialCheck c = inv_is_extremal(f);
    p.result(c.special);
    if (c.witness) p.field("witness", format_partition(*c.witness));
  });
  auto* inv_small = inv->add_subcommand("smallest", "Smallest symmetric assignment containing seed shapes");
  auto* seeds_opt = inv_small->add_option("--shapes", shapes_path, "Seed shapes file");
  inv_small->add_option("--pairs", pairs_path, "Seed marked trees file")->excludes(seeds_opt);
  leaf(inv_small, [&](Printer& p) {
    std::optional<InvariantAssignment> f;
    if (!shapes_path.empty()) {
      InvariantAssignment seeds = from_file(shapes_path, [](const std::string& s) { return parse_invariant(s); });
      f = inv_smallest(seeds.n(), seeds.generators());
    } else if (!pairs_path.empty()) {
      f = inv_smallest(from_file(pairs_path, [](const std::string& s) { return parse_marked_trees(s); }));
    } else {
      throw Error("give --shapes or --pairs");
    }
    if (f)
      p.invariant(*f);
    else
      p.result(std::string("none"));
  });
  auto* inv_expand = inv->add_subcommand("expand", "Set-partition generators of a shape family");
  inv_expand->add_option("--shapes", shapes_path)->required();
  leaf(inv_expand, [&](Printer& p) {
    p.assignment(expand(from_file(shapes_path, [](const std::string& s) { return parse_invariant(s); })));
  });

  // fcurves
  auto* fc = app.add_subcommand("fcurves", "F-curves, boundary pairings and F-nef divisors");
  fc->require_subcommand(1);
  auto* fc_contracted = fc->add_subcommand("contracted", "F-curves whose moving component is assigned");
  auto* fc_assign = fc_contracted->add_option("--assign", assign_path);
  fc_contracted->add_option("--shapes", shapes_path)->excludes(fc_assign);
  leaf(fc_contracted, [&](Printer& p) {
    if (!assign_path.empty()) {
      auto z = from_file(assign_path, [](const std::string& s) { return parse_assignment(s); });
      for (const auto& f : contracted_fcurves(z)) p.item("curve", format_fcurve(f));
    } else if (!shapes_path.empty()) {
      auto f = from_file(shapes_path, [](const std::string& s) { return parse_invariant(s); });
      for (const auto& t : contracted_ftypes(f)) p.item("type", format_ftype(t));
    } else {
      throw Error("give --assign or --shapes");
    }
  });

  int pair_n = 0;
  std::string divisor_text, curve_text, type_text;
  auto* fc_pair = fc->add_subcommand("pair", "Intersect a divisor with F-curves");
  fc_pair->add_option("--n", pair_n)->required()->check(CLI::Range(4, kMaxLabels));
  fc_pair->add_option("--divisor", divisor_text)->required();
  auto* curve_opt = fc_pair->add_option("--curve", curve_text);
  fc_pair->add_option("--type", type_text)->excludes(curve_opt);
  leaf(fc_pair, [&](Printer& p) {
    auto d = from_arg("--divisor", divisor_text, [&](const std::string& s) { return parse_divisor(s, pair_n); });
    if (!curve_text.empty()) {
      FCurve f = from_arg("--curve", curve_text, [&](const std::string& s) { return parse_fcurve(s, pair_n); });
      if (auto* full = std::get_if<Divisor>(&d)) {
        p.result(to_string(pair(f, *full)));
      } else {
        p.result(to_string(pair_sym(pair_n, ftype_of(f), std::get<SymmetricDivisor>(d))));
      }
      return;
    }
    auto* sym = std::get_if<SymmetricDivisor>(&d);
    if (!sym) throw Error("pairing against every type needs a symmetric divisor; give --curve for explicit classes");
    if (!type_text.empty()) {
      FType t = from_arg("--type", type_text, [&](const std::string& s) { return parse_ftype(s, pair_n); });
      p.result(to_string(pair_sym(pair_n, t, *sym)));
      return;
    }
    RayCheck r = verify_ray(*sym);
    p.result(r.all_nonnegative);
    for (const auto& t : r.zero_set) p.field("zero", format_ftype(t));
  });

  auto* fc_fnef = fc->add_subcommand("fnef", "Look for an F-nef divisor vanishing exactly on the contracted curves");
  auto* fnef_assign = fc_fnef->add_option("--assign", assign_path);
  fc_fnef->add_option("--shapes", shapes_path)->excludes(fnef_assign);
  leaf(fc_fnef, [&](Printer& p) {
    if (!assign_path.empty()) {
      auto z = from_file(assign_path, [](const std::string& s) { return parse_assignment(s); });
      FnefResult r = fnef_witness(z.n(), contracted_fcurves(z));
      p.result(r.witness.has_value());
      if (r.witness) p.field("divisor", format_divisor(*r.witness));
      if (r.certificate) p.certificate(*r.certificate);
    } else if (!shapes_path.empty()) {
      auto f = from_file(shapes_path, [](const std::string& s) { return parse_invariant(s); });
      FnefSymResult r = fnef_witness_sym(f.n(), contracted_ftypes(f));
      p.result(r.witness.has_value());
      if (r.witness) p.field("divisor", format_divisor(*r.witness));
      if (r.certificate) p.certificate(*r.certificate);
    } else {
      throw Error("give --assign or --shapes");
    }
  });

  // toric
  auto* toric = app.add_subcommand("toric", "Graph associahedron criterion");
  toric->require_subcommand(1);
  std::string graph_path;
  auto* toric_check = toric->add_subcommand("check", "Compare co-transitivity, multipartiteness and the indicator test");
  toric_check->add_option("--graph", graph_path)->required();
  leaf(toric_check, [&](Printer& p) {
    SimpleGraph g = from_file(graph_path, [](const std::string& s) { return parse_graph(s); });
    bool modular = is_modular_toric(g);
    p.result(modular);
    p.field("cotransitive", is_cotransitive(g) ? "true" : "false");
    p.field("multipartite", is_complete_multipartite(g) ? "true" : "false");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Printer printer(out, opt.format == "machine");
  try {
    for (auto& [sub, body] : actions)
      if (sub->parsed()) {
        body(printer);
        return 0;
      }
    err << "no command given\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace extremal::cli
