// cellres: command-line front end.  Exit status 0 on success, 1 when the
// checked property fails, 2 on input errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellres/cellres.hpp"

using namespace cellres;

namespace {

// Table output lists at most this many cells; the JSON report has all of them.
constexpr std::size_t kListLimit = 12;

struct Options {
  std::string family;
  int vars = 0;
  int target_vars = 0;
  int index = 1;
  int max_index = 5;
  int degree = 1;
  int t = 1;
  int horizon = 6;
  int dim = -1;
  std::string ideal;
  std::string pairing;
  std::string bound;
  std::string graph;
  std::string edges;
  std::string complex_path;
  std::string target_path;
  std::string arrangement;
  std::string injection;
  std::string renaming = "none";
  std::string field = "q";
  std::string out;
  std::string format = "table";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, sep))
    if (!t.empty()) out.push_back(t);
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw InputError("not an integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("not an integer: " + s);
  }
}

Graph parse_graph(const Options& o) {
  if (!o.graph.empty()) return graph_from_json(read_json_file(o.graph));
  if (o.edges.empty()) throw InputError("a graph is required (--graph FILE or --edges 1-2,2-3 with --vars N)");
  std::vector<std::pair<int, int>> e;
  int n = o.vars;
  for (const auto& tok : split(o.edges, ',')) {
    auto ends = split(tok, '-');
    if (ends.size() != 2) throw InputError("bad edge '" + tok + "'");
    int a = to_int(ends[0]), b = to_int(ends[1]);
    n = std::max({n, a, b});
    e.emplace_back(a - 1, b - 1);
  }
  return make_graph(n, e);
}

FamilySpec parse_family(const Options& o) {
  if (o.family.empty()) throw InputError("--family is required");
  FamilySpec s;
  s.kind = parse_kind(o.family);
  s.n = o.vars > 0 ? o.vars : 3;
  s.degree = o.degree;
  if (s.kind == FamilyKind::Cube) {
    if (o.vars <= 0 && o.pairing.empty()) s.n = 2;
    if (!o.pairing.empty()) {
      auto pairs = split(o.pairing, ',');
      std::vector<std::string> letters = default_variable_names(2 * pairs.size());
      for (const auto& p : pairs) {
        auto ab = split(p, ':');
        if (ab.size() != 2) throw InputError("pairing entries look like x:y");
        auto find = [&](const std::string& name) {
          for (std::size_t i = 0; i < letters.size(); ++i)
            if (letters[i] == name) return static_cast<int>(i);
          return to_int(name) - 1;
        };
        s.pairing.emplace_back(find(ab[0]), find(ab[1]));
      }
      s.n = static_cast<int>(s.pairing.size());
    }
  }
  if (s.kind == FamilyKind::Bounded) {
    if (o.bound.empty()) throw InputError("bounded family needs --bound e.g. 1,1,1");
    std::vector<int> b;
    for (const auto& t : split(o.bound, ',')) b.push_back(to_int(t));
    s.bound = ExponentVector(b);
    s.n = static_cast<int>(b.size());
  }
  if (s.kind == FamilyKind::TaylorPowers) {
    if (o.ideal.empty()) throw InputError("taylor family needs --ideal");
    s.base = parse_ideal(o.ideal, o.vars > 0 ? default_variable_names(static_cast<std::size_t>(o.vars))
                                             : std::vector<std::string>{}).ideal;
    s.n = static_cast<int>(s.base.num_variables());
  }
  if (s.kind == FamilyKind::EdgeIdeal) s.graph = parse_graph(o);
  if (s.kind == FamilyKind::PathY || s.kind == FamilyKind::PathZ || s.kind == FamilyKind::PathZbar)
    if (o.vars <= 0) s.n = 4;
  return s;
}

LabeledComplex load_complex(const Options& o) {
  if (!o.complex_path.empty()) return import_complex(o.complex_path);
  if (!o.arrangement.empty()) return build_arrangement_complex(arrangement_from_json(read_json_file(o.arrangement)));
  if (!o.family.empty()) {
    Family fam(parse_family(o));
    return *fam.complex(o.index);
  }
  if (!o.ideal.empty()) return taylor_complex(parse_ideal(o.ideal).ideal);
  throw InputError("no complex given (--complex, --arrangement, --family with --index, or --ideal)");
}

void emit(const Options& o, const json& j, const std::string& table) {
  std::string text = o.format == "json" ? j.dump(2) + "\n" : table;
  if (!o.out.empty()) {
    write_json_file(o.out, j);
    if (o.format != "json") std::cout << table;
  } else {
    std::cout << text;
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string cell_line(const LabeledComplex& x, int id) {
  std::string s = "  cell " + std::to_string(id) + " dim " + std::to_string(x.cell(id).dim) + " label " +
                  x.label_string(id) + " vertices {";
  auto labels = cell_vertex_labels(x, id);
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
  return s + "}\n";
}

int cmd_build(const Options& o) {
  auto x = load_complex(o);
  auto diag = validate(x);
  std::ostringstream t;
  t << "f-vector " << join(f_vector(x)) << "\n";
  t << "validation " << (diag.empty() ? "ok" : "FAILED: " + diag.front()) << "\n";
  emit(o, to_json(x), t.str());
  return diag.empty() ? 0 : 1;
}

int cmd_betti(const Options& o) {
  FieldChoice field = parse_field(o.field);
  json j;
  std::ostringstream t;
  if (!o.ideal.empty() && o.family.empty()) {
    auto parsed = parse_ideal(o.ideal, o.vars > 0 ? default_variable_names(static_cast<std::size_t>(o.vars))
                                                  : std::vector<std::string>{});
    auto res = std::visit(
        [&](const auto& k) {
          auto f = minimal_resolution(parsed.ideal, k);
          std::vector<std::pair<std::size_t, std::size_t>> shapes;
          for (std::size_t i = 1; i <= f.length(); ++i) shapes.push_back(f.shape(i));
          return std::make_pair(betti_of(f), shapes);
        },
        field);
    j["ideal"] = ideal_to_string(parsed.ideal, parsed.variables);
    j["field"] = field_name(field);
    j["betti"] = res.first;
    json shapes = json::array();
    for (auto [r, c] : res.second) shapes.push_back({r, c});
    j["differential_shapes"] = shapes;
    t << "ideal " << ideal_to_string(parsed.ideal, parsed.variables) << " over " << field_name(field) << "\n";
    t << "betti " << join(res.first) << "\n";
    t << "differentials";
    for (auto [r, c] : res.second) t << " " << r << "x" << c;
    t << "\n";
  } else {
    auto x = load_complex(o);
    auto b = minimal_betti(x, field);
    j["f_vector"] = f_vector(x);
    j["field"] = field_name(field);
    j["betti"] = b;
    t << "cellular complex f-vector " << join(f_vector(x)) << "\n";
    t << "minimal betti " << join(b) << " over " << field_name(field) << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_acyclic(const Options& o) {
  FieldChoice field = parse_field(o.field);
  auto x = load_complex(o);
  auto r = check_resolution(x, field);
  json j;
  j["acyclic"] = r.acyclic;
  j["field"] = field_name(field);
  j["degrees_checked"] = r.degrees_checked;
  std::ostringstream t;
  t << "resolution: " << (r.acyclic ? "yes" : "no") << " (" << r.degrees_checked << " lcm-lattice degrees over "
    << field_name(field) << ")\n";
  if (!r.acyclic) {
    j["failing_degree"] = to_json(*r.failing_degree);
    j["reduced_homology"] = r.failing_homology;
    t << "X_<=b not acyclic at b = " << to_string(*r.failing_degree, x.variables()) << "\n";
  }
  emit(o, j, t.str());
  return r.acyclic ? 0 : 1;
}

int cmd_minimal(const Options& o) {
  FieldChoice field = parse_field(o.field);
  auto x = load_complex(o);
  bool minimal = std::visit([&](const auto& k) { return is_minimal(free_complex_from_labeled(x, k)); }, field);
  auto b = minimal_betti(x, field);
  json j;
  j["minimal"] = minimal;
  j["ranks"] = [&] {
    std::vector<std::size_t> r{1};
    for (auto v : f_vector(x)) r.push_back(v);
    return r;
  }();
  j["minimal_betti"] = b;
  std::ostringstream t;
  t << "cellular resolution minimal: " << (minimal ? "yes" : "no") << "\n";
  t << "after minimalization: " << join(b) << "\n";
  emit(o, j, t.str());
  return minimal ? 0 : 1;
}

int cmd_morphisms(const Options& o) {
  std::vector<MultiplicationMorphism> ms;
  ComplexPtr src, dst;
  if (!o.target_path.empty()) {
    src = std::make_shared<const LabeledComplex>(load_complex(o));
    dst = std::make_shared<const LabeledComplex>(import_complex(o.target_path));
  } else {
    Family fam(parse_family(o));
    src = fam.complex(o.index - 1);
    dst = fam.complex(o.index);
    if (o.renaming == "none" && fam.spec().kind != FamilyKind::SimplexGrowing) {
      ms = fam.consecutive(o.index);
    }
  }
  if (ms.empty()) {
    if (o.renaming == "all") ms = find_renaming_morphisms(src, dst, InjectionMode::All);
    else if (o.renaming == "ordered" || src->num_variables() != dst->num_variables())
      ms = find_renaming_morphisms(src, dst, InjectionMode::OrderPreserving);
    else ms = find_multiplication_morphisms(src, dst);
  }
  json arr = json::array();
  std::ostringstream t;
  t << ms.size() << " morphism(s)\n";
  for (const auto& g : ms) {
    json mj = to_json(g);
    mj["compatible_chain_map"] = is_compatible_pair(g, build_chain_map(g));
    arr.push_back(mj);
    t << "  multiplier " << to_string(g.multiplier, dst->variables());
    if (src->num_variables() != dst->num_variables() || g.renaming != identity_injection(g.renaming.size())) {
      t << " renaming";
      for (std::size_t i = 0; i < g.renaming.size(); ++i)
        t << " " << src->variables()[i] << "->" << dst->variables()[static_cast<std::size_t>(g.renaming[i])];
    }
    t << "\n";
  }
  emit(o, json{{"count", ms.size()}, {"morphisms", arr}}, t.str());
  return 0;
}

int cmd_covering(const Options& o) {
  Family fam(parse_family(o));
  auto r = covering_horizon(fam, o.max_index, o.dim);
  std::ostringstream t;
  t << fam.name() << ", indices " << fam.first_index() << ".." << o.max_index
    << (o.dim < 0 ? ", all dimensions" : ", dimension " + std::to_string(o.dim)) << "\n";
  for (const auto& rep : r.reports) {
    t << "index " << rep.target_index << ": " << (rep.covered ? "covered" : "NOT covered") << "\n";
    if (!rep.covered && rep.target_index != fam.first_index()) {
      auto un = rep.uncovered();
      for (std::size_t k = 0; k < std::min<std::size_t>(un.size(), kListLimit); ++k)
        t << cell_line(*fam.complex(rep.target_index), un[k]);
      if (un.size() > kListLimit) t << "  ... " << un.size() - kListLimit << " more uncovered cell(s)\n";
    }
  }
  t << "threshold " << (r.threshold ? std::to_string(*r.threshold) : std::string("NONE (FAILED)")) << "\n";
  if (r.claimed_threshold)
    t << "claimed threshold " << *r.claimed_threshold << (r.matches_claim ? " (agrees)" : " (DISCREPANCY)") << "\n";
  t << r.note << "\n";
  emit(o, to_json(r, fam), t.str());
  return r.threshold ? 0 : 1;
}

int cmd_witness(const Options& o) {
  Family fam(parse_family(o));
  auto w = syzygy_fg_witness(fam, o.t, o.horizon);
  std::ostringstream t;
  t << fam.name() << ", t=" << o.t << " (cells of dimension " << w.dimension << "), horizon " << o.horizon << "\n";
  t << "status " << (w.succeeded ? "OK" : "FAILED") << ", threshold "
    << (w.threshold ? std::to_string(*w.threshold) : std::string("NONE")) << "\n";
  t << w.generators.size() << " generator cell(s), " << w.verification.size() << " verified cell(s)\n";
  for (std::size_t k = 0; k < std::min<std::size_t>(w.uncovered.size(), kListLimit); ++k)
    t << "uncovered in index " << w.uncovered[k].first << ":" << cell_line(*fam.complex(w.uncovered[k].first), w.uncovered[k].second);
  if (w.uncovered.size() > kListLimit) t << "... " << w.uncovered.size() - kListLimit << " more uncovered cell(s)\n";
  t << w.note << "\n";
  emit(o, to_json(w, fam), t.str());
  return w.succeeded ? 0 : 1;
}

int cmd_bl(const Options& o) {
  auto g = parse_graph(o);
  auto r = bl_report(g);
  std::ostringstream t;
  t << "BL ideal with " << r.ideal.generators.size() << " generators\n";
  for (std::size_t k = 0; k < r.ideal.generators.size(); ++k) {
    t << "  " << r.ideal.generator_string(k);
    if (k < r.sets.size()) {
      t << "  set {";
      for (std::size_t i = 0; i < r.sets[k].size(); ++i)
        t << (i ? "," : "") << r.ideal.variables[static_cast<std::size_t>(r.sets[k][i])];
      t << "}";
      if (r.sets[k] != r.formula_sets[k]) t << "  (closed formula differs)";
    }
    t << "\n";
  }
  t << "linear quotients: " << (r.linear_quotients ? "yes" : "no") << "\n";
  t << "regular decomposition function: " << (r.regular ? "yes" : "no") << "\n";
  if (r.linear_quotients) t << "betti of the ideal: " << join(r.betti_ideal) << "\n";
  emit(o, to_json(r), t.str());
  return r.linear_quotients && r.regular ? 0 : 1;
}

int cmd_rename(const Options& o) {
  auto x = load_complex(o);
  if (o.injection.empty()) throw InputError("--map is required, e.g. 2,3,4,5 (1-based targets)");
  std::vector<int> inj;
  for (const auto& s : split(o.injection, ',')) inj.push_back(to_int(s) - 1);
  int n = o.target_vars > 0 ? o.target_vars : (inj.empty() ? 0 : *std::max_element(inj.begin(), inj.end()) + 1);
  auto y = rename_variables(x, inj, static_cast<std::size_t>(n));
  std::ostringstream t;
  t << "vertex labels:";
  for (int v : y.vertices()) t << " " << y.label_string(v);
  t << "\n";
  emit(o, to_json(y), t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cellres: cellular resolutions of monomial ideals"};
  app.require_subcommand(1);
  Options o;

  auto family_opts = [&](CLI::App* c) {
    c->add_option("--family", o.family, "maximal|cube|bounded|path_Y|path_Z|path_Zbar|taylor|edge_ideal|simplex");
    c->add_option("--vars", o.vars, "number of variables, pairs, or path length");
    c->add_option("--degree", o.degree, "generator degree d (bounded family)");
    c->add_option("--bound", o.bound, "exponent bound b, comma separated (bounded family)");
    c->add_option("--pairing", o.pairing, "cube pairing, e.g. x:y,z:w");
    c->add_option("--graph", o.graph, "graph JSON file");
    c->add_option("--edges", o.edges, "inline graph edges, e.g. 1-2,2-3");
    c->add_option("--ideal", o.ideal, "monomial ideal, e.g. '(xz,xw,yz,yw)'");
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--field", o.field, "q (rationals) or p<prime>, e.g. p32003");
    c->add_option("--out", o.out, "write the JSON report to this file");
    c->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };
  auto complex_opts = [&](CLI::App* c) {
    c->add_option("--complex", o.complex_path, "complex JSON file");
    c->add_option("--arrangement", o.arrangement, "arrangement JSON file");
    c->add_option("--index", o.index, "family index");
  };

  auto* build = app.add_subcommand("build", "build a complex and print it");
  auto* betti_c = app.add_subcommand("betti", "Betti numbers of an ideal or a cellular complex");
  auto* acyc = app.add_subcommand("acyclic", "decide whether a complex supports a resolution");
  auto* mini = app.add_subcommand("minimal", "decide whether a cellular resolution is minimal");
  auto* morph = app.add_subcommand("morphisms", "multiplication morphisms between two complexes");
  auto* cov = app.add_subcommand("covering", "covering threshold of a family");
  auto* wit = app.add_subcommand("syzygy-witness", "finite-generation witness for a family");
  auto* bl = app.add_subcommand("bl", "Booth-Lueker ideal report for a graph");
  auto* ren = app.add_subcommand("rename", "rename the variables of a complex");
  for (auto* c : {build, betti_c, acyc, mini, morph, cov, wit, bl, ren}) common(c);
  for (auto* c : {build, betti_c, acyc, mini, morph, cov, wit, ren}) family_opts(c);
  for (auto* c : {build, betti_c, acyc, mini, morph, ren}) complex_opts(c);
  morph->add_option("--target", o.target_path, "target complex JSON file");
  morph->add_option("--renaming", o.renaming, "none|all|ordered")->check(CLI::IsMember({"none", "all", "ordered"}));
  cov->add_option("--max", o.max_index, "largest family index");
  cov->add_option("--dim", o.dim, "restrict to cells of this dimension");
  wit->add_option("--t", o.t, "syzygy index t (cells of dimension t-1)");
  wit->add_option("--horizon", o.horizon, "largest family index");
  bl->add_option("--graph", o.graph, "graph JSON file");
  bl->add_option("--edges", o.edges, "inline graph edges, e.g. 1-2,2-3");
  bl->add_option("--vars", o.vars, "vertex count when isolated vertices exist");
  ren->add_option("--map", o.injection, "1-based target variable for each source variable");
  ren->add_option("--target-vars", o.target_vars, "variable count of the target ring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmd_build(o);
    if (*betti_c) return cmd_betti(o);
    if (*acyc) return cmd_acyclic(o);
    if (*mini) return cmd_minimal(o);
    if (*morph) return cmd_morphisms(o);
    if (*cov) return cmd_covering(o);
    if (*wit) return cmd_witness(o);
    if (*bl) return cmd_bl(o);
    if (*ren) return cmd_rename(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
