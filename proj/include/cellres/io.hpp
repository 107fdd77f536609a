#pragma once

// JSON interchange and the command-line ideal grammar.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <type_traits>
#include <string>
#include <vector>

#include <json.hpp>

#include "cellres/boothlueker.hpp"
#include "cellres/complex.hpp"
#include "cellres/covering.hpp"
#include "cellres/families.hpp"
#include "cellres/morphism.hpp"
#include "cellres/resolution.hpp"
#include "cellres/subdivision.hpp"

namespace cellres {

using json = nlohmann::ordered_json;

// ---- monomials and ideals -------------------------------------------------

inline json to_json(const ExponentVector& a) { return json(a.values()); }

inline ExponentVector exponent_vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("exponent vector must be an integer array");
  std::vector<int> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("exponent vector must be an integer array");
    int x = e.get<int>();
    if (x < 0) throw InputError("exponent vector with a negative entry");
    v.push_back(x);
  }
  return ExponentVector(std::move(v));
}

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> variables;
};

/// Parses "(xz, x^2w, yz)".  Without explicit names, letters x,y,z,w,t,u,v
/// are used (n = last letter used) or x1, x2, ... when indexed names occur.
inline ParsedIdeal parse_ideal(const std::string& text, std::vector<std::string> names = {}) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  int power = 1;
  if (auto close = s.rfind(')'); close != std::string::npos && close + 1 < s.size() && s[close + 1] == '^') {
    const std::string e = s.substr(close + 2);
    if (e.empty() || e.size() > 3 || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InputError("bad ideal power in '" + text + "'");
    power = std::stoi(e);
    if (power < 1) throw InputError("ideal power must be positive in '" + text + "'");
    s = s.substr(0, close + 1);
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw InputError("ideal must be a parenthesized comma list, got '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> terms;
  {
    std::stringstream ss(s);
    std::string t;
    while (std::getline(ss, t, ',')) {
      if (t.empty()) throw InputError("empty monomial in ideal '" + text + "'");
      terms.push_back(t);
    }
  }
  if (terms.empty()) throw InputError("ideal without generators");
  if (names.empty()) {
    bool indexed = s.find_first_of("0123456789") != std::string::npos &&
                   std::any_of(terms.begin(), terms.end(), [](const std::string& t) {
                     for (std::size_t i = 0; i + 1 < t.size(); ++i)
                       if (std::isalpha(static_cast<unsigned char>(t[i])) && std::isdigit(static_cast<unsigned char>(t[i + 1])))
                         return true;
                     return false;
                   });
    if (indexed) {
      int mx = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 'x' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
          std::size_t j = i + 1;
          int v = 0;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) v = v * 10 + (s[j++] - '0');
          mx = std::max(mx, v);
        }
      for (int i = 1; i <= mx; ++i) names.push_back("x" + std::to_string(i));
    } else {
      const std::string letters = "xyzwtuv";
      int mx = -1;
      for (char c : s) {
        auto p = letters.find(c);
        if (p != std::string::npos) mx = std::max(mx, static_cast<int>(p));
      }
      for (int i = 0; i <= mx; ++i) names.push_back(std::string(1, letters[static_cast<std::size_t>(i)]));
    }
  }
  if (names.empty()) throw InputError("could not determine the variables of '" + text + "'");
  std::vector<ExponentVector> gens;
  for (const auto& t : terms) {
    ExponentVector m(names.size());
    std::size_t pos = 0;
    if (t == "1") {
      gens.push_back(m);
      continue;
    }
    while (pos < t.size()) {
      std::size_t best = 0, which = 0;
      for (std::size_t v = 0; v < names.size(); ++v)
        if (t.compare(pos, names[v].size(), names[v]) == 0 && names[v].size() > best) {
          // an indexed name must not be a prefix of a longer index (x1 vs x12)
          std::size_t end = pos + names[v].size();
          if (std::isdigit(static_cast<unsigned char>(names[v].back())) && end < t.size() &&
              std::isdigit(static_cast<unsigned char>(t[end])))
            continue;
          best = names[v].size();
          which = v;
        }
      if (best == 0) throw InputError("unknown variable in monomial '" + t + "'");
      pos += best;
      int e = 1;
      if (pos < t.size() && t[pos] == '^') {
        ++pos;
        if (pos >= t.size() || !std::isdigit(static_cast<unsigned char>(t[pos])))
          throw InputError("bad exponent in monomial '" + t + "'");
        e = 0;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) e = e * 10 + (t[pos++] - '0');
      }
      m[which] += e;
    }
    gens.push_back(m);
  }
  MonomialIdeal ideal(names.size(), std::move(gens));
  if (power > 1) ideal = ideal_power_generators(ideal, power);
  return {std::move(ideal), names};
}

inline std::string ideal_to_string(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) s += (i ? "," : "") + to_string(ideal.generators()[i], names);
  return s + ")";
}

// ---- complexes -------------------------------------------------------------

inline json to_json(const LabeledComplex& x) {
  json j;
  j["variables"] = x.variables();
  json cells = json::array();
  json inc = json::array();
  for (std::size_t i = 0; i < x.num_cells(); ++i) {
    const Cell& c = x.cells()[i];
    cells.push_back({{"id", i}, {"dim", c.dim}, {"vertices", c.vertices}, {"label", c.label.values()}});
    for (auto [f, s] : c.facets) inc.push_back({{"cell", i}, {"facet", f}, {"sign", s}});
  }
  j["cells"] = cells;
  j["incidence"] = inc;
  return j;
}

namespace detail {
inline const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}
inline int require_int(const json& j, const char* key, const std::string& where) {
  const auto& v = require(j, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}
}  // namespace detail

/// Parses and validates a complex; ids are renumbered in increasing order.
inline LabeledComplex complex_from_json(const json& j) {
  using detail::require;
  using detail::require_int;
  const auto& vars = require(j, "variables", "complex");
  if (!vars.is_array()) throw InputError("complex: \"variables\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw InputError("complex: variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  const auto& cj = require(j, "cells", "complex");
  if (!cj.is_array()) throw InputError("complex: \"cells\" must be an array");
  std::map<int, int> index;  // json id -> position after sorting
  std::vector<std::pair<int, const json*>> raw;
  for (const auto& c : cj) raw.emplace_back(require_int(c, "id", "cell"), &c);
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!index.emplace(raw[i].first, static_cast<int>(i)).second)
      throw InputError("complex: duplicate cell id " + std::to_string(raw[i].first));
  auto lookup = [&](int id, const std::string& where) {
    auto it = index.find(id);
    if (it == index.end()) throw InputError(where + ": unknown cell id " + std::to_string(id));
    return it->second;
  };
  std::vector<Cell> cells;
  for (const auto& [id, cp] : raw) {
    const json& c = *cp;
    const std::string where = "cell " + std::to_string(id);
    Cell cell;
    cell.dim = require_int(c, "dim", where);
    const auto& vs = require(c, "vertices", where);
    if (!vs.is_array()) throw InputError(where + ": \"vertices\" must be an array");
    for (const auto& v : vs) {
      if (!v.is_number_integer()) throw InputError(where + ": vertex ids must be integers");
      cell.vertices.push_back(lookup(v.get<int>(), where));
    }
    std::sort(cell.vertices.begin(), cell.vertices.end());
    cell.label = exponent_vector_from_json(require(c, "label", where));
    if (cell.label.size() != names.size()) throw InputError(where + ": label length differs from the variable count");
    cells.push_back(std::move(cell));
  }
  const auto& inc = require(j, "incidence", "complex");
  if (!inc.is_array()) throw InputError("complex: \"incidence\" must be an array");
  for (const auto& e : inc) {
    int c = lookup(require_int(e, "cell", "incidence"), "incidence");
    int f = lookup(require_int(e, "facet", "incidence"), "incidence");
    int s = require_int(e, "sign", "incidence");
    if (s != 1 && s != -1) throw InputError("incidence: sign must be +1 or -1");
    cells[static_cast<std::size_t>(c)].facets.emplace_back(f, s);
  }
  LabeledComplex x;
  try {
    x = LabeledComplex(names.size(), names, std::move(cells));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string("complex: ") + e.what());
  }
  auto diag = validate(x);
  if (!diag.empty()) throw InputError("complex fails validation: " + diag.front());
  return x;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

inline LabeledComplex import_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }
inline void export_complex(const std::string& path, const LabeledComplex& x) { write_json_file(path, to_json(x)); }

// ---- arrangements and graphs ----------------------------------------------

inline ArrangementSpec arrangement_from_json(const json& j) {
  ArrangementSpec spec;
  const auto& vs = detail::require(j, "vertices", "arrangement");
  if (!vs.is_array() || vs.empty()) throw InputError("arrangement: \"vertices\" must be a non-empty array");
  for (const auto& v : vs) spec.vertices.push_back(exponent_vector_from_json(v));
  const auto& fs = detail::require(j, "families", "arrangement");
  if (!fs.is_array()) throw InputError("arrangement: \"families\" must be an array");
  for (const auto& f : fs) {
    const auto& c = detail::require(f, "functional", "family");
    if (!c.is_array()) throw InputError("family: functional must be an integer array");
    std::vector<int> v;
    for (const auto& e : c) {
      if (!e.is_number_integer()) throw InputError("family: functional must be an integer array");
      v.push_back(e.get<int>());
    }
    spec.families.push_back({v});
  }
  if (j.contains("variables"))
    for (const auto& v : j.at("variables")) spec.variables.push_back(v.get<std::string>());
  return spec;
}

inline json to_json(const ArrangementSpec& spec) {
  json j;
  json vs = json::array();
  for (const auto& v : spec.vertices) vs.push_back(to_json(v));
  j["vertices"] = vs;
  json fs = json::array();
  for (const auto& f : spec.families) fs.push_back({{"functional", f.functional}});
  j["families"] = fs;
  return j;
}

/// {"n": int, "edges": [[i, j], ...]} with 1-based vertices.
inline Graph graph_from_json(const json& j) {
  int n = detail::require_int(j, "n", "graph");
  const auto& es = detail::require(j, "edges", "graph");
  if (!es.is_array()) throw InputError("graph: \"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("graph: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return make_graph(n, edges);
}

inline json to_json(const Graph& g) {
  json es = json::array();
  for (auto [a, b] : g.edges) es.push_back({a + 1, b + 1});
  return {{"n", g.n}, {"edges", es}};
}

// ---- free complexes and morphisms ------------------------------------------

inline json coefficient_json(const Rationals::Element& v) {
  if (boost::multiprecision::denominator(v) == 1) {
    auto num = boost::multiprecision::numerator(v);
    if (num >= std::numeric_limits<long>::min() && num <= std::numeric_limits<long>::max())
      return json(num.convert_to<long>());
  }
  return json(v.str());
}

inline json coefficient_json(PrimeField::Element v, const PrimeField& k) {
  return json(std::stol(k.to_string(v)));
}

template <class Field>
json to_json(const FreeComplex<Field>& f) {
  json j;
  json mods = json::array();
  for (const auto& m : f.modules) {
    json degs = json::array();
    for (const auto& d : m) degs.push_back(to_json(d));
    mods.push_back(degs);
  }
  j["modules"] = mods;
  json diffs = json::array();
  for (std::size_t i = 1; i <= f.length(); ++i) {
    json entries = json::array();
    const auto& d = f.differentials[i - 1];
    for (std::size_t c = 0; c < d.size(); ++c)
      for (const auto& [r, v] : d[c]) {
        json e;
        e["row"] = r;
        e["col"] = c;
        if constexpr (std::is_same_v<Field, Rationals>) e["coeff"] = coefficient_json(v);
        else e["coeff"] = coefficient_json(v, f.field);
        e["monomial"] = to_json(quotient(f.modules[i][c], f.modules[i - 1][static_cast<std::size_t>(r)]));
        entries.push_back(e);
      }
    diffs.push_back(entries);
  }
  j["differentials"] = diffs;
  return j;
}

inline json to_json(const MultiplicationMorphism& g) {
  json j;
  j["multiplier"] = to_json(g.multiplier);
  json cm = json::array();
  for (std::size_t c = 0; c < g.cell_map.size(); ++c) cm.push_back({c, g.cell_map[c]});
  j["cell_map"] = cm;
  bool ident = g.renaming == identity_injection(g.renaming.size()) && g.source->num_variables() == g.target->num_variables();
  if (!ident) j["renaming"] = g.renaming;
  return j;
}

inline json betti_json(const BettiTable& b) { return json(b); }

// ---- reports ------------------------------------------------------------------

inline json cell_json(const LabeledComplex& x, int id) {
  return {{"id", id}, {"dim", x.cell(id).dim}, {"label", x.label_string(id)}, {"vertex_labels", cell_vertex_labels(x, id)}};
}

inline json to_json(const CoveringReport& r, Family& fam) {
  json j;
  j["target_index"] = r.target_index;
  j["source_indices"] = r.source_indices;
  j["dimension"] = r.dimension < 0 ? json("all") : json(r.dimension);
  j["covered"] = r.covered;
  auto target = fam.complex(r.target_index);
  json cells = json::array();
  for (const auto& a : r.cells) {
    json c = cell_json(*target, a.target_cell);
    if (a.covered) {
      c["source_index"] = a.source_index;
      c["source_cell"] = a.source_cell;
      c["multiplier"] = to_string(a.multiplier, target->variables());
      if (a.renaming != identity_injection(a.renaming.size()) ||
          fam.complex(a.source_index)->num_variables() != target->num_variables())
        c["renaming"] = a.renaming;
    } else {
      c["status"] = "UNCOVERED";
    }
    cells.push_back(c);
  }
  j["cells"] = cells;
  json unc = json::array();
  for (int c : r.uncovered()) unc.push_back(cell_json(*target, c));
  j["uncovered"] = unc;
  return j;
}

inline json to_json(const HorizonReport& r, Family& fam) {
  json j;
  j["family"] = fam.name();
  j["max_index"] = r.max_index;
  j["dimension"] = r.dimension < 0 ? json("all") : json(r.dimension);
  j["threshold"] = r.threshold ? json(*r.threshold) : json("NONE");
  json per = json::array();
  for (const auto& rep : r.reports) {
    json u = json::array();
    auto x = fam.complex(rep.target_index);
    for (int c : rep.uncovered()) u.push_back(cell_json(*x, c));
    per.push_back({{"index", rep.target_index}, {"covered", rep.covered}, {"uncovered", u}});
  }
  j["indices"] = per;
  if (r.claimed_threshold) {
    j["claimed_threshold"] = *r.claimed_threshold;
    j["matches_claim"] = r.matches_claim;
  }
  j["scope"] = r.note;
  return j;
}

inline json to_json(const FGWitness& w, Family& fam) {
  json j;
  j["family"] = fam.name();
  j["t"] = w.t;
  j["dimension"] = w.dimension;
  j["horizon"] = w.horizon;
  j["status"] = w.succeeded ? "OK" : "FAILED";
  j["threshold"] = w.threshold ? json(*w.threshold) : json("NONE");
  json gens = json::array();
  for (auto [i, c] : w.generators) {
    json g = cell_json(*fam.complex(i), c);
    g["index"] = i;
    gens.push_back(g);
  }
  j["generators"] = gens;
  json ver = json::array();
  for (const auto& e : w.verification) {
    auto x = fam.complex(e.index);
    json v = {{"index", e.index}, {"cell", e.cell}, {"generator_index", e.generator_index},
              {"generator_cell", e.generator_cell}, {"multiplier", to_string(e.multiplier, x->variables())}};
    if (fam.complex(e.generator_index)->num_variables() != x->num_variables() ||
        e.renaming != identity_injection(e.renaming.size()))
      v["renaming"] = e.renaming;
    ver.push_back(v);
  }
  j["verification"] = ver;
  json unc = json::array();
  for (auto [i, c] : w.uncovered) {
    json u = cell_json(*fam.complex(i), c);
    u["index"] = i;
    unc.push_back(u);
  }
  j["uncovered"] = unc;
  j["note"] = w.note;
  return j;
}

inline json to_json(const BLReport& r) {
  json j;
  j["graph"] = to_json(r.graph);
  json gens = json::array();
  for (std::size_t k = 0; k < r.ideal.generators.size(); ++k) {
    json g = {{"generator", r.ideal.generator_string(k)}};
    if (k < r.sets.size()) {
      json s = json::array();
      for (int v : r.sets[k]) s.push_back(r.ideal.variables[static_cast<std::size_t>(v)]);
      g["set"] = s;
      json f = json::array();
      for (int v : r.formula_sets[k]) f.push_back(r.ideal.variables[static_cast<std::size_t>(v)]);
      g["formula_set"] = f;
    }
    gens.push_back(g);
  }
  j["generators"] = gens;
  j["linear_quotients"] = r.linear_quotients;
  j["regular_decomposition"] = r.regular;
  j["x_pair_formula_holds"] = r.x_pair_formula_holds;
  j["x_part_formula_holds"] = r.x_part_formula_holds;
  j["y_part_discrepancies"] = r.y_part_discrepancies.size();
  j["betti_ideal"] = r.betti_ideal;
  return j;
}

}  // namespace cellres
