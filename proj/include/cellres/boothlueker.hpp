#pragma once

// Booth-Lueker graphs and ideals, linear quotients, set(), the
// decomposition function and Betti numbers from linear quotients.

#include <algorithm>
#include <string>
#include <vector>

#include "cellres/families.hpp"
#include "cellres/monomial.hpp"
#include "cellres/resolution.hpp"

namespace cellres {

/// Generators in a fixed order over named variables.
struct OrderedIdeal {
  std::size_t n = 0;
  std::vector<ExponentVector> generators;
  std::vector<std::string> variables;

  std::string generator_string(std::size_t j) const { return to_string(generators.at(j), variables); }
};

inline OrderedIdeal make_ordered_ideal(std::size_t n, std::vector<ExponentVector> gens,
                                       std::vector<std::string> names = {}) {
  for (const auto& g : gens)
    if (g.size() != n) throw Error("generator length does not match the variable count");
  if (names.empty()) names = default_variable_names(n);
  return OrderedIdeal{n, std::move(gens), std::move(names)};
}

/// Complete graph on V(G) plus an edge from each endpoint of the k-th edge
/// to the new vertex n+k.
inline Graph bl_graph(const Graph& g) {
  auto edges = complete_graph(g.n).edges;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    int e = g.n + static_cast<int>(k);
    edges.emplace_back(g.edges[k].first, e);
    edges.emplace_back(g.edges[k].second, e);
  }
  return make_graph(g.n + static_cast<int>(g.edges.size()), edges);
}

/// x_1..x_n followed by y_1..y_|E|.
inline std::vector<std::string> bl_variable_names(const Graph& g) {
  std::vector<std::string> names;
  for (int i = 1; i <= g.n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t k = 1; k <= g.edges.size(); ++k) names.push_back("y" + std::to_string(k));
  return names;
}

/// x_ix_j (i<j) in lexicographic order, then x_{i_k}y_k, x_{j_k}y_k per edge.
inline OrderedIdeal bl_ideal_ordered(const Graph& g) {
  const std::size_t nv = static_cast<std::size_t>(g.n) + g.edges.size();
  std::vector<ExponentVector> gens;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      ExponentVector m(nv);
      m[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(j)] = 1;
      gens.push_back(m);
    }
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    for (int end : {g.edges[k].first, g.edges[k].second}) {
      ExponentVector m(nv);
      m[static_cast<std::size_t>(end)] = 1;
      m[static_cast<std::size_t>(g.n) + k] = 1;
      gens.push_back(m);
    }
  return make_ordered_ideal(nv, std::move(gens), bl_variable_names(g));
}

/// Minimal generators of (m_1, ..., m_{j-1}) : m_j (0-based j).
inline std::vector<ExponentVector> colon_generators(const OrderedIdeal& ideal, std::size_t j) {
  std::vector<ExponentVector> q;
  const auto& mj = ideal.generators.at(j);
  for (std::size_t i = 0; i < j; ++i) q.push_back(quotient(ideal.generators[i], gcd(ideal.generators[i], mj)));
  return minimal_generators(std::move(q));
}

inline bool has_linear_quotients(const OrderedIdeal& ideal) {
  for (std::size_t j = 1; j < ideal.generators.size(); ++j)
    for (const auto& g : colon_generators(ideal, j))
      if (g.degree() != 1) return false;
  return true;
}

/// Variable indices (0-based) generating the colon ideal of generator j.
inline std::vector<int> set_of_generator(const OrderedIdeal& ideal, std::size_t j) {
  std::vector<int> out;
  for (const auto& g : colon_generators(ideal, j)) {
    if (g.degree() != 1)
      throw Error("set(" + ideal.generator_string(j) + "): colon ideal is not generated by variables");
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g[v] == 1) out.push_back(static_cast<int>(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Index of the first generator dividing m.
inline std::size_t decomposition_function(const OrderedIdeal& ideal, const ExponentVector& m) {
  for (std::size_t j = 0; j < ideal.generators.size(); ++j)
    if (divides(ideal.generators[j], m)) return j;
  throw Error("decomposition_function: monomial not in the ideal");
}

/// set(b(x_t m)) is contained in set(m) for every generator m and t in set(m).
inline bool is_regular_decomposition(const OrderedIdeal& ideal) {
  std::vector<std::vector<int>> sets;
  for (std::size_t j = 0; j < ideal.generators.size(); ++j) sets.push_back(set_of_generator(ideal, j));
  for (std::size_t j = 0; j < ideal.generators.size(); ++j)
    for (int t : sets[j]) {
      auto m = product(ideal.generators[j], unit_vector(ideal.n, static_cast<std::size_t>(t)));
      const auto& s = sets[decomposition_function(ideal, m)];
      if (!std::includes(sets[j].begin(), sets[j].end(), s.begin(), s.end())) return false;
    }
  return true;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// beta_i(I) = sum over generators of C(|set(m)|, i); index 0 counts the
/// generators.  Equals beta_{i+1}(S/I).
inline BettiTable betti_from_linear_quotients(const OrderedIdeal& ideal) {
  if (!has_linear_quotients(ideal)) throw Error("betti_from_linear_quotients: ideal has no linear quotients");
  std::vector<std::size_t> sizes;
  std::size_t top = 0;
  for (std::size_t j = 0; j < ideal.generators.size(); ++j) {
    sizes.push_back(set_of_generator(ideal, j).size());
    top = std::max(top, sizes.back());
  }
  BettiTable b(top + 1, 0);
  for (auto s : sizes)
    for (std::size_t i = 0; i <= s; ++i) b[i] += binomial(s, i);
  return b;
}

/// Closed formulas for set(), as 0-based indices:
/// set(x_ix_j) = {1..j-1} \ {i}, set(x_iy_k) = {1..n} \ {i} together with
/// every n+t for which x_iy_t is a generator.
inline std::vector<int> bl_set_formula(const Graph& g, std::size_t j) {
  const std::size_t npairs = static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n - 1) / 2;
  std::vector<int> out;
  if (j < npairs) {
    std::size_t idx = 0;
    for (int a = 0; a < g.n; ++a)
      for (int b = a + 1; b < g.n; ++b, ++idx)
        if (idx == j) {
          for (int k = 0; k < b; ++k)
            if (k != a) out.push_back(k);
          return out;
        }
  }
  std::size_t k = (j - npairs) / 2;
  int i = (j - npairs) % 2 == 0 ? g.edges.at(k).first : g.edges.at(k).second;
  for (int a = 0; a < g.n; ++a)
    if (a != i) out.push_back(a);
  for (std::size_t t = 0; t < g.edges.size(); ++t)
    if (g.edges[t].first == i || g.edges[t].second == i) out.push_back(g.n + static_cast<int>(t));
  return out;
}

struct BLReport {
  Graph graph;
  OrderedIdeal ideal;
  std::vector<std::vector<int>> sets;
  std::vector<std::vector<int>> formula_sets;
  bool linear_quotients = false;
  bool regular = false;
  bool x_pair_formula_holds = true;    // set(x_ix_j) equals its closed formula
  bool x_part_formula_holds = true;    // x-variables of set(x_iy_k) match the closed formula
  std::vector<std::size_t> y_part_discrepancies;  // generator indices
  BettiTable betti_ideal;               // beta_i(I)
};

inline BLReport bl_report(const Graph& g) {
  BLReport r;
  r.graph = g;
  r.ideal = bl_ideal_ordered(g);
  r.linear_quotients = has_linear_quotients(r.ideal);
  if (!r.linear_quotients) return r;
  r.regular = is_regular_decomposition(r.ideal);
  const std::size_t npairs = static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n - 1) / 2;
  for (std::size_t j = 0; j < r.ideal.generators.size(); ++j) {
    r.sets.push_back(set_of_generator(r.ideal, j));
    r.formula_sets.push_back(bl_set_formula(g, j));
    const auto& s = r.sets.back();
    const auto& f = r.formula_sets.back();
    if (j < npairs) {
      if (s != f) r.x_pair_formula_holds = false;
    } else {
      auto xpart = [&](const std::vector<int>& v) {
        std::vector<int> o;
        for (int a : v)
          if (a < g.n) o.push_back(a);
        return o;
      };
      if (xpart(s) != xpart(f)) r.x_part_formula_holds = false;
      if (s != f) r.y_part_discrepancies.push_back(j);
    }
  }
  r.betti_ideal = betti_from_linear_quotients(r.ideal);
  return r;
}

/// Every labeled connected simple graph on n vertices.
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask & (std::size_t{1} << b)) e.push_back(all[b]);
    Graph g = make_graph(n, e);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cellres
