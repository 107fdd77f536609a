#pragma once

// Cellular maps between labeled complexes: multiplication morphisms,
// variable renamings, their chain maps, and composition.

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cellres/complex.hpp"
#include "cellres/linalg.hpp"
#include "cellres/monomial.hpp"

namespace cellres {

using ComplexPtr = std::shared_ptr<const LabeledComplex>;

/// Pushes a label along an injection of variable indices.
inline ExponentVector rename(const ExponentVector& a, const std::vector<int>& injection, std::size_t target_n) {
  if (injection.size() != a.size()) throw Error("renaming has wrong length");
  ExponentVector out(target_n);
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(injection[i])] = a[i];
  return out;
}

inline std::vector<int> identity_injection(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

/// A map of face posets, given cell by cell.  `renaming` sends source
/// variables to target variables (the identity when both rings agree).
struct CellularMap {
  ComplexPtr source;
  ComplexPtr target;
  std::vector<int> renaming;
  std::vector<int> cell_map;  // source cell id -> target cell id
};

/// A cellular map whose induced label map is x^a -> x^(multiplier) x^(renaming(a)).
struct MultiplicationMorphism : CellularMap {
  ExponentVector multiplier;
};

/// Source label -> target label for every vertex of the source.
inline std::vector<std::pair<ExponentVector, ExponentVector>> induced_label_map(const MultiplicationMorphism& g) {
  std::vector<std::pair<ExponentVector, ExponentVector>> out;
  for (int v : g.source->vertices()) {
    const auto& l = g.source->cell(v).label;
    out.emplace_back(l, product(g.multiplier, rename(l, g.renaming, g.target->num_variables())));
  }
  return out;
}

/// Checks the MultiplicationMorphism invariants; empty when valid.
inline std::vector<std::string> validate_morphism(const MultiplicationMorphism& g) {
  std::vector<std::string> diag;
  const auto& x = *g.source;
  const auto& y = *g.target;
  if (g.cell_map.size() != x.num_cells()) return {"cell map has wrong size"};
  std::vector<char> hit(y.num_cells(), 0);
  for (std::size_t c = 0; c < x.num_cells(); ++c) {
    int t = g.cell_map[c];
    if (t < 0 || t >= static_cast<int>(y.num_cells())) {
      diag.push_back("cell " + std::to_string(c) + " maps outside the target");
      continue;
    }
    if (hit[static_cast<std::size_t>(t)]++) diag.push_back("cell map is not injective at " + std::to_string(c));
    const Cell& a = x.cells()[c];
    const Cell& b = y.cell(t);
    if (a.dim != b.dim) diag.push_back("cell " + std::to_string(c) + " changes dimension");
    if (a.dim == 0) {
      auto expect = product(g.multiplier, rename(a.label, g.renaming, y.num_variables()));
      if (b.label != expect) diag.push_back("vertex " + std::to_string(c) + " label not multiplied correctly");
    } else {
      std::vector<int> img;
      for (int v : a.vertices) img.push_back(g.cell_map[static_cast<std::size_t>(v)]);
      std::sort(img.begin(), img.end());
      if (img != b.vertices) diag.push_back("cell " + std::to_string(c) + " vertex set not preserved");
      for (auto [f, s] : a.facets) {
        int tf = g.cell_map[static_cast<std::size_t>(f)];
        bool ok = std::any_of(b.facets.begin(), b.facets.end(), [&](auto p) { return p.first == tf; });
        if (!ok) diag.push_back("facet relation not preserved at cell " + std::to_string(c));
      }
    }
  }
  return diag;
}

/// Extends a vertex map to cells by vertex sets; nullopt when some image
/// vertex set is not a target cell of the same dimension.
inline std::optional<std::vector<int>> extend_vertex_map(const LabeledComplex& x, const LabeledComplex& y,
                                                         const std::vector<int>& vmap) {
  std::vector<int> cm(x.num_cells(), -1);
  std::vector<int> img;
  for (std::size_t c = 0; c < x.num_cells(); ++c) {
    const Cell& a = x.cells()[c];
    img.clear();
    for (int v : a.vertices) img.push_back(vmap[static_cast<std::size_t>(x.position(v))]);
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return std::nullopt;
    auto t = y.find_cell(img);
    if (!t || y.cell(*t).dim != a.dim) return std::nullopt;
    cm[c] = *t;
  }
  return cm;
}

namespace detail {
inline std::unordered_map<ExponentVector, int> vertex_by_label(const LabeledComplex& y) {
  std::unordered_map<ExponentVector, int> m;
  for (int v : y.vertices())
    if (!m.emplace(y.cell(v).label, v).second)
      throw Error("target complex has two vertices with label " + y.label_string(v));
  return m;
}
}  // namespace detail

/// Every multiplication morphism X -> Y, sorted by multiplier in
/// MonomialOrder.  Both complexes must live in the same ring.
inline std::vector<MultiplicationMorphism> find_multiplication_morphisms(const ComplexPtr& x, const ComplexPtr& y) {
  if (x->num_variables() != y->num_variables())
    throw Error("find_multiplication_morphisms: complexes over different rings; rename first");
  std::vector<MultiplicationMorphism> out;
  if (x->vertices().empty()) return out;
  auto by_label = detail::vertex_by_label(*y);
  const auto& l0 = x->cell(x->vertices()[0]).label;
  std::vector<ExponentVector> candidates;
  for (int w : y->vertices())
    if (divides(l0, y->cell(w).label)) candidates.push_back(quotient(y->cell(w).label, l0));
  std::sort(candidates.begin(), candidates.end(), MonomialOrder{});
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& m : candidates) {
    std::vector<int> vmap;
    bool ok = true;
    for (int v : x->vertices()) {
      auto it = by_label.find(product(m, x->cell(v).label));
      if (it == by_label.end()) { ok = false; break; }
      vmap.push_back(it->second);
    }
    if (!ok) continue;
    auto cm = extend_vertex_map(*x, *y, vmap);
    if (!cm) continue;
    MultiplicationMorphism g;
    g.source = x;
    g.target = y;
    g.renaming = identity_injection(x->num_variables());
    g.cell_map = std::move(*cm);
    g.multiplier = m;
    out.push_back(std::move(g));
  }
  return out;
}

/// Same complex with labels pushed along an injection into target_n variables.
inline LabeledComplex rename_variables(const LabeledComplex& x, const std::vector<int>& injection,
                                       std::size_t target_n, std::vector<std::string> variables = {}) {
  if (injection.size() != x.num_variables()) throw Error("renaming has wrong length");
  std::vector<char> used(target_n, 0);
  for (int t : injection) {
    if (t < 0 || t >= static_cast<int>(target_n)) throw Error("renaming target out of range");
    if (used[static_cast<std::size_t>(t)]++) throw Error("renaming is not injective");
  }
  std::vector<Cell> cells = x.cells();
  for (auto& c : cells) c.label = rename(c.label, injection, target_n);
  if (variables.empty()) variables = default_variable_names(target_n);
  return LabeledComplex(target_n, std::move(variables), std::move(cells));
}

enum class InjectionMode { All, OrderPreserving };

/// All injections {0..m-1} -> {0..n-1}, in lexicographic order.
inline std::vector<std::vector<int>> injections(std::size_t m, std::size_t n, InjectionMode mode) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&]() {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    int from = (mode == InjectionMode::OrderPreserving && !cur.empty()) ? cur.back() + 1 : 0;
    for (int t = from; t < static_cast<int>(n); ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      used[static_cast<std::size_t>(t)] = 1;
      cur.push_back(t);
      rec();
      cur.pop_back();
      used[static_cast<std::size_t>(t)] = 0;
    }
  };
  rec();
  return out;
}

/// Morphisms X -> Y that rename variables along an injection and then
/// multiply by a monomial, sorted by (renaming, multiplier).
inline std::vector<MultiplicationMorphism> find_renaming_morphisms(const ComplexPtr& x, const ComplexPtr& y,
                                                                   InjectionMode mode = InjectionMode::All) {
  std::vector<MultiplicationMorphism> out;
  if (x->num_variables() > y->num_variables()) return out;
  for (const auto& inj : injections(x->num_variables(), y->num_variables(), mode)) {
    auto renamed = std::make_shared<const LabeledComplex>(rename_variables(*x, inj, y->num_variables(), y->variables()));
    for (auto& g : find_multiplication_morphisms(renamed, y)) {
      g.source = x;
      g.renaming = inj;
      out.push_back(std::move(g));
    }
  }
  return out;
}

/// g2 after g1.
inline MultiplicationMorphism compose(const MultiplicationMorphism& g2, const MultiplicationMorphism& g1) {
  if (g1.target != g2.source && !(g1.target && g2.source && *g1.target == *g2.source))
    throw Error("compose: target of the first map is not the source of the second");
  MultiplicationMorphism g;
  g.source = g1.source;
  g.target = g2.target;
  g.renaming.resize(g1.renaming.size());
  for (std::size_t i = 0; i < g1.renaming.size(); ++i)
    g.renaming[i] = g2.renaming[static_cast<std::size_t>(g1.renaming[i])];
  g.multiplier = product(g2.multiplier, rename(g1.multiplier, g2.renaming, g2.target->num_variables()));
  g.cell_map.resize(g1.cell_map.size());
  for (std::size_t c = 0; c < g1.cell_map.size(); ++c)
    g.cell_map[c] = g2.cell_map[static_cast<std::size_t>(g1.cell_map[c])];
  return g;
}

inline MultiplicationMorphism identity_morphism(const ComplexPtr& x) {
  MultiplicationMorphism g;
  g.source = x;
  g.target = x;
  g.renaming = identity_injection(x->num_variables());
  g.multiplier = ExponentVector(x->num_variables());
  g.cell_map = identity_injection(x->num_cells());
  return g;
}

/// Chain map between cellular free complexes.  f[0] is the 1x1 matrix
/// (c0); f[i] maps the generators of (i-1)-cells.  An entry joining source
/// generator e_x to target generator e_y carries the implied monomial
/// x^(a_x + shift - a_y), with labels of the source read through the
/// renaming.
struct ChainMap {
  ExponentVector shift;
  std::vector<IntMatrix> f;
};

/// Integer boundary matrices d_1..d_top of the cellular complex (d_1 is
/// the augmentation row).
inline std::vector<IntMatrix> integer_differentials(const LabeledComplex& x) {
  std::vector<IntMatrix> d;
  for (int k = 0; k <= x.dimension(); ++k) {
    int rows = k == 0 ? 1 : static_cast<int>(x.cells_of_dim(k - 1).size());
    IntMatrix m(rows, static_cast<int>(x.cells_of_dim(k).size()));
    m.columns = boundary_columns(x, k);
    d.push_back(std::move(m));
  }
  return d;
}

namespace detail {
inline long facet_sign(const Cell& c, int facet) {
  for (auto [f, s] : c.facets)
    if (f == facet) return s;
  return 0;
}
}  // namespace detail

/// The canonical chain map of a multiplication morphism: f_0 = x^multiplier
/// and e_c -> eps(c) e_{g(c)}, with eps fixed along first facets and
/// verified on all others.
inline ChainMap build_chain_map(const MultiplicationMorphism& g) {
  const auto& x = *g.source;
  const auto& y = *g.target;
  std::vector<int> eps(x.num_cells(), 0);
  for (int d = 0; d <= x.dimension(); ++d)
    for (int c : x.cells_of_dim(d)) {
      const Cell& a = x.cell(c);
      if (d == 0) {
        eps[static_cast<std::size_t>(c)] = 1;
        continue;
      }
      const Cell& b = y.cell(g.cell_map[static_cast<std::size_t>(c)]);
      int value = 0;
      for (auto [f, s] : a.facets) {
        long s2 = detail::facet_sign(b, g.cell_map[static_cast<std::size_t>(f)]);
        if (s2 == 0) throw Error("build_chain_map: facet image is not a facet of the image cell");
        int e = eps[static_cast<std::size_t>(f)] * s * static_cast<int>(s2);
        if (value == 0) value = e;
        else if (value != e)
          throw Error("build_chain_map: orientations of cell " + std::to_string(c) +
                      " cannot be reconciled; no compatible chain map");
      }
      eps[static_cast<std::size_t>(c)] = value;
    }
  ChainMap out;
  out.shift = g.multiplier;
  IntMatrix f0(1, 1);
  f0.set(0, 0, 1);
  out.f.push_back(std::move(f0));
  for (int d = 0; d <= x.dimension(); ++d) {
    IntMatrix m(static_cast<int>(y.cells_of_dim(d).size()), static_cast<int>(x.cells_of_dim(d).size()));
    for (int c : x.cells_of_dim(d)) {
      int t = g.cell_map[static_cast<std::size_t>(c)];
      m.set(y.position(t), x.position(c), eps[static_cast<std::size_t>(c)]);
    }
    out.f.push_back(std::move(m));
  }
  return out;
}

/// Definition of a compatible pair: f_0 is the label map (coefficient 1 and
/// shift + renamed label = image label on every vertex), f commutes with
/// the differentials, every implied monomial is a genuine monomial, and
/// the support of each f_i is exactly the graph of the cell map.
inline bool is_compatible_pair(const CellularMap& g, const ChainMap& f) {
  const auto& x = *g.source;
  const auto& y = *g.target;
  const std::size_t ny = y.num_variables();
  if (f.shift.size() != ny) return false;
  if (f.f.size() != static_cast<std::size_t>(x.dimension()) + 2) return false;
  if (f.f[0].rows != 1 || f.f[0].cols != 1 || f.f[0].at(0, 0) != 1) return false;
  for (int v : x.vertices()) {
    auto expect = product(f.shift, rename(x.cell(v).label, g.renaming, ny));
    if (y.cell(g.cell_map[static_cast<std::size_t>(v)]).label != expect) return false;
  }
  for (int d = 0; d <= x.dimension(); ++d) {
    const IntMatrix& m = f.f[static_cast<std::size_t>(d) + 1];
    if (m.rows != static_cast<int>(y.cells_of_dim(d).size()) || m.cols != static_cast<int>(x.cells_of_dim(d).size()))
      return false;
    for (int c : x.cells_of_dim(d)) {
      const auto& col = m.columns[static_cast<std::size_t>(x.position(c))];
      int t = g.cell_map[static_cast<std::size_t>(c)];
      if (col.size() != 1 || col[0].first != y.position(t)) return false;
      auto src = product(rename(x.cell(c).label, g.renaming, ny), f.shift);
      if (!divides(y.cell(t).label, src)) return false;
    }
  }
  auto dx = integer_differentials(x);
  auto dy = integer_differentials(y);
  for (int d = 0; d <= x.dimension(); ++d) {
    // d'_{d+1} f_{d+1} = f_d d_{d+1}
    const IntMatrix& fk = f.f[static_cast<std::size_t>(d) + 1];
    const IntMatrix& fk1 = f.f[static_cast<std::size_t>(d)];
    if (static_cast<std::size_t>(d) >= dy.size()) return false;
    if (multiply(dy[static_cast<std::size_t>(d)], fk) != multiply(fk1, dx[static_cast<std::size_t>(d)])) return false;
  }
  return true;
}

/// Exhaustive search for a chain map compatible with g: c0 in {-1, 1},
/// shift dividing the target's top label, and entries in {-1, 0, 1} on the
/// support forced by the cell map.  Refuses searches with more than
/// max_support sign choices.
inline bool exists_compatible_chain_map(const CellularMap& g, std::size_t max_support = 12) {
  const auto& x = *g.source;
  const auto& y = *g.target;
  const std::size_t cells = x.num_cells();
  if (cells > max_support) throw InputError("compatible chain map search space too large");
  auto top = y.top_label();
  std::vector<ExponentVector> shifts;
  ExponentVector cur(y.num_variables());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cur.size()) {
      shifts.push_back(cur);
      return;
    }
    for (int e = 0; e <= top[i]; ++e) {
      cur[i] = e;
      rec(i + 1);
    }
  };
  rec(0);
  // entries off the cell-map graph must vanish, so only the graph entries vary
  const std::size_t choices = 3;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= choices;
  for (int c0 : {1, -1})
    for (const auto& shift : shifts)
      for (std::size_t code = 0; code < total; ++code) {
        ChainMap f;
        f.shift = shift;
        IntMatrix f0(1, 1);
        f0.set(0, 0, c0);
        f.f.push_back(f0);
        std::size_t rest = code;
        std::vector<int> value(cells);
        for (std::size_t i = 0; i < cells; ++i) {
          value[i] = static_cast<int>(rest % choices) - 1;
          rest /= choices;
        }
        for (int d = 0; d <= x.dimension(); ++d) {
          IntMatrix m(static_cast<int>(y.cells_of_dim(d).size()), static_cast<int>(x.cells_of_dim(d).size()));
          for (int c : x.cells_of_dim(d))
            m.set(y.position(g.cell_map[static_cast<std::size_t>(c)]), x.position(c), value[static_cast<std::size_t>(c)]);
          f.f.push_back(std::move(m));
        }
        if (is_compatible_pair(g, f)) return true;
      }
  return false;
}

}  // namespace cellres
