#pragma once

// Labeled regular cell complexes.  Cells are stored by id; the empty cell is
// implicit (dimension -1, label 1) and every vertex has incidence +1 with it.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cellres/field.hpp"
#include "cellres/linalg.hpp"
#include "cellres/monomial.hpp"

namespace cellres {

struct Cell {
  int dim = 0;
  std::vector<int> vertices;                 // sorted vertex-cell ids
  ExponentVector label;
  std::vector<std::pair<int, int>> facets;   // (facet id, sign), sorted by id

  friend bool operator==(const Cell&, const Cell&) = default;
};

class LabeledComplex {
 public:
  LabeledComplex() = default;

  /// Builds the lookup tables.  Only structural sanity (ids in range,
  /// vertex cells consistent) is enforced here; see validate().
  LabeledComplex(std::size_t n, std::vector<std::string> variables, std::vector<Cell> cells)
      : n_(n), variables_(std::move(variables)), cells_(std::move(cells)) {
    if (variables_.empty()) variables_ = default_variable_names(n_);
    if (variables_.size() != n_) throw Error("variable name count does not match n");
    index();
  }

  std::size_t num_variables() const noexcept { return n_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t num_cells() const noexcept { return cells_.size(); }
  const Cell& cell(int id) const { return cells_.at(static_cast<std::size_t>(id)); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  /// -1 for a complex holding only the empty cell.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<int>& cells_of_dim(int d) const {
    static const std::vector<int> none;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[static_cast<std::size_t>(d)];
  }
  const std::vector<int>& vertices() const { return cells_of_dim(0); }

  /// Position of a cell among the cells of its dimension.
  int position(int id) const { return position_.at(static_cast<std::size_t>(id)); }

  std::optional<int> find_cell(const std::vector<int>& sorted_vertices) const {
    auto it = by_vertices_.find(sorted_vertices);
    if (it == by_vertices_.end()) return std::nullopt;
    return it->second;
  }

  std::string label_string(int id) const { return to_string(cell(id).label, variables_); }

  ExponentVector top_label() const {
    ExponentVector t(n_);
    for (int v : vertices()) t = lcm(t, cell(v).label);
    return t;
  }

  friend bool operator==(const LabeledComplex& a, const LabeledComplex& b) {
    return a.n_ == b.n_ && a.variables_ == b.variables_ && a.cells_ == b.cells_;
  }

 private:
  void index() {
    by_dim_.clear();
    by_vertices_.clear();
    position_.assign(cells_.size(), -1);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      Cell& c = cells_[i];
      if (c.dim < 0) throw Error("cell " + std::to_string(i) + " has negative dimension");
      if (c.label.size() != n_)
        throw Error("cell " + std::to_string(i) + " label has wrong length");
      std::sort(c.facets.begin(), c.facets.end());
      if (!std::is_sorted(c.vertices.begin(), c.vertices.end()))
        std::sort(c.vertices.begin(), c.vertices.end());
      if (c.dim == 0 && (c.vertices.size() != 1 || c.vertices[0] != static_cast<int>(i)))
        throw Error("vertex cell " + std::to_string(i) + " must list itself as its vertex");
      for (int v : c.vertices)
        if (v < 0 || v >= static_cast<int>(cells_.size()) ||
            cells_[static_cast<std::size_t>(v)].dim != 0)
          throw Error("cell " + std::to_string(i) + " refers to a non-vertex " +
                      std::to_string(v));
      for (const auto& f : c.facets)
        if (f.first < 0 || f.first >= static_cast<int>(cells_.size()))
          throw Error("cell " + std::to_string(i) + " has facet id out of range");
      if (by_dim_.size() <= static_cast<std::size_t>(c.dim)) by_dim_.resize(static_cast<std::size_t>(c.dim) + 1);
      position_[i] = static_cast<int>(by_dim_[static_cast<std::size_t>(c.dim)].size());
      by_dim_[static_cast<std::size_t>(c.dim)].push_back(static_cast<int>(i));
      by_vertices_.emplace(c.vertices, static_cast<int>(i));
    }
  }

  std::size_t n_ = 0;
  std::vector<std::string> variables_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<int> position_;
  std::map<std::vector<int>, int> by_vertices_;
};

/// Renumbers cells into canonical order: vertices by label in MonomialOrder,
/// then all cells by (dim, sorted vertex ids).  Signs are carried along.
inline LabeledComplex canonicalize(const LabeledComplex& x) {
  const auto& cells = x.cells();
  std::vector<int> verts = x.vertices();
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
    return MonomialOrder{}(x.cell(a).label, x.cell(b).label);
  });
  std::vector<int> vnew(cells.size(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) vnew[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

  struct Key {
    int dim;
    std::vector<int> verts;
    int old;
  };
  std::vector<Key> keys;
  keys.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::vector<int> vs;
    for (int v : cells[i].vertices) vs.push_back(vnew[static_cast<std::size_t>(v)]);
    std::sort(vs.begin(), vs.end());
    keys.push_back({cells[i].dim, std::move(vs), static_cast<int>(i)});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });
  std::vector<int> newid(cells.size());
  for (std::size_t i = 0; i < keys.size(); ++i) newid[static_cast<std::size_t>(keys[i].old)] = static_cast<int>(i);
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const auto& k : keys) {
    const Cell& c = cells[static_cast<std::size_t>(k.old)];
    Cell d;
    d.dim = c.dim;
    d.label = c.label;
    for (int v : c.vertices) d.vertices.push_back(newid[static_cast<std::size_t>(v)]);
    std::sort(d.vertices.begin(), d.vertices.end());
    for (auto [f, s] : c.facets) d.facets.emplace_back(newid[static_cast<std::size_t>(f)], s);
    std::sort(d.facets.begin(), d.facets.end());
    out.push_back(std::move(d));
  }
  return LabeledComplex(x.num_variables(), x.variables(), std::move(out));
}

/// Checks every structural invariant; returns human-readable violations.
inline std::vector<std::string> validate(const LabeledComplex& x) {
  std::vector<std::string> diag;
  const auto& cells = x.cells();
  for (int d = 1; d <= x.dimension(); ++d) {
    std::set<std::vector<int>> seen;
    for (int id : x.cells_of_dim(d)) {
      if (!seen.insert(x.cell(id).vertices).second)
        diag.push_back("cells of dimension " + std::to_string(d) +
                       " share the vertex set of cell " + std::to_string(id));
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    const std::string who = "cell " + std::to_string(i);
    if (c.dim == 0) {
      if (!c.facets.empty()) diag.push_back(who + ": vertex with listed facets");
      continue;
    }
    ExponentVector l(x.num_variables());
    for (int v : c.vertices) l = lcm(l, x.cell(v).label);
    if (l != c.label)
      diag.push_back(who + ": label " + to_string(c.label, x.variables()) +
                     " is not the lcm of its vertex labels (" + to_string(l, x.variables()) + ")");
    if (static_cast<int>(c.vertices.size()) < c.dim + 1)
      diag.push_back(who + ": fewer than dim+1 vertices");
    if (c.dim == 1 && c.vertices.size() != 2) diag.push_back(who + ": edge without two vertices");
    std::set<int> covered;
    for (auto [f, s] : c.facets) {
      const Cell& g = x.cell(f);
      if (g.dim != c.dim - 1)
        diag.push_back(who + ": facet " + std::to_string(f) + " has wrong dimension");
      if (s != 1 && s != -1) diag.push_back(who + ": incidence sign is not +-1");
      if (!std::includes(c.vertices.begin(), c.vertices.end(), g.vertices.begin(), g.vertices.end()))
        diag.push_back(who + ": facet " + std::to_string(f) + " vertices not contained in the cell");
      covered.insert(g.vertices.begin(), g.vertices.end());
    }
    if (covered != std::set<int>(c.vertices.begin(), c.vertices.end()))
      diag.push_back(who + ": vertex set is not the union of its facets' vertex sets");
    if (c.facets.size() < 2) diag.push_back(who + ": fewer than two facets");

    // boundary of the boundary, indexed by codim-2 face (-1 = empty cell)
    std::map<int, long> dd;
    std::map<int, int> diamond;
    for (auto [f, s] : c.facets) {
      const Cell& g = x.cell(f);
      if (g.dim == 0) {
        dd[-1] += s;
        diamond[-1]++;
      } else {
        for (auto [h, t] : g.facets) {
          dd[h] += static_cast<long>(s) * t;
          diamond[h]++;
        }
      }
    }
    for (auto [h, v] : dd)
      if (v != 0)
        diag.push_back(who + ": boundary of boundary is nonzero at " +
                       (h < 0 ? std::string("the empty cell") : "cell " + std::to_string(h)));
    for (auto [h, cnt] : diamond)
      if (cnt != 2)
        diag.push_back(who + ": codimension-2 face " + (h < 0 ? std::string("(empty)") : std::to_string(h)) +
                       " lies in " + std::to_string(cnt) + " facets instead of 2");
  }
  return diag;
}

/// f-vector (cells per dimension, empty cell excluded).
inline std::vector<std::size_t> f_vector(const LabeledComplex& x) {
  std::vector<std::size_t> f;
  for (int d = 0; d <= x.dimension(); ++d) f.push_back(x.cells_of_dim(d).size());
  return f;
}

/// Full subcomplex on the cells selected by keep (which must be closed
/// under taking faces); ids are renumbered in the original order.
inline LabeledComplex subcomplex(const LabeledComplex& x, const std::vector<char>& keep) {
  std::vector<int> newid(x.num_cells(), -1);
  int next = 0;
  for (std::size_t i = 0; i < x.num_cells(); ++i)
    if (keep[i]) newid[i] = next++;
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(next));
  for (std::size_t i = 0; i < x.num_cells(); ++i) {
    if (!keep[i]) continue;
    const Cell& c = x.cells()[i];
    Cell d;
    d.dim = c.dim;
    d.label = c.label;
    for (int v : c.vertices) {
      if (newid[static_cast<std::size_t>(v)] < 0) throw Error("subcomplex selection not closed under faces");
      d.vertices.push_back(newid[static_cast<std::size_t>(v)]);
    }
    for (auto [f, s] : c.facets) {
      if (newid[static_cast<std::size_t>(f)] < 0) throw Error("subcomplex selection not closed under faces");
      d.facets.emplace_back(newid[static_cast<std::size_t>(f)], s);
    }
    out.push_back(std::move(d));
  }
  return LabeledComplex(x.num_variables(), x.variables(), std::move(out));
}

/// X_{<=b}: cells whose label divides b.
inline LabeledComplex restrict_leq(const LabeledComplex& x, const ExponentVector& b) {
  if (b.size() != x.num_variables()) throw Error("restrict_leq: degree has wrong length");
  std::vector<char> keep(x.num_cells());
  for (std::size_t i = 0; i < x.num_cells(); ++i) keep[i] = divides(x.cells()[i].label, b);
  return subcomplex(x, keep);
}

/// Full subcomplex on the given vertex ids: every cell all of whose
/// vertices are selected.
inline LabeledComplex full_subcomplex(const LabeledComplex& x, const std::vector<int>& vertex_ids) {
  std::vector<char> vsel(x.num_cells(), 0);
  for (int v : vertex_ids) vsel.at(static_cast<std::size_t>(v)) = 1;
  std::vector<char> keep(x.num_cells());
  for (std::size_t i = 0; i < x.num_cells(); ++i) {
    const auto& vs = x.cells()[i].vertices;
    keep[i] = std::all_of(vs.begin(), vs.end(), [&](int v) { return vsel[static_cast<std::size_t>(v)]; });
  }
  return subcomplex(x, keep);
}

/// Integer boundary matrix d: C_d -> C_{d-1} restricted to the selected
/// cells; d = 0 is the augmentation onto the empty cell.  Rows and columns
/// are positions among the selected cells of each dimension.
inline std::vector<std::vector<std::pair<int, long>>> boundary_columns(
    const LabeledComplex& x, int d, const std::vector<char>* keep = nullptr,
    const std::vector<int>* local_pos = nullptr) {
  std::vector<std::vector<std::pair<int, long>>> cols;
  for (int id : x.cells_of_dim(d)) {
    if (keep && !(*keep)[static_cast<std::size_t>(id)]) continue;
    std::vector<std::pair<int, long>> col;
    if (d == 0) {
      col.emplace_back(0, 1);
    } else {
      for (auto [f, s] : x.cell(id).facets) {
        if (keep && !(*keep)[static_cast<std::size_t>(f)]) continue;
        int row = local_pos ? (*local_pos)[static_cast<std::size_t>(f)] : x.position(f);
        col.emplace_back(row, s);
      }
      std::sort(col.begin(), col.end());
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

namespace detail {
template <class Field>
std::vector<long> reduced_homology_impl(const Field& k, const LabeledComplex& x,
                                        const std::vector<char>* keep) {
  std::vector<int> local_pos;
  std::vector<long> counts(static_cast<std::size_t>(x.dimension() + 2), 0);
  counts[0] = 1;  // the empty cell
  if (keep) {
    local_pos.assign(x.num_cells(), -1);
    for (int d = 0; d <= x.dimension(); ++d) {
      int p = 0;
      for (int id : x.cells_of_dim(d))
        if ((*keep)[static_cast<std::size_t>(id)]) local_pos[static_cast<std::size_t>(id)] = p++;
      counts[static_cast<std::size_t>(d + 1)] = p;
    }
  } else {
    for (int d = 0; d <= x.dimension(); ++d)
      counts[static_cast<std::size_t>(d + 1)] = static_cast<long>(x.cells_of_dim(d).size());
  }
  // ranks[d+1] = rank of the boundary out of dimension d
  std::vector<long> ranks(counts.size() + 1, 0);
  for (int d = 0; d <= x.dimension(); ++d) {
    if (counts[static_cast<std::size_t>(d + 1)] == 0) continue;
    auto cols = boundary_columns(x, d, keep, keep ? &local_pos : nullptr);
    ranks[static_cast<std::size_t>(d + 1)] = static_cast<long>(rank_of_integer_columns(k, cols));
  }
  std::vector<long> h(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) h[i] = counts[i] - ranks[i] - ranks[i + 1];
  return h;
}
}  // namespace detail

/// Reduced homology ranks, index 0 standing for dimension -1.
inline std::vector<long> reduced_homology_ranks(const LabeledComplex& x, const FieldChoice& field) {
  return std::visit([&](const auto& k) { return detail::reduced_homology_impl(k, x, nullptr); }, field);
}

/// Same, for the subcomplex selected by keep (closed under faces).
inline std::vector<long> reduced_homology_ranks(const LabeledComplex& x, const std::vector<char>& keep,
                                                const FieldChoice& field) {
  return std::visit([&](const auto& k) { return detail::reduced_homology_impl(k, x, &keep); }, field);
}

}  // namespace cellres
