#pragma once

// Free complexes of Z^n-graded S-modules and the operations on them:
// cellular complexes, acyclicity, minimality, minimalization, Betti numbers.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "cellres/complex.hpp"
#include "cellres/field.hpp"
#include "cellres/linalg.hpp"
#include "cellres/monomial.hpp"
#include "cellres/subdivision.hpp"

namespace cellres {

/// Free complex 0 <- F_0 <- F_1 <- ... with F_0 = S.  Differential entry
/// (r, c) of d_i carries the scalar coefficient; its monomial is implied by
/// homogeneity: x^(deg col - deg row).
template <class Field>
struct FreeComplex {
  using Element = typename Field::Element;
  using Column = SparseColumn<Element>;

  Field field;
  std::vector<std::vector<ExponentVector>> modules;      // generator degrees
  std::vector<std::vector<Column>> differentials;        // differentials[i-1] = d_i

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& m : modules) r.push_back(m.size());
    return r;
  }
  /// Shape of d_i as (rows, cols).
  std::pair<std::size_t, std::size_t> shape(std::size_t i) const {
    return {modules.at(i - 1).size(), modules.at(i).size()};
  }
};

using BettiTable = std::vector<std::size_t>;

/// Cellular free complex: module i has one generator per (i-1)-cell, in id
/// order within each dimension.
template <class Field>
FreeComplex<Field> free_complex_from_labeled(const LabeledComplex& x, const Field& k = Field{}) {
  FreeComplex<Field> f{k, {}, {}};
  f.modules.push_back({ExponentVector(x.num_variables())});
  for (int d = 0; d <= x.dimension(); ++d) {
    std::vector<ExponentVector> degs;
    for (int id : x.cells_of_dim(d)) degs.push_back(x.cell(id).label);
    f.modules.push_back(std::move(degs));
    std::vector<typename FreeComplex<Field>::Column> cols;
    for (auto& c : boundary_columns(x, d)) {
      typename FreeComplex<Field>::Column col;
      for (auto [r, v] : c) col.emplace_back(r, k.from_int(v));
      cols.push_back(std::move(col));
    }
    f.differentials.push_back(std::move(cols));
  }
  return f;
}

/// True iff no nonzero entry of any differential joins generators of equal
/// degree (such an entry would be a unit).
template <class Field>
bool is_minimal(const FreeComplex<Field>& f) {
  for (std::size_t i = 1; i <= f.length(); ++i)
    for (std::size_t c = 0; c < f.differentials[i - 1].size(); ++c)
      for (const auto& [r, v] : f.differentials[i - 1][c])
        if (!Field::is_zero(v) && f.modules[i - 1][static_cast<std::size_t>(r)] == f.modules[i][c])
          return false;
  return true;
}

/// Whether consecutive differentials compose to zero.
template <class Field>
bool composes_to_zero(const FreeComplex<Field>& f) {
  const auto& k = f.field;
  for (std::size_t i = 2; i <= f.length(); ++i) {
    const auto& a = f.differentials[i - 2];
    const auto& b = f.differentials[i - 1];
    for (const auto& col : b) {
      std::map<int, typename Field::Element> acc;
      for (const auto& [mid, v] : col)
        for (const auto& [r, w] : a[static_cast<std::size_t>(mid)]) {
          auto it = acc.find(r);
          if (it == acc.end()) acc.emplace(r, k.mul(v, w));
          else it->second = k.add(it->second, k.mul(v, w));
        }
      for (const auto& [r, v] : acc)
        if (!Field::is_zero(v)) return false;
    }
  }
  return true;
}

namespace detail {

/// Working copy of a free complex for Gaussian cancellation.
template <class Field>
class Cancellation {
 public:
  using E = typename Field::Element;

  explicit Cancellation(const FreeComplex<Field>& f) : k_(f.field), degs_(f.modules) {
    alive_.resize(degs_.size());
    for (std::size_t i = 0; i < degs_.size(); ++i) alive_[i].assign(degs_[i].size(), 1);
    cols_.resize(f.differentials.size() + 1);
    rows_.resize(f.differentials.size() + 1);
    for (std::size_t i = 1; i <= f.differentials.size(); ++i) {
      const auto& d = f.differentials[i - 1];
      cols_[i].resize(d.size());
      rows_[i].resize(degs_[i - 1].size());
      for (std::size_t c = 0; c < d.size(); ++c)
        for (const auto& [r, v] : d[c])
          if (!Field::is_zero(v)) {
            cols_[i][c].emplace(r, v);
            rows_[i][static_cast<std::size_t>(r)].insert(static_cast<int>(c));
          }
    }
  }

  FreeComplex<Field> run() {
    for (std::size_t i = 1; i < cols_.size(); ++i) {
      units_.clear();
      for (std::size_t c = 0; c < cols_[i].size(); ++c)
        for (const auto& [r, v] : cols_[i][c]) note(i, r, static_cast<int>(c));
      while (!units_.empty()) {
        auto [r, c] = *units_.begin();
        cancel(i, r, c);
      }
    }
    return collect();
  }

 private:
  bool unit_position(std::size_t i, int r, int c) const {
    return degs_[i - 1][static_cast<std::size_t>(r)] == degs_[i][static_cast<std::size_t>(c)];
  }
  void note(std::size_t i, int r, int c) {
    if (unit_position(i, r, c)) units_.insert({r, c});
  }

  void set_entry(std::size_t i, int r, int c, E v) {
    auto& col = cols_[i][static_cast<std::size_t>(c)];
    if (Field::is_zero(v)) {
      if (col.erase(r)) {
        rows_[i][static_cast<std::size_t>(r)].erase(c);
        units_.erase({r, c});
      }
      return;
    }
    auto [it, inserted] = col.insert_or_assign(r, std::move(v));
    if (inserted) {
      rows_[i][static_cast<std::size_t>(r)].insert(c);
      note(i, r, c);
    }
  }

  void cancel(std::size_t i, int r, int c) {
    auto& cc = cols_[i][static_cast<std::size_t>(c)];
    const E pinv = k_.inv(cc.at(r));
    // d_i <- d_i - col_c * row_r / p on the surviving rows and columns
    std::vector<std::pair<int, E>> colc;
    for (const auto& [rr, v] : cc)
      if (rr != r) colc.emplace_back(rr, v);
    std::vector<std::pair<int, E>> rowr;
    for (int c2 : rows_[i][static_cast<std::size_t>(r)])
      if (c2 != c) rowr.emplace_back(c2, cols_[i][static_cast<std::size_t>(c2)].at(r));
    for (const auto& [c2, w] : rowr) {
      E f = k_.mul(w, pinv);
      for (const auto& [r2, v] : colc) {
        auto& col2 = cols_[i][static_cast<std::size_t>(c2)];
        auto it = col2.find(r2);
        E cur = it == col2.end() ? k_.zero() : it->second;
        set_entry(i, r2, c2, k_.sub(cur, k_.mul(v, f)));
      }
    }
    // drop row r and column c of d_i
    for (const auto& [c2, w] : rowr) {
      cols_[i][static_cast<std::size_t>(c2)].erase(r);
      units_.erase({r, c2});
    }
    for (const auto& [rr, v] : cc) {
      rows_[i][static_cast<std::size_t>(rr)].erase(c);
      units_.erase({rr, c});
    }
    cc.clear();
    rows_[i][static_cast<std::size_t>(r)].clear();
    // generator c of F_i disappears from d_{i+1} (its row)
    if (i + 1 < cols_.size()) {
      for (int c2 : rows_[i + 1][static_cast<std::size_t>(c)]) cols_[i + 1][static_cast<std::size_t>(c2)].erase(c);
      rows_[i + 1][static_cast<std::size_t>(c)].clear();
    }
    // generator r of F_{i-1} disappears from d_{i-1} (its column)
    if (i >= 2) {
      for (const auto& [rr, v] : cols_[i - 1][static_cast<std::size_t>(r)])
        rows_[i - 1][static_cast<std::size_t>(rr)].erase(r);
      cols_[i - 1][static_cast<std::size_t>(r)].clear();
    }
    alive_[i][static_cast<std::size_t>(c)] = 0;
    alive_[i - 1][static_cast<std::size_t>(r)] = 0;
  }

  FreeComplex<Field> collect() const {
    FreeComplex<Field> out{k_, {}, {}};
    std::vector<std::vector<int>> newpos(degs_.size());
    for (std::size_t i = 0; i < degs_.size(); ++i) {
      newpos[i].assign(degs_[i].size(), -1);
      std::vector<ExponentVector> m;
      for (std::size_t g = 0; g < degs_[i].size(); ++g)
        if (alive_[i][g]) {
          newpos[i][g] = static_cast<int>(m.size());
          m.push_back(degs_[i][g]);
        }
      out.modules.push_back(std::move(m));
    }
    for (std::size_t i = 1; i < cols_.size(); ++i) {
      std::vector<SparseColumn<E>> d;
      for (std::size_t c = 0; c < cols_[i].size(); ++c) {
        if (!alive_[i][c]) continue;
        SparseColumn<E> col;
        for (const auto& [r, v] : cols_[i][c]) col.emplace_back(newpos[i - 1][static_cast<std::size_t>(r)], v);
        d.push_back(std::move(col));
      }
      out.differentials.push_back(std::move(d));
    }
    while (out.modules.size() > 1 && out.modules.back().empty()) {
      out.modules.pop_back();
      out.differentials.pop_back();
    }
    return out;
  }

  Field k_;
  std::vector<std::vector<ExponentVector>> degs_;
  std::vector<std::vector<char>> alive_;
  std::vector<std::vector<std::map<int, E>>> cols_;   // [i][col] row -> value
  std::vector<std::vector<std::set<int>>> rows_;      // [i][row] -> cols
  std::set<std::pair<int, int>> units_;               // unit positions of the current d_i
};

}  // namespace detail

/// Cancels unit entries, always the first one in row-major order of the
/// lowest differential that still has one, until the complex is minimal.
template <class Field>
FreeComplex<Field> minimalize(const FreeComplex<Field>& f) {
  return detail::Cancellation<Field>(f).run();
}

/// Joins of all non-empty sets of vertex labels.
inline std::vector<ExponentVector> lcm_lattice(const LabeledComplex& x) {
  std::vector<ExponentVector> gens;
  for (int v : x.vertices()) gens.push_back(x.cell(v).label);
  std::sort(gens.begin(), gens.end(), MonomialOrder{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::unordered_set<ExponentVector> seen(gens.begin(), gens.end());
  std::vector<ExponentVector> out = gens;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      auto l = lcm(out[i], g);
      if (seen.insert(l).second) out.push_back(l);
    }
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

struct ResolutionCheck {
  bool acyclic = true;
  std::optional<ExponentVector> failing_degree;
  std::vector<long> failing_homology;  // reduced ranks from dimension -1
  std::size_t degrees_checked = 0;
};

/// Acyclicity of X_{<=b} for every b in the lcm lattice.
inline ResolutionCheck check_resolution(const LabeledComplex& x, const FieldChoice& field) {
  ResolutionCheck out;
  std::vector<char> keep(x.num_cells());
  for (const auto& b : lcm_lattice(x)) {
    for (std::size_t i = 0; i < x.num_cells(); ++i) keep[i] = divides(x.cells()[i].label, b);
    auto h = reduced_homology_ranks(x, keep, field);
    ++out.degrees_checked;
    if (std::any_of(h.begin(), h.end(), [](long v) { return v != 0; })) {
      out.acyclic = false;
      out.failing_degree = b;
      out.failing_homology = h;
      return out;
    }
  }
  return out;
}

inline bool is_resolution(const LabeledComplex& x, const FieldChoice& field) {
  return check_resolution(x, field).acyclic;
}

inline constexpr std::size_t kTaylorConstructionLimit = 16;
inline constexpr std::size_t kBettiGeneratorLimit = 12;

/// Full simplex on the minimal generators of I.
inline LabeledComplex taylor_complex(const MonomialIdeal& ideal,
                                     std::vector<std::string> variables = {}) {
  if (ideal.is_zero()) throw InputError("Taylor complex of the zero ideal");
  if (ideal.size() > kTaylorConstructionLimit)
    throw InputError("Taylor complex limited to " + std::to_string(kTaylorConstructionLimit) +
                     " generators (got " + std::to_string(ideal.size()) + ")");
  return simplex_complex(ideal.generators(), std::move(variables));
}

template <class Field>
BettiTable betti_of(const FreeComplex<Field>& f) {
  auto r = f.ranks();
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

template <class Field>
FreeComplex<Field> minimal_resolution(const MonomialIdeal& ideal, const Field& k = Field{}) {
  if (ideal.size() > kBettiGeneratorLimit)
    throw InputError("Betti computation via the Taylor complex is limited to " +
                     std::to_string(kBettiGeneratorLimit) + " generators (got " +
                     std::to_string(ideal.size()) + ")");
  return minimalize(free_complex_from_labeled(taylor_complex(ideal), k));
}

/// Betti numbers of S/I, from the minimalized Taylor resolution.
inline BettiTable betti(const MonomialIdeal& ideal, const FieldChoice& field = Rationals{}) {
  return std::visit([&](const auto& k) { return betti_of(minimal_resolution(ideal, k)); }, field);
}

/// Betti numbers of the minimalization of the cellular complex of X.
inline BettiTable minimal_betti(const LabeledComplex& x, const FieldChoice& field = Rationals{}) {
  return std::visit(
      [&](const auto& k) { return betti_of(minimalize(free_complex_from_labeled(x, k))); }, field);
}

/// Degrees of the minimal generators of the t-th syzygy module of S/I
/// (generator degrees of F_t in the minimal resolution).
inline std::vector<ExponentVector> syzygy_generators(const MonomialIdeal& ideal, std::size_t t,
                                                     const FieldChoice& field = Rationals{}) {
  return std::visit(
      [&](const auto& k) {
        auto f = minimal_resolution(ideal, k);
        std::vector<ExponentVector> out;
        if (t < f.modules.size()) out = f.modules[t];
        std::sort(out.begin(), out.end(), MonomialOrder{});
        return out;
      },
      field);
}

/// The monomial ideal generated by the vertex labels of X.
inline MonomialIdeal vertex_ideal(const LabeledComplex& x) {
  std::vector<ExponentVector> g;
  for (int v : x.vertices()) g.push_back(x.cell(v).label);
  return MonomialIdeal(x.num_variables(), std::move(g));
}

}  // namespace cellres
