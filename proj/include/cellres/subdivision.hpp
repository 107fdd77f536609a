#pragma once

// Polyhedral subdivisions of a lattice polytope by families of parallel
// integer hyperplanes {y : <c, y> = j}.  The polytope is conv(vertices); a
// top cell is the set of input points inside one closed slab per family.
// Lower faces come from facet search on each cell's point set, so every
// face is identified by the input points it contains.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cellres/complex.hpp"
#include "cellres/linalg.hpp"
#include "cellres/monomial.hpp"

namespace cellres {

class SubdivisionError : public Error {
 public:
  using Error::Error;
};

struct HyperplaneFamily {
  std::vector<int> functional;
  friend bool operator==(const HyperplaneFamily&, const HyperplaneFamily&) = default;
};

struct ArrangementSpec {
  std::vector<ExponentVector> vertices;
  std::vector<HyperplaneFamily> families;
  std::vector<std::string> variables;  // optional display names
};

namespace detail {

using Point = std::vector<long>;

inline Point diff(const Point& a, const Point& b) {
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

inline std::size_t affine_rank(const std::vector<Point>& pts, const std::vector<int>& idx) {
  if (idx.size() <= 1) return 0;
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 1; i < idx.size(); ++i)
    rows.push_back(diff(pts[static_cast<std::size_t>(idx[i])], pts[static_cast<std::size_t>(idx[0])]));
  return integer_rank(std::move(rows));
}

/// Greedy: walk idx in order, keep a point when it raises the affine rank.
inline std::vector<int> affine_basis(const std::vector<Point>& pts, const std::vector<int>& idx) {
  std::vector<int> basis;
  std::size_t r = 0;
  for (int p : idx) {
    if (basis.empty()) {
      basis.push_back(p);
      continue;
    }
    basis.push_back(p);
    std::size_t nr = affine_rank(pts, basis);
    if (nr > r) r = nr;
    else basis.pop_back();
  }
  return basis;
}

/// Greedy set of coordinate indices on which the columns of the frame
/// (given as vectors) stay independent.
inline std::vector<std::size_t> independent_rows(const std::vector<Point>& frame, std::size_t n) {
  std::vector<std::size_t> rows;
  std::vector<std::vector<long>> chosen;  // chosen rows restricted to frame columns
  for (std::size_t r = 0; r < n && rows.size() < frame.size(); ++r) {
    std::vector<long> row;
    for (const auto& v : frame) row.push_back(v[r]);
    chosen.push_back(row);
    if (integer_rank(chosen) == chosen.size()) rows.push_back(r);
    else chosen.pop_back();
  }
  if (rows.size() != frame.size()) throw Error("internal: degenerate orientation frame");
  return rows;
}

/// Integer normal (cofactor vector) of the hyperplane through k points of
/// Z^k; zero when the points are affinely dependent.
inline std::vector<long> hyperplane_normal(const std::vector<std::vector<long>>& q) {
  const std::size_t k = q.size();
  std::vector<std::vector<long>> d;
  for (std::size_t i = 1; i < k; ++i) d.push_back(diff(q[i], q[0]));
  std::vector<long> normal(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<long>> minor;
    for (const auto& row : d) {
      std::vector<long> r;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) r.push_back(row[j]);
      minor.push_back(std::move(r));
    }
    // cofactor expansion; k is small and entries are tiny
    std::function<long(const std::vector<std::vector<long>>&)> det =
        [&](const std::vector<std::vector<long>>& m) -> long {
      if (m.empty()) return 1;
      if (m.size() == 1) return m[0][0];
      long s = 0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<long>> sub;
        for (std::size_t i = 1; i < m.size(); ++i) {
          std::vector<long> r;
          for (std::size_t l = 0; l < m.size(); ++l)
            if (l != j) r.push_back(m[i][l]);
          sub.push_back(std::move(r));
        }
        long t = m[0][j] * det(sub);
        s += (j % 2 == 0) ? t : -t;
      }
      return s;
    };
    long v = det(minor);
    normal[c] = (c % 2 == 0) ? v : -v;
  }
  return normal;
}

inline long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Projection {
  std::vector<std::size_t> rows;
  int origin;
};

/// Coordinates on which the affine hull of idx projects injectively.
inline Projection projection_for(const std::vector<Point>& pts, const std::vector<int>& idx) {
  auto basis = affine_basis(pts, idx);
  std::vector<Point> frame;
  for (std::size_t i = 1; i < basis.size(); ++i)
    frame.push_back(diff(pts[static_cast<std::size_t>(basis[i])], pts[static_cast<std::size_t>(basis[0])]));
  return {independent_rows(frame, pts[0].size()), basis[0]};
}

inline std::vector<long> project(const std::vector<Point>& pts, const Projection& pr, int p) {
  std::vector<long> q;
  for (auto r : pr.rows) q.push_back(pts[static_cast<std::size_t>(p)][r] - pts[static_cast<std::size_t>(pr.origin)][r]);
  return q;
}

/// Whether the point set T (inside aff(S), one dimension lower) lies on a
/// supporting hyperplane of conv(S).
inline bool on_supporting_hyperplane(const std::vector<Point>& pts, const std::vector<int>& s,
                                     const Projection& pr, const std::vector<int>& t) {
  auto basis = affine_basis(pts, t);
  if (basis.size() != pr.rows.size()) return false;
  std::vector<std::vector<long>> q;
  for (int b : basis) q.push_back(project(pts, pr, b));
  auto normal = hyperplane_normal(q);
  long base = dot(normal, q[0]);
  bool pos = false, neg = false;
  for (int p : s) {
    long v = dot(normal, project(pts, pr, p)) - base;
    pos |= v > 0;
    neg |= v < 0;
  }
  return !(pos && neg);
}

struct FaceData {
  int dim = 0;
  std::vector<std::vector<int>> facets;
};

class FaceEnumerator {
 public:
  explicit FaceEnumerator(const std::vector<Point>& pts) : pts_(pts) {}

  const FaceData& faces(const std::vector<int>& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    FaceData data;
    data.dim = static_cast<int>(affine_rank(pts_, s));
    if (data.dim == 0) {
      if (s.size() != 1) throw SubdivisionError("duplicate points in a 0-cell");
    } else if (data.dim == 1) {
      auto pr = projection_for(pts_, s);
      int lo = s[0], hi = s[0];
      long vlo = project(pts_, pr, lo)[0], vhi = vlo;
      for (int p : s) {
        long v = project(pts_, pr, p)[0];
        if (v < vlo) vlo = v, lo = p;
        if (v > vhi) vhi = v, hi = p;
      }
      data.facets = {{std::min(lo, hi)}, {std::max(lo, hi)}};
    } else {
      data.facets = facet_sets(s, static_cast<std::size_t>(data.dim));
    }
    if (data.dim > 0) {
      std::set<int> un;
      for (const auto& f : data.facets) un.insert(f.begin(), f.end());
      if (un != std::set<int>(s.begin(), s.end()))
        throw SubdivisionError("a cell contains an input point that is not on its boundary; "
                               "the hyperplanes do not cut a vertex-supported subdivision");
    }
    auto [pos, ok] = memo_.emplace(s, std::move(data));
    for (const auto& f : pos->second.facets) faces(f);
    return memo_.at(s);
  }

  const std::map<std::vector<int>, FaceData>& all() const { return memo_; }

 private:
  std::vector<std::vector<int>> facet_sets(const std::vector<int>& s, std::size_t k) {
    auto pr = projection_for(pts_, s);
    std::vector<std::vector<long>> q;
    for (int p : s) q.push_back(project(pts_, pr, p));
    std::set<std::vector<int>> found;
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t depth) {
      if (depth == k) {
        for (const auto& f : found) {
          bool inside = true;
          for (auto i : pick)
            if (!std::binary_search(f.begin(), f.end(), s[i])) { inside = false; break; }
          if (inside) return;
        }
        std::vector<std::vector<long>> sub;
        for (auto i : pick) sub.push_back(q[i]);
        auto normal = hyperplane_normal(sub);
        if (std::all_of(normal.begin(), normal.end(), [](long v) { return v == 0; })) return;
        long base = dot(normal, sub[0]);
        bool pos = false, neg = false;
        std::vector<int> zero;
        for (std::size_t i = 0; i < s.size(); ++i) {
          long v = dot(normal, q[i]) - base;
          if (v > 0) pos = true;
          else if (v < 0) neg = true;
          else zero.push_back(s[i]);
          if (pos && neg) return;
        }
        found.insert(zero);
        return;
      }
      for (std::size_t i = from; i + (k - depth) <= s.size(); ++i) {
        pick[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
    return {found.begin(), found.end()};
  }

  const std::vector<Point>& pts_;
  std::map<std::vector<int>, FaceData> memo_;
};

/// sign(G, C) under the outward-normal-last convention; cells are given
/// as point-index lists in canonical vertex order.
inline int orientation_sign(const std::vector<Point>& pts, const std::vector<int>& c,
                            const std::vector<int>& g) {
  auto bc = affine_basis(pts, c);
  auto bg = affine_basis(pts, g);
  const std::size_t k = bc.size() - 1;
  std::vector<Point> fc, fg;
  for (std::size_t i = 1; i < bc.size(); ++i)
    fc.push_back(diff(pts[static_cast<std::size_t>(bc[i])], pts[static_cast<std::size_t>(bc[0])]));
  for (std::size_t i = 1; i < bg.size(); ++i)
    fg.push_back(diff(pts[static_cast<std::size_t>(bg[i])], pts[static_cast<std::size_t>(bg[0])]));
  if (fg.size() + 1 != k) throw Error("internal: facet dimension mismatch in orientation");
  int outside = -1;
  for (int p : c)
    if (!std::binary_search(g.begin(), g.end(), p)) { outside = p; break; }
  if (outside < 0) throw Error("internal: facet equals cell in orientation");
  Point w = diff(pts[static_cast<std::size_t>(outside)], pts[static_cast<std::size_t>(bg[0])]);
  for (auto& v : w) v = -v;
  fg.push_back(w);
  auto rows = independent_rows(fc, pts[0].size());
  auto restricted = [&](const std::vector<Point>& frame) {
    std::vector<std::vector<long>> m(k, std::vector<long>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = frame[j][rows[i]];
    return m;
  };
  int s1 = determinant_sign(restricted(fg));
  int s2 = determinant_sign(restricted(fc));
  if (s1 == 0 || s2 == 0) throw Error("internal: degenerate orientation determinant");
  return s1 * s2;
}

}  // namespace detail

/// sign(G, C) for cells given by their canonically ordered vertex points.
inline int incidence_sign(const std::vector<ExponentVector>& cell, const std::vector<ExponentVector>& facet) {
  std::vector<detail::Point> pts;
  std::vector<int> c, g;
  for (const auto& v : cell) {
    c.push_back(static_cast<int>(pts.size()));
    pts.emplace_back(v.begin(), v.end());
  }
  for (const auto& v : facet) {
    auto it = std::find(cell.begin(), cell.end(), v);
    if (it == cell.end()) throw Error("incidence_sign: facet vertex not in cell");
    g.push_back(static_cast<int>(it - cell.begin()));
  }
  std::sort(g.begin(), g.end());
  return detail::orientation_sign(pts, c, g);
}

/// Builds the labeled complex of the subdivision.  Vertices are the input
/// points in MonomialOrder; each label is the lcm of the cell's points.
inline LabeledComplex build_arrangement_complex(const ArrangementSpec& spec) {
  using namespace detail;
  if (spec.vertices.empty()) throw SubdivisionError("arrangement without vertices");
  const std::size_t n = spec.vertices[0].size();
  std::vector<ExponentVector> sorted = spec.vertices;
  for (const auto& v : sorted)
    if (v.size() != n) throw SubdivisionError("vertex points of different lengths");
  std::sort(sorted.begin(), sorted.end(), MonomialOrder{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Point> pts;
  for (const auto& v : sorted) pts.emplace_back(v.begin(), v.end());
  const int np = static_cast<int>(pts.size());

  std::vector<int> all(static_cast<std::size_t>(np));
  for (int i = 0; i < np; ++i) all[static_cast<std::size_t>(i)] = i;
  const std::size_t D = affine_rank(pts, all);

  struct Fam {
    std::vector<long> c;
    std::vector<long> val;
    long lo, hi;
  };
  std::vector<Fam> fams;
  std::set<std::vector<long>> seen;
  for (const auto& f : spec.families) {
    if (f.functional.size() != n) throw SubdivisionError("functional has wrong length");
    std::vector<long> c(f.functional.begin(), f.functional.end());
    if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; }))
      throw SubdivisionError("zero functional");
    if (!seen.insert(c).second) continue;
    Fam fam{c, {}, 0, 0};
    for (const auto& p : pts) fam.val.push_back(dot(c, p));
    fam.lo = *std::min_element(fam.val.begin(), fam.val.end());
    fam.hi = *std::max_element(fam.val.begin(), fam.val.end());
    if (fam.lo != fam.hi) fams.push_back(std::move(fam));
  }

  // top cells: one closed slab [j, j+1] per family
  std::set<std::vector<int>> tops;
  std::function<void(std::size_t, const std::vector<int>&)> rec = [&](std::size_t fi,
                                                                       const std::vector<int>& w) {
    if (fi == fams.size()) {
      tops.insert(w);
      return;
    }
    const Fam& f = fams[fi];
    for (long j = f.lo; j < f.hi; ++j) {
      std::vector<int> w2;
      for (int p : w) {
        long v = f.val[static_cast<std::size_t>(p)];
        if (v >= j && v <= j + 1) w2.push_back(p);
      }
      if (w2.size() >= D + 1 && affine_rank(pts, w2) == D) rec(fi + 1, w2);
    }
  };
  rec(0, all);

  FaceEnumerator fe(pts);
  for (const auto& t : tops) fe.faces(t);

  // vertex-support checks on the top cells
  if (D > 0) {
    auto prP = projection_for(pts, all);
    std::map<std::vector<int>, int> share;
    for (const auto& t : tops)
      for (const auto& f : fe.all().at(t).facets) share[f]++;
    for (const auto& [f, count] : share) {
      bool boundary = on_supporting_hyperplane(pts, all, prP, f);
      bool on_family = false;
      for (const auto& fam : fams) {
        long v0 = fam.val[static_cast<std::size_t>(f[0])];
        if (std::all_of(f.begin(), f.end(), [&](int p) { return fam.val[static_cast<std::size_t>(p)] == v0; })) {
          on_family = true;
          break;
        }
      }
      if (!boundary && !on_family)
        throw SubdivisionError("a top cell has a facet on no hyperplane of the arrangement; "
                               "its slab region has vertices outside the input points");
      if (count != (boundary ? 1 : 2))
        throw SubdivisionError("a codimension-1 face is shared by " + std::to_string(count) +
                               " top cells; the cells do not tile the polytope");
    }
  }
  for (int p = 0; p < np; ++p)
    if (!fe.all().count({p}))
      throw SubdivisionError("input point " + to_string(sorted[static_cast<std::size_t>(p)]) +
                             " is not a vertex of the subdivision");

  // assemble cells in canonical (dim, vertex list) order; vertex ids equal
  // point indices because points are already in MonomialOrder
  std::vector<std::pair<int, std::vector<int>>> order;
  for (const auto& [s, data] : fe.all()) order.emplace_back(data.dim, s);
  std::sort(order.begin(), order.end());
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < order.size(); ++i) id[order[i].second] = static_cast<int>(i);
  std::vector<Cell> cells;
  cells.reserve(order.size());
  for (const auto& [dim, s] : order) {
    Cell c;
    c.dim = dim;
    c.vertices = s;
    c.label = ExponentVector(n);
    for (int p : s) c.label = lcm(c.label, sorted[static_cast<std::size_t>(p)]);
    if (dim > 0)
      for (const auto& f : fe.all().at(s).facets)
        c.facets.emplace_back(id.at(f), orientation_sign(pts, s, f));
    cells.push_back(std::move(c));
  }
  return LabeledComplex(n, spec.variables.empty() ? default_variable_names(n) : spec.variables,
                        std::move(cells));
}

/// Full simplex on the given labels with simplicial signs (-1)^k for the
/// facet omitting the k-th vertex.  Labels are put in MonomialOrder first.
inline LabeledComplex simplex_complex(std::vector<ExponentVector> labels,
                                      std::vector<std::string> variables = {}) {
  if (labels.empty()) throw Error("simplex on no vertices");
  const std::size_t n = labels[0].size();
  std::sort(labels.begin(), labels.end(), MonomialOrder{});
  const std::size_t g = labels.size();
  if (g > 20) throw InputError("simplex too large");
  // subsets ordered by (size, sorted member list)
  std::vector<std::vector<int>> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << g); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < g; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(static_cast<int>(i));
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < subsets.size(); ++i) id[subsets[i]] = static_cast<int>(i);
  std::vector<Cell> cells;
  cells.reserve(subsets.size());
  for (const auto& s : subsets) {
    Cell c;
    c.dim = static_cast<int>(s.size()) - 1;
    c.vertices = s;
    c.label = ExponentVector(n);
    for (int v : s) c.label = lcm(c.label, labels[static_cast<std::size_t>(v)]);
    if (s.size() > 1)
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<int> f = s;
        f.erase(f.begin() + static_cast<long>(k));
        c.facets.emplace_back(id.at(f), k % 2 == 0 ? 1 : -1);
      }
    cells.push_back(std::move(c));
  }
  return LabeledComplex(n, variables.empty() ? default_variable_names(n) : std::move(variables),
                        std::move(cells));
}

}  // namespace cellres
