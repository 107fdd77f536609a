#pragma once

// Constructors for the indexed families of labeled complexes, and a Family
// object that builds members, consecutive morphisms and composites on demand.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "cellres/complex.hpp"
#include "cellres/monomial.hpp"
#include "cellres/morphism.hpp"
#include "cellres/resolution.hpp"
#include "cellres/subdivision.hpp"

namespace cellres {

/// Simple graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted

  friend bool operator==(const Graph&, const Graph&) = default;
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw InputError("graph with negative vertex count");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("graph edge endpoint out of range");
    if (a == b) throw InputError("graph has a loop at vertex " + std::to_string(a + 1));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InputError("graph has a repeated edge");
  return Graph{n, std::move(edges)};
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

inline Graph cycle_graph(int n) {
  auto g = path_graph(n).edges;
  if (n >= 3) g.emplace_back(0, n - 1);
  return make_graph(n, g);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<int> comp(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) comp[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int a) {
    while (comp[static_cast<std::size_t>(a)] != a) a = comp[static_cast<std::size_t>(a)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(a)])];
    return a;
  };
  for (auto [a, b] : g.edges) comp[static_cast<std::size_t>(find(a))] = find(b);
  for (int i = 1; i < g.n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

/// I_G = (x_i x_j : ij an edge).
inline MonomialIdeal graph_to_edge_ideal(const Graph& g) {
  std::vector<ExponentVector> gens;
  for (auto [a, b] : g.edges) {
    ExponentVector m(static_cast<std::size_t>(g.n));
    m[static_cast<std::size_t>(a)] = 1;
    m[static_cast<std::size_t>(b)] = 1;
    gens.push_back(m);
  }
  return MonomialIdeal(static_cast<std::size_t>(g.n), std::move(gens));
}

inline std::vector<HyperplaneFamily> coordinate_families(std::size_t n) {
  std::vector<HyperplaneFamily> f;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    f.push_back({c});
  }
  return f;
}

/// X_n^k: the degree-k simplex cut by all coordinate hyperplanes y_i = j.
inline LabeledComplex maximal_power_complex(int n, int k) {
  if (n < 1 || k < 1) throw InputError("maximal_power_complex needs n >= 1 and k >= 1");
  ArrangementSpec spec;
  spec.vertices = monomials_of_degree(static_cast<std::size_t>(n), k);
  spec.families = coordinate_families(static_cast<std::size_t>(n));
  return build_arrangement_complex(spec);
}

/// Default pairing {x_1,x_2},{x_3,x_4},... for n pairs.
inline std::vector<std::pair<int, int>> default_pairing(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(2 * i, 2 * i + 1);
  return p;
}

inline std::size_t pairing_variables(const std::vector<std::pair<int, int>>& pairing) {
  int mx = -1;
  for (auto [a, b] : pairing) mx = std::max({mx, a, b});
  return static_cast<std::size_t>(mx + 1);
}

/// Generators of I_P^p for I_P = prod over pairs of (x_a, x_b).
inline std::vector<ExponentVector> cube_vertices(const std::vector<std::pair<int, int>>& pairing, int p,
                                                 std::size_t nvars) {
  std::vector<ExponentVector> out{ExponentVector(nvars)};
  for (auto [a, b] : pairing) {
    std::vector<ExponentVector> next;
    for (const auto& v : out)
      for (int e = 0; e <= p; ++e) {
        auto w = v;
        w[static_cast<std::size_t>(a)] = e;
        w[static_cast<std::size_t>(b)] = p - e;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

/// C_n^p: the n-cube of I_P^p subdivided into p^n small cubes.
inline LabeledComplex cube_complex(const std::vector<std::pair<int, int>>& pairing, int p) {
  if (pairing.empty() || p < 1) throw InputError("cube_complex needs a non-empty pairing and p >= 1");
  std::set<int> used;
  for (auto [a, b] : pairing) {
    if (a < 0 || b < 0) throw InputError("negative variable index in pairing");
    if (a == b || !used.insert(a).second || !used.insert(b).second)
      throw InputError("pairs of the cube pairing must be disjoint");
  }
  const std::size_t nvars = pairing_variables(pairing);
  ArrangementSpec spec;
  spec.vertices = cube_vertices(pairing, p, nvars);
  spec.families = coordinate_families(nvars);
  return build_arrangement_complex(spec);
}

/// Degree-d monomials dividing b.
inline MonomialIdeal bounded_ideal(int n, int d, const ExponentVector& b) {
  std::vector<ExponentVector> g;
  for (const auto& m : monomials_of_degree(static_cast<std::size_t>(n), d))
    if (divides(m, b)) g.push_back(m);
  return MonomialIdeal(static_cast<std::size_t>(n), std::move(g));
}

/// X_n^{md} restricted to labels dividing m*b.
inline LabeledComplex bounded_power_complex(int n, int d, const ExponentVector& b, int m) {
  if (b.size() != static_cast<std::size_t>(n)) throw InputError("bound has wrong length");
  if (bounded_ideal(n, d, b).is_zero()) throw InputError("no degree-d monomial divides the bound");
  if (m < 1) throw InputError("bounded_power_complex needs m >= 1");
  ExponentVector mb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) mb[static_cast<std::size_t>(i)] = m * b[static_cast<std::size_t>(i)];
  return restrict_leq(maximal_power_complex(n, m * d), mb);
}

enum class PathVariant { Y, Z, Zbar };

/// Functionals sum_{k >= 0, i - step*k >= 1} y_{i - step*k} for i = 1..n.
inline std::vector<HyperplaneFamily> stepped_sum_families(std::size_t n, std::size_t step) {
  std::vector<HyperplaneFamily> f;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<int> c(n, 0);
    for (std::size_t j = i; j >= 1; j -= step) {
      c[j - 1] = 1;
      if (j <= step) break;
    }
    f.push_back({c});
  }
  return f;
}

inline std::vector<HyperplaneFamily> path_families(PathVariant v, std::size_t n) {
  auto f = coordinate_families(n);
  if (v != PathVariant::Y) {
    auto h = stepped_sum_families(n, 2);
    f.insert(f.end(), h.begin(), h.end());
  }
  if (v == PathVariant::Zbar) {
    auto h = stepped_sum_families(n, 3);
    f.insert(f.end(), h.begin(), h.end());
  }
  std::vector<HyperplaneFamily> out;
  for (auto& x : f)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

/// Y_n^d, Z_n^d or Zbar_n^d: the Newton polytope of I_{P_n}^d cut by the
/// variant's hyperplanes.
inline LabeledComplex path_complex(PathVariant v, int n, int d) {
  if (n < 2 || d < 1) throw InputError("path_complex needs n >= 2 and d >= 1");
  ArrangementSpec spec;
  spec.vertices = ideal_power_generators(graph_to_edge_ideal(path_graph(n)), d).generators();
  spec.families = path_families(v, static_cast<std::size_t>(n));
  return build_arrangement_complex(spec);
}

/// Full subcomplex on the vertices labeled by generators of I.
inline LabeledComplex equigenerated_subcomplex(const LabeledComplex& x, const MonomialIdeal& ideal) {
  std::map<ExponentVector, int> by_label;
  for (int v : x.vertices()) by_label.emplace(x.cell(v).label, v);
  std::vector<int> keep;
  for (const auto& g : ideal.generators()) {
    auto it = by_label.find(g);
    if (it == by_label.end()) throw InputError("generator " + to_string(g, x.variables()) + " is not a vertex label");
    keep.push_back(it->second);
  }
  return full_subcomplex(x, keep);
}

inline LabeledComplex taylor_powers_complex(const MonomialIdeal& ideal, int k) {
  return taylor_complex(ideal_power_generators(ideal, k));
}

/// Full n-simplex on x_1, ..., x_{n+1}.
inline LabeledComplex simplex_growing_complex(int n) {
  if (n < 0) throw InputError("simplex_growing_complex needs n >= 0");
  std::vector<ExponentVector> labels;
  for (int i = 0; i <= n; ++i) labels.push_back(unit_vector(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(i)));
  return simplex_complex(labels);
}

enum class FamilyKind { Maximal, Cube, Bounded, PathY, PathZ, PathZbar, TaylorPowers, EdgeIdeal, SimplexGrowing };

inline std::string kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Maximal: return "maximal";
    case FamilyKind::Cube: return "cube";
    case FamilyKind::Bounded: return "bounded";
    case FamilyKind::PathY: return "path_Y";
    case FamilyKind::PathZ: return "path_Z";
    case FamilyKind::PathZbar: return "path_Zbar";
    case FamilyKind::TaylorPowers: return "taylor_powers";
    case FamilyKind::EdgeIdeal: return "edge_ideal";
    case FamilyKind::SimplexGrowing: return "simplex_growing";
  }
  return "?";
}

inline FamilyKind parse_kind(const std::string& s) {
  static const std::map<std::string, FamilyKind> names = {
      {"maximal", FamilyKind::Maximal},        {"cube", FamilyKind::Cube},
      {"bounded", FamilyKind::Bounded},        {"path_Y", FamilyKind::PathY},
      {"path_y", FamilyKind::PathY},           {"path", FamilyKind::PathY},
      {"path_Z", FamilyKind::PathZ},           {"path_z", FamilyKind::PathZ},
      {"path_Zbar", FamilyKind::PathZbar},     {"path_zbar", FamilyKind::PathZbar},
      {"taylor_powers", FamilyKind::TaylorPowers}, {"taylor", FamilyKind::TaylorPowers},
      {"edge_ideal", FamilyKind::EdgeIdeal},   {"simplex_growing", FamilyKind::SimplexGrowing},
      {"simplex", FamilyKind::SimplexGrowing}};
  auto it = names.find(s);
  if (it == names.end()) throw InputError("unknown family kind '" + s + "'");
  return it->second;
}

struct FamilySpec {
  FamilyKind kind = FamilyKind::Maximal;
  int n = 3;                                  // variables, pairs, or path length
  int degree = 1;                             // d for bounded
  std::vector<std::pair<int, int>> pairing;   // cube; default pairing when empty
  ExponentVector bound;                       // bounded
  Graph graph;                                // edge_ideal
  MonomialIdeal base;                         // taylor_powers
};

inline FamilySpec make_spec(FamilyKind kind, int n = 3, int degree = 1) {
  FamilySpec s;
  s.kind = kind;
  s.n = n;
  s.degree = degree;
  return s;
}

/// One member per index; consecutive morphisms go from index i-1 to i.
class Family {
 public:
  explicit Family(FamilySpec spec) : spec_(std::move(spec)) {
    if (spec_.kind == FamilyKind::Cube && spec_.pairing.empty()) spec_.pairing = default_pairing(spec_.n);
    if (spec_.kind == FamilyKind::TaylorPowers && spec_.base.is_zero())
      throw InputError("taylor_powers family needs a base ideal");
    if (spec_.kind == FamilyKind::Bounded && spec_.bound.size() != static_cast<std::size_t>(spec_.n))
      throw InputError("bounded family needs a bound of length n");
    if (spec_.kind == FamilyKind::EdgeIdeal && spec_.graph.edges.empty())
      throw InputError("edge_ideal family needs a graph with edges");
  }

  const FamilySpec& spec() const { return spec_; }

  int first_index() const { return spec_.kind == FamilyKind::SimplexGrowing ? 0 : 1; }

  std::string name() const {
    std::string s = kind_name(spec_.kind);
    switch (spec_.kind) {
      case FamilyKind::TaylorPowers: return s + " of " + ideal_string(spec_.base);
      case FamilyKind::EdgeIdeal: return s + " of a graph on " + std::to_string(spec_.graph.n) + " vertices";
      case FamilyKind::SimplexGrowing: return s;
      default: return s + " n=" + std::to_string(spec_.n);
    }
  }

  static std::string ideal_string(const MonomialIdeal& ideal) {
    std::string s = "(";
    auto names = default_variable_names(ideal.num_variables());
    for (std::size_t i = 0; i < ideal.size(); ++i) s += (i ? "," : "") + to_string(ideal.generators()[i], names);
    return s + ")";
  }

  ComplexPtr complex(int i) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (i < first_index()) throw InputError("family index " + std::to_string(i) + " below the first index");
    auto it = complexes_.find(i);
    if (it != complexes_.end()) return it->second;
    auto c = std::make_shared<const LabeledComplex>(build(i));
    complexes_.emplace(i, c);
    return c;
  }

  /// Morphisms X_{i-1} -> X_i.
  const std::vector<MultiplicationMorphism>& consecutive(int i) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = consecutive_.find(i);
    if (it != consecutive_.end()) return it->second;
    auto x = complex(i - 1);
    auto y = complex(i);
    std::vector<MultiplicationMorphism> g =
        spec_.kind == FamilyKind::SimplexGrowing ? find_renaming_morphisms(x, y, InjectionMode::OrderPreserving)
                                                 : find_multiplication_morphisms(x, y);
    return consecutive_.emplace(i, std::move(g)).first->second;
  }

  /// All composites X_j -> X_i of consecutive morphisms (identity for j = i),
  /// deduplicated by (renaming, multiplier) and sorted by that key.
  const std::vector<MultiplicationMorphism>& hom(int j, int i) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (j > i) throw Error("hom(j, i) needs j <= i");
    auto key = std::make_pair(j, i);
    auto it = hom_.find(key);
    if (it != hom_.end()) return it->second;
    std::vector<MultiplicationMorphism> out;
    if (j == i) {
      out.push_back(identity_morphism(complex(i)));
    } else {
      std::map<std::pair<std::vector<int>, std::vector<int>>, MultiplicationMorphism> uniq;
      for (const auto& h : hom(j, i - 1))
        for (const auto& g : consecutive(i)) {
          auto c = compose(g, h);
          // keys sort by renaming, then by multiplier in MonomialOrder
          std::vector<int> mk;
          for (int e : c.multiplier) mk.push_back(-e);
          uniq.emplace(std::make_pair(c.renaming, mk), std::move(c));
        }
      for (auto& [k, g] : uniq) out.push_back(std::move(g));
    }
    return hom_.emplace(key, std::move(out)).first->second;
  }

 private:
  LabeledComplex build(int i) const {
    switch (spec_.kind) {
      case FamilyKind::Maximal: return maximal_power_complex(spec_.n, i);
      case FamilyKind::Cube: return cube_complex(spec_.pairing, i);
      case FamilyKind::Bounded: return bounded_power_complex(spec_.n, spec_.degree, spec_.bound, i);
      case FamilyKind::PathY: return path_complex(PathVariant::Y, spec_.n, i);
      case FamilyKind::PathZ: return path_complex(PathVariant::Z, spec_.n, i);
      case FamilyKind::PathZbar: return path_complex(PathVariant::Zbar, spec_.n, i);
      case FamilyKind::TaylorPowers: return taylor_powers_complex(spec_.base, i);
      case FamilyKind::EdgeIdeal: {
        auto ideal = ideal_power_generators(graph_to_edge_ideal(spec_.graph), i);
        return equigenerated_subcomplex(maximal_power_complex(spec_.graph.n, 2 * i), ideal);
      }
      case FamilyKind::SimplexGrowing: return simplex_growing_complex(i);
    }
    throw Error("unknown family kind");
  }

  FamilySpec spec_;
  std::recursive_mutex mu_;
  std::map<int, ComplexPtr> complexes_;
  std::map<int, std::vector<MultiplicationMorphism>> consecutive_;
  std::map<std::pair<int, int>, std::vector<MultiplicationMorphism>> hom_;
};

}  // namespace cellres
