#pragma once

#include <set>
#include <string>
#include <vector>

#include "cellres/cellres.hpp"
#include "oracles.hpp"

namespace testing {

using namespace cellres;

inline oracle::Mono mono(const ExponentVector& e) { return e.values(); }

inline std::vector<oracle::Mono> monos(const MonomialIdeal& i) {
  std::vector<oracle::Mono> out;
  for (const auto& g : i.generators()) out.push_back(g.values());
  return out;
}

inline MonomialIdeal ideal(const std::string& text) { return parse_ideal(text).ideal; }

inline std::set<std::string> vertex_labels(const LabeledComplex& x) {
  std::set<std::string> out;
  for (int v : x.vertices()) out.insert(x.label_string(v));
  return out;
}

/// Vertex-label set of every cell of dimension d.
inline std::set<std::set<oracle::Mono>> cell_label_sets(const LabeledComplex& x, int d) {
  std::set<std::set<oracle::Mono>> out;
  for (int c : x.cells_of_dim(d)) {
    std::set<oracle::Mono> s;
    for (int v : x.cell(c).vertices) s.insert(mono(x.cell(v).label));
    out.insert(s);
  }
  return out;
}

inline bool boundary_squares_to_zero(const LabeledComplex& x) {
  auto d = integer_differentials(x);
  for (std::size_t k = 1; k < d.size(); ++k)
    if (!is_zero(multiply(d[k - 1], d[k]))) return false;
  return true;
}

inline bool labels_are_lcms(const LabeledComplex& x) {
  for (std::size_t i = 0; i < x.num_cells(); ++i) {
    oracle::Mono l(x.num_variables(), 0);
    for (int v : x.cells()[i].vertices) l = oracle::lcm(l, mono(x.cell(v).label));
    if (l != mono(x.cells()[i].label)) return false;
  }
  return true;
}

}  // namespace testing
