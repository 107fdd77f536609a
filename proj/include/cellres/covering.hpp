#pragma once

// Coverings of family members by images of earlier members, covering
// thresholds over a finite window, and finite-generation witnesses.

#include <optional>
#include <string>
#include <vector>

#include "cellres/families.hpp"
#include "cellres/morphism.hpp"

namespace cellres {

struct CellAssignment {
  int target_cell = -1;
  bool covered = false;
  int source_index = -1;
  int source_cell = -1;
  ExponentVector multiplier;
  std::vector<int> renaming;
};

struct CoveringReport {
  int target_index = 0;
  std::vector<int> source_indices;
  int dimension = -1;  // -1: every dimension
  std::vector<CellAssignment> cells;
  bool covered = true;

  std::vector<int> uncovered() const {
    std::vector<int> out;
    for (const auto& c : cells)
      if (!c.covered) out.push_back(c.target_cell);
    return out;
  }
};

/// Vertex labels of a cell, as strings.
inline std::vector<std::string> cell_vertex_labels(const LabeledComplex& x, int id) {
  std::vector<std::string> out;
  for (int v : x.cell(id).vertices) out.push_back(x.label_string(v));
  return out;
}

namespace detail {
inline CoveringReport covering_impl(Family& fam, int i, const std::vector<int>& sources, int d) {
  CoveringReport rep;
  rep.target_index = i;
  rep.source_indices = sources;
  rep.dimension = d;
  auto target = fam.complex(i);
  std::vector<int> wanted;
  if (d < 0) {
    for (std::size_t c = 0; c < target->num_cells(); ++c) wanted.push_back(static_cast<int>(c));
  } else {
    wanted = target->cells_of_dim(d);
  }
  std::vector<int> slot(target->num_cells(), -1);
  for (std::size_t k = 0; k < wanted.size(); ++k) {
    slot[static_cast<std::size_t>(wanted[k])] = static_cast<int>(k);
    CellAssignment a;
    a.target_cell = wanted[k];
    rep.cells.push_back(a);
  }
  std::size_t remaining = wanted.size();
  for (int j : sources) {
    if (j >= i) throw Error("covering sources must have smaller index than the target");
    if (remaining == 0) break;
    auto source = fam.complex(j);
    std::vector<int> src_cells;
    if (d < 0) {
      for (std::size_t c = 0; c < source->num_cells(); ++c) src_cells.push_back(static_cast<int>(c));
    } else {
      src_cells = source->cells_of_dim(d);
    }
    for (const auto& h : fam.hom(j, i)) {
      for (int c : src_cells) {
        int s = slot[static_cast<std::size_t>(h.cell_map[static_cast<std::size_t>(c)])];
        if (s < 0 || rep.cells[static_cast<std::size_t>(s)].covered) continue;
        auto& a = rep.cells[static_cast<std::size_t>(s)];
        a.covered = true;
        a.source_index = j;
        a.source_cell = c;
        a.multiplier = h.multiplier;
        a.renaming = h.renaming;
        --remaining;
      }
      if (remaining == 0) break;
    }
  }
  rep.covered = remaining == 0;
  return rep;
}
}  // namespace detail

/// Whether the d-cells of X_i are images of d-cells of the sources under
/// composite morphisms.
inline CoveringReport d_covering(Family& fam, int i, const std::vector<int>& sources, int d) {
  if (d < 0) throw InputError("d_covering needs d >= 0");
  return detail::covering_impl(fam, i, sources, d);
}

/// Same, for cells of every dimension at once.
inline CoveringReport full_covering(Family& fam, int i, const std::vector<int>& sources) {
  return detail::covering_impl(fam, i, sources, -1);
}

inline std::vector<int> indices_below(const Family& fam, int i) {
  std::vector<int> out;
  for (int j = fam.first_index(); j < i; ++j) out.push_back(j);
  return out;
}

struct HorizonReport {
  int max_index = 0;
  int dimension = -1;
  std::optional<int> threshold;             // smallest i0 with [i0, max] all covered
  std::vector<CoveringReport> reports;      // one per index, first to max
  std::optional<int> claimed_threshold;
  bool matches_claim = true;
  std::string note;
};

/// Threshold from which every member is covered by all earlier members,
/// or nothing when X_max itself is not covered.  A member without cells of
/// the requested dimension counts as covered.
inline std::optional<int> threshold_of(const std::vector<CoveringReport>& reports) {
  std::optional<int> t;
  for (auto it = reports.rbegin(); it != reports.rend(); ++it) {
    if (!it->covered) break;
    t = it->target_index;
  }
  return t;
}

/// Threshold the closed-form statements predict for the family, when there
/// is one: covering of X_n^{n-1} by X_n^{n-2} for the maximal family and
/// covering of C_n^p by C_n^1 for p >= 2.
inline std::optional<int> claimed_threshold(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::Maximal) return spec.n - 1;
  if (spec.kind == FamilyKind::Cube) return 2;
  return std::nullopt;
}

inline HorizonReport covering_horizon(Family& fam, int max_index, int dimension = -1) {
  HorizonReport rep;
  rep.max_index = max_index;
  rep.dimension = dimension;
  for (int i = fam.first_index(); i <= max_index; ++i)
    rep.reports.push_back(detail::covering_impl(fam, i, indices_below(fam, i), dimension));
  rep.threshold = threshold_of(rep.reports);
  rep.claimed_threshold = claimed_threshold(fam.spec());
  if (rep.claimed_threshold && dimension < 0) {
    rep.matches_claim = rep.threshold == rep.claimed_threshold;
    if (!rep.matches_claim)
      rep.note = "computed threshold " + (rep.threshold ? std::to_string(*rep.threshold) : std::string("none")) +
                 " differs from the claimed threshold " + std::to_string(*rep.claimed_threshold);
  }
  if (rep.note.empty())
    rep.note = "finite-horizon evidence over indices " + std::to_string(fam.first_index()) + ".." +
               std::to_string(max_index) + "; not a proof for all indices";
  else
    rep.note += "; finite-horizon evidence over indices " + std::to_string(fam.first_index()) + ".." +
                std::to_string(max_index);
  return rep;
}

struct WitnessEntry {
  int index = 0;
  int cell = 0;
  int generator_index = 0;
  int generator_cell = 0;
  ExponentVector multiplier;
  std::vector<int> renaming;
};

struct FGWitness {
  int t = 1;
  int horizon = 0;
  int dimension = 0;
  bool succeeded = false;
  std::optional<int> threshold;
  std::vector<std::pair<int, int>> generators;        // (family index, cell id)
  std::vector<WitnessEntry> verification;
  std::vector<std::pair<int, int>> uncovered;         // on failure
  std::string note;
};

/// Finite-generation witness for the t-th module representation over
/// indices up to H: generators are the (t-1)-cells of members up to the
/// (t-1)-covering threshold, and every (t-1)-cell up to H is traced back to
/// one of them through a composite morphism.
inline FGWitness syzygy_fg_witness(Family& fam, int t, int horizon) {
  if (t < 1) throw InputError("syzygy_fg_witness needs t >= 1");
  FGWitness w;
  w.t = t;
  w.horizon = horizon;
  w.dimension = t - 1;
  const int d = t - 1;
  std::vector<CoveringReport> reports;
  for (int i = fam.first_index(); i <= horizon; ++i)
    reports.push_back(d_covering(fam, i, indices_below(fam, i), d));
  w.threshold = threshold_of(reports);
  if (!w.threshold) {
    for (const auto& r : reports)
      for (int c : r.uncovered()) w.uncovered.emplace_back(r.target_index, c);
    w.note = "FAILED: no " + std::to_string(d) + "-covering threshold within indices " +
             std::to_string(fam.first_index()) + ".." + std::to_string(horizon);
    return w;
  }
  const int i0 = *w.threshold;
  for (int i = fam.first_index(); i <= std::min(i0, horizon); ++i)
    for (int c : fam.complex(i)->cells_of_dim(d)) {
      w.generators.emplace_back(i, c);
      WitnessEntry e;
      e.index = i;
      e.cell = c;
      e.generator_index = i;
      e.generator_cell = c;
      e.multiplier = ExponentVector(fam.complex(i)->num_variables());
      e.renaming = identity_injection(fam.complex(i)->num_variables());
      w.verification.push_back(e);
    }
  bool ok = true;
  for (int i = i0 + 1; i <= horizon; ++i) {
    auto target = fam.complex(i);
    std::vector<int> found(target->num_cells(), 0);
    std::vector<WitnessEntry> entries(target->num_cells());
    for (int j = fam.first_index(); j <= i0; ++j) {
      const auto& gens = fam.complex(j)->cells_of_dim(d);
      for (const auto& h : fam.hom(j, i))
        for (int c : gens) {
          int tc = h.cell_map[static_cast<std::size_t>(c)];
          if (found[static_cast<std::size_t>(tc)]) continue;
          found[static_cast<std::size_t>(tc)] = 1;
          entries[static_cast<std::size_t>(tc)] = WitnessEntry{i, tc, j, c, h.multiplier, h.renaming};
        }
    }
    for (int c : target->cells_of_dim(d)) {
      if (found[static_cast<std::size_t>(c)]) {
        w.verification.push_back(entries[static_cast<std::size_t>(c)]);
      } else {
        ok = false;
        w.uncovered.emplace_back(i, c);
      }
    }
  }
  w.succeeded = ok;
  w.note = ok ? "every " + std::to_string(d) + "-cell up to index " + std::to_string(horizon) +
                    " is the image of a generator; finite generation of the syzygy representation "
                    "follows under the noetherian hypothesis on the representation category "
                    "(finite-horizon evidence, not a proof)"
              : "FAILED: some cells are not reached from the generators";
  return w;
}

}  // namespace cellres
