#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;

namespace {

FamilySpec triangle_spec() { return make_spec(FamilyKind::Maximal, 3); }

std::set<std::string> uncovered_labels(const LabeledComplex& x, const CoveringReport& r) {
  std::set<std::string> out;
  for (int c : r.uncovered()) {
    std::string s;
    for (const auto& l : cell_vertex_labels(x, c)) s += (s.empty() ? "" : ",") + l;
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("d-coverings of the second triangle", "[covering]") {
  Family fam(triangle_spec());
  auto r0 = d_covering(fam, 2, {1}, 0);
  CHECK(r0.covered);
  CHECK(r0.cells.size() == 6);

  // image enumeration oracle: x V, y V, z V for the vertices V of X_1
  std::vector<std::set<oracle::Mono>> vertices;
  for (int v : fam.complex(1)->vertices()) vertices.push_back({mono(fam.complex(1)->cell(v).label)});
  auto images = oracle::image_sets(vertices, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(images == cell_label_sets(*fam.complex(2), 0));

  auto r2 = d_covering(fam, 2, {1}, 2);
  CHECK_FALSE(r2.covered);
  CHECK(uncovered_labels(*fam.complex(2), r2) == std::set<std::string>{"xy,xz,yz"});

  CHECK(d_covering(fam, 3, {2}, 2).covered);
}

TEST_CASE("full coverings", "[covering]") {
  Family tri(triangle_spec());
  auto r = full_covering(tri, 2, {1});
  CHECK_FALSE(r.covered);
  CHECK(uncovered_labels(*tri.complex(2), r) == std::set<std::string>{"xy,xz,yz"});
  for (int i = 3; i <= 6; ++i) CHECK(full_covering(tri, i, indices_below(tri, i)).covered);

  Family cube(make_spec(FamilyKind::Cube, 2));
  CHECK(full_covering(cube, 2, {1}).covered);

  Family max4(make_spec(FamilyKind::Maximal, 4));
  CHECK_FALSE(full_covering(max4, 2, {1}).covered);

  FamilySpec t = make_spec(FamilyKind::TaylorPowers);
  t.base = ideal("(x,y,z)");
  Family taylor(t);
  auto tr = full_covering(taylor, 2, {1});
  CHECK_FALSE(tr.covered);
  auto top = taylor.complex(2)->cells_of_dim(taylor.complex(2)->dimension());
  auto un = tr.uncovered();
  CHECK(std::find(un.begin(), un.end(), top.at(0)) != un.end());
}

TEST_CASE("covering image enumeration agrees with a direct label computation", "[covering]") {
  Family fam(triangle_spec());
  for (int i = 2; i <= 4; ++i)
    for (int d = 0; d <= 2; ++d) {
      auto r = d_covering(fam, i, {i - 1}, d);
      std::vector<std::set<oracle::Mono>> src;
      for (const auto& s : cell_label_sets(*fam.complex(i - 1), d)) src.push_back(s);
      auto images = oracle::image_sets(src, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
      auto target = cell_label_sets(*fam.complex(i), d);
      std::size_t missing = 0;
      for (const auto& c : target)
        if (!images.count(c)) ++missing;
      INFO("i=" << i << " d=" << d);
      CHECK(missing == r.uncovered().size());
    }
}

TEST_CASE("covering thresholds", "[covering]") {
  Family tri(triangle_spec());
  auto h = covering_horizon(tri, 6);
  REQUIRE(h.threshold);
  CHECK(*h.threshold == 3);
  REQUIRE(h.reports.size() == 6);
  CHECK_FALSE(h.reports[1].covered);
  for (std::size_t k = 2; k < 6; ++k) CHECK(h.reports[k].covered);
  CHECK_FALSE(h.matches_claim);
  CHECK(h.note.find("finite-horizon") != std::string::npos);

  Family cube(make_spec(FamilyKind::Cube, 2));
  auto c = covering_horizon(cube, 5);
  REQUIRE(c.threshold);
  CHECK(*c.threshold == 2);
  CHECK(c.matches_claim);

  Family max4(make_spec(FamilyKind::Maximal, 4));
  auto m = covering_horizon(max4, 5);
  REQUIRE(m.threshold);
  CHECK((*m.threshold == 3 || *m.threshold == 4));
  CHECK(*m.threshold == 4);
  CHECK_FALSE(m.matches_claim);
  CHECK(m.note.find("differs from the claimed threshold 3") != std::string::npos);
}

TEST_CASE("finite-generation witnesses", "[covering]") {
  Family tri(triangle_spec());
  auto w = syzygy_fg_witness(tri, 1, 6);
  CHECK(w.succeeded);
  REQUIRE(w.threshold);
  CHECK(*w.threshold == 2);
  CHECK(w.generators.size() == 3 + 6);
  for (auto [i, c] : w.generators) CHECK(i <= 2);
  std::size_t later = 0;
  for (int i = 3; i <= 6; ++i) later += tri.complex(i)->vertices().size();
  CHECK(w.verification.size() == w.generators.size() + later);

  FamilySpec t = make_spec(FamilyKind::TaylorPowers);
  t.base = ideal("(x,y,z)");
  Family taylor(t);
  for (int h = 1; h <= 4; ++h) {
    int top = taylor.complex(h)->dimension();
    auto f = syzygy_fg_witness(taylor, top + 1, h);
    INFO("horizon " << h);
    CHECK_FALSE(f.succeeded);
    CHECK_FALSE(f.uncovered.empty());
    CHECK(f.note.rfind("FAILED", 0) == 0);
  }

  Family simplex(make_spec(FamilyKind::SimplexGrowing));
  for (int tt = 1; tt <= 3; ++tt) {
    auto s = syzygy_fg_witness(simplex, tt, 6);
    INFO("t=" << tt);
    CHECK(s.succeeded);
    REQUIRE(s.threshold);
    CHECK(*s.threshold == tt);
  }
  auto s2 = syzygy_fg_witness(simplex, 2, 6);
  for (auto [i, c] : s2.generators) CHECK(i <= 2);
  CHECK_THROWS_AS(syzygy_fg_witness(simplex, 0, 3), InputError);
}
