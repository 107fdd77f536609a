#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;

TEST_CASE("maximal power complexes", "[families]") {
  CHECK(f_vector(maximal_power_complex(3, 1)) == std::vector<std::size_t>{3, 3, 1});
  CHECK(maximal_power_complex(3, 4).vertices().size() == 15);
  CHECK(f_vector(maximal_power_complex(4, 1)) == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK_THROWS_AS(maximal_power_complex(0, 1), InputError);
}

TEST_CASE("cube complexes", "[families]") {
  auto sq = cube_complex({{0, 1}, {2, 3}}, 1);
  CHECK(vertex_labels(sq) == std::set<std::string>{"xz", "xw", "yz", "yw"});
  CHECK(f_vector(sq) == std::vector<std::size_t>{4, 4, 1});
  CHECK(f_vector(cube_complex({{0, 1}, {2, 3}}, 2)) == std::vector<std::size_t>{9, 12, 4});
  auto c3 = cube_complex(default_pairing(3), 1);
  const std::vector<std::string> names{"x", "y", "z", "w", "u", "v"};
  std::set<std::string> labels;
  for (int v : c3.vertices()) labels.insert(to_string(c3.cell(v).label, names));
  CHECK(labels == std::set<std::string>{"xzu", "xzv", "xwu", "xwv", "yzu", "yzv", "ywu", "ywv"});
  CHECK(f_vector(c3) == std::vector<std::size_t>{8, 12, 6, 1});
  CHECK_THROWS_AS(cube_complex({{0, 1}, {1, 2}}, 1), InputError);
}

TEST_CASE("bounded power complexes", "[families]") {
  ExponentVector b{1, 1, 1};
  auto k3 = bounded_power_complex(3, 2, b, 1);
  CHECK(f_vector(k3) == std::vector<std::size_t>{3, 3, 1});
  CHECK(vertex_labels(k3) == std::set<std::string>{"xy", "xz", "yz"});

  auto sq = bounded_power_complex(3, 2, b, 2);
  std::set<oracle::Mono> got;
  for (int v : sq.vertices()) got.insert(mono(sq.cell(v).label));
  CHECK(got == oracle::power(monos(ideal("(xy,xz,yz)")), 2));
  CHECK(got.size() == 6);

  CHECK(bounded_power_complex(3, 1, ExponentVector{2, 2, 2}, 2) == maximal_power_complex(3, 2));
}

TEST_CASE("path subdivisions", "[families]") {
  CHECK(minimal_betti(path_complex(PathVariant::Y, 4, 1)) == BettiTable{1, 3, 2});
  CHECK(minimal_betti(path_complex(PathVariant::Y, 5, 1)) == BettiTable{1, 4, 4, 1});
  for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 1}, {5, 2}}) {
    auto z = path_complex(PathVariant::Z, n, d);
    auto zb = path_complex(PathVariant::Zbar, n, d);
    auto y = path_complex(PathVariant::Y, n, d);
    INFO("n=" << n << " d=" << d);
    CHECK(vertex_labels(z) == vertex_labels(zb));
    CHECK(vertex_labels(y) == vertex_labels(z));
    CHECK(is_resolution(zb, PrimeField{}));
    CHECK(is_resolution(z, PrimeField{}));
    CHECK(is_resolution(y, PrimeField{}));
    CHECK(minimal_betti(y, PrimeField{}) == oracle::taylor_betti(monos(vertex_ideal(y))));
  }
}

TEST_CASE("Taylor powers", "[families]") {
  auto m = ideal("(x,y,z)");
  CHECK(f_vector(taylor_powers_complex(m, 1)) == std::vector<std::size_t>{3, 3, 1});
  auto t2 = taylor_powers_complex(m, 2);
  CHECK(t2.vertices().size() == 6);
  CHECK(t2.dimension() == 5);
  CHECK(t2.top_label() == ExponentVector{2, 2, 2});
}

TEST_CASE("edge ideals of graphs", "[families]") {
  auto names = default_variable_names(4);
  auto p4 = graph_to_edge_ideal(path_graph(4));
  CHECK(ideal_to_string(p4, names) == "(xy,yz,zw)");
  auto c4 = graph_to_edge_ideal(make_graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  CHECK(ideal_to_string(c4, names) == "(xy,xw,yz,zw)");
  CHECK(ideal_to_string(graph_to_edge_ideal(complete_graph(3)), names) == "(xy,xz,yz)");
  CHECK(c4 == graph_to_edge_ideal(cycle_graph(4)));
  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), InputError);
}

TEST_CASE("equigenerated subcomplexes", "[families]") {
  auto x2 = maximal_power_complex(3, 2);
  auto tri = equigenerated_subcomplex(x2, ideal("(xy,xz,yz)"));
  CHECK(f_vector(tri) == std::vector<std::size_t>{3, 3, 1});
  CHECK(equigenerated_subcomplex(x2, vertex_ideal(x2)) == x2);
  CHECK(f_vector(equigenerated_subcomplex(x2, MonomialIdeal(3, {ExponentVector{1, 1, 0}}))) ==
        std::vector<std::size_t>{1});
  CHECK_THROWS_AS(equigenerated_subcomplex(x2, MonomialIdeal(3, {ExponentVector{1, 1, 1}})), InputError);
}

TEST_CASE("simplex growing complexes", "[families]") {
  CHECK(f_vector(simplex_growing_complex(1)) == std::vector<std::size_t>{2, 1});
  CHECK(vertex_labels(simplex_growing_complex(2)) == std::set<std::string>{"x", "y", "z"});
  CHECK(f_vector(simplex_growing_complex(3)) == std::vector<std::size_t>{4, 6, 4, 1});
}

TEST_CASE("every shipped family instance is a valid cellular resolution", "[families]") {
  std::vector<FamilySpec> specs;
  specs.push_back(make_spec(FamilyKind::Maximal, 3));
  specs.push_back(make_spec(FamilyKind::Maximal, 4));
  specs.push_back(make_spec(FamilyKind::Cube, 2));
  specs.push_back(make_spec(FamilyKind::Cube, 3));
  FamilySpec bounded = make_spec(FamilyKind::Bounded, 3, 2);
  bounded.bound = ExponentVector{1, 1, 1};
  specs.push_back(bounded);
  specs.push_back(make_spec(FamilyKind::PathY, 4));
  specs.push_back(make_spec(FamilyKind::PathZ, 4));
  specs.push_back(make_spec(FamilyKind::PathZbar, 4));
  FamilySpec taylor = make_spec(FamilyKind::TaylorPowers);
  taylor.base = ideal("(x,y,z)");
  specs.push_back(taylor);
  FamilySpec edge = make_spec(FamilyKind::EdgeIdeal);
  edge.graph = complete_graph(3);
  specs.push_back(edge);
  specs.push_back(make_spec(FamilyKind::SimplexGrowing));

  for (auto& spec : specs) {
    Family fam(spec);
    int last = spec.kind == FamilyKind::Maximal && spec.n == 4 ? 3 : (spec.kind == FamilyKind::Cube && spec.n == 3 ? 2 : 3);
    if (spec.kind == FamilyKind::TaylorPowers) last = 2;
    for (int i = fam.first_index(); i <= last; ++i) {
      auto x = fam.complex(i);
      INFO(fam.name() << " index " << i);
      CHECK(validate(*x).empty());
      CHECK(boundary_squares_to_zero(*x));
      CHECK(labels_are_lcms(*x));
      CHECK(is_resolution(*x, PrimeField{}));
    }
  }
}

TEST_CASE("family kinds parse", "[families]") {
  CHECK(parse_kind("maximal") == FamilyKind::Maximal);
  CHECK(parse_kind("taylor") == FamilyKind::TaylorPowers);
  CHECK(parse_kind("simplex") == FamilyKind::SimplexGrowing);
  CHECK_THROWS_AS(parse_kind("nope"), InputError);
  CHECK_THROWS_AS(Family(make_spec(FamilyKind::TaylorPowers)), InputError);
}

TEST_CASE("edge ideal powers need not be supported on the equigenerated subcomplex", "[families]") {
  FamilySpec spec = make_spec(FamilyKind::EdgeIdeal);
  spec.graph = path_graph(4);
  Family fam(spec);
  CHECK(is_resolution(*fam.complex(1), Rationals{}));
  auto x2 = fam.complex(2);
  CHECK(f_vector(*x2) == std::vector<std::size_t>{6, 6});
  auto check = check_resolution(*x2, Rationals{});
  CHECK_FALSE(check.acyclic);
}

TEST_CASE("cell counts of maximal and cube complexes", "[families]") {
  for (std::size_t k = 1; k <= 6; ++k) {
    auto x = maximal_power_complex(3, static_cast<int>(k));
    CHECK(x.vertices().size() == (k + 1) * (k + 2) / 2);
    CHECK(x.cells_of_dim(2).size() == k * k);
  }
  for (int n = 1; n <= 3; ++n)
    for (int p = 1; p <= 3; ++p) {
      auto c = cube_complex(default_pairing(n), p);
      std::size_t verts = 1, tops = 1;
      for (int i = 0; i < n; ++i) {
        verts *= static_cast<std::size_t>(p + 1);
        tops *= static_cast<std::size_t>(p);
      }
      INFO("n=" << n << " p=" << p);
      CHECK(c.vertices().size() == verts);
      CHECK(c.cells_of_dim(n).size() == tops);
      CHECK(c.dimension() == n);
    }
}

TEST_CASE("bounded complexes have the generators of the bounded ideal powers as vertices", "[families]") {
  struct Case {
    int n, d;
    ExponentVector b;
  };
  std::vector<Case> cases = {{3, 2, ExponentVector{1, 1, 1}}, {3, 2, ExponentVector{2, 1, 1}},
                             {4, 2, ExponentVector{1, 1, 1, 1}}, {4, 2, ExponentVector{1, 1, 1, 0}},
                             {3, 3, ExponentVector{2, 1, 1}}};
  for (const auto& c : cases)
    for (int m = 1; m <= 3; ++m) {
      if (c.n == 4 && m == 3) continue;
      auto x = bounded_power_complex(c.n, c.d, c.b, m);
      std::set<oracle::Mono> got;
      for (int v : x.vertices()) got.insert(mono(x.cell(v).label));
      auto want = oracle::power(monos(bounded_ideal(c.n, c.d, c.b)), m);
      INFO("n=" << c.n << " d=" << c.d << " m=" << m);
      CHECK(got == want);
    }
}

TEST_CASE("every morphism between triangle complexes is a composite of consecutive ones", "[families]") {
  Family fam(make_spec(FamilyKind::Maximal, 3));
  for (int j = 1; j <= 3; ++j)
    for (int k = j + 1; k <= 4; ++k) {
      auto direct = find_multiplication_morphisms(fam.complex(j), fam.complex(k));
      const auto& composites = fam.hom(j, k);
      REQUIRE(direct.size() == composites.size());
      for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(direct[i].multiplier == composites[i].multiplier);
        CHECK(direct[i].cell_map == composites[i].cell_map);
      }
    }
}
