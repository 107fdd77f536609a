#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "support.hpp"

using namespace testing;

namespace {

std::string data(const std::string& name) { return std::string(CELLRES_DATA_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cellres_test_" + name)).string();
}

}  // namespace

TEST_CASE("export then import gives the same complex", "[io]") {
  for (const auto& x : {maximal_power_complex(3, 1), maximal_power_complex(3, 3), cube_complex(default_pairing(2), 2)}) {
    auto path = temp_path("roundtrip.json");
    export_complex(path, x);
    auto y = import_complex(path);
    CHECK(y == x);
    CHECK(to_json(y).dump() == to_json(x).dump());
    std::remove(path.c_str());
  }
}

TEST_CASE("schema violations are input errors", "[io]") {
  CHECK_THROWS_AS(import_complex(data("square_complex_missing_sign.json")), InputError);
  CHECK_THROWS_AS(import_complex(data("does_not_exist.json")), InputError);

  auto j = to_json(maximal_power_complex(3, 1));
  j["incidence"][0]["sign"] = -j["incidence"][0]["sign"].get<int>();
  CHECK_THROWS_AS(complex_from_json(j), InputError);  // boundary of boundary nonzero

  auto k = to_json(maximal_power_complex(3, 1));
  k["cells"][0]["label"] = json::array({1, 0});
  CHECK_THROWS_AS(complex_from_json(k), InputError);

  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[1, 1]]})")), InputError);
  CHECK_THROWS_AS(arrangement_from_json(json::parse(R"({"vertices": []})")), InputError);
}

TEST_CASE("the hand-written square complex resolves the square ideal", "[io]") {
  auto x = import_complex(data("square_complex.json"));
  CHECK(f_vector(x) == std::vector<std::size_t>{4, 4, 1});
  CHECK(is_resolution(x, Rationals{}));
  CHECK(minimal_betti(x) == BettiTable{1, 4, 4, 1});
  // same cells as the built square; orientation signs may differ
  auto built = cube_complex({{0, 1}, {2, 3}}, 1);
  for (int d = 0; d <= 2; ++d) CHECK(cell_label_sets(x, d) == cell_label_sets(built, d));
}

TEST_CASE("arrangement and graph files", "[io]") {
  auto spec = arrangement_from_json(read_json_file(data("square_squared_arrangement.json")));
  auto x = build_arrangement_complex(spec);
  CHECK(f_vector(x) == std::vector<std::size_t>{9, 12, 4});
  CHECK(arrangement_from_json(to_json(spec)).vertices == spec.vertices);

  auto g = graph_from_json(read_json_file(data("path4_graph.json")));
  CHECK(g.edges == path_graph(4).edges);
  CHECK(graph_from_json(to_json(g)).edges == g.edges);
  CHECK(graph_from_json(read_json_file(data("cycle4_graph.json"))).edges == cycle_graph(4).edges);
}

TEST_CASE("free complex JSON carries coefficients and monomials", "[io]") {
  auto f = free_complex_from_labeled(maximal_power_complex(3, 1), Rationals{});
  auto j = to_json(f);
  REQUIRE(j["differentials"].size() == 3);
  const auto& d1 = j["differentials"][0];
  REQUIRE(d1.size() == 3);
  for (const auto& e : d1) {
    CHECK(e["coeff"].is_number_integer());
    CHECK(e["monomial"].get<std::vector<int>>().size() == 3);
  }
  Rationals::Element half(1, 2);
  CHECK(coefficient_json(half) == json("1/2"));
  PrimeField k;
  CHECK(coefficient_json(k.neg(1), k) == json(-1));
}

TEST_CASE("reports are deterministic", "[io]") {
  auto run = [] {
    Family fam(make_spec(FamilyKind::Maximal, 3));
    return to_json(covering_horizon(fam, 4), fam).dump();
  };
  CHECK(run() == run());
  auto bl = [] { return to_json(bl_report(cycle_graph(4))).dump(); };
  CHECK(bl() == bl());
}
