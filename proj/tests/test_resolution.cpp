#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> kCorpus = {
    "(x,y,z)",         "(xz,xw,yz,yw)",     "(xy,yz,zw)",       "(xy,yz,zw,wt)", "(xy,xz,yz)",
    "(x^2,xy,y^2)",    "(x^2,y^2,z^2,xyz)", "(xy,zw)",          "(x^3,x^2y,y^3)", "(xyz,xw,yw,zw)",
    "(x,y,z)^2",       "(xz,xw,yz,yw)^2",   "(x^2,xy^2,y^3z,z^2)"};

}  // namespace

TEST_CASE("cellular free complexes", "[resolution]") {
  auto x1 = maximal_power_complex(3, 1);
  auto f = free_complex_from_labeled(x1, Rationals{});
  CHECK(f.ranks() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(f.shape(1) == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(is_minimal(f));
  CHECK(composes_to_zero(f));

  auto sq = cube_complex({{0, 1}, {2, 3}}, 1);
  CHECK(free_complex_from_labeled(sq, Rationals{}).ranks() == std::vector<std::size_t>{1, 4, 4, 1});
  auto sq2 = cube_complex({{0, 1}, {2, 3}}, 2);
  CHECK(free_complex_from_labeled(sq2, Rationals{}).ranks() == std::vector<std::size_t>{1, 9, 12, 4});
}

TEST_CASE("square ideal and its square", "[resolution]") {
  auto r = minimal_resolution(ideal("(xz,xw,yz,yw)"), Rationals{});
  CHECK(betti_of(r) == BettiTable{1, 4, 4, 1});
  auto r2 = minimal_resolution(ideal("(xz,xw,yz,yw)^2"), Rationals{});
  CHECK(betti_of(r2) == BettiTable{1, 9, 12, 4});
  CHECK(r2.shape(1) == std::pair<std::size_t, std::size_t>{1, 9});
  CHECK(r2.shape(2) == std::pair<std::size_t, std::size_t>{9, 12});
  CHECK(r2.shape(3) == std::pair<std::size_t, std::size_t>{12, 4});
  // the cube subdivisions are already minimal
  CHECK(is_minimal(free_complex_from_labeled(cube_complex({{0, 1}, {2, 3}}, 2), Rationals{})));
}

TEST_CASE("acyclicity through the lcm lattice", "[resolution]") {
  CHECK(is_resolution(maximal_power_complex(3, 2), Rationals{}));
  CHECK(is_resolution(taylor_complex(ideal("(xz,xw,yz,yw)")), PrimeField{}));

  std::vector<ExponentVector> l = {ExponentVector{1, 0, 1, 0}, ExponentVector{0, 1, 1, 0},
                                   ExponentVector{0, 1, 0, 1}, ExponentVector{1, 0, 0, 1}};
  std::vector<Cell> cells;
  for (int i = 0; i < 4; ++i) cells.push_back(Cell{0, {i}, l[static_cast<std::size_t>(i)], {}});
  for (int i = 0; i < 4; ++i) {
    int a = std::min(i, (i + 1) % 4), b = std::max(i, (i + 1) % 4);
    cells.push_back(Cell{1, {a, b}, lcm(l[static_cast<std::size_t>(a)], l[static_cast<std::size_t>(b)]), {{a, -1}, {b, 1}}});
  }
  auto circle = LabeledComplex(4, {}, cells);
  auto check = check_resolution(circle, Rationals{});
  CHECK_FALSE(check.acyclic);
  REQUIRE(check.failing_degree);
  CHECK(*check.failing_degree == ExponentVector{1, 1, 1, 1});
}

TEST_CASE("minimalization", "[resolution]") {
  auto x2 = maximal_power_complex(3, 2);
  auto f = free_complex_from_labeled(x2, Rationals{});
  CHECK_FALSE(is_minimal(f));
  auto m = minimalize(f);
  CHECK(is_minimal(m));
  CHECK(composes_to_zero(m));
  CHECK(betti_of(m) == BettiTable{1, 6, 8, 3});
  CHECK(betti_of(m) == oracle::taylor_betti(monos(ideal("(x,y,z)^2"))));

  auto b = bounded_power_complex(3, 2, ExponentVector{1, 1, 1}, 1);
  CHECK(free_complex_from_labeled(b, Rationals{}).ranks() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(minimal_betti(b) == BettiTable{1, 3, 2});

  auto koszul = free_complex_from_labeled(maximal_power_complex(3, 1), Rationals{});
  auto same = minimalize(koszul);
  CHECK(same.ranks() == koszul.ranks());
}

TEST_CASE("Betti numbers of ideals", "[resolution]") {
  CHECK(betti(ideal("(xz,xw,yz,yw)")) == BettiTable{1, 4, 4, 1});
  CHECK(betti(ideal("(xy,yz,zw)")) == BettiTable{1, 3, 2});
  CHECK(betti(ideal("(xy,yz,zw,wt)")) == BettiTable{1, 4, 4, 1});
}

TEST_CASE("minimalized Taylor matches the Tor oracle over Q and F_p", "[resolution]") {
  for (const auto& text : kCorpus) {
    auto i = ideal(text);
    auto want = oracle::taylor_betti(monos(i));
    INFO(text);
    CHECK(betti(i, Rationals{}) == want);
    CHECK(betti(i, PrimeField{}) == want);
  }
}

TEST_CASE("Taylor complexes", "[resolution]") {
  CHECK(f_vector(taylor_complex(ideal("(x,y,z)"))) == std::vector<std::size_t>{3, 3, 1});
  auto t = taylor_complex(ideal("(xz,xw,yz,yw)"));
  CHECK(f_vector(t) == std::vector<std::size_t>{4, 6, 4, 1});
  bool found = false;
  for (int e : t.cells_of_dim(1)) {
    auto labels = cell_vertex_labels(t, e);
    if (std::set<std::string>(labels.begin(), labels.end()) == std::set<std::string>{"xz", "yw"}) {
      CHECK(t.label_string(e) == "xyzw");
      found = true;
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(taylor_complex(MonomialIdeal(3, {})), InputError);
}

TEST_CASE("syzygy generator degrees", "[resolution]") {
  auto s = syzygy_generators(ideal("(x,y,z)"), 2);
  std::set<std::string> got;
  for (const auto& d : s) got.insert(to_string(d, default_variable_names(3)));
  CHECK(got == std::set<std::string>{"xy", "xz", "yz"});
  auto top = syzygy_generators(ideal("(xz,xw,yz,yw)"), 3);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == ExponentVector{1, 1, 1, 1});
  CHECK(syzygy_generators(ideal("(xy,yz,zw)"), 3).empty());
}

TEST_CASE("rational and prime field Betti numbers agree on shipped complexes", "[resolution]") {
  std::vector<LabeledComplex> xs = {maximal_power_complex(3, 3), maximal_power_complex(4, 2),
                                    cube_complex({{0, 1}, {2, 3}}, 2), path_complex(PathVariant::Y, 5, 1),
                                    bounded_power_complex(3, 2, ExponentVector{1, 1, 1}, 2)};
  for (const auto& x : xs) CHECK(minimal_betti(x, Rationals{}) == minimal_betti(x, PrimeField{}));
}
