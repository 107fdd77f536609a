#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;

TEST_CASE("lcm, gcd and divisibility", "[monomial]") {
  CHECK(lcm(ExponentVector{1, 0, 1}, ExponentVector{0, 1, 1}) == ExponentVector{1, 1, 1});
  CHECK(lcm(ExponentVector{2, 0}, ExponentVector{2, 0}) == ExponentVector{2, 0});
  auto sq = ideal("(xz,xw,yz,yw)");
  ExponentVector top(4);
  for (const auto& g : sq.generators()) top = lcm(top, g);
  CHECK(top == ExponentVector{1, 1, 1, 1});
  CHECK(gcd(ExponentVector{2, 1, 0}, ExponentVector{1, 3, 2}) == ExponentVector{1, 1, 0});

  CHECK(divides(ExponentVector{1, 1, 0}, ExponentVector{1, 1, 1}));
  CHECK_FALSE(divides(ExponentVector{2, 0, 0}, ExponentVector{1, 1, 1}));
  CHECK(divides(ExponentVector(3), ExponentVector{0, 5, 0}));
  CHECK_THROWS_AS(divides(ExponentVector{1}, ExponentVector{1, 0}), Error);
  CHECK_THROWS_AS(ExponentVector({1, -1}), Error);
}

TEST_CASE("monomial order is descending lex", "[monomial]") {
  auto all = monomials_of_degree(3, 2);
  std::vector<std::string> names;
  for (const auto& m : all) names.push_back(to_string(m, default_variable_names(3)));
  CHECK(names == std::vector<std::string>{"x^2", "xy", "xz", "y^2", "yz", "z^2"});
  CHECK(to_string(ExponentVector(3), default_variable_names(3)) == "1");
  CHECK(default_variable_names(8)[7] == "x8");
}

TEST_CASE("ideal powers match brute-force products", "[monomial]") {
  auto m = ideal("(x,y,z)");
  auto p2 = ideal_power_generators(m, 2);
  CHECK(p2.size() == 6);

  auto sq = ideal("(xz,xw,yz,yw)");
  CHECK(ideal_power_generators(sq, 2).size() == 9);

  auto path = ideal("(xy,yz,zw)");
  CHECK(ideal_power_generators(path, 1) == path);

  for (const auto* text : {"(x,y,z)", "(xz,xw,yz,yw)", "(xy,yz,zw)", "(x^2,xy,y^3)", "(xy,xz,yz)"})
    for (int k = 1; k <= 4; ++k) {
      auto i = ideal(text);
      auto ours = ideal_power_generators(i, k);
      auto ref = oracle::power(monos(i), k);
      auto ours_monos = monos(ours);
      std::set<oracle::Mono> got(ours_monos.begin(), ours_monos.end());
      INFO(text << " ^" << k);
      CHECK(got == ref);
    }
}

TEST_CASE("minimal generators by divisibility", "[monomial]") {
  auto i = MonomialIdeal(2, {ExponentVector{1, 0}, ExponentVector{1, 1}});
  CHECK(i.generators() == std::vector<ExponentVector>{ExponentVector{1, 0}});
  auto path = ideal("(xy,yz,zw)");
  CHECK(path.size() == 3);

  // all 9 ordered products of (x,y,z) pruned to the 6 quadrics
  std::vector<ExponentVector> products;
  const auto lin = ideal("(x,y,z)");
  for (const auto& a : lin.generators())
    for (const auto& b : lin.generators()) products.push_back(product(a, b));
  CHECK(products.size() == 9);
  auto pruned = minimalize_generators(3, products);
  std::vector<oracle::Mono> raw;
  for (const auto& p : products) raw.push_back(p.values());
  auto pruned_monos = monos(pruned);
  std::set<oracle::Mono> got(pruned_monos.begin(), pruned_monos.end());
  CHECK(got == oracle::minimal(raw));
  CHECK(pruned.size() == 6);
}

TEST_CASE("ideal grammar", "[monomial]") {
  auto p = parse_ideal("(x^2, xy, y^3)");
  CHECK(p.variables == std::vector<std::string>{"x", "y"});
  CHECK(p.ideal.size() == 3);
  auto q = parse_ideal("(x1x2,x2x3,x3x4)");
  CHECK(q.variables.size() == 4);
  CHECK(ideal_to_string(q.ideal, q.variables) == "(x1x2,x2x3,x3x4)");
  CHECK(parse_ideal("(x,y,z)^2").ideal.size() == 6);
  CHECK_THROWS_AS(parse_ideal("x,y"), InputError);
  CHECK_THROWS_AS(parse_ideal("(x,,y)"), InputError);
  CHECK_THROWS_AS(parse_ideal("(xq)"), InputError);
}

TEST_CASE("fields", "[monomial]") {
  CHECK(field_name(parse_field("q")) == "Q");
  CHECK(std::holds_alternative<PrimeField>(parse_field("p32003")));
  CHECK_THROWS_AS(parse_field("p32004"), InputError);
  PrimeField f(7);
  CHECK(f.mul(f.inv(3), 3) == 1);
}
