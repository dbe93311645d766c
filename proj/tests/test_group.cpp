#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "burnside/catalog.hpp"
#include "burnside/group.hpp"

using namespace burnside;

namespace {

GroupElement perm(std::vector<uint32_t> img) { return Permutation{std::move(img)}; }

GroupElement gf(uint32_t p, uint32_t dim, std::vector<uint32_t> a) {
  return MatrixOverPrimeField{p, dim, std::move(a)};
}

FiniteGroup named(const std::string& name) {
  return build(parse_catalog_name(name).value());
}

int centralizer_size(const FiniteGroup& g, int x) {
  int n = 0;
  for (int i = 0; i < g.order(); ++i)
    if (g.mul(i, x) == g.mul(x, i)) ++n;
  return n;
}

}  // namespace

TEST_CASE("generator closure") {
  FiniteGroup c3 = close_generators({perm({1, 2, 0})}, 100);
  CHECK(c3.order() == 3);
  CHECK(c3.exponent() == 3);

  CHECK(named("2D4").order() == 8);

  // SL(2,5): the standard pair S, T.
  FiniteGroup sl25 = close_generators({gf(5, 2, {1, 1, 0, 1}), gf(5, 2, {0, 4, 1, 0})}, 200);
  CHECK(sl25.order() == 120);

  CHECK_THROWS_AS(close_generators({gf(5, 2, {1, 1, 0, 1}), gf(5, 2, {0, 4, 1, 0})}, 50),
                  std::runtime_error);
  CHECK_THROWS_AS(close_generators({gf(5, 2, {1, 0, 0, 0})}, 10), std::invalid_argument);
  CHECK_THROWS_AS(close_generators({}, 10), std::invalid_argument);
  CHECK_THROWS_AS(close_generators({perm({0, 1}), gf(3, 2, {1, 0, 0, 1})}, 10),
                  std::invalid_argument);
}

TEST_CASE("closure order is deterministic") {
  std::vector<GroupElement> gens{perm({1, 0, 2, 3}), perm({0, 2, 1, 3}), perm({0, 1, 3, 2})};
  FiniteGroup a = close_generators(gens, 100);
  FiniteGroup b = close_generators(gens, 100);
  REQUIRE(a.order() == 24);
  REQUIRE(b.order() == 24);
  for (int i = 0; i < a.order(); ++i) CHECK(element_equal(a.element(i), b.element(i)));
  CHECK(element_equal(a.element(a.identity_index()), element_identity(gens[0])));
}

TEST_CASE("group laws on the materialized table") {
  FiniteGroup g = named("2D6");
  REQUIRE(g.order() == 12);
  int e = g.identity_index();
  for (int i = 0; i < g.order(); ++i) {
    CHECK(g.mul(e, i) == i);
    CHECK(g.mul(i, e) == i);
    CHECK(g.mul(i, g.inverse(i)) == e);
    CHECK(g.power(i, g.element_order(i)) == e);
    CHECK(g.power(i, -1) == g.inverse(i));
    CHECK(g.order() % g.element_order(i) == 0);
  }
  int lcm = 1;
  for (int i = 0; i < g.order(); ++i) lcm = std::lcm(lcm, g.element_order(i));
  CHECK(g.exponent() == lcm);
}

TEST_CASE("conjugacy classes of the quaternion group") {
  FiniteGroup g = named("2D4");
  ConjClasses cc = conjugacy_classes(g);
  REQUIRE(cc.count() == 5);
  CHECK(cc.sizes == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(cc.element_orders == std::vector<int>{1, 2, 4, 4, 4});
  CHECK(cc.labels == std::vector<std::string>{"1", "2", "4A", "4B", "4C"});
  int total = 0;
  for (int c = 0; c < cc.count(); ++c) {
    total += cc.sizes[size_t(c)];
    int rep = cc.representatives[size_t(c)];
    CHECK(cc.class_of[size_t(rep)] == c);
    CHECK(cc.sizes[size_t(c)] * centralizer_size(g, rep) == g.order());
  }
  CHECK(total == g.order());
}

TEST_CASE("conjugacy classes of the binary octahedral group") {
  FiniteGroup g = named("2O");
  ConjClasses cc = conjugacy_classes(g);
  REQUIRE(cc.count() == 8);
  CHECK(cc.sizes == std::vector<int>{1, 1, 8, 6, 12, 8, 6, 6});
  CHECK(cc.element_orders == std::vector<int>{1, 2, 3, 4, 4, 6, 8, 8});
  CHECK(cc.labels[3] == "4A");
  CHECK(cc.labels[4] == "4B");
  CHECK(cc.labels[6] == "8A");

  FiniteGroup trivial = close_generators({perm({0})}, 5);
  CHECK(conjugacy_classes(trivial).count() == 1);
}

TEST_CASE("power maps on classes") {
  FiniteGroup q8 = named("2D4");
  ConjClasses cc = conjugacy_classes(q8);
  std::vector<int> square = power_map(q8, cc, 2);
  // Every order-4 class squares into the central involution.
  CHECK(square == std::vector<int>{0, 0, 1, 1, 1});
  std::vector<int> identity_map = power_map(q8, cc, 1);
  for (int c = 0; c < cc.count(); ++c) CHECK(identity_map[size_t(c)] == c);

  FiniteGroup c3 = close_generators({perm({1, 2, 0})}, 10);
  ConjClasses cc3 = conjugacy_classes(c3);
  std::vector<int> cube = power_map(c3, cc3, 3);
  for (int c = 0; c < cc3.count(); ++c) CHECK(cube[size_t(c)] == 0);
}

TEST_CASE("catalog census checks") {
  for (const char* name : {"C6", "2D6", "2T", "S4"}) {
    CatalogId id = parse_catalog_name(name).value();
    FiniteGroup g = build(id);
    validate_census(id, g);
  }
  CHECK(named("2D6").order() == 12);
  CHECK(conjugacy_classes(named("2D6")).count() == 6);
  CHECK(named("2I").order() == 120);
  CHECK(conjugacy_classes(named("2I")).count() == 9);
  CHECK(named("GL2F3").order() == 48);

  CHECK_FALSE(parse_catalog_name("Q8").has_value());
  CHECK_FALSE(parse_catalog_name("2D5").has_value());
  CHECK_FALSE(parse_catalog_name("S9").has_value());
  CHECK(parse_catalog_name("2D16").value().name() == "2D16");

  // Binary dihedral 2D_{2n} has n + 3 element classes.
  for (int n = 2; n <= 8; ++n) {
    CatalogId id{CatalogFamily::BinaryDihedral, n};
    FiniteGroup g = build(id);
    CHECK(g.order() == 4 * n);
    CHECK(conjugacy_classes(g).count() == n + 3);
  }
}
