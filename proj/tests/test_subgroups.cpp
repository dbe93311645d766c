#include "doctest.h"

#include <algorithm>
#include <vector>

#include "burnside/catalog.hpp"
#include "burnside/subgroups.hpp"

using namespace burnside;

namespace {

MarksTable marks_for(const std::string& name) {
  FiniteGroup g = build(parse_catalog_name(name).value());
  return table_of_marks(g, enumerate_subgroup_classes(g));
}

std::vector<int> class_orders(const std::vector<SubgroupClass>& classes) {
  std::vector<int> orders;
  for (const auto& c : classes) orders.push_back(c.order);
  return orders;
}

}  // namespace

TEST_CASE("subgroup classes of small groups") {
  FiniteGroup q8 = build(parse_catalog_name("2D4").value());
  auto classes = enumerate_subgroup_classes(q8);
  CHECK(class_orders(classes) == std::vector<int>{1, 2, 4, 4, 4, 8});
  for (const auto& c : classes) {
    CHECK(c.conjugate_count == 1);  // every subgroup of Q8 is normal
    CHECK(c.index * c.order == q8.order());
    CHECK(c.is_cyclic == (c.order < 8));
  }

  FiniteGroup big = build(parse_catalog_name("2D12").value());
  auto big_classes = enumerate_subgroup_classes(big);
  CHECK(class_orders(big_classes) ==
        std::vector<int>{1, 2, 3, 4, 4, 4, 6, 8, 12, 12, 12, 24});

  FiniteGroup trivial = close_generators({Permutation{{0}}}, 2);
  CHECK(enumerate_subgroup_classes(trivial).size() == 1);
}

TEST_CASE("subgroup representatives are closed and consistent") {
  FiniteGroup g = build(parse_catalog_name("S4").value());
  auto classes = enumerate_subgroup_classes(g);
  REQUIRE(classes.size() == 11);
  for (const auto& c : classes) {
    REQUIRE(int(c.representative.size()) == c.order);
    for (int a : c.representative)
      for (int b : c.representative) {
        int ab = g.mul(a, b);
        CHECK(std::binary_search(c.representative.begin(), c.representative.end(), ab));
      }
  }
  CHECK(linear_extension(g, classes) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("pinned marks tables") {
  MarksTable c2 = marks_for("C2");
  CHECK(c2.marks == IntMatrix{{2, 0}, {1, 1}});

  MarksTable c4 = marks_for("C4");
  CHECK(c4.marks == IntMatrix{{4, 0, 0}, {2, 2, 0}, {1, 1, 1}});
}

TEST_CASE("marks table shape invariants") {
  for (const char* name : {"C6", "2D6", "2T", "S4"}) {
    MarksTable t = marks_for(name);
    const int m = int(t.classes.size());
    const int order = t.classes.back().order;  // the whole group comes last
    REQUIRE(t.marks.rows() == m);
    REQUIRE(t.marks.cols() == m);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) CHECK(t.marks.at(i, j) == 0);
      CHECK(t.marks.at(i, 0) == t.classes[size_t(i)].index);
      CHECK(t.marks.at(m - 1, i) == 1);
      CHECK(t.marks.at(i, i) > 0);
      // m_ii = |N(H_i)| / |H_i| and conjugate_count = |G| / |N(H_i)|.
      CHECK(t.marks.at(i, i) * t.classes[size_t(i)].conjugate_count ==
            t.classes[size_t(i)].index);
    }
    CHECK(t.marks.at(0, 0) == order);
  }
}

TEST_CASE("marks agree with direct fixed-point counts") {
  FiniteGroup g = build(parse_catalog_name("2D6").value());
  auto classes = enumerate_subgroup_classes(g);
  MarksTable t = table_of_marks(g, classes);
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = 0; j < classes.size(); ++j)
      CHECK(t.marks.at(int(i), int(j)) ==
            fixed_cosets(g, classes[i].representative, classes[j].representative));
}

TEST_CASE("element fixed-coset counts satisfy the orbit-count identity") {
  FiniteGroup g = build(parse_catalog_name("S4").value());
  ConjClasses cc = conjugacy_classes(g);
  for (const auto& h : enumerate_subgroup_classes(g)) {
    std::vector<int> fix = element_fixed_cosets(g, cc, h.representative);
    REQUIRE(int(fix.size()) == cc.count());
    CHECK(fix[0] == h.index);  // identity fixes every coset
    long weighted = 0;
    for (int c = 0; c < cc.count(); ++c) weighted += long(cc.sizes[size_t(c)]) * fix[size_t(c)];
    // Burnside's lemma: the transitive action G/H has exactly one orbit.
    CHECK(weighted == g.order());
  }
}
