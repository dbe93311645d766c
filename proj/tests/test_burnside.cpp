#include "doctest.h"

#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/catalog.hpp"
#include "burnside/reference_data.hpp"
#include "burnside/subgroups.hpp"

using namespace burnside;

namespace {

struct Ring {
  FiniteGroup g;
  MarksTable marks;
  BurnsideStructure structure;
};

Ring ring_for(const std::string& name) {
  FiniteGroup g = build(parse_catalog_name(name).value());
  MarksTable marks = table_of_marks(g, enumerate_subgroup_classes(g));
  BurnsideStructure s = structure_constants(marks);
  return {std::move(g), std::move(marks), std::move(s)};
}

std::vector<BigInt> unit_vector(size_t m, size_t at, long value = 1) {
  std::vector<BigInt> v(m, BigInt{});
  v[at] = value;
  return v;
}

}  // namespace

TEST_CASE("pinned products of transitive sets") {
  // C2, classes (1, C2): the regular set squares to twice itself.
  Ring c2 = ring_for("C2");
  CHECK(c2.structure.constants[0][0] == unit_vector(2, 0, 2));
  CHECK(c2.structure.multiplicities.at(0, 0) == 2);

  // C3, classes (1, C3): multiplicity matrix in increasing order.
  Ring c3 = ring_for("C3");
  CHECK(c3.structure.multiplicities == IntMatrix{{3, 1}, {1, 1}});

  // C4, classes (1, C2, C4): [G/C2] squares to 2 [G/C2].
  Ring c4 = ring_for("C4");
  CHECK(c4.structure.constants[1][1] == unit_vector(3, 1, 2));

  // 2D6, classes (1, C2, C3, C4, C6, G): the C4 set squares to C4 + C2.
  Ring d6 = ring_for("2D6");
  REQUIRE(d6.marks.classes.size() == 6);
  REQUIRE(d6.marks.classes[3].order == 4);
  std::vector<BigInt> expect(6, BigInt{});
  expect[1] = 1;
  expect[3] = 1;
  CHECK(d6.structure.constants[3][3] == expect);

  // Q8: distinct C4 classes multiply to the central C2 orbit, any pair.
  Ring q8 = ring_for("2D4");
  for (size_t i = 2; i <= 4; ++i)
    for (size_t j = 2; j <= 4; ++j) {
      if (i == j) continue;
      CHECK(q8.structure.constants[i][j] == unit_vector(6, 1));
    }
}

TEST_CASE("the class of G is the multiplicative unit") {
  Ring s4 = ring_for("S4");
  const size_t m = s4.marks.classes.size();
  for (size_t j = 0; j < m; ++j) {
    CHECK(s4.structure.constants[m - 1][j] == unit_vector(m, j));
    CHECK(s4.structure.constants[j][m - 1] == unit_vector(m, j));
  }
}

TEST_CASE("structure constants match the orbit oracle") {
  for (const char* name : {"C6", "2D6", "S4"}) {
    Ring r = ring_for(name);
    const int m = int(r.marks.classes.size());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        CHECK(r.structure.constants[size_t(i)][size_t(j)] ==
              oracle_structure_constants(r.g, r.marks.classes, i, j));
  }
}

TEST_CASE("multiplicities satisfy the hom-count identity") {
  for (const char* name : {"2D8", "S4"}) {
    Ring r = ring_for(name);
    ConjClasses cc = conjugacy_classes(r.g);
    const int m = int(r.marks.classes.size());
    std::vector<std::vector<int>> fix;
    for (const auto& h : r.marks.classes)
      fix.push_back(element_fixed_cosets(r.g, cc, h.representative));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        BigInt total = 0;
        for (int c = 0; c < cc.count(); ++c)
          total += BigInt(cc.sizes[size_t(c)]) * fix[size_t(i)][size_t(c)] *
                   fix[size_t(j)][size_t(c)];
        CHECK(total == r.structure.multiplicities.at(i, j) * r.g.order());
      }
  }
}

TEST_CASE("image basis of C3") {
  Ring c3 = ring_for("C3");
  ImageBasis image = image_basis(c3.structure, c3.marks);
  // Decreasing presentation: position 0 is C3 itself, position 1 the point.
  REQUIRE(image.decreasing.size() == 2);
  CHECK(c3.marks.classes[size_t(image.decreasing[0])].order == 3);
  CHECK(image.multiplicities == IntMatrix{{1, 1}, {1, 3}});
  CHECK(image.h_tilde == IntMatrix{{1, 1}, {0, 2}});
  CHECK(image.u_tilde == IntMatrix{{1, 0}, {-1, 1}});
  CHECK(image.norms == std::vector<BigInt>{1, 2});
}

TEST_CASE("image basis of the quaternion group matches the frozen table") {
  Ring q8 = ring_for("2D4");
  ImageBasis image = image_basis(q8.structure, q8.marks);
  const ReferenceGroup& ref = reference_group("2D4");
  CHECK(image.multiplicities == ref.multiplicities);
  CHECK(image.h_tilde == ref.h_tilde);
  REQUIRE(image.norms.size() == 5);
  CHECK(image.norms.back() == 4);
}

TEST_CASE("image basis diagonalizes the Gram form") {
  for (const char* name : {"C1", "2D8", "S4"}) {
    Ring r = ring_for(name);
    ImageBasis image = image_basis(r.structure, r.marks);
    IntMatrix gram = image.u_tilde * image.multiplicities * image.u_tilde.transposed();
    REQUIRE(gram.rows() == int(image.norms.size()));
    for (int i = 0; i < gram.rows(); ++i) {
      for (int j = 0; j < gram.rows(); ++j)
        CHECK(gram.at(i, j) == (i == j ? image.norms[size_t(i)] : BigInt{}));
      CHECK(image.norms[size_t(i)] > 0);
      for (int j = 0; j < image.h_tilde.cols(); ++j)
        CHECK(image.h_tilde.at(i, j) % image.norms[size_t(i)] == 0);
    }
  }
}
