#pragma once

#include <vector>

#include "burnside/group.hpp"
#include "burnside/matrix.hpp"

namespace burnside {

struct SubgroupClass {
  std::vector<int> representative;  // sorted element indices of one member
  int order = 0;
  int index = 0;            // number of cosets
  int conjugate_count = 0;  // size of the conjugacy class of subgroups
  bool is_cyclic = false;
};

// All subgroups up to conjugacy, sorted by (order, lexicographic
// representative).  Every subgroup arises from a cyclic seed by repeatedly
// adjoining one element and closing; conjugacy is decided by exhaustive
// conjugation.  Throws std::runtime_error when the number of distinct
// subgroups exceeds subgroup_cap.
std::vector<SubgroupClass> enumerate_subgroup_classes(const FiniteGroup& g,
                                                      int subgroup_cap = 200000);

// Verifies that the class order is a linear extension of subconjugacy: if a
// member of class i is conjugate into a member of class j then i <= j.
// Returns the identity permutation on success; throws on violation.
std::vector<int> linear_extension(const FiniteGroup& g,
                                  const std::vector<SubgroupClass>& classes);

struct MarksTable {
  std::vector<SubgroupClass> classes;  // increasing order
  IntMatrix marks;  // marks.at(i, j) = #fixed points of class j on G/H_i
};

// Table of marks in the increasing class order: lower triangular with
// positive diagonal.
MarksTable table_of_marks(const FiniteGroup& g, const std::vector<SubgroupClass>& classes);

// Fixed-coset count of the subgroup `sub` (element index set) acting on G/H.
int fixed_cosets(const FiniteGroup& g, const std::vector<int>& h,
                 const std::vector<int>& sub);

// Fixed-coset count of a single element on G/H, for all classes at once:
// result[c] = #{ xH : rep(c) xH = xH }.
std::vector<int> element_fixed_cosets(const FiniteGroup& g, const ConjClasses& cc,
                                      const std::vector<int>& h);

}  // namespace burnside
