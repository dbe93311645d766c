#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/matrix.hpp"

namespace burnside {

// Frozen expected values for the worked examples, in the decreasing (whole
// group first) presentation order used by the published tables.
struct ReferenceQuotient {
  int free_rank = 0;
  std::vector<long> torsion;  // invariant factors > 1
};

struct ReferenceGroup {
  std::string name;  // catalog spelling
  // (order, cosets, conjugates, cyclic) per subgroup class
  std::vector<std::array<long, 4>> subgroup_tuples;
  IntMatrix multiplicities;  // orbit-count Gram matrix
  IntMatrix h_tilde;         // reduced form, zero rows dropped
  // Image characters: one row per basis vector V_i; columns follow
  // image_column_keys.
  std::vector<std::pair<int, int>> image_column_keys;  // (element order, class size)
  std::vector<std::vector<long>> image_rows;
  // Cokernel invariants; unset entries are not part of the reference set.
  std::optional<ReferenceQuotient> coker_rational, coker_real, coker_complex;
};

const std::vector<ReferenceGroup>& reference_groups();
const ReferenceGroup& reference_group(const std::string& name);

// Spellings of the groups whose integral-real cokernel is expected to vanish
// (the reference set plus 2D14 and 2D16).
const std::vector<std::string>& integral_real_vanishing_set();

struct ReferenceCheckResult {
  std::string group;
  std::string check;
  bool passed = false;
  std::string detail;
};

// Recomputes every reference group and compares subgroup tuples,
// multiplicities, reduced form, image characters and cokernel invariants.
// Ordering freedom: subgroup classes with identical (order, cosets,
// conjugates, cyclic) tuples and image columns with identical (element order,
// class size) keys may be permuted.
std::vector<ReferenceCheckResult> run_reference_checks();

}  // namespace burnside
