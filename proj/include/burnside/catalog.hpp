#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

enum class CatalogFamily {
  Cyclic,            // C_n, any n >= 1
  BinaryDihedral,    // 2D_{2n} of order 4n, n >= 2 (2D4 is the quaternion group)
  BinaryTetrahedral, // 2T = SL(2,3)
  BinaryOctahedral,  // 2O
  BinaryIcosahedral, // 2I = SL(2,5)
  GL2F3,             // all invertible 2x2 matrices over F_3
  Symmetric,         // S_n, 1 <= n <= 8
};

struct CatalogId {
  CatalogFamily family;
  int parameter = 0;  // n for the parametric families, unused otherwise

  std::string name() const;  // canonical CLI spelling: C4, 2D12, 2T, S5, ...
  bool operator==(const CatalogId&) const = default;
};

// Parses canonical CLI spellings; returns nullopt when the string names no
// catalog entry.
std::optional<CatalogId> parse_catalog_name(const std::string& name);

// All ids the CLI advertises (cyclic and symmetric families truncated to the
// documented parameter ranges).
std::vector<CatalogId> catalog_listing();

// Generators in the published matrix/permutation models.
std::vector<GroupElement> catalog_generators(const CatalogId& id);

FiniteGroup build(const CatalogId& id);

// Cross-checks a built group against the reference census (order, conjugacy
// class count, subgroup class count, cyclic subgroup class count) where the
// census covers the id.  Throws std::runtime_error on any mismatch.
struct CatalogCensus {
  int order = 0;
  int conjugacy_classes = -1;     // -1: not pinned for this id
  int subgroup_classes = -1;
  int cyclic_subgroup_classes = -1;
};
CatalogCensus expected_census(const CatalogId& id);
void validate_census(const CatalogId& id, const FiniteGroup& g);

}  // namespace burnside
