#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/catalog.hpp"
#include "burnside/characters.hpp"
#include "burnside/smith.hpp"

namespace burnside {

// Cokernel of the linearization map restricted to one coefficient field,
// presented with named generators.
struct CokernelPresentation {
  LatticeQuotient quotient;
  std::vector<std::string> torsion_generators;  // combinations of basis names
  std::vector<std::string> free_generators;
  bool surjective() const { return quotient.is_trivial(); }
};

struct BetaReport {
  std::string group_name;
  int order = 0;
  FiniteGroup group;
  ConjClasses classes;
  MarksTable marks;                       // increasing class order
  BurnsideStructure structure;            // increasing class order
  ImageBasis image;                       // decreasing presentation
  std::vector<ClassFunction> image_chars; // characters of the V_i
  IrreducibleTable table;
  std::map<FieldTag, CharacterLattice> lattices;
  // V_i coordinates over each lattice basis
  std::map<FieldTag, IntMatrix> image_coords;
  std::map<FieldTag, CokernelPresentation> cokernels;
  int kernel_rank = 0;
};

// Characters of the image basis vectors: integer combinations of transitive
// permutation characters prescribed by u_tilde.  Orthogonality against the
// norms d_i is re-verified.
std::vector<ClassFunction> image_characters(const FiniteGroup& g, const ConjClasses& cc,
                                            const MarksTable& marks, const ImageBasis& image);

// Coordinates of chi over the lattice basis; throws std::runtime_error when
// chi does not lie in the lattice.
std::vector<BigInt> decompose(const FiniteGroup& g, const IrreducibleTable& t,
                              const CharacterLattice& lattice, const ClassFunction& chi);

CokernelPresentation cokernel(const CharacterLattice& lattice, const IntMatrix& image_coords);

// Full pipeline for a catalog group or explicit generators.
BetaReport analyze(const CatalogId& id, const std::vector<FieldTag>& fields);
BetaReport analyze_generators(const std::string& name,
                              const std::vector<GroupElement>& generators,
                              const std::vector<FieldTag>& fields, int order_cap);

}  // namespace burnside
