#pragma once

#include <string>
#include <vector>

#include "burnside/cyclotomic.hpp"
#include "burnside/group.hpp"
#include "burnside/matrix.hpp"
#include "burnside/subgroups.hpp"

namespace burnside {

// Class function with algebraic-integer values, one per conjugacy class.
struct ClassFunction {
  std::vector<Cyclotomic> values;
  bool operator==(const ClassFunction& o) const;
};

struct IrreducibleTable {
  ConjClasses classes;
  std::vector<ClassFunction> chars;  // sorted by (degree, value sequence)
  std::vector<BigInt> degrees;
  std::vector<int> fs_indicators;    // +1 real, 0 complex, -1 quaternionic
  int count() const { return int(chars.size()); }
};

// Exact complex character table via modular class-algebra diagonalization:
// eigenvectors over F_p for the smallest admissible prime p (p = 1 mod
// exponent, p^2 > 4|G|, p coprime to |G|), then eigenvalue-multiplicity
// lifting into Q(zeta_exponent).
IrreducibleTable complex_irreducibles(const FiniteGroup& g);

// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2); asserted to be -1, 0, 1.
int fs_indicator(const FiniteGroup& g, const ConjClasses& cc, const ClassFunction& chi);

// (1/|G|) sum_g chi(g) psi(g^{-1}); asserted rational.
BigRational inner_product(const FiniteGroup& g, const ConjClasses& cc,
                          const ClassFunction& chi, const ClassFunction& psi);

enum class FieldTag { Rational, Real, Complex, Integral, IntegralReal };
std::string field_tag_name(FieldTag tag);

// Z-basis of a character subring, each vector given by its coordinates over
// the complex irreducibles.
struct CharacterLattice {
  FieldTag field_tag;
  std::vector<std::string> names;   // "rho3", "rho2+rho3", "2rho5", ...
  IntMatrix coords_in_complex;      // one row per basis vector
  int rank() const { return coords_in_complex.rows(); }
};

// Basis of the real representation ring: chi (indicator +1), chi + conj(chi)
// (indicator 0, one vector per conjugate pair), 2chi (indicator -1).
CharacterLattice real_irreducible_basis(const FiniteGroup& g, const IrreducibleTable& t);

// Basis of the rational representation ring: Galois orbit sums, doubled for
// quaternionic orbits.  The basis size must equal the number of cyclic
// subgroup classes when that count is supplied (pass -1 to skip the check).
CharacterLattice rational_irreducible_basis(const FiniteGroup& g, const IrreducibleTable& t,
                                            int expected_rank = -1);

// Lattice of virtual characters with integer values: integer kernel of the
// non-rational coordinate block of the value matrix, basis in Hermite normal
// form.
CharacterLattice integer_character_sublattice(const IrreducibleTable& t);

// Integer-valued sublattice of the real representation ring, coordinates
// rewritten over the complex irreducibles.
CharacterLattice integer_real_sublattice(const FiniteGroup& g, const IrreducibleTable& t);

// Permutation character of G/H: values are fixed-coset counts.
ClassFunction permutation_character(const FiniteGroup& g, const ConjClasses& cc,
                                    const SubgroupClass& h);

// Coordinates of chi over the complex irreducibles (inner products); throws
// if any coordinate fails to be a non-negative-free integer (virtual
// characters allowed, non-integers not).
std::vector<BigInt> complex_coordinates(const FiniteGroup& g, const IrreducibleTable& t,
                                        const ClassFunction& chi);

// Human-readable combination of named basis vectors, e.g. "rho2+2rho5-rho7".
std::string format_combination(const std::vector<BigInt>& coeffs,
                               const std::vector<std::string>& names);

}  // namespace burnside
