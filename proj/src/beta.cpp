#include "burnside/beta.hpp"

#include <stdexcept>

#include "burnside/smith.hpp"

namespace burnside {

std::vector<ClassFunction> image_characters(const FiniteGroup& g, const ConjClasses& cc,
                                            const MarksTable& marks, const ImageBasis& image) {
  // Permutation characters of the basis transitive sets, in the decreasing
  // presentation order used by the reduced basis.
  std::vector<ClassFunction> perm;
  for (int pos = 0; pos < int(image.decreasing.size()); ++pos)
    perm.push_back(permutation_character(g, cc, marks.classes[image.decreasing[pos]]));

  std::vector<ClassFunction> out;
  for (int i = 0; i < image.u_tilde.rows(); ++i) {
    ClassFunction v;
    for (int c = 0; c < cc.count(); ++c) {
      Cyclotomic acc = Cyclotomic(BigRational(0));
      for (int j = 0; j < image.u_tilde.cols(); ++j) {
        if (image.u_tilde.at(i, j) == 0) continue;
        acc += perm[j].values[c].scaled(BigRational(image.u_tilde.at(i, j)));
      }
      v.values.push_back(std::move(acc));
    }
    out.push_back(std::move(v));
  }

  // The reduced basis is orthogonal with the diagonal norms certified during
  // row reduction; re-check the inner products at the character level.
  for (size_t a = 0; a < out.size(); ++a)
    for (size_t b = a; b < out.size(); ++b) {
      BigRational ip = inner_product(g, cc, out[a], out[b]);
      BigRational want = a == b ? BigRational(image.norms[a]) : BigRational(0);
      if (ip != want)
        throw std::runtime_error("image_characters: inner products disagree with norms");
    }
  return out;
}

std::vector<BigInt> decompose(const FiniteGroup& g, const IrreducibleTable& t,
                              const CharacterLattice& lattice, const ClassFunction& chi) {
  std::vector<BigInt> cx = complex_coordinates(g, t, chi);
  for (int c = 0; c < t.classes.count(); ++c) {
    Cyclotomic acc = Cyclotomic(BigRational(0));
    for (int i = 0; i < t.count(); ++i)
      if (cx[i] != 0) acc += t.chars[i].values[c].scaled(BigRational(cx[i]));
    if (!(acc == chi.values[c]))
      throw std::runtime_error("decompose: class function is not a virtual character");
  }
  std::vector<BigInt> sol;
  if (!solve_integer_row(lattice.coords_in_complex, cx, sol))
    throw std::runtime_error("decompose: character lies outside the " +
                             field_tag_name(lattice.field_tag) + " lattice");
  return sol;
}

CokernelPresentation cokernel(const CharacterLattice& lattice, const IntMatrix& image_coords) {
  CokernelPresentation out;
  out.quotient = lattice_quotient(lattice.rank(), image_coords);
  std::vector<std::string> rho;
  for (int i = 1; i <= lattice.coords_in_complex.cols(); ++i)
    rho.push_back("rho" + std::to_string(i));
  auto to_name = [&](const std::vector<BigInt>& row_in_lattice) {
    std::vector<BigInt> cx(lattice.coords_in_complex.cols(), BigInt(0));
    for (int b = 0; b < lattice.rank(); ++b)
      for (int c = 0; c < lattice.coords_in_complex.cols(); ++c)
        cx[c] += row_in_lattice[b] * lattice.coords_in_complex.at(b, c);
    return format_combination(cx, rho);
  };
  for (const auto& r : out.quotient.torsion_generators) out.torsion_generators.push_back(to_name(r));
  for (const auto& r : out.quotient.free_generators) out.free_generators.push_back(to_name(r));
  return out;
}

namespace {

BetaReport analyze_group(std::string name, FiniteGroup g, const std::vector<FieldTag>& fields) {
  BetaReport rep;
  rep.group_name = std::move(name);
  rep.order = g.order();
  rep.classes = conjugacy_classes(g);
  rep.marks = table_of_marks(g, enumerate_subgroup_classes(g));
  rep.structure = structure_constants(rep.marks);
  rep.image = image_basis(rep.structure, rep.marks);
  rep.group = std::move(g);
  rep.image_chars = image_characters(rep.group, rep.classes, rep.marks, rep.image);
  rep.table = complex_irreducibles(rep.group);

  int cyclic = 0;
  for (const auto& cls : rep.marks.classes)
    if (cls.is_cyclic) ++cyclic;
  if (rep.image.h_tilde.rows() != cyclic)
    throw std::runtime_error("analyze: linearization rank disagrees with cyclic subgroup count");
  rep.kernel_rank = int(rep.marks.classes.size()) - rep.image.h_tilde.rows();

  for (FieldTag tag : fields) {
    CharacterLattice lattice;
    switch (tag) {
      case FieldTag::Rational:
        lattice = rational_irreducible_basis(rep.group, rep.table, cyclic);
        break;
      case FieldTag::Real:
        lattice = real_irreducible_basis(rep.group, rep.table);
        break;
      case FieldTag::Complex: {
        lattice.field_tag = FieldTag::Complex;
        lattice.coords_in_complex = IntMatrix::identity(rep.table.count());
        for (int i = 1; i <= rep.table.count(); ++i)
          lattice.names.push_back("rho" + std::to_string(i));
        break;
      }
      case FieldTag::Integral:
        lattice = integer_character_sublattice(rep.table);
        break;
      case FieldTag::IntegralReal:
        lattice = integer_real_sublattice(rep.group, rep.table);
        break;
    }
    IntMatrix coords(int(rep.image_chars.size()), lattice.rank());
    for (size_t v = 0; v < rep.image_chars.size(); ++v) {
      std::vector<BigInt> sol = decompose(rep.group, rep.table, lattice, rep.image_chars[v]);
      for (int b = 0; b < lattice.rank(); ++b) coords.at(int(v), b) = sol[b];
    }
    rep.cokernels.emplace(tag, cokernel(lattice, coords));
    rep.image_coords.emplace(tag, std::move(coords));
    rep.lattices.emplace(tag, std::move(lattice));
  }
  return rep;
}

}  // namespace

BetaReport analyze(const CatalogId& id, const std::vector<FieldTag>& fields) {
  FiniteGroup g = build(id);
  validate_census(id, g);
  return analyze_group(id.name(), std::move(g), fields);
}

BetaReport analyze_generators(const std::string& name, const std::vector<GroupElement>& generators,
                              const std::vector<FieldTag>& fields, int order_cap) {
  FiniteGroup g = close_generators(generators, order_cap);
  return analyze_group(name, std::move(g), fields);
}

}  // namespace burnside
