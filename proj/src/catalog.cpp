#include "burnside/catalog.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "burnside/subgroups.hpp"

namespace burnside {

namespace {

GroupElement perm(std::vector<uint32_t> img) { return Permutation{std::move(img)}; }

GroupElement gf_mat(uint32_t p, std::vector<uint32_t> a) {
  return MatrixOverPrimeField{p, 2, std::move(a)};
}

Cyclotomic zeta(unsigned e, long k) { return Cyclotomic::root_power(e, k); }

GroupElement cyc_mat(unsigned e, std::vector<Cyclotomic> a) {
  return MatrixOverCyclotomic{e, uint32_t(a.size() == 1 ? 1 : 2), std::move(a)};
}

int factorial(int n) {
  int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::string CatalogId::name() const {
  switch (family) {
    case CatalogFamily::Cyclic: return "C" + std::to_string(parameter);
    case CatalogFamily::BinaryDihedral: return "2D" + std::to_string(2 * parameter);
    case CatalogFamily::BinaryTetrahedral: return "2T";
    case CatalogFamily::BinaryOctahedral: return "2O";
    case CatalogFamily::BinaryIcosahedral: return "2I";
    case CatalogFamily::GL2F3: return "GL2F3";
    case CatalogFamily::Symmetric: return "S" + std::to_string(parameter);
  }
  throw std::logic_error("unreachable");
}

std::optional<CatalogId> parse_catalog_name(const std::string& name) {
  auto digits = [](const std::string& s) -> std::optional<int> {
    if (s.empty() || s.size() > 6) return std::nullopt;
    for (char c : s)
      if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::stoi(s);
  };
  if (name == "2T") return CatalogId{CatalogFamily::BinaryTetrahedral};
  if (name == "2O") return CatalogId{CatalogFamily::BinaryOctahedral};
  if (name == "2I") return CatalogId{CatalogFamily::BinaryIcosahedral};
  if (name == "GL2F3") return CatalogId{CatalogFamily::GL2F3};
  if (name.rfind("2D", 0) == 0) {
    auto n = digits(name.substr(2));
    if (!n || *n < 4 || *n % 2) return std::nullopt;
    return CatalogId{CatalogFamily::BinaryDihedral, *n / 2};
  }
  if (name[0] == 'C') {
    auto n = digits(name.substr(1));
    if (!n || *n < 1) return std::nullopt;
    return CatalogId{CatalogFamily::Cyclic, *n};
  }
  if (name[0] == 'S') {
    auto n = digits(name.substr(1));
    if (!n || *n < 1 || *n > 8) return std::nullopt;
    return CatalogId{CatalogFamily::Symmetric, *n};
  }
  return std::nullopt;
}

std::vector<CatalogId> catalog_listing() {
  std::vector<CatalogId> out;
  for (int n = 1; n <= 30; ++n) out.push_back({CatalogFamily::Cyclic, n});
  for (int n = 2; n <= 8; ++n) out.push_back({CatalogFamily::BinaryDihedral, n});
  out.push_back({CatalogFamily::BinaryTetrahedral});
  out.push_back({CatalogFamily::BinaryOctahedral});
  out.push_back({CatalogFamily::BinaryIcosahedral});
  out.push_back({CatalogFamily::GL2F3});
  for (int n = 2; n <= 8; ++n) out.push_back({CatalogFamily::Symmetric, n});
  return out;
}

std::vector<GroupElement> catalog_generators(const CatalogId& id) {
  switch (id.family) {
    case CatalogFamily::Cyclic: {
      int n = id.parameter;
      if (n < 1) throw std::invalid_argument("cyclic: parameter must be >= 1");
      if (n == 1) return {cyc_mat(1, {Cyclotomic(BigRational(1))})};
      unsigned e = unsigned(n);
      return {cyc_mat(e, {zeta(e, 1), Cyclotomic::zero(e), Cyclotomic::zero(e), zeta(e, -1)})};
    }
    case CatalogFamily::BinaryDihedral: {
      int n = id.parameter;
      if (n < 2) throw std::invalid_argument("binary dihedral: parameter must be >= 2");
      unsigned e = unsigned(2 * n);
      Cyclotomic zero = Cyclotomic::zero(e);
      Cyclotomic one = Cyclotomic(BigRational(1)).lifted(e);
      return {cyc_mat(e, {zeta(e, 1), zero, zero, zeta(e, -1)}),
              cyc_mat(e, {zero, -one, one, zero})};
    }
    case CatalogFamily::BinaryTetrahedral:
      return {gf_mat(3, {1, 1, 0, 1}), gf_mat(3, {0, 1, 2, 0})};
    case CatalogFamily::BinaryIcosahedral:
      return {gf_mat(5, {1, 1, 0, 1}), gf_mat(5, {0, 1, 4, 0})};
    case CatalogFamily::GL2F3:
      return {gf_mat(3, {1, 1, 0, 1}), gf_mat(3, {0, 1, 2, 0}), gf_mat(3, {2, 0, 0, 1})};
    case CatalogFamily::BinaryOctahedral: {
      // Unit quaternions as 2x2 matrices over Q(zeta_8): a+bi+cj+dk maps to
      // [[a+bi, c+di], [-c+di, a-bi]] with i = zeta_8^2.  Generators: the
      // units i and j plus the two trace-sqrt(2) rotations (1+i)/sqrt(2) and
      // (1+j)/sqrt(2); a single rotation family would only reach order 16.
      unsigned e = 8;
      Cyclotomic zero = Cyclotomic::zero(e);
      Cyclotomic one = Cyclotomic(BigRational(1)).lifted(e);
      // 1/sqrt(2) = (zeta_8 - zeta_8^3) / 2
      Cyclotomic isqrt2 = (zeta(e, 1) - zeta(e, 3)).scaled(BigRational(1, 2));
      return {
          cyc_mat(e, {zeta(e, 2), zero, zero, zeta(e, 6)}),   // i
          cyc_mat(e, {zero, one, -one, zero}),                // j
          cyc_mat(e, {zeta(e, 1), zero, zero, zeta(e, 7)}),   // (1+i)/sqrt(2)
          cyc_mat(e, {isqrt2, isqrt2, -isqrt2, isqrt2}),      // (1+j)/sqrt(2)
      };
    }
    case CatalogFamily::Symmetric: {
      int n = id.parameter;
      if (n < 1 || n > 8) throw std::invalid_argument("symmetric: parameter must be in 1..8");
      std::vector<uint32_t> id_img(n), cycle(n), swap01(n);
      for (int i = 0; i < n; ++i) id_img[i] = uint32_t(i);
      if (n == 1) return {perm(id_img)};
      swap01 = id_img;
      std::swap(swap01[0], swap01[1]);
      for (int i = 0; i < n; ++i) cycle[i] = uint32_t((i + 1) % n);
      if (n == 2) return {perm(swap01)};
      return {perm(swap01), perm(cycle)};
    }
  }
  throw std::logic_error("unreachable");
}

FiniteGroup build(const CatalogId& id) {
  CatalogCensus census = expected_census(id);
  FiniteGroup g = close_generators(catalog_generators(id), census.order);
  if (g.order() != census.order)
    throw std::runtime_error("catalog build: order mismatch for " + id.name());
  return g;
}

CatalogCensus expected_census(const CatalogId& id) {
  CatalogCensus c;
  auto divisor_count = [](int n) {
    int k = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) ++k;
    return k;
  };
  switch (id.family) {
    case CatalogFamily::Cyclic:
      c.order = id.parameter;
      c.conjugacy_classes = id.parameter;
      c.subgroup_classes = divisor_count(id.parameter);
      c.cyclic_subgroup_classes = c.subgroup_classes;
      break;
    case CatalogFamily::BinaryDihedral: {
      int n = id.parameter;
      c.order = 4 * n;
      c.conjugacy_classes = n + 3;
      static const std::map<int, std::pair<int, int>> pinned = {
          {2, {6, 5}},  {3, {6, 5}},  {4, {9, 6}},  {5, {6, 5}},
          {6, {12, 8}}, {7, {6, 5}},  {8, {12, 7}},
      };
      if (auto it = pinned.find(n); it != pinned.end()) {
        c.subgroup_classes = it->second.first;
        c.cyclic_subgroup_classes = it->second.second;
      }
      break;
    }
    case CatalogFamily::BinaryTetrahedral:
      c = {24, 7, 7, 5};
      break;
    case CatalogFamily::BinaryOctahedral:
      c = {48, 8, 13, 7};
      break;
    case CatalogFamily::BinaryIcosahedral:
      c = {120, 9, 12, 7};
      break;
    case CatalogFamily::GL2F3:
      c = {48, 8, 16, 7};
      break;
    case CatalogFamily::Symmetric: {
      int n = id.parameter;
      c.order = factorial(n);
      static const int partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
      c.conjugacy_classes = partitions[n];
      static const std::map<int, std::pair<int, int>> pinned = {
          {1, {1, 1}}, {2, {2, 2}}, {3, {4, 3}}, {4, {11, 5}}, {5, {19, 7}},
      };
      if (auto it = pinned.find(n); it != pinned.end()) {
        c.subgroup_classes = it->second.first;
        c.cyclic_subgroup_classes = it->second.second;
      }
      break;
    }
  }
  return c;
}

void validate_census(const CatalogId& id, const FiniteGroup& g) {
  CatalogCensus census = expected_census(id);
  if (g.order() != census.order)
    throw std::runtime_error("census: order mismatch for " + id.name());
  if (census.conjugacy_classes >= 0) {
    ConjClasses cc = conjugacy_classes(g);
    if (cc.count() != census.conjugacy_classes)
      throw std::runtime_error("census: conjugacy class count mismatch for " + id.name());
  }
  if (census.subgroup_classes >= 0) {
    auto classes = enumerate_subgroup_classes(g);
    if (int(classes.size()) != census.subgroup_classes)
      throw std::runtime_error("census: subgroup class count mismatch for " + id.name());
    int cyclic = 0;
    for (const auto& s : classes)
      if (s.is_cyclic) ++cyclic;
    if (cyclic != census.cyclic_subgroup_classes)
      throw std::runtime_error("census: cyclic subgroup class count mismatch for " + id.name());
  }
}

}  // namespace burnside
