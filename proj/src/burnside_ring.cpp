#include "burnside/burnside_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace burnside {

BurnsideStructure structure_constants(const MarksTable& marks) {
  const int m = marks.marks.rows();
  RatMatrix inv = triangular_inverse(marks.marks);
  BurnsideStructure out;
  out.constants.assign(m, std::vector<std::vector<BigInt>>(m, std::vector<BigInt>(m)));
  out.multiplicities = IntMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      BigInt total = 0;
      for (int l = 0; l < m; ++l) {
        // Marks are multiplicative on products of G-sets, so the product's
        // mark vector is the pointwise product, pulled back through m^{-1}.
        BigRational acc = 0;
        for (int k = 0; k < m; ++k) {
          if (marks.marks.at(i, k) == 0 || marks.marks.at(j, k) == 0) continue;
          acc += BigRational(marks.marks.at(i, k) * marks.marks.at(j, k)) * inv.at(k, l);
        }
        if (acc.get_den() != 1)
          throw std::runtime_error("structure_constants: non-integer coefficient");
        BigInt c = acc.get_num();
        if (c < 0) throw std::runtime_error("structure_constants: negative coefficient");
        out.constants[i][j][l] = c;
        out.constants[j][i][l] = c;
        total += c;
      }
      out.multiplicities.at(i, j) = total;
      out.multiplicities.at(j, i) = total;
      if (total <= 0) throw std::runtime_error("structure_constants: empty product");
    }
  return out;
}

std::vector<BigInt> oracle_structure_constants(const FiniteGroup& g,
                                               const std::vector<SubgroupClass>& classes,
                                               int i, int j) {
  const int n = g.order();
  // Left cosets of a subgroup, addressed by the minimal member of each coset.
  auto coset_ids = [&](const std::vector<int>& h) {
    std::vector<int> id(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
      if (id[x] >= 0) continue;
      int c = int(reps.size());
      reps.push_back(x);
      for (int hh : h) id[g.mul(x, hh)] = c;
      if (id[x] != c) throw std::runtime_error("oracle: coset labeling failed");
    }
    return std::pair(id, reps);
  };
  auto [id_i, reps_i] = coset_ids(classes[i].representative);
  auto [id_j, reps_j] = coset_ids(classes[j].representative);
  const int ni = int(reps_i.size()), nj = int(reps_j.size());

  // Canonical form of a subgroup: least conjugate element set.
  auto canonical = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    std::vector<int> best = s;
    std::vector<int> c(s.size());
    for (int x = 0; x < n; ++x) {
      for (size_t k = 0; k < s.size(); ++k) c[k] = g.conjugate(x, s[k]);
      std::sort(c.begin(), c.end());
      if (c < best) best = c;
    }
    return best;
  };

  std::vector<BigInt> counts(classes.size());
  std::vector<char> visited(size_t(ni) * nj, 0);
  for (int a = 0; a < ni; ++a)
    for (int b = 0; b < nj; ++b) {
      if (visited[size_t(a) * nj + b]) continue;
      // Orbit of (a, b) under the diagonal action.
      std::vector<std::pair<int, int>> orbit;
      std::vector<int> stab;
      for (int x = 0; x < n; ++x) {
        int pa = id_i[g.mul(x, reps_i[a])];
        int pb = id_j[g.mul(x, reps_j[b])];
        if (!visited[size_t(pa) * nj + pb]) {
          visited[size_t(pa) * nj + pb] = 1;
          orbit.emplace_back(pa, pb);
        }
        if (pa == a && pb == b) stab.push_back(x);
      }
      if (int(orbit.size()) * int(stab.size()) != n)
        throw std::runtime_error("oracle: orbit-stabilizer mismatch");
      std::vector<int> canon = canonical(stab);
      int found = -1;
      for (size_t c = 0; c < classes.size(); ++c)
        if (classes[c].representative == canon) {
          found = int(c);
          break;
        }
      if (found < 0) throw std::runtime_error("oracle: stabilizer class not in lattice");
      counts[found] += 1;
    }
  return counts;
}

ImageBasis image_basis(const BurnsideStructure& s, const MarksTable& marks) {
  const int m = s.multiplicities.rows();
  ImageBasis out;
  out.decreasing.resize(m);
  for (int i = 0; i < m; ++i) out.decreasing[i] = m - 1 - i;
  out.multiplicities = s.multiplicities.permuted_symmetric(out.decreasing);
  RowReduction rr = row_reduce_upper(out.multiplicities);
  out.h_tilde = rr.h_tilde;
  out.u_tilde = rr.u_tilde;
  out.pivot_cols = rr.pivot_cols;
  if (!(out.u_tilde * out.multiplicities == out.h_tilde))
    throw std::runtime_error("image_basis: reduction certificate failed");
  // Gram matrix of the basis vectors must come out diagonal and positive.
  IntMatrix gram = out.u_tilde * out.multiplicities * out.u_tilde.transposed();
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.cols(); ++j) {
      if (i == j) continue;
      if (gram.at(i, j) != 0) throw std::runtime_error("image_basis: basis not orthogonal");
    }
  for (int i = 0; i < gram.rows(); ++i) {
    if (gram.at(i, i) <= 0) throw std::runtime_error("image_basis: nonpositive norm");
    out.norms.push_back(gram.at(i, i));
  }
  for (int i = 0; i < out.h_tilde.rows(); ++i)
    for (int c = 0; c < out.h_tilde.cols(); ++c)
      if (out.h_tilde.at(i, c) % out.norms[i] != 0)
        throw std::runtime_error("image_basis: norm does not divide reduced row");
  return out;
}

}  // namespace burnside
