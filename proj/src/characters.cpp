#include "burnside/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "burnside/smith.hpp"

namespace burnside {

namespace {

uint64_t fp_pow(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

uint64_t fp_inv(uint64_t a, uint64_t p) { return fp_pow(a, p - 2, p); }

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p with p = 1 (mod e), p^2 > 4|G| and p coprime to |G|, so
// degrees and eigenvalue multiplicities lift uniquely from (-p/2, p/2).
uint64_t dixon_prime(uint64_t order, uint64_t exponent) {
  for (uint64_t p = 2;; ++p) {
    if ((p - 1) % exponent != 0) continue;
    if (p * p <= 4 * order) continue;
    if (order % p == 0) continue;
    if (!is_prime(p)) continue;
    return p;
  }
}

uint64_t primitive_root(uint64_t p) {
  std::vector<uint64_t> prime_factors;
  uint64_t m = p - 1;
  for (uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    prime_factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) prime_factors.push_back(m);
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (uint64_t q : prime_factors)
      if (fp_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::runtime_error("primitive_root: none found");
}

using FpRow = std::vector<uint64_t>;
using FpMat = std::vector<FpRow>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> fp_rref(FpMat& m, uint64_t p) {
  std::vector<int> pivots;
  int row = 0;
  const int nr = int(m.size());
  const int nc = nr ? int(m[0].size()) : 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int sel = -1;
    for (int r = row; r < nr; ++r)
      if (m[r][col]) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    uint64_t inv = fp_inv(m[row][col], p);
    for (int c = col; c < nc; ++c) m[row][c] = m[row][c] * inv % p;
    for (int r = 0; r < nr; ++r) {
      if (r == row || !m[r][col]) continue;
      uint64_t f = m[r][col];
      for (int c = col; c < nc; ++c) m[r][c] = (m[r][c] + (p - f) * m[row][c]) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(pivots.size());
  return pivots;
}

// Basis of { x : x * n = 0 } as rows.
FpMat fp_left_kernel(const FpMat& n, uint64_t p) {
  const int d = int(n.size());
  FpMat t(d, FpRow(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t[i][j] = n[j][i];
  FpMat r = t;
  std::vector<int> pivots = fp_rref(r, p);
  std::vector<char> is_pivot(d, 0);
  for (int c : pivots) is_pivot[c] = 1;
  FpMat kernel;
  for (int free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    FpRow x(d, 0);
    x[free] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      x[pivots[pr]] = (p - r[pr][free]) % p;
    kernel.push_back(std::move(x));
  }
  return kernel;
}

struct Subspace {
  FpMat rows;           // RREF basis of the subspace
  std::vector<int> pivots;
};

Subspace make_subspace(FpMat rows, uint64_t p) {
  Subspace s;
  s.pivots = fp_rref(rows, p);
  s.rows = std::move(rows);
  return s;
}

}  // namespace

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (values.size() != o.values.size()) return false;
  for (size_t i = 0; i < values.size(); ++i)
    if (!(values[i] == o.values[i])) return false;
  return true;
}

IrreducibleTable complex_irreducibles(const FiniteGroup& g) {
  IrreducibleTable t;
  t.classes = conjugacy_classes(g);
  const int r = t.classes.count();
  const int n = g.order();
  const unsigned e = unsigned(g.exponent());

  std::vector<std::vector<int>> members(r);
  for (int x = 0; x < n; ++x) members[t.classes.class_of[x]].push_back(x);

  const uint64_t p = dixon_prime(uint64_t(n), e);

  // Class algebra coefficients a[i][j][k]: C_i C_j = sum_k a[i][j][k] C_k.
  std::vector<std::vector<std::vector<long long>>> coeff(
      r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
  for (int i = 0; i < r; ++i) {
    for (int x : members[i])
      for (int y = 0; y < n; ++y)
        coeff[i][t.classes.class_of[y]][t.classes.class_of[g.mul(x, y)]]++;
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        if (coeff[i][j][k] % t.classes.sizes[k] != 0)
          throw std::runtime_error("complex_irreducibles: class coefficient not integral");
        coeff[i][j][k] /= t.classes.sizes[k];
      }
  }

  // Split the common eigenvectors of the class-sum action over F_p.  Each
  // pass is invariant-subspace preserving, so one sweep over the classes
  // separates every pair of distinct eigenvalue systems.
  std::vector<Subspace> spaces;
  {
    FpMat full(r, FpRow(r, 0));
    for (int i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(make_subspace(std::move(full), p));
  }
  for (int i = 1; i < r; ++i) {
    FpMat ai(r, FpRow(r));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) ai[j][k] = uint64_t(coeff[i][j][k] % (long long)(p));
    bool all_lines = true;
    for (const auto& s : spaces)
      if (s.rows.size() > 1) all_lines = false;
    if (all_lines) break;

    std::vector<Subspace> next;
    for (auto& s : spaces) {
      const int d = int(s.rows.size());
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Matrix of the action w = v * ai^T restricted to the subspace.
      FpMat rmat(d, FpRow(d));
      for (int bi = 0; bi < d; ++bi) {
        FpRow w(r, 0);
        for (int j = 0; j < r; ++j) {
          uint64_t acc = 0;
          for (int k = 0; k < r; ++k) acc = (acc + ai[j][k] * s.rows[bi][k]) % p;
          w[j] = acc;
        }
        // Coordinates can be read off the RREF pivots; verify membership.
        FpRow check(r, 0);
        for (int t2 = 0; t2 < d; ++t2) {
          rmat[bi][t2] = w[s.pivots[t2]];
          for (int c = 0; c < r; ++c)
            check[c] = (check[c] + rmat[bi][t2] * s.rows[t2][c]) % p;
        }
        if (check != w)
          throw std::runtime_error("complex_irreducibles: subspace not invariant");
      }
      int found = 0;
      for (uint64_t lam = 0; lam < p && found < d; ++lam) {
        FpMat nmat = rmat;
        for (int q = 0; q < d; ++q) nmat[q][q] = (nmat[q][q] + p - lam) % p;
        FpMat ker = fp_left_kernel(nmat, p);
        if (ker.empty()) continue;
        found += int(ker.size());
        FpMat ambient;
        for (const auto& x : ker) {
          FpRow v(r, 0);
          for (int t2 = 0; t2 < d; ++t2)
            for (int c = 0; c < r; ++c) v[c] = (v[c] + x[t2] * s.rows[t2][c]) % p;
          ambient.push_back(std::move(v));
        }
        next.push_back(make_subspace(std::move(ambient), p));
      }
      if (found != d)
        throw std::runtime_error("complex_irreducibles: eigenspaces do not fill subspace");
    }
    spaces = std::move(next);
  }
  if (int(spaces.size()) != r)
    throw std::runtime_error("complex_irreducibles: wrong number of eigenvectors");

  // Inverse classes and power maps feed the degree and lifting formulas.
  std::vector<int> inv_class(r);
  for (int c = 0; c < r; ++c)
    inv_class[c] = t.classes.class_of[g.inverse(t.classes.representatives[c])];

  const uint64_t z = fp_pow(primitive_root(p), (p - 1) / e, p);

  struct Row {
    BigInt degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (auto& s : spaces) {
    if (s.rows.size() != 1)
      throw std::runtime_error("complex_irreducibles: splitting left a plane");
    FpRow v = s.rows[0];
    if (v[0] == 0) throw std::runtime_error("complex_irreducibles: identity coordinate vanished");
    uint64_t scale = fp_inv(v[0], p);
    for (auto& x : v) x = x * scale % p;

    // chi(1)^2 = |G| / sum_i v_i v_{i*} / h_i.
    uint64_t tsum = 0;
    for (int i = 0; i < r; ++i)
      tsum = (tsum + v[i] * v[inv_class[i]] % p * fp_inv(uint64_t(t.classes.sizes[i]), p)) % p;
    if (tsum == 0) throw std::runtime_error("complex_irreducibles: degenerate norm");
    uint64_t dsq = uint64_t(n) % p * fp_inv(tsum, p) % p;
    uint64_t deg = 0;
    for (uint64_t d2 = 1; 2 * d2 < p; ++d2)
      if (d2 * d2 % p == dsq) {
        deg = d2;
        break;
      }
    if (deg == 0) throw std::runtime_error("complex_irreducibles: degree has no square root");

    std::vector<uint64_t> cval(r);
    for (int i = 0; i < r; ++i)
      cval[i] = deg * v[i] % p * fp_inv(uint64_t(t.classes.sizes[i]), p) % p;

    Row row;
    row.degree = BigInt(long(deg));
    row.values.reserve(r);
    for (int i = 0; i < r; ++i) {
      const int ord = t.classes.element_orders[i];
      std::vector<int> pc(ord);
      int x = g.identity_index();
      for (int j = 0; j < ord; ++j) {
        pc[j] = t.classes.class_of[x];
        x = g.mul(x, t.classes.representatives[i]);
      }
      const uint64_t eta = fp_pow(z, e / unsigned(ord), p);
      const uint64_t eta_inv = fp_inv(eta, p);
      const uint64_t ord_inv = fp_inv(uint64_t(ord), p);
      Cyclotomic value = Cyclotomic::zero(e);
      for (int k = 0; k < ord; ++k) {
        uint64_t acc = 0;
        uint64_t w = 1;  // eta^{-jk} accumulated over j
        const uint64_t step = fp_pow(eta_inv, uint64_t(k), p);
        for (int j = 0; j < ord; ++j) {
          acc = (acc + cval[pc[j]] * w) % p;
          w = w * step % p;
        }
        uint64_t mk = acc * ord_inv % p;
        if (2 * mk >= p)
          throw std::runtime_error("complex_irreducibles: multiplicity fails the lifting bound");
        if (mk)
          value += Cyclotomic::root_power(e, long(e / unsigned(ord)) * k).scaled(
              BigRational(long(mk)));
      }
      row.values.push_back(std::move(value));
    }
    if (!(row.values[0] == Cyclotomic(BigRational(row.degree)).lifted(e)))
      throw std::runtime_error("complex_irreducibles: degree disagrees with lifted value");
    rows.push_back(std::move(row));
  }

  // Deterministic row order: by degree, then value sequences (descending
  // coefficient order puts the trivial character first).
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (size_t c = 0; c < a.values.size(); ++c) {
      int k = a.values[c].compare(b.values[c]);
      if (k != 0) return k > 0;
    }
    return false;
  });

  BigInt degree_sum = 0;
  for (auto& row : rows) {
    t.chars.push_back(ClassFunction{row.values});
    t.degrees.push_back(row.degree);
    degree_sum += row.degree * row.degree;
  }
  if (degree_sum != n)
    throw std::runtime_error("complex_irreducibles: degrees fail the order identity");
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      BigRational ip = inner_product(g, t.classes, t.chars[a], t.chars[b]);
      if (ip != BigRational(a == b ? 1 : 0))
        throw std::runtime_error("complex_irreducibles: rows not orthonormal");
    }
  for (int a = 0; a < r; ++a)
    t.fs_indicators.push_back(fs_indicator(g, t.classes, t.chars[a]));
  return t;
}

int fs_indicator(const FiniteGroup& g, const ConjClasses& cc, const ClassFunction& chi) {
  std::vector<int> squares = power_map(g, cc, 2);
  Cyclotomic sum = Cyclotomic(BigRational(0));
  for (int c = 0; c < cc.count(); ++c)
    sum += chi.values[squares[c]].scaled(BigRational(cc.sizes[c]));
  if (!sum.is_rational()) throw std::runtime_error("fs_indicator: irrational sum");
  BigRational nu = sum.rational_value() / BigRational(g.order());
  if (nu != -1 && nu != 0 && nu != 1)
    throw std::runtime_error("fs_indicator: value outside {-1, 0, 1}");
  return int(nu.get_num().get_si());
}

BigRational inner_product(const FiniteGroup& g, const ConjClasses& cc,
                          const ClassFunction& chi, const ClassFunction& psi) {
  std::vector<int> inv_class(cc.count());
  for (int c = 0; c < cc.count(); ++c)
    inv_class[c] = cc.class_of[g.inverse(cc.representatives[c])];
  Cyclotomic sum = Cyclotomic(BigRational(0));
  for (int c = 0; c < cc.count(); ++c)
    sum += (chi.values[c] * psi.values[inv_class[c]]).scaled(BigRational(cc.sizes[c]));
  if (!sum.is_rational()) throw std::runtime_error("inner_product: irrational sum");
  BigRational v = sum.rational_value() / BigRational(g.order());
  if (v.get_den() != 1) throw std::runtime_error("inner_product: not an integer");
  return v;
}

std::string field_tag_name(FieldTag tag) {
  switch (tag) {
    case FieldTag::Rational: return "Q";
    case FieldTag::Real: return "R";
    case FieldTag::Complex: return "C";
    case FieldTag::Integral: return "int(C)";
    case FieldTag::IntegralReal: return "int(R)";
  }
  throw std::logic_error("unreachable");
}

std::string format_combination(const std::vector<BigInt>& coeffs,
                               const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    BigInt c = coeffs[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
      if (c < 0) c = -c;
    }
    if (c != 1) os << c.get_str();
    os << names[i];
  }
  if (first) os << "0";
  return os.str();
}

namespace {

std::vector<std::string> rho_names(int r) {
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("rho" + std::to_string(i));
  return names;
}

int find_row(const IrreducibleTable& t, const std::vector<Cyclotomic>& values) {
  for (int i = 0; i < t.count(); ++i) {
    bool same = true;
    for (size_t c = 0; c < values.size(); ++c)
      if (!(t.chars[i].values[c] == values[c])) {
        same = false;
        break;
      }
    if (same) return i;
  }
  return -1;
}

CharacterLattice named_lattice(FieldTag tag, IntMatrix coords, int r) {
  CharacterLattice out;
  out.field_tag = tag;
  out.coords_in_complex = std::move(coords);
  std::vector<std::string> rho = rho_names(r);
  for (int i = 0; i < out.coords_in_complex.rows(); ++i) {
    std::vector<BigInt> row(r);
    for (int c = 0; c < r; ++c) row[c] = out.coords_in_complex.at(i, c);
    out.names.push_back(format_combination(row, rho));
  }
  return out;
}

// Integer row kernel of the non-rational coordinate block of a value matrix:
// combinations whose values are everywhere rational (hence rational integers,
// the values being algebraic integers).
IntMatrix integrality_kernel(const std::vector<std::vector<Cyclotomic>>& values, unsigned e) {
  const int rows = int(values.size());
  const int rr = rows ? int(values[0].size()) : 0;
  const unsigned phi = euler_phi(e);
  IntMatrix constraints(rows, rr * int(phi - 1));
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < rr; ++c) {
      Cyclotomic v = values[i][c].lifted(e);
      for (unsigned t2 = 1; t2 < phi; ++t2) {
        const BigRational& q = v.coeffs()[t2];
        if (q.get_den() != 1)
          throw std::runtime_error("integrality_kernel: non-integral coordinate");
        constraints.at(i, c * int(phi - 1) + int(t2) - 1) = q.get_num();
      }
    }
  return integer_row_kernel(constraints);
}

}  // namespace

CharacterLattice real_irreducible_basis(const FiniteGroup& g, const IrreducibleTable& t) {
  const int r = t.count();
  std::vector<std::vector<BigInt>> rows;
  std::vector<char> used(r, 0);
  for (int i = 0; i < r; ++i) {
    if (used[i]) continue;
    used[i] = 1;
    std::vector<BigInt> row(r);
    if (t.fs_indicators[i] == 1) {
      row[i] = 1;
    } else if (t.fs_indicators[i] == -1) {
      row[i] = 2;
    } else {
      std::vector<Cyclotomic> conj;
      for (const auto& v : t.chars[i].values) conj.push_back(v.conjugate());
      int j = find_row(t, conj);
      if (j < 0 || j == i || used[j])
        throw std::runtime_error("real_irreducible_basis: conjugate row missing");
      used[j] = 1;
      row[i] = 1;
      row[j] = 1;
    }
    rows.push_back(std::move(row));
  }
  IntMatrix coords(int(rows.size()), r);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < r; ++c) coords.at(int(i), c) = rows[i][c];
  return named_lattice(FieldTag::Real, std::move(coords), r);
}

CharacterLattice rational_irreducible_basis(const FiniteGroup& g, const IrreducibleTable& t,
                                            int expected_rank) {
  const int r = t.count();
  const unsigned e = unsigned(g.exponent());
  std::vector<std::vector<BigInt>> rows;
  std::vector<char> used(r, 0);
  for (int i = 0; i < r; ++i) {
    if (used[i]) continue;
    // Galois orbit of the row.
    std::vector<int> orbit;
    for (unsigned a = 1; a < e || (e == 1 && a == 1); ++a) {
      if (e != 1 && std::gcd(a, e) != 1) continue;
      std::vector<Cyclotomic> image;
      for (const auto& v : t.chars[i].values) image.push_back(v.galois(long(a)));
      int j = find_row(t, image);
      if (j < 0) throw std::runtime_error("rational_irreducible_basis: orbit left the table");
      if (std::find(orbit.begin(), orbit.end(), j) == orbit.end()) orbit.push_back(j);
      if (e == 1) break;
    }
    bool quaternionic = false;
    for (int j : orbit) {
      if (t.fs_indicators[j] != t.fs_indicators[orbit[0]])
        throw std::runtime_error("rational_irreducible_basis: indicator varies over orbit");
      if (t.fs_indicators[j] == -1) quaternionic = true;
      used[j] = 1;
    }
    std::vector<BigInt> row(r);
    for (int j : orbit) row[j] = quaternionic ? 2 : 1;
    rows.push_back(std::move(row));
  }
  if (expected_rank >= 0 && int(rows.size()) != expected_rank)
    throw std::runtime_error(
        "rational_irreducible_basis: rank disagrees with the cyclic subgroup count");
  IntMatrix coords(int(rows.size()), r);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < r; ++c) coords.at(int(i), c) = rows[i][c];
  return named_lattice(FieldTag::Rational, std::move(coords), r);
}

CharacterLattice integer_character_sublattice(const IrreducibleTable& t) {
  const int r = t.count();
  unsigned e = 1;
  for (const auto& ch : t.chars)
    for (const auto& v : ch.values) e = std::lcm(e, v.order());
  std::vector<std::vector<Cyclotomic>> values;
  for (const auto& ch : t.chars) values.push_back(ch.values);
  IntMatrix kernel = integrality_kernel(values, e);
  return named_lattice(FieldTag::Integral, std::move(kernel), r);
}

CharacterLattice integer_real_sublattice(const FiniteGroup& g, const IrreducibleTable& t) {
  CharacterLattice real = real_irreducible_basis(g, t);
  const int r = t.count();
  const unsigned e = unsigned(g.exponent());
  std::vector<std::vector<Cyclotomic>> values;
  for (int b = 0; b < real.rank(); ++b) {
    std::vector<Cyclotomic> row(r, Cyclotomic(BigRational(0)).lifted(e));
    for (int i = 0; i < r; ++i) {
      if (real.coords_in_complex.at(b, i) == 0) continue;
      for (int c = 0; c < r; ++c)
        row[c] += t.chars[i].values[c].scaled(BigRational(real.coords_in_complex.at(b, i)));
    }
    values.push_back(std::move(row));
  }
  IntMatrix kernel = integrality_kernel(values, e);  // combinations of real basis rows
  IntMatrix coords = kernel * real.coords_in_complex;
  CharacterLattice out = named_lattice(FieldTag::IntegralReal, std::move(coords), r);
  return out;
}

ClassFunction permutation_character(const FiniteGroup& g, const ConjClasses& cc,
                                    const SubgroupClass& h) {
  std::vector<int> fix = element_fixed_cosets(g, cc, h.representative);
  ClassFunction out;
  for (int c = 0; c < cc.count(); ++c) out.values.push_back(Cyclotomic(BigRational(fix[c])));
  return out;
}

std::vector<BigInt> complex_coordinates(const FiniteGroup& g, const IrreducibleTable& t,
                                        const ClassFunction& chi) {
  std::vector<BigInt> coords;
  for (int i = 0; i < t.count(); ++i) {
    BigRational ip = inner_product(g, t.classes, chi, t.chars[i]);
    coords.push_back(ip.get_num());
  }
  return coords;
}

}  // namespace burnside
