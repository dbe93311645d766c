#include "burnside/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace burnside {

namespace {

struct ElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return element_less(a, b);
  }
};

uint32_t fp_det(const MatrixOverPrimeField& m) {
  const uint64_t p = m.p;
  std::vector<uint64_t> a(m.a.begin(), m.a.end());
  const uint32_t n = m.dim;
  uint64_t det = 1;
  for (uint32_t col = 0; col < n; ++col) {
    uint32_t piv = col;
    while (piv < n && a[size_t(piv) * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (uint32_t c = 0; c < n; ++c) std::swap(a[size_t(piv) * n + c], a[size_t(col) * n + c]);
      det = (p - det) % p;
    }
    uint64_t d = a[size_t(col) * n + col];
    det = det * d % p;
    // modular inverse by Fermat
    uint64_t inv = 1, base = d, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (uint32_t r = col + 1; r < n; ++r) {
      uint64_t f = a[size_t(r) * n + col] * inv % p;
      if (!f) continue;
      for (uint32_t c = col; c < n; ++c) {
        uint64_t v = a[size_t(r) * n + c] + p * p - f * a[size_t(col) * n + c] % p;
        a[size_t(r) * n + c] = v % p;
      }
    }
  }
  return uint32_t(det);
}

Cyclotomic cyc_det(const MatrixOverCyclotomic& m, std::vector<uint32_t> rows, uint32_t col) {
  // Cofactor expansion; dimensions in practice are tiny.
  if (rows.size() == 1) return m.a[size_t(rows[0]) * m.dim + col];
  Cyclotomic acc = Cyclotomic::zero(m.e);
  int sign = 1;
  for (size_t i = 0; i < rows.size(); ++i) {
    const Cyclotomic& lead = m.a[size_t(rows[i]) * m.dim + col];
    if (!lead.is_zero()) {
      std::vector<uint32_t> rest;
      for (size_t k = 0; k < rows.size(); ++k)
        if (k != i) rest.push_back(rows[k]);
      Cyclotomic minor = cyc_det(m, rest, col + 1);
      Cyclotomic term = lead * minor;
      acc = (sign > 0) ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

bool MatrixOverCyclotomic::operator==(const MatrixOverCyclotomic& o) const {
  if (e != o.e || dim != o.dim) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == o.a[i])) return false;
  return true;
}

bool MatrixOverCyclotomic::operator<(const MatrixOverCyclotomic& o) const {
  if (e != o.e) return e < o.e;
  if (dim != o.dim) return dim < o.dim;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = a[i].compare(o.a[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

GroupElement element_multiply(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) throw std::invalid_argument("element domains differ");
  if (const auto* pa = std::get_if<Permutation>(&a)) {
    const auto& pb = std::get<Permutation>(b);
    if (pa->img.size() != pb.img.size()) throw std::invalid_argument("permutation sizes differ");
    Permutation r;
    r.img.resize(pa->img.size());
    // (a*b)(x) = a(b(x)): right factor acts first
    for (size_t i = 0; i < r.img.size(); ++i) r.img[i] = pa->img[pb.img[i]];
    return r;
  }
  if (const auto* ma = std::get_if<MatrixOverPrimeField>(&a)) {
    const auto& mb = std::get<MatrixOverPrimeField>(b);
    if (ma->p != mb.p || ma->dim != mb.dim) throw std::invalid_argument("matrix domains differ");
    MatrixOverPrimeField r{ma->p, ma->dim, std::vector<uint32_t>(size_t(ma->dim) * ma->dim)};
    const uint64_t p = ma->p;
    for (uint32_t i = 0; i < ma->dim; ++i)
      for (uint32_t k = 0; k < ma->dim; ++k) {
        uint64_t v = ma->a[size_t(i) * ma->dim + k];
        if (!v) continue;
        for (uint32_t j = 0; j < ma->dim; ++j)
          r.a[size_t(i) * ma->dim + j] =
              uint32_t((r.a[size_t(i) * ma->dim + j] + v * mb.a[size_t(k) * ma->dim + j]) % p);
      }
    return r;
  }
  const auto& ca = std::get<MatrixOverCyclotomic>(a);
  const auto& cb = std::get<MatrixOverCyclotomic>(b);
  if (ca.e != cb.e || ca.dim != cb.dim) throw std::invalid_argument("matrix domains differ");
  MatrixOverCyclotomic r{ca.e, ca.dim, std::vector<Cyclotomic>(size_t(ca.dim) * ca.dim,
                                                               Cyclotomic::zero(ca.e))};
  for (uint32_t i = 0; i < ca.dim; ++i)
    for (uint32_t k = 0; k < ca.dim; ++k) {
      const Cyclotomic& v = ca.a[size_t(i) * ca.dim + k];
      if (v.is_zero()) continue;
      for (uint32_t j = 0; j < ca.dim; ++j) {
        const Cyclotomic& w = cb.a[size_t(k) * ca.dim + j];
        if (w.is_zero()) continue;
        r.a[size_t(i) * ca.dim + j] += v * w;
      }
    }
  return r;
}

bool element_less(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* pa = std::get_if<Permutation>(&a)) return pa->img < std::get<Permutation>(b).img;
  if (const auto* ma = std::get_if<MatrixOverPrimeField>(&a)) {
    const auto& mb = std::get<MatrixOverPrimeField>(b);
    return std::tie(ma->p, ma->dim, ma->a) < std::tie(mb.p, mb.dim, mb.a);
  }
  return std::get<MatrixOverCyclotomic>(a) < std::get<MatrixOverCyclotomic>(b);
}

bool element_equal(const GroupElement& a, const GroupElement& b) {
  return !element_less(a, b) && !element_less(b, a);
}

GroupElement element_identity(const GroupElement& sample) {
  if (const auto* p = std::get_if<Permutation>(&sample)) {
    Permutation r;
    r.img.resize(p->img.size());
    std::iota(r.img.begin(), r.img.end(), 0u);
    return r;
  }
  if (const auto* m = std::get_if<MatrixOverPrimeField>(&sample)) {
    MatrixOverPrimeField r{m->p, m->dim, std::vector<uint32_t>(size_t(m->dim) * m->dim)};
    for (uint32_t i = 0; i < m->dim; ++i) r.a[size_t(i) * m->dim + i] = 1;
    return r;
  }
  const auto& c = std::get<MatrixOverCyclotomic>(sample);
  MatrixOverCyclotomic r{c.e, c.dim,
                         std::vector<Cyclotomic>(size_t(c.dim) * c.dim, Cyclotomic::zero(c.e))};
  for (uint32_t i = 0; i < c.dim; ++i) r.a[size_t(i) * c.dim + i] = Cyclotomic(BigRational(1)).lifted(c.e);
  return r;
}

bool element_invertible(const GroupElement& g) {
  if (const auto* p = std::get_if<Permutation>(&g)) {
    std::vector<bool> seen(p->img.size(), false);
    for (uint32_t v : p->img) {
      if (v >= p->img.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
  if (const auto* m = std::get_if<MatrixOverPrimeField>(&g)) {
    if (m->p < 2 || m->dim == 0) return false;
    for (uint32_t v : m->a)
      if (v >= m->p) return false;
    return fp_det(*m) != 0;
  }
  const auto& c = std::get<MatrixOverCyclotomic>(g);
  if (c.dim == 0) return false;
  std::vector<uint32_t> rows(c.dim);
  std::iota(rows.begin(), rows.end(), 0u);
  return !cyc_det(c, rows, 0).is_zero();
}

std::string element_to_string(const GroupElement& g) {
  std::ostringstream os;
  if (const auto* p = std::get_if<Permutation>(&g)) {
    os << "perm[";
    for (size_t i = 0; i < p->img.size(); ++i) os << (i ? " " : "") << p->img[i];
    os << "]";
  } else if (const auto* m = std::get_if<MatrixOverPrimeField>(&g)) {
    os << "gf" << m->p << "[";
    for (size_t i = 0; i < m->a.size(); ++i) os << (i ? " " : "") << m->a[i];
    os << "]";
  } else {
    const auto& c = std::get<MatrixOverCyclotomic>(g);
    os << "cyc" << c.e << "[";
    for (size_t i = 0; i < c.a.size(); ++i) os << (i ? "; " : "") << c.a[i].to_string();
    os << "]";
  }
  return os.str();
}

int default_order_cap() {
  const char* env = std::getenv("BURNSIDE_ORDER_CAP");
  if (!env || !*env) return 1000;
  long v = std::strtol(env, nullptr, 10);
  if (v <= 0) return 1000;
  return int(v);
}

FiniteGroup close_generators(const std::vector<GroupElement>& generators, int order_cap) {
  if (generators.empty()) throw std::invalid_argument("close_generators: no generators");
  for (const auto& g : generators) {
    if (g.index() != generators.front().index())
      throw std::invalid_argument("close_generators: mixed element domains");
    if (!element_invertible(g)) throw std::invalid_argument("close_generators: generator not invertible");
  }

  FiniteGroup grp;
  std::map<GroupElement, int, ElementLess> index;
  GroupElement id = element_identity(generators.front());
  grp.elements_.push_back(id);
  index.emplace(id, 0);
  // Breadth-first over right multiplication; generator list order fixes the
  // discovery order.
  for (size_t head = 0; head < grp.elements_.size(); ++head) {
    for (const auto& g : generators) {
      GroupElement next = element_multiply(grp.elements_[head], g);
      if (index.count(next)) continue;
      if (int(grp.elements_.size()) >= order_cap)
        throw std::runtime_error("close_generators: order cap " + std::to_string(order_cap) +
                                 " exceeded");
      index.emplace(next, int(grp.elements_.size()));
      grp.elements_.push_back(std::move(next));
    }
  }

  const int n = int(grp.elements_.size());
  grp.cayley_.assign(size_t(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(element_multiply(grp.elements_[i], grp.elements_[j]));
      if (it == index.end()) throw std::runtime_error("close_generators: set not closed");
      grp.cayley_[size_t(i) * n + j] = it->second;
    }
  grp.identity_ = 0;
  grp.finalize();
  return grp;
}

void FiniteGroup::finalize() {
  const int n = order();
  // Latin square check: every row and column is a bijection.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      int r = mul(i, j), c = mul(j, i);
      if (row[r] || col[c]) throw std::runtime_error("finalize: multiplication table not Latin");
      row[r] = col[c] = true;
    }
  }
  inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mul(i, j) == identity_) {
        inverse_[i] = j;
        break;
      }
  element_order_.assign(n, 0);
  long exponent = 1;
  for (int i = 0; i < n; ++i) {
    int ord = 1, x = i;
    while (x != identity_) {
      x = mul(x, i);
      ++ord;
    }
    element_order_[i] = ord;
    exponent = std::lcm(exponent, long(ord));
  }
  exponent_ = int(exponent);
  // Associativity: exhaustive for small tables, seeded sampling otherwise.
  if (n <= 64) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (mul(mul(i, j), k) != mul(i, mul(j, k)))
            throw std::runtime_error("finalize: associativity failed");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) {
      int i = pick(rng), j = pick(rng), k = pick(rng);
      if (mul(mul(i, j), k) != mul(i, mul(j, k)))
        throw std::runtime_error("finalize: associativity failed");
    }
  }
}

int FiniteGroup::power(int i, long k) const {
  long ord = element_order_[i];
  long m = k % ord;
  if (m < 0) m += ord;
  int acc = identity_;
  int base = i;
  while (m) {
    if (m & 1) acc = mul(acc, base);
    base = mul(base, base);
    m >>= 1;
  }
  return acc;
}

ConjClasses conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int c = int(members.size());
    members.emplace_back();
    for (int x = 0; x < n; ++x) {
      int y = g.conjugate(x, i);
      if (cls[y] < 0) {
        cls[y] = c;
        members[c].push_back(y);
      }
    }
  }
  // Sort classes by (element order, size, minimal member).
  std::vector<int> perm(members.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto key = [&](int c) {
    int rep = *std::min_element(members[c].begin(), members[c].end());
    return std::tuple<int, int, int>(g.element_order(rep), int(members[c].size()), rep);
  };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return key(a) < key(b); });

  ConjClasses out;
  out.class_of.assign(n, -1);
  for (size_t newc = 0; newc < perm.size(); ++newc) {
    const auto& m = members[perm[newc]];
    int rep = *std::min_element(m.begin(), m.end());
    out.representatives.push_back(rep);
    out.sizes.push_back(int(m.size()));
    out.element_orders.push_back(g.element_order(rep));
    for (int x : m) out.class_of[x] = int(newc);
  }
  // Labels: the element order, disambiguated by letters when shared.
  for (size_t c = 0; c < out.representatives.size(); ++c) {
    int ord = out.element_orders[c];
    int same = 0, before = 0;
    for (size_t d = 0; d < out.representatives.size(); ++d) {
      if (out.element_orders[d] != ord) continue;
      ++same;
      if (d < c) ++before;
    }
    std::string label = std::to_string(ord);
    if (same > 1) {
      // A..Z, then AA, AB, ... (bijective base 26).
      std::string suffix;
      for (int v = before + 1; v > 0; v /= 26) {
        --v;
        suffix.insert(suffix.begin(), char('A' + v % 26));
      }
      label += suffix;
    }
    out.labels.push_back(label);
  }
  return out;
}

std::vector<int> power_map(const FiniteGroup& g, const ConjClasses& cc, long k) {
  std::vector<int> out(cc.count(), -1);
  for (int c = 0; c < cc.count(); ++c)
    out[c] = cc.class_of[g.power(cc.representatives[c], k)];
  // The class of the k-th power must not depend on the representative.
  for (int x = 0; x < g.order(); ++x)
    if (cc.class_of[g.power(x, k)] != out[cc.class_of[x]])
      throw std::runtime_error("power_map: representative dependence");
  return out;
}

}  // namespace burnside
