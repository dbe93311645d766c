#include "burnside/subgroups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace burnside {

namespace {

// Closure of a subset under multiplication; a finite closed subset containing
// the identity is a subgroup.  A partial closure larger than |G|/2 already
// forces the whole group (Lagrange), which caps the cost of the many
// extension probes that land on G itself.
std::vector<int> close_subset(const FiniteGroup& g, std::vector<int> seed) {
  const int n = g.order();
  std::vector<char> member(n, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!member[x]) {
      member[x] = 1;
      elems.push_back(x);
    }
  };
  add(g.identity_index());
  for (int x : seed) add(x);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (int(elems.size()) * 2 > n) {
      elems.resize(n);
      for (int x = 0; x < n; ++x) elems[size_t(x)] = x;
      return elems;
    }
    for (size_t j = 0; j <= i; ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> conjugated_set(const FiniteGroup& g, const std::vector<int>& h, int by) {
  std::vector<int> out;
  out.reserve(h.size());
  for (int x : h) out.push_back(g.conjugate(by, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SubgroupClass> enumerate_subgroup_classes(const FiniteGroup& g, int subgroup_cap) {
  const int n = g.order();
  // Every subgroup is a one-element extension of a proper subgroup, and
  // conjugating carries extensions of H onto extensions of any conjugate of
  // H, so extending one representative per class reaches every class
  // (induction over the subgroup order).  Registering whole conjugate orbits
  // keeps the duplicate test a plain set lookup.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> reps;
  std::vector<int> orbit_sizes;
  long total = 0;

  auto discover = [&](std::vector<int> h) {
    if (known.count(h)) return;
    std::set<std::vector<int>> orbit;
    for (int x = 0; x < n; ++x) orbit.insert(conjugated_set(g, h, x));
    total += long(orbit.size());
    if (total > subgroup_cap)
      throw std::runtime_error("enumerate_subgroup_classes: subgroup cap exceeded");
    for (const auto& c : orbit) known.insert(c);
    reps.push_back(*orbit.begin());
    orbit_sizes.push_back(int(orbit.size()));
  };

  discover(close_subset(g, {}));
  for (size_t next = 0; next < reps.size(); ++next) {
    std::vector<int> h = reps[next];
    if (int(h.size()) == n) continue;
    std::vector<char> member(n, 0);
    for (int x : h) member[x] = 1;
    for (int x = 0; x < n; ++x) {
      if (member[x]) continue;
      std::vector<int> seed = h;
      seed.push_back(x);
      discover(close_subset(g, std::move(seed)));
    }
  }

  std::vector<SubgroupClass> classes;
  for (size_t i = 0; i < reps.size(); ++i) {
    SubgroupClass sc;
    sc.representative = reps[i];
    sc.order = int(reps[i].size());
    sc.index = n / sc.order;
    sc.conjugate_count = orbit_sizes[i];
    sc.is_cyclic = false;
    for (int x : sc.representative)
      if (g.element_order(x) == sc.order) {
        sc.is_cyclic = true;
        break;
      }
    classes.push_back(std::move(sc));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative < b.representative;
  });
  return classes;
}

std::vector<int> linear_extension(const FiniteGroup& g,
                                  const std::vector<SubgroupClass>& classes) {
  const int m = int(classes.size());
  for (int j = 0; j < m; ++j) {
    std::vector<char> member(g.order(), 0);
    for (int x : classes[j].representative) member[x] = 1;
    for (int i = 0; i < m; ++i) {
      if (i <= j) continue;
      // A member of class i must not embed into class j when i > j.
      for (int c = 0; c < g.order(); ++c) {
        bool inside = true;
        for (int x : classes[i].representative)
          if (!member[g.conjugate(c, x)]) {
            inside = false;
            break;
          }
        if (inside)
          throw std::runtime_error("linear_extension: order violates subconjugacy");
      }
    }
  }
  std::vector<int> id(m);
  for (int i = 0; i < m; ++i) id[i] = i;
  return id;
}

int fixed_cosets(const FiniteGroup& g, const std::vector<int>& h, const std::vector<int>& sub) {
  std::vector<char> member(g.order(), 0);
  for (int x : h) member[x] = 1;
  // Coset xH is fixed by sub iff x^{-1} sub x lies in H; the test only
  // depends on the coset, so count all x and divide by |H|.
  int count = 0;
  for (int x = 0; x < g.order(); ++x) {
    int xi = g.inverse(x);
    bool fixed = true;
    for (int s : sub) {
      if (!member[g.mul(g.mul(xi, s), x)]) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++count;
  }
  if (count % int(h.size()) != 0) throw std::runtime_error("fixed_cosets: count not divisible");
  return count / int(h.size());
}

std::vector<int> element_fixed_cosets(const FiniteGroup& g, const ConjClasses& cc,
                                      const std::vector<int>& h) {
  std::vector<int> out(cc.count(), 0);
  for (int c = 0; c < cc.count(); ++c)
    out[c] = fixed_cosets(g, h, {cc.representatives[c]});
  return out;
}

MarksTable table_of_marks(const FiniteGroup& g, const std::vector<SubgroupClass>& classes) {
  const int m = int(classes.size());
  MarksTable t;
  t.classes = classes;
  t.marks = IntMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v = fixed_cosets(g, classes[i].representative, classes[j].representative);
      if (j > i && v != 0) throw std::runtime_error("table_of_marks: not lower triangular");
      t.marks.at(i, j) = v;
    }
  for (int i = 0; i < m; ++i)
    if (t.marks.at(i, i) <= 0) throw std::runtime_error("table_of_marks: nonpositive diagonal");
  return t;
}

}  // namespace burnside
