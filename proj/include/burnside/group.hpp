#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "burnside/cyclotomic.hpp"

namespace burnside {

// Bijection of {0, ..., n-1}; img[i] is the image of i.
struct Permutation {
  std::vector<uint32_t> img;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

// Square matrix over F_p, row-major, entries in [0, p).
struct MatrixOverPrimeField {
  uint32_t p = 0;
  uint32_t dim = 0;
  std::vector<uint32_t> a;
  bool operator==(const MatrixOverPrimeField&) const = default;
  auto operator<=>(const MatrixOverPrimeField&) const = default;
};

// Square matrix over Q(zeta_e), row-major.
struct MatrixOverCyclotomic {
  uint32_t e = 1;
  uint32_t dim = 0;
  std::vector<Cyclotomic> a;
  bool operator==(const MatrixOverCyclotomic& o) const;
  bool operator<(const MatrixOverCyclotomic& o) const;
};

using GroupElement = std::variant<Permutation, MatrixOverPrimeField, MatrixOverCyclotomic>;

GroupElement element_multiply(const GroupElement& a, const GroupElement& b);
bool element_less(const GroupElement& a, const GroupElement& b);
bool element_equal(const GroupElement& a, const GroupElement& b);
// Identity of the domain the element lives in.
GroupElement element_identity(const GroupElement& sample);
// Checks bijectivity / nonzero determinant.
bool element_invertible(const GroupElement& g);
std::string element_to_string(const GroupElement& g);

// Finite group materialized as a full multiplication table.
class FiniteGroup {
 public:
  int order() const { return int(elements_.size()); }
  int identity_index() const { return identity_; }
  int mul(int i, int j) const { return cayley_[size_t(i) * elements_.size() + j]; }
  int inverse(int i) const { return inverse_[i]; }
  int element_order(int i) const { return element_order_[i]; }
  // lcm of all element orders
  int exponent() const { return exponent_; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
  const GroupElement& element(int i) const { return elements_[i]; }
  int power(int i, long k) const;

  friend FiniteGroup close_generators(const std::vector<GroupElement>& generators,
                                      int order_cap);

 private:
  void finalize();  // inverses, orders, exponent, associativity check

  std::vector<GroupElement> elements_;
  std::vector<int> cayley_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  int identity_ = 0;
  int exponent_ = 1;
};

// Breadth-first closure of the generating set, starting from the identity;
// element discovery order is fixed by generator list order.  Throws
// std::invalid_argument for non-invertible or domain-mixed generators and
// std::runtime_error once the closure exceeds order_cap.
FiniteGroup close_generators(const std::vector<GroupElement>& generators, int order_cap);

// Reads the default order cap from BURNSIDE_ORDER_CAP (1000 when unset).
int default_order_cap();

struct ConjClasses {
  std::vector<int> class_of;         // element index -> class index
  std::vector<int> representatives;  // minimal element index per class
  std::vector<int> sizes;
  std::vector<int> element_orders;   // shared order of the class elements
  std::vector<std::string> labels;   // "1", "4A", "4B", ...
  int count() const { return int(representatives.size()); }
};

// Classes sorted by (element order, class size, minimal element index);
// labels append letters only when several classes share an element order.
ConjClasses conjugacy_classes(const FiniteGroup& g);

// Class index of the k-th power map c -> class(rep(c)^k); verifies the result
// is independent of the representative choice.
std::vector<int> power_map(const FiniteGroup& g, const ConjClasses& cc, long k);

}  // namespace burnside
