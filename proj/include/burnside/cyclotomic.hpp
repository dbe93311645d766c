#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "burnside/matrix.hpp"

namespace burnside {

unsigned euler_phi(unsigned n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned n);

// Element of Q(zeta_e) in the power basis 1, zeta, ..., zeta^(phi(e)-1),
// reduced modulo the e-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() : e_(1), c_(1) {}
  explicit Cyclotomic(const BigRational& rational);
  // zeta_e^k
  static Cyclotomic root_power(unsigned e, long k);
  static Cyclotomic zero(unsigned e);

  unsigned order() const { return e_; }
  const std::vector<BigRational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const;
  BigRational rational_value() const;  // requires is_rational()

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic scaled(const BigRational& s) const;

  // Image under the Galois map zeta_e -> zeta_e^a; requires gcd(a, e) = 1.
  Cyclotomic galois(long a) const;
  Cyclotomic conjugate() const { return galois(long(e_) - 1); }

  // Rewrites the value in Q(zeta_target); requires order() | target.
  Cyclotomic lifted(unsigned target) const;

  // Equality after lifting both sides to a common order.
  bool operator==(const Cyclotomic& o) const;
  // Deterministic total order (common-order coefficient sequences).
  int compare(const Cyclotomic& o) const;

  std::string to_string() const;

 private:
  Cyclotomic(unsigned e, std::vector<BigRational> c) : e_(e), c_(std::move(c)) {}
  static Cyclotomic reduce(unsigned e, const std::vector<BigRational>& poly);

  unsigned e_;
  std::vector<BigRational> c_;
};

// Product computed in Q(zeta_lcm(a.order, b.order)).
Cyclotomic cyclotomic_mul(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace burnside
