#include "burnside/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace burnside {

namespace {

// Exact long division of integer polynomials, constant term first.
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  if (den.empty() || den.back() == 0) throw std::invalid_argument("bad divisor");
  if (num.size() < den.size()) throw std::invalid_argument("degree underflow");
  std::vector<BigInt> q(num.size() - den.size() + 1);
  for (int i = int(q.size()) - 1; i >= 0; --i) {
    BigInt c = num[i + den.size() - 1];
    if (c % den.back() != 0) throw std::runtime_error("poly_div_exact: not divisible");
    c /= den.back();
    q[i] = c;
    if (c == 0) continue;
    for (size_t k = 0; k < den.size(); ++k) num[i + k] -= c * den[k];
  }
  for (const BigInt& c : num)
    if (c != 0) throw std::runtime_error("poly_div_exact: nonzero remainder");
  return q;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

std::mutex cache_mutex;
std::map<unsigned, std::vector<BigInt>>& poly_cache() {
  static std::map<unsigned, std::vector<BigInt>> cache;
  return cache;
}

std::vector<BigInt> compute_cyclotomic_poly(unsigned n);

const std::vector<BigInt>& cached_poly(unsigned n) {
  auto& cache = poly_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto poly = compute_cyclotomic_poly(n);
  return cache.emplace(n, std::move(poly)).first->second;
}

std::vector<BigInt> compute_cyclotomic_poly(unsigned n) {
  // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
  std::vector<BigInt> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    poly = poly_div_exact(std::move(poly), cached_poly(d));
  }
  return poly;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: order 0");
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cached_poly(n);
}

Cyclotomic::Cyclotomic(const BigRational& rational) : e_(1), c_(1) { c_[0] = rational; }

Cyclotomic Cyclotomic::zero(unsigned e) {
  return Cyclotomic(e, std::vector<BigRational>(euler_phi(e)));
}

Cyclotomic Cyclotomic::reduce(unsigned e, const std::vector<BigRational>& poly) {
  const auto& phi = cyclotomic_polynomial(e);
  const size_t deg = phi.size() - 1;  // = euler_phi(e)
  std::vector<BigRational> rem = poly;
  if (rem.size() < deg) rem.resize(deg);
  for (size_t i = rem.size(); i-- > deg;) {
    BigRational c = rem[i];
    if (c == 0) continue;
    // phi is monic: subtract c * x^(i-deg) * phi
    for (size_t k = 0; k < phi.size(); ++k) rem[i - deg + k] -= c * BigRational(phi[k]);
  }
  rem.resize(deg);
  for (auto& v : rem) v.canonicalize();
  return Cyclotomic(e, std::move(rem));
}

Cyclotomic Cyclotomic::root_power(unsigned e, long k) {
  if (e == 0) throw std::invalid_argument("root_power: order 0");
  long m = k % long(e);
  if (m < 0) m += e;
  std::vector<BigRational> poly(size_t(m) + 1);
  poly[size_t(m)] = 1;
  return reduce(e, poly);
}

bool Cyclotomic::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  return is_rational() && c_[0].get_den() == 1;
}

BigRational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::runtime_error("rational_value: not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (e_ != o.e_) {
    unsigned l = std::lcm(e_, o.e_);
    return lifted(l) + o.lifted(l);
  }
  std::vector<BigRational> sum(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) sum[i] = c_[i] + o.c_[i];
  return Cyclotomic(e_, std::move(sum));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  std::vector<BigRational> neg(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) neg[i] = -c_[i];
  return Cyclotomic(e_, std::move(neg));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (e_ != o.e_) return cyclotomic_mul(*this, o);
  std::vector<BigRational> prod(c_.size() + o.c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  return reduce(e_, prod);
}

Cyclotomic Cyclotomic::scaled(const BigRational& s) const {
  std::vector<BigRational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return Cyclotomic(e_, std::move(r));
}

Cyclotomic Cyclotomic::galois(long a) const {
  long am = a % long(e_);
  if (am < 0) am += e_;
  if (std::gcd(unsigned(am), e_) != 1) throw std::invalid_argument("galois: exponent not coprime");
  std::vector<BigRational> poly(e_, BigRational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    poly[size_t((long(i) * am) % long(e_))] += c_[i];
  }
  return reduce(e_, poly);
}

Cyclotomic Cyclotomic::lifted(unsigned target) const {
  if (target == e_) return *this;
  if (target % e_ != 0) throw std::invalid_argument("lifted: order does not divide target");
  unsigned m = target / e_;
  std::vector<BigRational> poly(size_t(e_) * m, BigRational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    poly[i * m] += c_[i];
  }
  return reduce(target, poly);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return compare(o) == 0; }

int Cyclotomic::compare(const Cyclotomic& o) const {
  if (e_ != o.e_) {
    unsigned l = std::lcm(e_, o.e_);
    return lifted(l).compare(o.lifted(l));
  }
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigRational v = c_[i];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0) {
      os << v.get_str();
    } else {
      if (v != 1) os << v.get_str() << "*";
      os << "z" << e_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Cyclotomic cyclotomic_mul(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned l = std::lcm(a.order(), b.order());
  Cyclotomic la = a.lifted(l);
  Cyclotomic lb = b.lifted(l);
  return la * lb;
}

}  // namespace burnside
