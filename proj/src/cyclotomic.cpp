#include "rhombforge/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rhombforge {

namespace {

// Exact division of ascending-coefficient integer polynomials; the divisor
// must be monic and divide evenly.
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<BigInt> quot(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    BigInt c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

std::vector<unsigned> divisors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    if (d != m / d) out.push_back(m / d);
  }
  return out;
}

std::unordered_map<unsigned, std::vector<BigInt>> g_poly_cache;
std::unordered_map<unsigned, RingContext> g_ring_cache;
std::mutex g_cache_mutex;

std::vector<BigInt> cyclotomic_polynomial_locked(unsigned m) {
  auto it = g_poly_cache.find(m);
  if (it != g_poly_cache.end()) return it->second;
  std::vector<BigInt> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;  // x^m - 1
  for (unsigned d : divisors(m))
    if (d < m) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial_locked(d));
  g_poly_cache.emplace(m, poly);
  return poly;
}

// Remainder modulo the minimal polynomial, in place; result has size phi(order).
void reduce_in_place(std::vector<BigInt>& a, const RingContext& ring) {
  const unsigned deg = ring.degree;
  for (size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    BigInt c = std::move(a[i]);
    a[i] = 0;
    for (unsigned j = 0; j < deg; ++j) a[i - deg + j] -= c * ring.minimal_poly[j];
  }
  a.resize(deg, 0);
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return cyclotomic_polynomial_locked(m);
}

const RingContext& ring_context(unsigned order) {
  if (order == 0) throw std::invalid_argument("ring_context: order must be positive");
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_ring_cache.find(order);
  if (it != g_ring_cache.end()) return it->second;
  RingContext ctx;
  ctx.order = order;
  ctx.minimal_poly = cyclotomic_polynomial_locked(order);
  ctx.degree = static_cast<unsigned>(ctx.minimal_poly.size() - 1);
  ctx.root_powers.reserve(order);
  for (unsigned i = 0; i < order; ++i) {
    const double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(order);
    ctx.root_powers.emplace_back(std::cos(theta), std::sin(theta));
  }
  return g_ring_cache.emplace(order, std::move(ctx)).first->second;
}

CycloInt::CycloInt(unsigned order, std::vector<BigInt> reduced)
    : order_(order), coeffs_(std::move(reduced)) {}

CycloInt CycloInt::zero(unsigned order) {
  return CycloInt(order, std::vector<BigInt>(ring_context(order).degree, 0));
}

CycloInt CycloInt::one(unsigned order) { return integer(order, 1); }

CycloInt CycloInt::integer(unsigned order, BigInt value) {
  std::vector<BigInt> c(ring_context(order).degree, 0);
  c[0] = std::move(value);
  return CycloInt(order, std::move(c));
}

CycloInt CycloInt::root_power(unsigned order, long long exponent) {
  const auto& ring = ring_context(order);
  long long e = exponent % static_cast<long long>(order);
  if (e < 0) e += order;
  std::vector<BigInt> c(static_cast<size_t>(e) + 1, 0);
  c[static_cast<size_t>(e)] = 1;
  reduce_in_place(c, ring);
  return CycloInt(order, std::move(c));
}

CycloInt CycloInt::from_coefficients(unsigned order, std::vector<BigInt> raw) {
  const auto& ring = ring_context(order);
  reduce_in_place(raw, ring);
  return CycloInt(order, std::move(raw));
}

bool CycloInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloInt::is_rational(BigInt* value) const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  if (value) *value = coeffs_[0];
  return true;
}

static void check_same_order(const CycloInt& a, const CycloInt& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("CycloInt: mixed ring orders " + std::to_string(a.order()) +
                                " and " + std::to_string(b.order()));
}

CycloInt CycloInt::operator+(const CycloInt& other) const {
  check_same_order(*this, other);
  std::vector<BigInt> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
  return CycloInt(order_, std::move(c));
}

CycloInt CycloInt::operator-(const CycloInt& other) const {
  check_same_order(*this, other);
  std::vector<BigInt> c(coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= other.coeffs_[i];
  return CycloInt(order_, std::move(c));
}

CycloInt CycloInt::operator-() const {
  std::vector<BigInt> c(coeffs_);
  for (auto& v : c) v = -v;
  return CycloInt(order_, std::move(c));
}

CycloInt CycloInt::operator*(const CycloInt& other) const {
  check_same_order(*this, other);
  const auto& ring = ring_context(order_);
  std::vector<BigInt> prod(2 * ring.degree, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  reduce_in_place(prod, ring);
  return CycloInt(order_, std::move(prod));
}

CycloInt& CycloInt::operator+=(const CycloInt& other) { return *this = *this + other; }
CycloInt& CycloInt::operator-=(const CycloInt& other) { return *this = *this - other; }
CycloInt& CycloInt::operator*=(const CycloInt& other) { return *this = *this * other; }

bool CycloInt::operator==(const CycloInt& other) const {
  return order_ == other.order_ && coeffs_ == other.coeffs_;
}

bool CycloInt::operator<(const CycloInt& other) const {
  if (order_ != other.order_) return order_ < other.order_;
  return coeffs_ < other.coeffs_;
}

CycloInt CycloInt::pow(unsigned exponent) const {
  CycloInt result = one(order_);
  CycloInt base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

CycloInt CycloInt::conjugate() const { return galois(-1); }

CycloInt CycloInt::galois(long long j) const {
  const auto& ring = ring_context(order_);
  long long jm = j % static_cast<long long>(order_);
  if (jm < 0) jm += order_;
  if (std::gcd(static_cast<long long>(order_), jm) != 1)
    throw std::domain_error("galois: exponent " + std::to_string(j) +
                            " is not coprime to order " + std::to_string(order_));
  std::vector<BigInt> mapped(order_, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    mapped[(i * static_cast<size_t>(jm)) % order_] += coeffs_[i];
  }
  reduce_in_place(mapped, ring);
  return CycloInt(order_, std::move(mapped));
}

bool CycloInt::is_real() const { return *this == conjugate(); }

std::complex<double> CycloInt::complex_value() const {
  const auto& ring = ring_context(order_);
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    acc += to_double(coeffs_[i]) * ring.root_powers[i];
  }
  return acc;
}

double CycloInt::real_value() const { return complex_value().real(); }

std::string CycloInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    BigInt c = coeffs_[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (a != 1 || i == 0) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycloInt make_cos_combo(unsigned n, const std::map<int, long long>& half_unit_coeffs) {
  if (n < 3) throw std::domain_error("make_cos_combo: symmetry order must be >= 3");
  const unsigned order = 4 * n;
  CycloInt acc = CycloInt::zero(order);
  for (const auto& [h, c] : half_unit_coeffs) {
    if (h < 0 || h > static_cast<int>(2 * n))
      throw std::domain_error("make_cos_combo: index " + std::to_string(h) +
                              " out of range [0, 2n] in half-units");
    if (c == 0) continue;
    const CycloInt coeff = CycloInt::integer(order, c);
    if (h == 0) {
      acc += coeff;
    } else {
      acc += coeff * (CycloInt::root_power(order, h) + CycloInt::root_power(order, -h));
    }
  }
  return acc;
}

CycloInt unit_root(unsigned n, long long h) { return CycloInt::root_power(4 * n, h); }

CycloInt two_i_sin(unsigned n, long long h) {
  return CycloInt::root_power(4 * n, h) - CycloInt::root_power(4 * n, -h);
}

}  // namespace rhombforge
