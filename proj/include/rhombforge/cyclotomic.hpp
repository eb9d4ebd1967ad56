#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "rhombforge/bigint.hpp"

namespace rhombforge {

/// Shared data for one cyclotomic order: the minimal polynomial used for
/// canonical reduction and precomputed complex root powers for evaluation.
struct RingContext {
  unsigned order = 0;
  unsigned degree = 0;                             // phi(order)
  std::vector<BigInt> minimal_poly;                // ascending, monic
  std::vector<std::complex<double>> root_powers;   // zeta^i for i < order
};

unsigned euler_phi(unsigned m);
std::vector<BigInt> cyclotomic_polynomial(unsigned m);
const RingContext& ring_context(unsigned order);

/// An element of Z[zeta] with zeta a primitive root of unity of the given
/// order, stored in the canonical power basis 1, zeta, ..., zeta^(phi-1).
/// Two values are equal exactly when their coefficient vectors match.
/// Values are immutable once constructed and safe to share across threads.
class CycloInt {
 public:
  static CycloInt zero(unsigned order);
  static CycloInt one(unsigned order);
  static CycloInt integer(unsigned order, BigInt value);
  static CycloInt root_power(unsigned order, long long exponent);   // zeta^e
  static CycloInt from_coefficients(unsigned order, std::vector<BigInt> raw);

  unsigned order() const noexcept { return order_; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational(BigInt* value = nullptr) const;

  CycloInt operator+(const CycloInt& other) const;
  CycloInt operator-(const CycloInt& other) const;
  CycloInt operator-() const;
  CycloInt operator*(const CycloInt& other) const;
  CycloInt& operator+=(const CycloInt& other);
  CycloInt& operator-=(const CycloInt& other);
  CycloInt& operator*=(const CycloInt& other);
  bool operator==(const CycloInt& other) const;
  bool operator!=(const CycloInt& other) const { return !(*this == other); }
  bool operator<(const CycloInt& other) const;  // lexicographic, for containers

  CycloInt pow(unsigned exponent) const;

  /// Complex conjugation, i.e. the automorphism zeta -> zeta^(-1).
  CycloInt conjugate() const;

  /// Galois automorphism zeta -> zeta^j; j must be coprime to the order.
  CycloInt galois(long long j) const;

  bool is_real() const;

  std::complex<double> complex_value() const;
  double real_value() const;

  std::string to_string() const;

 private:
  CycloInt(unsigned order, std::vector<BigInt> reduced);

  unsigned order_;
  std::vector<BigInt> coeffs_;
};

/// c0 + sum over k>0 of c_k * 2cos(k*pi/n), with indices given in half-units
/// (the map key is 2k). Valid keys lie in [0, 2n]. The result lives in the
/// ring of order 4n and is equal to its own conjugate.
CycloInt make_cos_combo(unsigned n, const std::map<int, long long>& half_unit_coeffs);

/// zeta^h for the ring of order 4n; h is an angle in units of pi/(2n).
CycloInt unit_root(unsigned n, long long h);

/// zeta^h - zeta^(-h) = 2i*sin(h*pi/(2n)); used for exact signed-area identities.
CycloInt two_i_sin(unsigned n, long long h);

}  // namespace rhombforge
