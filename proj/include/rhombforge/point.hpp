#pragma once

#include "rhombforge/cyclotomic.hpp"

namespace rhombforge {

/// A point of the plane stored as a single complex cyclotomic integer, so
/// translation, rotation by multiples of pi/(2n) and inflation by L are all
/// exact. Float coordinates are derived on demand.
struct ExactPoint {
  CycloInt z;

  explicit ExactPoint(CycloInt value) : z(std::move(value)) {}
  static ExactPoint origin(unsigned n) { return ExactPoint(CycloInt::zero(4 * n)); }

  ExactPoint operator+(const ExactPoint& other) const { return ExactPoint(z + other.z); }
  ExactPoint operator-(const ExactPoint& other) const { return ExactPoint(z - other.z); }
  ExactPoint scaled(const CycloInt& factor) const { return ExactPoint(z * factor); }

  bool operator==(const ExactPoint& other) const { return z == other.z; }
  bool operator!=(const ExactPoint& other) const { return !(*this == other); }
  bool operator<(const ExactPoint& other) const { return z < other.z; }

  double x() const { return z.complex_value().real(); }
  double y() const { return z.complex_value().imag(); }
};

}  // namespace rhombforge
