#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rhombforge {

// Coefficients grow with every inflation step, so they are unbounded integers.
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace rhombforge
