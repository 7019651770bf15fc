#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace arbor {

// Sequence values grow roughly geometrically; everything value-sized is
// arbitrary precision. Indices and partition parts stay machine-width.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace arbor
