#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ypat {

// All counts in the public API are exact arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace ypat
