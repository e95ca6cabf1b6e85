#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qbw {

// Arbitrary-precision integer used for every exact coefficient in the
// library. Intermediate products in large exact matrix multiplications are
// not guaranteed to fit machine words, so nothing here depends on that.
using Int = boost::multiprecision::cpp_int;

} // namespace qbw
