#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace extsq {

// Exact coefficient arithmetic for characters, multiplicities and Laurent
// coefficients. Everything downstream assumes these never overflow.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline long long to_ll(const Int& v) { return static_cast<long long>(v); }

}  // namespace extsq
