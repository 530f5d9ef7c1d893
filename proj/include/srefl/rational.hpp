#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace srefl {

// Arbitrary-precision rationals: class sizes and |Gamma| up to 120 blow
// through fixed-width denominators during elimination.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

}  // namespace srefl
