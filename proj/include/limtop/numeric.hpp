#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace limtop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

inline int sign_of(const Int& a) { return a.sign(); }
inline int sign_of(const Rat& a) { return a.sign(); }

} // namespace limtop
