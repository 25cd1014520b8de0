#ifndef ALCOVE_RATIONAL_HPP
#define ALCOVE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "alcove/errors.hpp"

namespace alcove {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) throw integrity_error("expected an integer, got " + r.str());
    return rat_num(r);
}

inline Int to_int(const Rational& r) {
    BigInt n = to_integer(r);
    return static_cast<Int>(n);
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

// "3", "-1/2"
inline std::string rat_str(const Rational& r) { return r.str(); }

}  // namespace alcove

#endif
