#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qform {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Formats a rational as "p/q" with the denominator always spelled out.
std::string rat_string(const Rat& r);

/// True iff |v| can be represented exactly by an IEEE double (< 2^53).
bool fits_json_number(const Int& v);

/// Checked narrowing; throws on overflow.
long long to_longlong(const Int& v);

bool is_perfect_square(const Int& n);

/// Product of the primes dividing n to an odd power (0 for 0, sign kept).
Int squarefree_part(const Int& n);

}  // namespace qform
