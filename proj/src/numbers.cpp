#include "qform/numbers.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qform {

std::string rat_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

bool fits_json_number(const Int& v) {
  static const Int bound = Int(1) << 53;
  return v > -bound && v < bound;
}

long long to_longlong(const Int& v) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    throw std::overflow_error("integer too large for native conversion");
  return v.convert_to<long long>();
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

namespace {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return boost::multiprecision::miller_rabin_test(n, 32);
}

// Pollard rho (Brent variant). Input is odd, composite, not a prime power
// candidate checked by caller; returns a nontrivial factor.
Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(x >= y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, long long>& out) {
  if (n <= 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (int p : {2, 3, 5, 7, 11, 13}) {
    if (n % p == 0) {
      ++out[p];
      factor_into(n / p, out);
      return;
    }
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Int squarefree_part(const Int& n) {
  if (n == 0) return 0;
  std::map<Int, long long> f;
  factor_into(boost::multiprecision::abs(n), f);
  Int r = n < 0 ? -1 : 1;
  for (const auto& [p, e] : f)
    if (e % 2 != 0) r *= p;
  return r;
}

}  // namespace qform
