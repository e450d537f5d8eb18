#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shrinker {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Accepts "p", "-p", "p/q"; result is canonical. Throws std::invalid_argument.
BigRat parse_rational(std::string_view text);
std::string to_string(const BigRat& q);

// mpq_class(n, d) leaves the fraction unreduced; GMP arithmetic expects reduced input.
inline BigRat rat(const BigInt& n, const BigInt& d) {
    BigRat q(n, d);
    q.canonicalize();
    return q;
}
inline BigRat rat(long n, long d) { return rat(BigInt(n), BigInt(d)); }

inline int sign(const BigRat& q) { return sgn(q); }
BigRat pow(const BigRat& q, unsigned e);
BigInt double_factorial(long n);  // (-1)!! = 0!! = 1

// Closest fraction with denominator <= max_den (continued fractions).
BigRat snap_to_rational(double x, long max_den);

}  // namespace shrinker
