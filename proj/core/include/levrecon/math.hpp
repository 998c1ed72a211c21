#ifndef LEVRECON_MATH_HPP
#define LEVRECON_MATH_HPP

#include <gmpxx.h>

#include <cstdint>

namespace levrecon {

/// All counting quantities (ball volumes, channel thresholds, bound
/// formulas) are exact integers; probabilities keep exact rational
/// intermediates and convert to binary64 at the boundary.
using Bigint = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the convention that out-of-range indices
/// (k < 0, k > n, or n < 0) contribute 0.
Bigint binomial(long n, long k);

/// V(n,t) = sum_{i=0}^{t} C(n,i), the volume of a radius-t Hamming ball.
/// Requires 0 <= t <= n.
Bigint ball_volume(int n, int t);

Bigint pow_bigint(const Bigint& base, unsigned long exp);

double to_double(const Bigint& v);
double to_double(const Rational& v);

} // namespace levrecon

#endif
