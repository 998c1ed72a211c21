#include "levrecon/math.hpp"

#include "levrecon/errors.hpp"

namespace levrecon {

Bigint binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Bigint r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Bigint ball_volume(int n, int t) {
    if (n < 0 || t < 0 || t > n) throw precondition_error("ball_volume requires 0 <= t <= n");
    Bigint v = 0;
    for (int i = 0; i <= t; ++i) v += binomial(n, i);
    return v;
}

Bigint pow_bigint(const Bigint& base, unsigned long exp) {
    Bigint r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

double to_double(const Bigint& v) { return v.get_d(); }

double to_double(const Rational& v) { return v.get_d(); }

} // namespace levrecon
