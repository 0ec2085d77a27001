#include "formale/integer.hpp"

namespace formale {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer ipow(const Integer& base, long exp) {
    if (exp < 0) {
        throw std::domain_error("negative exponent");
    }
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::int64_t mod_small(const Integer& v, std::int64_t m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), Integer(static_cast<long>(m)).get_mpz_t());
    return r.get_si();
}

bool divides(const Integer& modulus, const Integer& value) {
    if (modulus == 0) {
        return value == 0;
    }
    return mpz_divisible_p(value.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

} // namespace formale
