#pragma once

// Exact scalar types and the small number-theoretic helpers shared by every module.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace formale {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define FORMALE_DEFINE_ERROR(Name)                     \
    class Name : public Error {                        \
    public:                                            \
        using Error::Error;                            \
    }

FORMALE_DEFINE_ERROR(NonzeroConstantTerm);
FORMALE_DEFINE_ERROR(NotReversible);
FORMALE_DEFINE_ERROR(BadConstantTerm);
FORMALE_DEFINE_ERROR(SingularCurve);
FORMALE_DEFINE_ERROR(NotPrime);
FORMALE_DEFINE_ERROR(BadReduction);
FORMALE_DEFINE_ERROR(DegenerateFamily);
FORMALE_DEFINE_ERROR(IntegralityViolation);
FORMALE_DEFINE_ERROR(InsufficientOrder);
FORMALE_DEFINE_ERROR(HasseViolation);
FORMALE_DEFINE_ERROR(ParseError);
FORMALE_DEFINE_ERROR(UnassertedModel);

#undef FORMALE_DEFINE_ERROR

/// C(n, k) with C(n, k) = 0 whenever k < 0 or k > n (including n < 0).
Integer binomial(long n, long k);

/// base^exp with 0^0 = 1. Negative exponents are rejected.
Integer ipow(const Integer& base, long exp);

/// num / den in lowest terms. The two-argument mpq_class constructor does not reduce.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_prime(std::int64_t n);

/// Nonnegative residue of v modulo m (m > 0).
std::int64_t mod_small(const Integer& v, std::int64_t m);

/// Exact divisibility test; 0 divides only 0.
bool divides(const Integer& modulus, const Integer& value);

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

} // namespace formale
