#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the code paths it is used to check.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "formale/integer.hpp"

namespace oracle {

using formale::Integer;
using formale::Rational;
using Poly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

/// Product formula n! / (k! (n-k)!) with the out-of-range convention.
inline Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer num = 1;
    Integer den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

template <class T>
std::vector<T> truncated_product(const std::vector<T>& a, const std::vector<T>& b, std::size_t order) {
    std::vector<T> r(order, T(0));
    for (std::size_t i = 0; i < a.size() && i < order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < order; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

/// w(z) by fixed-point iteration of w <- z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3.
/// Each pass fixes at least one more coefficient.
inline Poly w_fixed_point(const std::array<long, 5>& a, std::size_t order) {
    Poly w(order, Integer(0));
    for (std::size_t pass = 0; pass < order; ++pass) {
        const Poly w2 = truncated_product(w, w, order);
        const Poly w3 = truncated_product(w2, w, order);
        Poly next(order, Integer(0));
        if (order > 3) {
            next[3] = 1;
        }
        for (std::size_t n = 0; n < order; ++n) {
            if (n >= 1) {
                next[n] += a[0] * w[n - 1] + a[3] * w2[n - 1];
            }
            if (n >= 2) {
                next[n] += a[1] * w[n - 2];
            }
            next[n] += a[2] * w2[n] + a[4] * w3[n];
        }
        w = next;
    }
    return w;
}

/// b(1..order) through the other standard form, omega = dx / (2y + a1 x + a3).
/// With x = z/w, y = -1/w this is (w - z w') / (w (a1 z + a3 w - 2)), computed
/// over the rationals after cancelling z^3.
inline RatPoly omega_via_dx(const std::array<long, 5>& a, std::size_t order) {
    const std::size_t m = order + 4;
    const Poly w = w_fixed_point(a, m);
    RatPoly num(order, Rational(0));
    RatPoly den(order, Rational(0));
    for (std::size_t n = 0; n < order; ++n) {
        // (w - z w')_{n+3} = (1 - (n+3)) s_{n+3}
        num[n] = Rational(w[n + 3] * (1 - static_cast<long>(n + 3)));
    }
    // w (a1 z + a3 w - 2) / z^3 = u (a1 z + a3 w - 2), u = w / z^3
    RatPoly u(order, Rational(0));
    RatPoly factor(order, Rational(0));
    for (std::size_t n = 0; n < order; ++n) {
        u[n] = Rational(w[n + 3]);
        factor[n] = Rational(a[2] * w[n]);
    }
    factor[0] -= 2;
    if (order > 1) {
        factor[1] += a[0];
    }
    den = truncated_product(u, factor, order);
    RatPoly q(order, Rational(0));
    for (std::size_t n = 0; n < order; ++n) {
        Rational acc = num[n];
        for (std::size_t k = 1; k <= n; ++k) {
            acc -= den[k] * q[n - k];
        }
        q[n] = acc / den[0];
    }
    return q;
}

/// 1 + #{(x, y) in F_p^2}, all arithmetic in big integers.
inline std::int64_t brute_force_points(const std::array<long, 5>& a, long p) {
    std::int64_t count = 1;
    for (long x = 0; x < p; ++x) {
        for (long y = 0; y < p; ++y) {
            const Integer lhs = Integer(y) * y + Integer(a[0]) * x * y + Integer(a[2]) * y;
            const Integer rhs = Integer(x) * x * x + Integer(a[1]) * x * x + Integer(a[3]) * x + a[4];
            if (formale::divides(Integer(p), lhs - rhs)) {
                ++count;
            }
        }
    }
    return count;
}

/// Reduction type by exhaustive search: 0 good, 1 split, 2 nonsplit, 3 additive.
/// Finds singular points over F_p^2 and counts tangent slopes of the cone directly.
inline int brute_force_reduction(const std::array<long, 5>& a, long p) {
    auto md = [p](long v) { return ((v % p) + p) % p; };
    for (long x = 0; x < p; ++x) {
        for (long y = 0; y < p; ++y) {
            const long f = md(y * y + a[0] * x * y + a[2] * y - x * x * x - a[1] * x * x - a[3] * x - a[4]);
            const long fx = md(a[0] * y - 3 * x * x - 2 * a[1] * x - a[3]);
            const long fy = md(2 * y + a[0] * x + a[2]);
            if (f != 0 || fx != 0 || fy != 0) {
                continue;
            }
            // Quadratic part at (x, y): Y^2 + a1 XY - (3x + a2) X^2; count lines Y = tX through it.
            int roots = 0;
            for (long t = 0; t < p; ++t) {
                if (md(t * t + a[0] * t - (3 * x + a[1])) == 0) {
                    ++roots;
                }
            }
            return roots == 2 ? 1 : roots == 0 ? 2 : 3;
        }
    }
    return 0;
}

/// Coefficients of q prod (1-q^n)^2 (1-q^{11n})^2 by repeated polynomial products.
inline std::vector<long> eta11(std::size_t bound) {
    std::vector<Integer> prod(bound, Integer(0));
    prod[0] = 1;
    for (std::size_t n = 1; n < bound; ++n) {
        for (int rep = 0; rep < 2; ++rep) {
            std::vector<Integer> factor(bound, Integer(0));
            factor[0] = 1;
            factor[n] = -1;
            prod = truncated_product(prod, factor, bound);
            if (11 * n < bound) {
                std::vector<Integer> f11(bound, Integer(0));
                f11[0] = 1;
                f11[11 * n] = -1;
                prod = truncated_product(prod, f11, bound);
            }
        }
    }
    std::vector<long> out;
    for (const auto& v : prod) {
        out.push_back(v.get_si());
    }
    return out;
}

/// Small deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

private:
    std::mt19937 rng_;
};

} // namespace oracle
