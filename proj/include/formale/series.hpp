#pragma once

// Truncated power series over exact scalars.
//
// A series of order N stores the coefficients of z^0 .. z^{N-1}; everything
// from z^N on is unknown. Binary operations always truncate to the smaller
// order so a result never claims more precision than its inputs carry.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "formale/integer.hpp"

namespace formale {

namespace detail {

/// Exact quotient num / den. Over the integers the division must be exact.
inline Integer exact_quotient(const Integer& num, const Integer& den) {
    if (den == 0 || !divides(den, num)) {
        throw IntegralityViolation("non-integral quotient " + num.get_str() + " / " + den.get_str());
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Rational exact_quotient(const Rational& num, const Rational& den) {
    if (den == 0) {
        throw IntegralityViolation("division by zero");
    }
    return num / den;
}

inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }
inline bool is_unit(const Rational& v) { return v != 0; }

template <class Scalar>
Scalar from_rational(const Rational& v);

template <>
inline Rational from_rational<Rational>(const Rational& v) {
    return v;
}

template <>
inline Integer from_rational<Integer>(const Rational& v) {
    if (v.get_den() != 1) {
        throw IntegralityViolation("coefficient " + v.get_str() + " is not an integer");
    }
    return v.get_num();
}

} // namespace detail

template <class Scalar>
class TruncatedSeries {
public:
    using scalar_type = Scalar;

    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order) {}

    explicit TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

    TruncatedSeries(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) {}

    static TruncatedSeries monomial(std::size_t exponent, const Scalar& c, std::size_t order) {
        TruncatedSeries s(order);
        if (exponent < order) {
            s.coeffs_[exponent] = c;
        }
        return s;
    }

    /// The series z, truncated at `order`.
    static TruncatedSeries identity(std::size_t order) { return monomial(1, Scalar(1), order); }

    std::size_t order() const { return coeffs_.size(); }

    const Scalar& operator[](std::size_t n) const { return coeffs_[n]; }
    Scalar& operator[](std::size_t n) { return coeffs_[n]; }

    /// Coefficient of z^n, or zero past the stored range.
    Scalar coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Scalar(0); }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const {
        TruncatedSeries r(std::min(order, this->order()));
        std::copy_n(coeffs_.begin(), r.order(), r.coeffs_.begin());
        return r;
    }

    /// Index of the first nonzero coefficient, or order() if the series is zero.
    std::size_t valuation() const {
        std::size_t n = 0;
        while (n < coeffs_.size() && coeffs_[n] == 0) {
            ++n;
        }
        return n;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        coeffs_.resize(std::min(order(), o.order()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] += o.coeffs_[n];
        }
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        coeffs_.resize(std::min(order(), o.order()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] -= o.coeffs_[n];
        }
        return *this;
    }

    TruncatedSeries& operator*=(const Scalar& c) {
        for (auto& v : coeffs_) {
            v *= c;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) { return a *= c; }
    friend TruncatedSeries operator*(const Scalar& c, TruncatedSeries a) { return a *= c; }

    friend TruncatedSeries operator-(TruncatedSeries a) {
        for (auto& v : a.coeffs_) {
            v = -v;
        }
        return a;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Scalar> coeffs_;
};

using IntSeries = TruncatedSeries<Integer>;
using RatSeries = TruncatedSeries<Rational>;

template <class Scalar>
TruncatedSeries<Scalar> operator*(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries<Scalar> r(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < order; ++j) {
            if (b[j] != 0) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    return r;
}

template <class Scalar>
TruncatedSeries<Scalar> mul(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    return a * b;
}

/// Multiplies by z^k, keeping the order (the top k coefficients fall off).
template <class Scalar>
TruncatedSeries<Scalar> shift_up(const TruncatedSeries<Scalar>& a, std::size_t k) {
    TruncatedSeries<Scalar> r(a.order());
    for (std::size_t n = k; n < a.order(); ++n) {
        r[n] = a[n - k];
    }
    return r;
}

/// Divides by z^k. The low k coefficients must vanish; the order drops by k.
template <class Scalar>
TruncatedSeries<Scalar> shift_down(const TruncatedSeries<Scalar>& a, std::size_t k) {
    if (a.valuation() < std::min(k, a.order())) {
        throw NonzeroConstantTerm("series is not divisible by z^" + std::to_string(k));
    }
    TruncatedSeries<Scalar> r(a.order() > k ? a.order() - k : 0);
    for (std::size_t n = 0; n < r.order(); ++n) {
        r[n] = a[n + k];
    }
    return r;
}

/// a / b for b with invertible constant term. Over the integers every
/// quotient coefficient must come out exact.
template <class Scalar>
TruncatedSeries<Scalar> series_div(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
    const std::size_t order = std::min(a.order(), b.order());
    if (order == 0) {
        return TruncatedSeries<Scalar>(0);
    }
    if (b[0] == 0) {
        throw BadConstantTerm("divisor has zero constant term");
    }
    TruncatedSeries<Scalar> q(order);
    Scalar acc;
    for (std::size_t n = 0; n < order; ++n) {
        acc = a[n];
        for (std::size_t k = 1; k <= n; ++k) {
            if (b[k] != 0 && q[n - k] != 0) {
                acc -= b[k] * q[n - k];
            }
        }
        q[n] = detail::exact_quotient(acc, b[0]);
    }
    return q;
}

template <class Scalar>
TruncatedSeries<Scalar> inverse(const TruncatedSeries<Scalar>& f) {
    return series_div(TruncatedSeries<Scalar>::monomial(0, Scalar(1), f.order()), f);
}

/// f^k for k >= 0.
template <class Scalar>
TruncatedSeries<Scalar> pow(const TruncatedSeries<Scalar>& f, unsigned k) {
    auto r = TruncatedSeries<Scalar>::monomial(0, Scalar(1), f.order());
    auto base = f;
    while (k != 0) {
        if (k & 1U) {
            r = r * base;
        }
        k >>= 1U;
        if (k != 0) {
            base = base * base;
        }
    }
    return r;
}

/// f(g(z)), truncated to min(order f, order g). Requires g(0) = 0.
template <class Scalar>
TruncatedSeries<Scalar> compose(const TruncatedSeries<Scalar>& f, const TruncatedSeries<Scalar>& g) {
    if (g.order() > 0 && g[0] != 0) {
        throw NonzeroConstantTerm("inner series of a composition must vanish at 0");
    }
    const std::size_t order = std::min(f.order(), g.order());
    TruncatedSeries<Scalar> r(order);
    if (order == 0) {
        return r;
    }
    const auto inner = g.truncated(order);
    // Horner: r = (...((f_{N-1} g + f_{N-2}) g + ...) g + f_0.
    for (std::size_t k = order; k-- > 0;) {
        r = r * inner;
        r[0] += f[k];
    }
    return r;
}

/// Compositional inverse by solving f(h(z)) = z one degree at a time.
///
/// With h known through z^{n-1}, the coefficient of z^n in f(h) equals
/// f_1 h_n plus terms that only involve lower coefficients, so h_n is read
/// off after one truncated composition.
template <class Scalar>
TruncatedSeries<Scalar> reverse(const TruncatedSeries<Scalar>& f) {
    const std::size_t order = f.order();
    if (order < 2 || f[0] != 0 || !detail::is_unit(f[1])) {
        throw NotReversible("series needs f(0) = 0 and a unit linear coefficient");
    }
    TruncatedSeries<Scalar> h(order);
    h[1] = detail::exact_quotient(Scalar(1), f[1]);
    for (std::size_t n = 2; n < order; ++n) {
        const auto partial = compose(f.truncated(n + 1), h.truncated(n + 1));
        h[n] = detail::exact_quotient(Scalar(-partial[n]), f[1]);
    }
    return h;
}

/// Compositional inverse via the Lagrange formula
/// [x^n] h = (1/n) [u^{n-1}] phi(u)^n, where f(u) = u / phi(u).
/// Independent of `reverse`; used to cross-check it.
template <class Scalar>
TruncatedSeries<Scalar> reverse_lagrange(const TruncatedSeries<Scalar>& f) {
    const std::size_t order = f.order();
    if (order < 2 || f[0] != 0 || !detail::is_unit(f[1])) {
        throw NotReversible("series needs f(0) = 0 and a unit linear coefficient");
    }
    // f(u)/u, then phi = u / f(u) is its reciprocal.
    RatSeries quotient(order - 1);
    for (std::size_t k = 0; k + 1 < order; ++k) {
        quotient[k] = Rational(f[k + 1]);
    }
    const RatSeries phi = inverse(quotient);
    TruncatedSeries<Scalar> h(order);
    RatSeries phi_power = RatSeries::monomial(0, Rational(1), order - 1);
    for (std::size_t n = 1; n < order; ++n) {
        phi_power = phi_power * phi;
        const Rational c = phi_power[n - 1] / Rational(static_cast<long>(n));
        h[n] = detail::from_rational<Scalar>(c);
    }
    return h;
}

/// 1/sqrt(f) over the rationals for f(0) = 1.
inline RatSeries inv_sqrt(const RatSeries& f) {
    const std::size_t order = f.order();
    if (order == 0) {
        return RatSeries(0);
    }
    if (f[0] != 1) {
        throw BadConstantTerm("reciprocal square root needs constant term 1");
    }
    // g = f^{-1/2} satisfies n g_n = sum_{k=1}^{n} (k/2 - n) f_k g_{n-k}.
    RatSeries g(order);
    g[0] = 1;
    Rational acc;
    for (std::size_t n = 1; n < order; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k] != 0) {
                acc += ratio(static_cast<long>(k) - 2 * static_cast<long>(n), 2) * f[k] * g[n - k];
            }
        }
        g[n] = acc / Rational(static_cast<long>(n));
    }
    return g;
}

inline RatSeries to_rational(const IntSeries& f) {
    RatSeries r(f.order());
    for (std::size_t n = 0; n < f.order(); ++n) {
        r[n] = Rational(f[n]);
    }
    return r;
}

inline bool is_integral(const RatSeries& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Rational& c) { return c.get_den() == 1; });
}

/// Throws IntegralityViolation unless every coefficient is an integer.
inline IntSeries to_integer(const RatSeries& f) {
    IntSeries r(f.order());
    for (std::size_t n = 0; n < f.order(); ++n) {
        r[n] = detail::from_rational<Integer>(f[n]);
    }
    return r;
}

/// Formal antiderivative with zero constant term; the order grows by one.
template <class Scalar>
RatSeries integrate(const TruncatedSeries<Scalar>& f) {
    RatSeries r(f.order() + 1);
    for (std::size_t n = 0; n < f.order(); ++n) {
        r[n + 1] = Rational(f[n]) / Rational(static_cast<long>(n + 1));
    }
    return r;
}

/// Formal derivative; the order drops by one.
template <class Scalar>
TruncatedSeries<Scalar> differentiate(const TruncatedSeries<Scalar>& f) {
    TruncatedSeries<Scalar> r(f.order() > 0 ? f.order() - 1 : 0);
    for (std::size_t n = 1; n < f.order(); ++n) {
        r[n - 1] = f[n] * Scalar(static_cast<long>(n));
    }
    return r;
}

} // namespace formale
