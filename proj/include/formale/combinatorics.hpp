#pragma once

// Closed-form coefficient formulas for the invariant differential.
//
// Binomials follow C(a, b) = 0 for b < 0 or b > a, powers follow 0^0 = 1,
// and a term whose binomial product vanishes is dropped before its monomial
// is formed, so exponents are only evaluated where they are nonnegative.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "formale/integer.hpp"
#include "formale/series.hpp"

namespace formale {

/// Dense univariate polynomial; trailing zeros are trimmed.
template <class Scalar>
struct Polynomial {
    std::vector<Scalar> coeffs;

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) {
            coeffs.pop_back();
        }
    }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    Scalar operator()(const Scalar& x) const {
        Scalar r = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            r = r * x + *it;
        }
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Sparse polynomial in (x, y): (i, j) -> coefficient of x^i y^j.
struct BivariatePolynomial {
    std::map<std::pair<unsigned, unsigned>, Integer> terms;

    Integer operator()(const Integer& x, const Integer& y) const;
    Rational operator()(const Rational& x, const Rational& y) const;

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;
};

/// P_n(x) = 2^-n sum_k (-1)^k C(n,k) C(2n-2k, n) x^{n-2k}.
RatPolynomial legendre(unsigned n);

/// T_n(x, y) = sum_k C(n,k) C(n-k,k) x^{n-2k} y^k, the t^n coefficient of (t^2 + xt + y)^n.
BivariatePolynomial central_trinomial(unsigned n);

/// b(n+1) for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x as the quadruple sum
/// over m in [floor(n/2), n], k in [0, floor(m/2)], r in [0, n-m-k] of
/// C(m,k) C(m-k,k) C(m-2k,r) C(k,n-m-k-r) a1^{m-2k-r} a2^r a3^{2k-n+m+r} a4^{n-m-k-r}.
Integer b_closed_family1(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4, unsigned n);

/// Coefficient of z^{3n-3} in omega for y^2 + a3 y = x^3 + a6 (n >= 1):
/// sum_{k = floor((n-1)/2)}^{n-1} C(n+k-1,k) C(k,n-k-1) a3^{2k-n+1} a6^{n-k-1}.
Integer b_closed_family2(const Integer& a3, const Integer& a6, unsigned n);

/// The z^{3n} coefficient of w(z) for the same family, from Lagrange inversion
/// in v = z^3: the sum above divided by n.
Rational w_coeff_family2(const Integer& a3, const Integer& a6, unsigned n);

/// omega coefficients b(1..order) for y^2 + a3 y = x^3 + a6 laid out as a series.
IntSeries b_series_family2(const Integer& a3, const Integer& a6, std::size_t order);

/// A double-sum formula for the Tate normal form y^2 + (1-c) xy - by = x^3 - bx^2:
/// sum_{m=0}^{n-1} sum_k C(m,k) C(m-k,k) C(m-2k, n-m-k-1) (1-c)^{2m-n-k+1} (-b)^{n-m-1}.
/// Untrusted; compare against b_closed_family1(1-c, -b, -b, 0, n-1).
Integer tate_remark_b(const Integer& b, const Integer& c, unsigned n);

/// A b = c = 1 specialisation of that sum with the (1-c) power dropped:
/// sum (-1)^{n-m-1} C(m,k) C(m-k,k) C(m-2k, n-m-k-1).
Integer tate_remark_b_unit_printed(unsigned n);

struct RemarkComparison {
    unsigned n = 0;
    Integer printed;
    Integer authoritative;
    bool agree = false;
};

/// Side-by-side values of tate_remark_b and the family-1 closed form for n = 1..n_max.
std::vector<RemarkComparison> compare_tate_remark(const Integer& b, const Integer& c, unsigned n_max);

/// Same for the b = c = 1 specialisation above.
std::vector<RemarkComparison> compare_tate_remark_unit(unsigned n_max);

} // namespace formale
