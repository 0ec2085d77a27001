#include "formale/expansion.hpp"

#include <string>

namespace formale {

namespace {

struct WData {
    IntSeries w;
    IntSeries square;  // (w^2)_n, needed by both the recurrence and the differential
};

// s_0 = s_1 = s_2 = 0 means every convolution below only touches indices >= 3.
WData w_with_square(const WeierstrassCurve& curve, std::size_t order) {
    if (order < 4) {
        throw std::invalid_argument("w(z) needs order >= 4");
    }
    const Integer& a1 = curve.a1();
    const Integer& a2 = curve.a2();
    const Integer& a3 = curve.a3();
    const Integer& a4 = curve.a4();
    const Integer& a6 = curve.a6();
    IntSeries s(order);
    IntSeries sq(order);
    s[3] = 1;
    Integer acc;
    for (std::size_t n = 4; n < order; ++n) {
        // (w^2)_n uses s_k, s_l with k, l >= 3, so only s_3..s_{n-3}.
        acc = 0;
        for (std::size_t k = 3; 2 * k < n; ++k) {
            if (s[k] != 0 && s[n - k] != 0) {
                acc += s[k] * s[n - k];
            }
        }
        acc *= 2;
        if (n % 2 == 0 && s[n / 2] != 0) {
            acc += s[n / 2] * s[n / 2];
        }
        sq[n] = acc;

        Integer value = a1 * s[n - 1] + a2 * s[n - 2] + a3 * sq[n] + a4 * sq[n - 1];
        if (a6 != 0) {
            // (w^3)_n = sum_k s_k (w^2)_{n-k} with k >= 3 and n - k >= 6.
            acc = 0;
            for (std::size_t k = 3; k + 6 <= n; ++k) {
                if (s[k] != 0 && sq[n - k] != 0) {
                    acc += s[k] * sq[n - k];
                }
            }
            value += a6 * acc;
        }
        s[n] = value;
    }
    return {std::move(s), std::move(sq)};
}

// omega / dz = (w' / z^2) / ((3 z^2 + 2 a2 z w + a4 w^2 + a1 w) / z^2); both
// factors of z^2 cancel and the divisor then starts with 3.
IntSeries differential_quotient(const WeierstrassCurve& curve, const IntSeries& w, const IntSeries& sq,
                                std::size_t order) {
    if (w.order() < order + 3 || sq.order() < order + 3) {
        throw InsufficientOrder("w(z) must be known to order " + std::to_string(order + 3));
    }
    IntSeries numerator(order);
    IntSeries denominator(order);
    for (std::size_t n = 0; n < order; ++n) {
        numerator[n] = w[n + 3] * static_cast<unsigned long>(n + 3);
        denominator[n] = 2 * curve.a2() * w[n + 1] + curve.a4() * sq[n + 2] + curve.a1() * w[n + 2];
    }
    denominator[0] += 3;
    return series_div(numerator, denominator);
}

} // namespace

const Integer& ExpansionBundle::b_at(std::size_t n) const {
    if (n < 1 || n > b.order()) {
        throw InsufficientOrder("b(" + std::to_string(n) + ") requested but b is known through b(" +
                                std::to_string(b.order()) + ")");
    }
    return b[n - 1];
}

IntSeries w_series_recurrence(const WeierstrassCurve& curve, std::size_t order) {
    return w_with_square(curve, order).w;
}

IntSeries w_series_closed_family1(const WeierstrassCurve& curve, std::size_t order) {
    if (!curve.in_family1()) {
        throw DegenerateFamily("closed form for w(z) needs a6 = 0");
    }
    if (curve.a3() == 0 && curve.a4() == 0) {
        throw DegenerateFamily("closed form for w(z) needs a3 or a4 nonzero");
    }
    // With a3 = 0 the numerator is divided by z, costing one order.
    const std::size_t work = curve.a3() != 0 ? order : order + 1;
    const Rational a1(curve.a1()), a2(curve.a2()), a3(curve.a3()), a4(curve.a4());
    RatSeries p(work);
    p[0] = 1;
    if (work > 1) {
        p[1] = -a1;
    }
    if (work > 2) {
        p[2] = -a2;
    }
    RatSeries cubic(work);
    if (work > 3) {
        cubic[3] = 4 * a3;
    }
    if (work > 4) {
        cubic[4] = 4 * a4;
    }
    const RatSeries q = p * p - cubic;
    const RatSeries root = q * inv_sqrt(q);
    RatSeries numerator = p - root;
    RatSeries w;
    if (curve.a3() != 0) {
        RatSeries denominator(work);
        denominator[0] = 2 * a3;
        if (work > 1) {
            denominator[1] = 2 * a4;
        }
        w = series_div(numerator, denominator);
    } else {
        w = shift_down(numerator, 1);
        w *= Rational(1) / (2 * a4);
    }
    return to_integer(w);
}

IntSeries invariant_differential(const WeierstrassCurve& curve, std::size_t order) {
    const auto data = w_with_square(curve, order + 3);
    return differential_quotient(curve, data.w, data.square, order);
}

IntSeries invariant_differential_from_w(const WeierstrassCurve& curve, const IntSeries& w, std::size_t order) {
    return differential_quotient(curve, w, w * w, order);
}

ExpansionBundle expand(const WeierstrassCurve& curve, std::size_t order) {
    auto data = w_with_square(curve, order + 3);
    ExpansionBundle bundle;
    bundle.b = differential_quotient(curve, data.w, data.square, order);
    bundle.w = std::move(data.w);
    bundle.order = order;
    return bundle;
}

LaurentSeries x_series(const IntSeries& w) {
    return {-2, inverse(shift_down(w, 3))};
}

LaurentSeries y_series(const IntSeries& w) {
    return {-3, -inverse(shift_down(w, 3))};
}

bool verify_point_on_curve(const WeierstrassCurve& curve, const IntSeries& w) {
    if (w.order() < 8) {
        throw std::invalid_argument("point-on-curve check needs w to order >= 8");
    }
    // x = z^-2 U and y = -z^-3 U, so z^6 (y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6)
    // = U^2 - a1 z U^2 - a3 z^3 U - U^3 - a2 z^2 U^2 - a4 z^4 U - a6 z^6.
    const IntSeries u = x_series(w).regular;
    const IntSeries u2 = u * u;
    const IntSeries u3 = u2 * u;
    IntSeries residual = u2 - u3;
    residual -= curve.a1() * shift_up(u2, 1);
    residual -= curve.a2() * shift_up(u2, 2);
    residual -= curve.a3() * shift_up(u, 3);
    residual -= curve.a4() * shift_up(u, 4);
    residual -= IntSeries::monomial(6, curve.a6(), residual.order());
    return residual.valuation() == residual.order();
}

bool verify_point_on_curve(const WeierstrassCurve& curve, std::size_t order) {
    return verify_point_on_curve(curve, w_series_recurrence(curve, order));
}

} // namespace formale
