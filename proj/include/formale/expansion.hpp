#pragma once

// Expansions at the origin in the parameter z = -x/y, with w = -1/y.

#include <cstddef>

#include "formale/curve.hpp"
#include "formale/series.hpp"

namespace formale {

/// w(z) and the invariant-differential stream b(n), where
/// omega = sum_{n>=1} b(n) z^{n-1} dz. `b[n - 1]` holds b(n).
struct ExpansionBundle {
    IntSeries w;
    IntSeries b;
    std::size_t order = 0;

    /// b(n) for 1 <= n <= order. Throws InsufficientOrder past the range.
    const Integer& b_at(std::size_t n) const;
};

/// s_0..s_{N-1} from s_n = a1 s_{n-1} + a2 s_{n-2} + a3 (w^2)_n + a4 (w^2)_{n-1} + a6 (w^3)_n,
/// seeded with s_0 = s_1 = s_2 = 0, s_3 = 1. Requires N >= 4.
IntSeries w_series_recurrence(const WeierstrassCurve& curve, std::size_t order);

/// w(z) for a6 = 0 from the root of the quadratic
/// (a3 + a4 z) w^2 - (1 - a1 z - a2 z^2) w + z^3 = 0 that is regular at 0.
/// Throws DegenerateFamily when a6 != 0 or a3 = a4 = 0.
IntSeries w_series_closed_family1(const WeierstrassCurve& curve, std::size_t order);

/// b(1..N) from omega = w'(z) / (3z^2 + 2 a2 z w + a4 w^2 + a1 w) dz.
IntSeries invariant_differential(const WeierstrassCurve& curve, std::size_t order);

/// Same quotient, starting from a supplied w (of order >= N + 3).
IntSeries invariant_differential_from_w(const WeierstrassCurve& curve, const IntSeries& w, std::size_t order);

/// w and b with b known through b(N).
ExpansionBundle expand(const WeierstrassCurve& curve, std::size_t order);

/// z^valuation * regular. Only used for the coordinate functions.
struct LaurentSeries {
    int valuation = 0;
    IntSeries regular;
};

/// x(z) = z / w(z) = z^-2 (1 + ...).
LaurentSeries x_series(const IntSeries& w);
/// y(z) = -1 / w(z) = -z^-3 (1 + ...).
LaurentSeries y_series(const IntSeries& w);

/// True iff (x(z), y(z)) built from w satisfies the Weierstrass equation
/// as far as w determines it.
///
/// With w known to order N, x and y are known to relative order N - 3.
/// The equation is multiplied by z^6 (the pole of x^3 and y^2) and the
/// resulting regular series is checked to vanish through z^{N-4}.
bool verify_point_on_curve(const WeierstrassCurve& curve, const IntSeries& w);
bool verify_point_on_curve(const WeierstrassCurve& curve, std::size_t order);

} // namespace formale
