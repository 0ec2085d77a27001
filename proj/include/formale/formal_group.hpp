#pragma once

// Formal logarithms and the group laws they induce, F(X,Y) = f^-1(f(X) + f(Y)).

#include <cstddef>
#include <string>
#include <vector>

#include "formale/bivariate.hpp"
#include "formale/curve.hpp"
#include "formale/series.hpp"

namespace formale {

struct FormalGroupLaw {
    IntBivariate law;
    std::size_t degree_bound = 0;
    bool integrality_verified = false;
};

/// f(z) = sum_{n>=1} b(n) z^n / n, with b[n-1] = b(n). Order grows by one.
RatSeries formal_log(const IntSeries& b);

/// log^-1(log(X) + log(Y)) truncated at total degree D. Throws
/// IntegralityViolation if a coefficient is not an integer.
FormalGroupLaw group_law_from_log(const RatSeries& log, std::size_t degree_bound);

/// The curve's formal group law to total degree D >= 3.
FormalGroupLaw group_law(const WeierstrassCurve& curve, std::size_t degree_bound);

/// The law attached to g(x) = sum c_n x^n / n, with c[n-1] = c_n and c_1 = 1.
FormalGroupLaw lseries_formal_group(const std::vector<Integer>& c, std::size_t degree_bound);

/// phi = g^-1 o f, the strict isomorphism carrying log f to log g.
RatSeries strict_isomorphism(const RatSeries& f, const RatSeries& g);

/// phi(F(X,Y)) == G(phi(X), phi(Y)) up to the common degree bound.
bool intertwines(const RatSeries& phi, const IntBivariate& from, const IntBivariate& to);

/// Both composition orders tried between the curve law F (log f) and the
/// L-series law G (log g); whichever intertwines is reported.
struct IsomorphismReport {
    RatSeries g_inverse_after_f;  // g^-1 o f
    RatSeries f_inverse_after_g;  // f^-1 o g
    bool g_inverse_after_f_intertwines = false;
    bool f_inverse_after_g_intertwines = false;
    bool phi_integral = false;  // for whichever order intertwines F -> G
    std::string chosen;         // "g^-1 o f", "f^-1 o g", or "none"
};

IsomorphismReport resolve_isomorphism(const RatSeries& f, const RatSeries& g, const IntBivariate& curve_law,
                                      const IntBivariate& lseries_law, std::size_t degree_bound);

/// F(X, 0) = X and F(0, Y) = Y.
bool has_identity(const IntBivariate& law);
bool is_commutative(const IntBivariate& law);
/// F(F(X,Y),Z) = F(X,F(Y,Z)) through total degree min(D, cap) - 1.
bool is_associative(const IntBivariate& law, std::size_t degree_cap = 8);

} // namespace formale
