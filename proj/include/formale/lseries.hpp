#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "formale/curve.hpp"
#include "formale/local.hpp"
#include "formale/series.hpp"

namespace formale {

enum class Provenance { EulerProduct, EtaProduct, UserSupplied };

std::string to_string(Provenance provenance);

/// c_1 .. c_N of L(s) = sum c_n n^-s.
struct DirichletCoefficients {
    std::vector<Integer> c;  // c[n - 1] = c_n
    Provenance provenance = Provenance::UserSupplied;

    std::size_t bound() const { return c.size(); }
    const Integer& at(std::size_t n) const { return c.at(n - 1); }

    /// c_mn = c_m c_n for coprime m, n with mn <= N.
    bool is_multiplicative() const;
};

/// Euler product of the local factors (1 - t_p p^-s + u_p p^{1-2s})^-1.
/// Prime powers follow c_{p^{k+1}} = t_p c_{p^k} - p u_p c_{p^{k-1}}.
DirichletCoefficients euler_coefficients(const WeierstrassCurve& curve, std::size_t bound, TraceCache* cache = nullptr);

/// q prod_{n>=1} (1 - q^n)^2 (1 - q^{11n})^2 read off through q^N.
DirichletCoefficients eta_product_level11(std::size_t bound);

/// g(x) = sum c_n x^n / n; the order is N + 1.
RatSeries g_series(const DirichletCoefficients& c);

} // namespace formale
