#include <doctest.h>

#include <cmath>

#include "formale/asd.hpp"
#include "formale/lseries.hpp"
#include "oracles.hpp"

using namespace formale;

TEST_CASE("eta product coefficients") {
    const auto eta = eta_product_level11(40);
    CHECK(eta.provenance == Provenance::EtaProduct);
    CHECK(eta.at(1) == 1);
    CHECK(eta.at(2) == -2);
    CHECK(eta.at(11) == 1);
    const auto naive = oracle::eta11(41);
    for (std::size_t n = 1; n <= 40; ++n) {
        CHECK(eta.at(n) == naive[n - 1]);
    }
}

TEST_CASE("Euler product for the conductor-11 curve") {
    const auto c = euler_coefficients(conductor11_curve(), 10);
    CHECK(c.provenance == Provenance::EulerProduct);
    CHECK(c.at(1) == 1);
    CHECK(c.at(2) == -2);
    CHECK(c.at(3) == -1);
    CHECK(c.at(4) == 2);
    CHECK(c.at(5) == 1);
}

TEST_CASE("Euler product equals the eta product through n = 200") {
    TraceCache cache;
    const auto euler = euler_coefficients(conductor11_curve(), 200, &cache);
    const auto eta = eta_product_level11(200);
    CHECK(euler.c == eta.c);
    CHECK(euler.is_multiplicative());
    CHECK(eta.is_multiplicative());
}

TEST_CASE("prime squares and multiplicativity on other curves") {
    for (const auto& curve : {WeierstrassCurve(0, 0, 0, 1, 0), WeierstrassCurve(1, -1, 1, -3, 5)}) {
        const auto c = euler_coefficients(curve, 300);
        CHECK(c.is_multiplicative());
        for (auto p : primes_up_to(17)) {
            const auto local = classify_reduction(curve, p);
            CHECK(c.at(p) == local.trace);
            if (local.reduction == ReductionType::Good) {
                CHECK(c.at(p * p) == Integer(local.trace) * local.trace - p);
                CHECK(std::abs(c.at(p).get_si()) < 2 * std::sqrt(static_cast<double>(p)));
            } else {
                CHECK(c.at(p * p) == Integer(local.trace) * local.trace);
            }
        }
    }
}

TEST_CASE("multiplicativity detects corruption") {
    auto c = eta_product_level11(30);
    c.c[5] += 1;  // c_6
    CHECK_FALSE(c.is_multiplicative());
}

TEST_CASE("g series") {
    DirichletCoefficients unit;
    unit.c = {1, 0, 0, 0};
    CHECK(g_series(unit) == RatSeries::identity(5));
    const auto g = g_series(eta_product_level11(6));
    CHECK(g[1] == 1);
    CHECK(g[2] == -1);
    CHECK(g[3] == Rational(-1, 3));
    CHECK(g[4] == Rational(1, 2));
}
