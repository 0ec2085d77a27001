#include <doctest.h>

#include <cmath>
#include <thread>

#include "formale/local.hpp"
#include "oracles.hpp"

using namespace formale;

TEST_CASE("point counts on y^2 = x^3 + x") {
    const WeierstrassCurve c(0, 0, 0, 1, 0);
    CHECK(count_points(c, 5) == 4);
    CHECK(trace(c, 5) == 2);
    CHECK(trace(c, 7) == 0);
    CHECK(trace(c, 13) == -6);
    CHECK_THROWS_AS(count_points(c, 2), BadReduction);
}

TEST_CASE("traces on other small curves") {
    CHECK(trace(WeierstrassCurve(0, 0, 1, 0, 0), 5) == 0);
    CHECK(trace(WeierstrassCurve(0, 0, 1, 0, 0), 7) == -1);
    CHECK(trace(WeierstrassCurve(0, -1, -1, 0, 0), 2) == -2);
    CHECK(trace(WeierstrassCurve(0, -1, -1, 0, 0), 3) == -1);
    CHECK(trace(WeierstrassCurve(0, 0, 0, 0, 1), 7) == -4);
}

TEST_CASE("residue-table counting agrees with brute force for p <= 101") {
    const std::array<std::array<long, 5>, 6> corpus{{
        {0, 0, 0, 1, 0},
        {0, -1, -1, 0, 0},
        {1, -1, 1, -3, 5},
        {1, 2, 3, 4, 0},
        {0, 0, 1, 0, 1},
        {-1, 0, 2, -5, 3},
    }};
    for (const auto& a : corpus) {
        const WeierstrassCurve curve(a[0], a[1], a[2], a[3], a[4]);
        for (auto p : primes_up_to(101)) {
            if (!curve.has_good_reduction(p)) {
                CHECK_THROWS_AS(count_points(curve, p), BadReduction);
                continue;
            }
            const auto expected = oracle::brute_force_points(a, p);
            CHECK(count_points(curve, p) == expected);
            CHECK(count_points_exhaustive(curve, p) == expected);
        }
    }
}

TEST_CASE("Hasse bound is enforced") {
    CHECK_NOTHROW(check_hasse(5, 4));
    CHECK_THROWS_AS(check_hasse(5, 5), HasseViolation);
    CHECK_THROWS_AS(check_hasse(2, -3), HasseViolation);
    const WeierstrassCurve c(1, -1, 1, -3, 5);
    for (auto p : primes_up_to(2000)) {
        if (c.has_good_reduction(p)) {
            const auto t = trace(c, p);
            CHECK(static_cast<double>(std::abs(t)) < 2.0 * std::sqrt(static_cast<double>(p)));
        }
    }
}

TEST_CASE("vanishing traces in the two one-parameter families") {
    for (long a : {1L, 2L, 3L, -1L}) {
        const WeierstrassCurve c(0, 0, 0, a, 0);
        for (auto p : primes_up_to(200)) {
            if (p % 4 == 3 && c.has_good_reduction(p)) {
                CHECK(trace(c, p) == 0);
            }
        }
    }
    for (long a : {1L, 2L, -1L}) {
        const WeierstrassCurve c(0, 0, a, 0, 0);
        for (auto p : primes_up_to(200)) {
            if (p % 3 == 2 && c.has_good_reduction(p)) {
                CHECK(trace(c, p) == 0);
            }
        }
    }
}

TEST_CASE("cache returns the same data and tolerates concurrent fills") {
    const WeierstrassCurve c(0, -1, -1, 0, 0);
    TraceCache cache;
    const auto primes = primes_up_to(400);
    std::vector<std::jthread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&] {
            for (auto p : primes) {
                cache.local_data(c, p);
            }
        });
    }
    threads.clear();
    CHECK(cache.size() == primes.size());
    const auto swept = sweep_local_data(c, primes, &cache);
    const auto cold = sweep_local_data(c, primes);
    CHECK(swept == cold);
    CHECK(cache.find(TraceCache::key(c, 11))->reduction == ReductionType::MultiplicativeSplit);
}

TEST_CASE("primes") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(30) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}
