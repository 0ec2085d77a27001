#include <doctest.h>

#include <algorithm>

#include "formale/asd.hpp"
#include "oracles.hpp"

using namespace formale;

namespace {

const CongruenceReport& find(const std::vector<CongruenceReport>& reports, Statement st, std::int64_t p,
                             std::int64_t n, std::int64_t s) {
    const auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) {
        return r.statement == st && r.p == p && r.n == n && r.s == s;
    });
    REQUIRE(it != reports.end());
    return *it;
}

} // namespace

TEST_CASE("coefficient access") {
    const auto b = invariant_differential(WeierstrassCurve(0, 0, 0, 1, 0), 25);
    CHECK(b_at(b, 1) == 1);
    CHECK(b_at(b, 5) == 2);
    CHECK(b_at(b, 25) == 924);
    CHECK(b_parallel(b, 7, 5) == 0);
    CHECK(b_parallel(b, 25, 5) == 2);
    CHECK_THROWS_AS(b_at(b, 26), InsufficientOrder);
    CHECK_THROWS_AS(b_at(b, 0), InsufficientOrder);
}

TEST_CASE("worked instances on y^2 = x^3 + x at p = 5") {
    const WeierstrassCurve c(0, 0, 0, 1, 0);
    const auto reports = check_thm2(c, 5, 5, 2);
    CHECK(all_pass(reports));
    const auto& first = find(reports, Statement::Thm2, 5, 1, 1);
    CHECK(first.residual == 0);
    CHECK(first.modulus == 5);
    const auto& deep = find(reports, Statement::Thm2, 5, 5, 2);
    CHECK(deep.residual == 925);
    CHECK(deep.modulus == 25);
    CHECK(deep.pass);
    // s = 2 only where 5 | n
    CHECK(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.s == 2; }) == 1);
}

TEST_CASE("short series are refused") {
    const WeierstrassCurve c(0, 0, 0, 1, 0);
    const auto b = invariant_differential(c, 24);
    const auto local = classify_reduction(c, 5);
    CHECK_THROWS_AS(check_thm2(c, b, local, 5, 2), InsufficientOrder);
    CHECK_THROWS_AS(check_cor1(c, b, local, 5, 2), InsufficientOrder);
    CHECK_NOTHROW(check_thm2(c, b, local, 4, 2));
}

TEST_CASE("bad primes need the minimal-model assertion") {
    const WeierstrassCurve c(0, 0, 0, 5, 0);
    CHECK_THROWS_AS(check_thm2(c, 5, 3, 1), UnassertedModel);
    CHECK_THROWS_AS(check_cor1(c, 5, 3, 1), UnassertedModel);
    CheckOptions opts;
    opts.assert_minimal = true;
    const auto reports = check_cor1(c, 5, 4, 2, opts);
    CHECK(all_pass(reports));
    const auto& r = find(reports, Statement::Cor1Additive, 5, 1, 1);
    CHECK(r.residual == 10);
}

TEST_CASE("clauses by reduction type") {
    const auto good = check_cor1(WeierstrassCurve(0, 0, 0, 1, 0), 13, 4, 2);
    CHECK(all_pass(good));
    CHECK(find(good, Statement::Cor1GoodA, 13, 1, 1).residual == 20 - (-6));

    CheckOptions opts;
    opts.assert_minimal = true;
    const auto mult = check_cor1(conductor11_curve(), 11, 8, 1, opts);
    CHECK(all_pass(mult));
    CHECK(std::all_of(mult.begin(), mult.end(), [](const auto& r) {
        return r.statement == Statement::Cor1MultA || r.statement == Statement::Cor1MultB;
    }));

    const auto cubic = check_cor1(WeierstrassCurve(0, 0, 1, 0, 0), 7, 3, 1);
    CHECK(find(cubic, Statement::Cor1GoodA, 7, 1, 1).residual == 6 - (-1));
}

TEST_CASE("the congruences hold on random curves at good primes") {
    oracle::Gen gen(12);
    for (int trial = 0; trial < 6; ++trial) {
        std::array<long, 5> a{};
        do {
            for (auto& v : a) {
                v = gen.uniform(-5, 5);
            }
        } while (discriminant(a[0], a[1], a[2], a[3], a[4]) == 0);
        const WeierstrassCurve c(a[0], a[1], a[2], a[3], a[4]);
        const auto b = invariant_differential(c, 7 * 21);
        for (std::int64_t p : {2, 3, 5, 7}) {
            const auto local = classify_reduction(c, p);
            CheckOptions opts;
            opts.assert_minimal = true;
            if (local.reduction == ReductionType::Good) {
                CHECK(all_pass(check_thm2(c, b, local, 21, 2)));
                CHECK(all_pass(check_cor1(c, b, local, 21, 2)));
            }
        }
    }
}

TEST_CASE("a wrong trace is caught") {
    const WeierstrassCurve c(0, 0, 0, 1, 0);
    auto local = classify_reduction(c, 13);
    local.trace += 1;
    const auto b = invariant_differential(c, 13 * 3);
    const auto reports = check_thm2(c, b, local, 3, 1);
    CHECK_FALSE(all_pass(reports));
    for (const auto& r : reports) {
        CHECK(consistent(r));
    }
}

TEST_CASE("both readings on y^2 = x^3 + a x") {
    const auto unit = check_cor33(1, 60, Variant::AsPrinted);
    CHECK(all_pass(unit));
    const auto& d = find(unit, Statement::Cor33D, 5, 5, 2);
    CHECK(d.residual == 925);
    CHECK(d.variant == "printed");

    const auto printed = check_cor33(2, 60, Variant::AsPrinted);
    const auto restored = check_cor33(2, 60, Variant::WithAPower);
    CHECK(all_pass(restored));
    CHECK_FALSE(all_pass(printed));
    CHECK(find(restored, Statement::Cor33B, 13, 1, 1).pass);
    // clause (a) is exact and variant-free
    for (const auto& r : printed) {
        if (r.statement == Statement::Cor33A) {
            CHECK(r.modulus == 0);
            CHECK(r.pass);
            CHECK_FALSE(r.variant.has_value());
        }
    }
}

TEST_CASE("both readings on y^2 + a y = x^3") {
    const auto unit = check_cor34(1, 40, Variant::AsPrinted);
    CHECK(all_pass(unit));
    CHECK(find(unit, Statement::Cor34B, 7, 1, 1).residual == -1 - 6);
    const auto b13 = find(unit, Statement::Cor34B, 13, 1, 1);
    CHECK(b13.pass);
    const auto& d = find(unit, Statement::Cor34D, 7, 7, 2);
    CHECK(d.note.has_value());
    CHECK(d.pass);

    CHECK(all_pass(check_cor34(2, 40, Variant::WithAPower)));
    CHECK_FALSE(all_pass(check_cor34(2, 40, Variant::AsPrinted)));
}

TEST_CASE("trace formula for y^2 + a3 y = x^3 + a6") {
    CHECK(all_pass(check_sec4_trace(0, 1, 100)));
    CHECK(all_pass(check_sec4_trace(1, 1, 100)));
    CHECK(all_pass(check_sec4_trace(2, -3, 100)));
    const auto reports = check_sec4_trace(0, 1, 20);
    const auto seven = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.p == 7; });
    CHECK(seven == 2);
    for (const auto& r : reports) {
        if (r.p && *r.p % 3 == 2) {
            CHECK(r.residual == 0);
            CHECK(r.modulus == 0);
        }
    }
}

TEST_CASE("level-11 congruence from the eta product") {
    const auto reports = check_remark11(26, 2, 13);
    CHECK(all_pass(reports));
    CHECK(std::none_of(reports.begin(), reports.end(), [](const auto& r) { return r.p == 11; }));
    CHECK(find(reports, Statement::Remark11, 2, 1, 1).residual == 0 - (-2));
    CHECK(find(reports, Statement::Remark11, 3, 3, 2).pass);
}

TEST_CASE("reports are sorted and self-consistent") {
    auto reports = check_cor1(WeierstrassCurve(1, -1, 1, -3, 5), 7, 14, 2);
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const auto& a = reports[i - 1];
        const auto& b = reports[i];
        CHECK(std::make_tuple(static_cast<int>(a.statement), *a.p, *a.n, *a.s) <=
              std::make_tuple(static_cast<int>(b.statement), *b.p, *b.n, *b.s));
    }
    for (const auto& r : reports) {
        CHECK(consistent(r));
    }
    CHECK(statement_from_string(to_string(Statement::Cor34D)) == Statement::Cor34D);
    CHECK_THROWS_AS(statement_from_string("Cor99"), ParseError);
    CHECK(variant_from_string("a-power") == Variant::WithAPower);
}
