#include "formale/asd.hpp"

#include <algorithm>
#include <tuple>

#include "formale/combinatorics.hpp"
#include "formale/lseries.hpp"

namespace formale {

namespace {

constexpr std::array kStatementNames = {
    "Thm2",   "Cor1-good-a", "Cor1-good-b", "Cor1-good-c", "Cor1-mult-a", "Cor1-mult-b",
    "Cor1-additive", "Cor33-a", "Cor33-b", "Cor33-c", "Cor33-d", "Cor34-a",
    "Cor34-b", "Cor34-c", "Cor34-d", "Sec4-trace", "Remark-11",
};

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer prime_power(std::int64_t p, std::int64_t s) { return ipow(big(p), s); }

CongruenceReport make_report(Statement statement, const WeierstrassCurve& curve, std::optional<std::int64_t> p,
                             std::optional<std::int64_t> n, std::optional<std::int64_t> s, Integer modulus,
                             Integer residual) {
    CongruenceReport r;
    r.statement = statement;
    r.curve = curve.coefficients();
    r.p = p;
    r.n = n;
    r.s = s;
    r.modulus = std::move(modulus);
    r.residual = std::move(residual);
    r.pass = divides(r.modulus, r.residual);
    return r;
}

void require_order(const IntSeries& b, std::int64_t p, std::int64_t n_max) {
    if (b.order() < required_order(p, n_max)) {
        throw InsufficientOrder("sweep over p = " + std::to_string(p) + ", n <= " + std::to_string(n_max) +
                                " needs b through b(" + std::to_string(required_order(p, n_max)) +
                                "), have b(" + std::to_string(b.order()) + ")");
    }
}

void require_assertable(const WeierstrassCurve& curve, const LocalData& local, const CheckOptions& options) {
    if (local.reduction != ReductionType::Good && !options.assert_minimal) {
        throw UnassertedModel(curve.to_string() + " has bad reduction at p = " + std::to_string(local.p) +
                              "; bad-prime congruences need the model asserted minimal");
    }
}

bool divisible(std::int64_t n, const Integer& d) { return divides(d, big(n)); }

LocalData local_for(const WeierstrassCurve& curve, std::int64_t p, TraceCache* cache) {
    return cache ? cache->local_data(curve, p) : classify_reduction(curve, p);
}

// b(m) on y^2 = x^3 + a x: C((m-1)/2, (m-1)/4) a^{(m-1)/4} for m = 1 mod 4, else 0.
Integer b_cor33(std::int64_t m, const Integer& a, Variant variant) {
    if (m < 1 || (m - 1) % 4 != 0) {
        return 0;
    }
    const long q = (m - 1) / 4;
    Integer v = binomial(2 * q, q);
    if (variant == Variant::WithAPower) {
        v *= ipow(a, q);
    }
    return v;
}

// b(m) on y^2 + a y = x^3: C(2(m-1)/3, (m-1)/3) a^{(m-1)/3} for m = 1 mod 3, else 0.
Integer b_cor34(std::int64_t m, const Integer& a, Variant variant) {
    if (m < 1 || (m - 1) % 3 != 0) {
        return 0;
    }
    const long q = (m - 1) / 3;
    Integer v = binomial(2 * q, q);
    if (variant == Variant::WithAPower) {
        v *= ipow(a, q);
    }
    return v;
}

} // namespace

std::string to_string(Statement statement) { return kStatementNames[static_cast<std::size_t>(statement)]; }

Statement statement_from_string(const std::string& name) {
    for (std::size_t i = 0; i < kStatementNames.size(); ++i) {
        if (name == kStatementNames[i]) {
            return static_cast<Statement>(i);
        }
    }
    throw ParseError("unknown statement '" + name + "'");
}

std::string to_string(Variant variant) { return variant == Variant::AsPrinted ? "printed" : "a-power"; }

Variant variant_from_string(const std::string& name) {
    if (name == "printed") {
        return Variant::AsPrinted;
    }
    if (name == "a-power") {
        return Variant::WithAPower;
    }
    throw ParseError("unknown variant '" + name + "' (expected printed or a-power)");
}

bool consistent(const CongruenceReport& report) { return report.pass == divides(report.modulus, report.residual); }

bool all_pass(const std::vector<CongruenceReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

void sort_reports(std::vector<CongruenceReport>& reports) {
    auto key = [](const CongruenceReport& r) {
        return std::make_tuple(static_cast<int>(r.statement), r.p.value_or(0), r.n.value_or(0), r.s.value_or(0),
                               r.variant.value_or(""));
    };
    std::stable_sort(reports.begin(), reports.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

const Integer& b_at(const IntSeries& b, std::int64_t n) {
    if (n < 1 || static_cast<std::size_t>(n) > b.order()) {
        throw InsufficientOrder("b(" + std::to_string(n) + ") is outside the computed range b(1..." +
                                std::to_string(b.order()) + ")");
    }
    return b[static_cast<std::size_t>(n - 1)];
}

Integer b_parallel(const IntSeries& b, std::int64_t n, std::int64_t p) {
    if (n % p != 0) {
        return 0;
    }
    return b_at(b, n / p);
}

std::size_t required_order(std::int64_t p, std::int64_t n_max) { return static_cast<std::size_t>(p * n_max); }

std::vector<CongruenceReport> check_thm2(const WeierstrassCurve& curve, const IntSeries& b, const LocalData& local,
                                         std::int64_t n_max, std::int64_t s_max, const CheckOptions& options) {
    require_assertable(curve, local, options);
    const std::int64_t p = local.p;
    require_order(b, p, n_max);
    const Integer t = big(local.trace);
    const Integer pu = big(p * local.u);
    std::vector<CongruenceReport> out;
    for (std::int64_t s = 1; s <= s_max; ++s) {
        const Integer step = prime_power(p, s - 1);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            if (!divisible(n, step)) {
                continue;
            }
            Integer residual = b_at(b, n * p) - t * b_at(b, n) + pu * b_parallel(b, n, p);
            out.push_back(make_report(Statement::Thm2, curve, p, n, s, prime_power(p, s), std::move(residual)));
        }
    }
    sort_reports(out);
    return out;
}

std::vector<CongruenceReport> check_thm2(const WeierstrassCurve& curve, std::int64_t p, std::int64_t n_max,
                                         std::int64_t s_max, const CheckOptions& options) {
    const LocalData local = local_for(curve, p, options.cache);
    require_assertable(curve, local, options);
    return check_thm2(curve, invariant_differential(curve, required_order(p, n_max)), local, n_max, s_max, options);
}

std::vector<CongruenceReport> check_cor1(const WeierstrassCurve& curve, const IntSeries& b, const LocalData& local,
                                         std::int64_t n_max, std::int64_t s_max, const CheckOptions& options) {
    require_assertable(curve, local, options);
    const std::int64_t p = local.p;
    require_order(b, p, n_max);
    const Integer t = big(local.trace);
    const Integer bp = b_at(b, p);
    std::vector<CongruenceReport> out;
    switch (local.reduction) {
    case ReductionType::Good:
        out.push_back(make_report(Statement::Cor1GoodA, curve, p, 1, 1, big(p), bp - t));
        for (std::int64_t n = 1; n <= n_max; ++n) {
            if (n % p != 0) {
                out.push_back(
                    make_report(Statement::Cor1GoodB, curve, p, n, 1, big(p), b_at(b, n * p) - b_at(b, n) * bp));
            }
        }
        for (std::int64_t s = 1; s <= s_max; ++s) {
            const Integer step = prime_power(p, s - 1);
            for (std::int64_t n = 1; n <= n_max; ++n) {
                if (divisible(n, step)) {
                    Integer residual = b_at(b, n * p) - t * b_at(b, n) + big(p) * b_parallel(b, n, p);
                    out.push_back(make_report(Statement::Cor1GoodC, curve, p, n, s, prime_power(p, s), residual));
                }
            }
        }
        break;
    case ReductionType::MultiplicativeSplit:
    case ReductionType::MultiplicativeNonsplit:
        out.push_back(make_report(Statement::Cor1MultA, curve, p, 1, 1, big(p), bp - t));
        for (std::int64_t s = 1; s <= s_max; ++s) {
            const Integer step = prime_power(p, s - 1);
            for (std::int64_t n = 1; n <= n_max; ++n) {
                if (divisible(n, step)) {
                    out.push_back(make_report(Statement::Cor1MultB, curve, p, n, s, prime_power(p, s),
                                              b_at(b, n * p) - t * b_at(b, n)));
                }
            }
        }
        break;
    case ReductionType::Additive:
        for (std::int64_t s = 1; s <= s_max; ++s) {
            const Integer step = prime_power(p, s - 1);
            for (std::int64_t n = 1; n <= n_max; ++n) {
                if (divisible(n, step)) {
                    out.push_back(
                        make_report(Statement::Cor1Additive, curve, p, n, s, prime_power(p, s), b_at(b, n * p)));
                }
            }
        }
        break;
    }
    sort_reports(out);
    return out;
}

std::vector<CongruenceReport> check_cor1(const WeierstrassCurve& curve, std::int64_t p, std::int64_t n_max,
                                         std::int64_t s_max, const CheckOptions& options) {
    const LocalData local = local_for(curve, p, options.cache);
    require_assertable(curve, local, options);
    return check_cor1(curve, invariant_differential(curve, required_order(p, n_max)), local, n_max, s_max, options);
}

std::vector<CongruenceReport> check_cor33(const Integer& a, std::int64_t p_max, Variant variant, std::int64_t n_max,
                                          TraceCache* cache) {
    const WeierstrassCurve curve(0, 0, 0, a, 0);
    const std::string tag = to_string(variant);
    std::vector<CongruenceReport> out;
    auto tagged = [&](CongruenceReport r) {
        r.variant = tag;
        out.push_back(std::move(r));
    };
    for (const std::int64_t p : primes_up_to(p_max)) {
        if (p == 2 || divides(big(p), a)) {
            continue;
        }
        const std::int64_t t = local_for(curve, p, cache).trace;
        if (p % 4 == 3) {
            out.push_back(make_report(Statement::Cor33A, curve, p, std::nullopt, std::nullopt, 0, big(t)));
            continue;
        }
        const Integer bp = b_cor33(p, a, variant);
        tagged(make_report(Statement::Cor33B, curve, p, 1, 1, big(p), big(t) - bp));
        for (std::int64_t n = 1; n <= n_max; n += 4) {
            tagged(make_report(Statement::Cor33C, curve, p, n, 1, big(p),
                               b_cor33(n * p, a, variant) - b_cor33(n, a, variant) * bp));
        }
        tagged(make_report(Statement::Cor33D, curve, p, p, 2, big(p * p),
                           b_cor33(p * p, a, variant) - big(t) * bp + big(p)));
    }
    sort_reports(out);
    return out;
}

std::vector<CongruenceReport> check_cor34(const Integer& a, std::int64_t p_max, Variant variant, std::int64_t n_max,
                                          std::int64_t s_max, TraceCache* cache) {
    const WeierstrassCurve curve(0, 0, a, 0, 0);
    const std::string tag = to_string(variant);
    std::vector<CongruenceReport> out;
    auto tagged = [&](CongruenceReport r) {
        r.variant = tag;
        out.push_back(std::move(r));
    };
    for (const std::int64_t p : primes_up_to(p_max)) {
        if (p == 3 || divides(big(p), a)) {
            continue;
        }
        const std::int64_t t = local_for(curve, p, cache).trace;
        if (p % 3 == 2) {
            out.push_back(make_report(Statement::Cor34A, curve, p, std::nullopt, std::nullopt, 0, big(t)));
            continue;
        }
        const Integer bp = b_cor34(p, a, variant);
        tagged(make_report(Statement::Cor34B, curve, p, 1, 1, big(p), big(t) - bp));
        for (std::int64_t n = 1; n <= n_max; n += 3) {
            tagged(make_report(Statement::Cor34C, curve, p, n, 1, big(p),
                               b_cor34(n * p, a, variant) - b_cor34(n, a, variant) * bp));
        }
        const std::int64_t n_top = std::max(n_max, p);
        for (std::int64_t s = 1; s <= s_max; ++s) {
            const Integer step = prime_power(p, s - 1);
            for (std::int64_t n = 1; n <= n_top; ++n) {
                if (!divisible(n, step) || (n - 1) % 3 != 0) {
                    continue;
                }
                const Integer parallel = n % p == 0 ? b_cor34(n / p, a, variant) : Integer(0);
                auto r = make_report(Statement::Cor34D, curve, p, n, s, prime_power(p, s),
                                     b_cor34(n * p, a, variant) - big(t) * b_cor34(n, a, variant) + big(p) * parallel);
                r.note = "condition n = p^(s-1) read as p^(s-1) | n";
                tagged(std::move(r));
            }
        }
    }
    sort_reports(out);
    return out;
}

std::vector<CongruenceReport> check_sec4_trace(const Integer& a3, const Integer& a6, std::int64_t p_max,
                                               TraceCache* cache) {
    const WeierstrassCurve curve(0, 0, a3, 0, a6);
    std::vector<CongruenceReport> out;
    for (const std::int64_t p : primes_up_to(p_max)) {
        if (!curve.has_good_reduction(p) || p % 3 == 0) {
            continue;
        }
        const std::int64_t t = local_for(curve, p, cache).trace;
        if (p % 3 == 2) {
            auto r = make_report(Statement::Sec4Trace, curve, p, std::nullopt, std::nullopt, 0, big(t));
            r.note = "p = 2 mod 3: t_p = 0";
            out.push_back(std::move(r));
            continue;
        }
        const long q = (p - 1) / 3;
        Integer sum = 0;
        for (long k = (p - 1) / 6; k <= q; ++k) {
            const Integer c = binomial(q + k, k) * binomial(k, q - k);
            if (c != 0) {
                sum += c * ipow(a3, 2 * k - q) * ipow(a6, q - k);
            }
        }
        auto r = make_report(Statement::Sec4Trace, curve, p, std::nullopt, std::nullopt, big(p), big(t) - sum);
        r.note = "p = 1 mod 3: t_p = sum formula mod p";
        out.push_back(std::move(r));
        if (a3 == 0 && p % 6 == 1) {
            const long e = (p - 1) / 6;
            auto example = make_report(Statement::Sec4Trace, curve, p, std::nullopt, std::nullopt, big(p),
                                       big(t) - binomial((p - 1) / 2, e) * ipow(a6, e));
            example.variant = "a3=0";
            example.note = "y^2 = x^3 + a6, p = 1 mod 6: t_p = C((p-1)/2,(p-1)/6) a6^((p-1)/6) mod p";
            out.push_back(std::move(example));
        }
    }
    sort_reports(out);
    return out;
}

WeierstrassCurve conductor11_curve() { return WeierstrassCurve(0, -1, -1, 0, 0); }

std::vector<CongruenceReport> check_remark11(std::int64_t n_max, std::int64_t s_max, std::int64_t p_bound) {
    const WeierstrassCurve curve = conductor11_curve();
    const auto c = eta_product_level11(static_cast<std::size_t>(std::max<std::int64_t>(p_bound, 1)));
    const IntSeries b = invariant_differential(curve, required_order(p_bound, n_max));
    std::vector<CongruenceReport> out;
    for (const std::int64_t p : primes_up_to(p_bound)) {
        if (p == 11) {
            continue;
        }
        const Integer& cp = c.at(static_cast<std::size_t>(p));
        for (std::int64_t s = 1; s <= s_max; ++s) {
            const Integer step = prime_power(p, s - 1);
            for (std::int64_t n = 1; n <= n_max; ++n) {
                if (!divisible(n, step)) {
                    continue;
                }
                Integer residual = b_at(b, n * p) - cp * b_at(b, n) + big(p) * b_parallel(b, n, p);
                out.push_back(make_report(Statement::Remark11, curve, p, n, s, prime_power(p, s), residual));
            }
        }
    }
    sort_reports(out);
    return out;
}

} // namespace formale
