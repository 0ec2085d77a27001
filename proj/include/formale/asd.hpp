#pragma once

// Exact checks of the Atkin-Swinnerton-Dyer congruences
//   b(np) - t_p b(n) + p u_p b(n||p) = 0 mod p^s   whenever p^{s-1} | n
// and of the special cases derived from them.
//
// Every report stores the exact left-hand side and its modulus; pass is
// modulus | residual, with modulus 0 meaning exact equality. Checks refuse
// to run on a b-series that is too short instead of truncating the sweep.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "formale/curve.hpp"
#include "formale/expansion.hpp"
#include "formale/local.hpp"

namespace formale {

enum class Statement {
    Thm2,
    Cor1GoodA,
    Cor1GoodB,
    Cor1GoodC,
    Cor1MultA,
    Cor1MultB,
    Cor1Additive,
    Cor33A,
    Cor33B,
    Cor33C,
    Cor33D,
    Cor34A,
    Cor34B,
    Cor34C,
    Cor34D,
    Sec4Trace,
    Remark11,
};

std::string to_string(Statement statement);
Statement statement_from_string(const std::string& name);

/// How the special-case congruences are read: literally, without the a-power,
/// or with the a^{(m-1)/4} (resp. a^{(m-1)/3}) factor carried by b(m).
enum class Variant { AsPrinted, WithAPower };

std::string to_string(Variant variant);
Variant variant_from_string(const std::string& name);

struct CongruenceReport {
    Statement statement = Statement::Thm2;
    std::array<Integer, 5> curve;
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> s;
    Integer modulus;
    Integer residual;
    bool pass = false;
    std::optional<std::string> variant;
    std::optional<std::string> note;
};

/// pass == (modulus | residual).
bool consistent(const CongruenceReport& report);

bool all_pass(const std::vector<CongruenceReport>& reports);

/// Sort by (statement, p, n, s, variant).
void sort_reports(std::vector<CongruenceReport>& reports);

struct CheckOptions {
    /// Bad-prime congruences are only meaningful on a minimal model; the
    /// caller has to vouch for it.
    bool assert_minimal = false;
    TraceCache* cache = nullptr;
};

/// b(n) from a series with b[n-1] = b(n); InsufficientOrder past the end.
const Integer& b_at(const IntSeries& b, std::int64_t n);

/// b(n||p): b(n/p) if p | n, else 0.
Integer b_parallel(const IntSeries& b, std::int64_t n, std::int64_t p);

/// Index of the largest b(m) a (p, n_max) sweep reads.
std::size_t required_order(std::int64_t p, std::int64_t n_max);

std::vector<CongruenceReport> check_thm2(const WeierstrassCurve& curve, const IntSeries& b, const LocalData& local,
                                         std::int64_t n_max, std::int64_t s_max, const CheckOptions& options = {});

std::vector<CongruenceReport> check_thm2(const WeierstrassCurve& curve, std::int64_t p, std::int64_t n_max,
                                         std::int64_t s_max, const CheckOptions& options = {});

/// The clauses matching the reduction type of `local`.
std::vector<CongruenceReport> check_cor1(const WeierstrassCurve& curve, const IntSeries& b, const LocalData& local,
                                         std::int64_t n_max, std::int64_t s_max, const CheckOptions& options = {});

std::vector<CongruenceReport> check_cor1(const WeierstrassCurve& curve, std::int64_t p, std::int64_t n_max,
                                         std::int64_t s_max, const CheckOptions& options = {});

/// y^2 = x^3 + a x over primes 2 < p <= p_max with p not dividing a.
/// Clause (c) runs over n = 1 mod 4 up to n_max.
std::vector<CongruenceReport> check_cor33(const Integer& a, std::int64_t p_max, Variant variant,
                                          std::int64_t n_max = 25, TraceCache* cache = nullptr);

/// y^2 + a y = x^3 over primes 3 < p <= p_max with p not dividing a.
/// Clause (d) uses the condition p^{s-1} | n.
std::vector<CongruenceReport> check_cor34(const Integer& a, std::int64_t p_max, Variant variant,
                                          std::int64_t n_max = 25, std::int64_t s_max = 2,
                                          TraceCache* cache = nullptr);

/// y^2 + a3 y = x^3 + a6 over good primes p <= p_max:
/// t_p = 0 for p = 2 mod 3 and t_p = b(p) mod p for p = 1 mod 3.
/// With a3 = 0 the p = 1 mod 6 case is also checked in its binomial form.
std::vector<CongruenceReport> check_sec4_trace(const Integer& a3, const Integer& a6, std::int64_t p_max,
                                               TraceCache* cache = nullptr);

/// The conductor-11 curve [0,-1,-1,0,0] with c_p from the eta product:
/// b(np) - c_p b(n) + p b(n/p) = 0 mod p^s for good p <= p_bound, n <= n_max.
std::vector<CongruenceReport> check_remark11(std::int64_t n_max, std::int64_t s_max, std::int64_t p_bound = 13);

/// The Tate curve at b = c = 1 in the sign convention used throughout.
WeierstrassCurve conductor11_curve();

} // namespace formale
