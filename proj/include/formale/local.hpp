#pragma once

// Point counting over F_p and traces of Frobenius.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "formale/curve.hpp"

namespace formale {

/// A_p = 1 + #{(x, y) in F_p^2 on the curve}. Throws BadReduction if p | disc.
///
/// Odd p >= 5 complete the square, (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6,
/// and read each x off a quadratic-character table. p = 2, 3 enumerate.
std::int64_t count_points(const WeierstrassCurve& curve, std::int64_t p);

/// Enumerates all of F_p^2. O(p^2); meant for small p and cross-checks.
std::int64_t count_points_exhaustive(const WeierstrassCurve& curve, std::int64_t p);

/// t_p = 1 + p - A_p for good p, with the Hasse bound enforced.
std::int64_t trace(const WeierstrassCurve& curve, std::int64_t p);

/// Throws HasseViolation unless t^2 < 4p.
void check_hasse(std::int64_t p, std::int64_t t);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Thread-safe memo of classify_reduction keyed by "a1,a2,a3,a4,a6|p".
class TraceCache {
public:
    static std::string key(const WeierstrassCurve& curve, std::int64_t p);

    LocalData local_data(const WeierstrassCurve& curve, std::int64_t p);

    std::optional<LocalData> find(const std::string& key) const;
    void insert(const std::string& key, const LocalData& data);

    /// Snapshot in key order.
    std::map<std::string, LocalData> entries() const;

    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, LocalData> entries_;
};

/// Local data for every prime in `primes`, in the given order. Work is
/// spread across hardware threads; the result order does not depend on it.
std::vector<LocalData> sweep_local_data(const WeierstrassCurve& curve, const std::vector<std::int64_t>& primes,
                                        TraceCache* cache = nullptr);

} // namespace formale
