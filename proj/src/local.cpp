#include "formale/local.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace formale {

namespace {

std::int64_t residue(const Integer& v, std::int64_t p) { return mod_small(v, p); }

void require_good(const WeierstrassCurve& curve, std::int64_t p) {
    if (!is_prime(p)) {
        throw NotPrime(std::to_string(p) + " is not prime");
    }
    if (!curve.has_good_reduction(p)) {
        throw BadReduction(curve.to_string() + " has bad reduction at " + std::to_string(p));
    }
}

} // namespace

std::int64_t count_points_exhaustive(const WeierstrassCurve& curve, std::int64_t p) {
    require_good(curve, p);
    const auto a1 = residue(curve.a1(), p), a2 = residue(curve.a2(), p), a3 = residue(curve.a3(), p),
               a4 = residue(curve.a4(), p), a6 = residue(curve.a6(), p);
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t rhs = ((x * x % p * x + a2 * x % p * x + a4 * x + a6) % p);
        for (std::int64_t y = 0; y < p; ++y) {
            const std::int64_t lhs = (y * y + a1 * x % p * y + a3 * y) % p;
            if (lhs == rhs) {
                ++count;
            }
        }
    }
    return count;
}

std::int64_t count_points(const WeierstrassCurve& curve, std::int64_t p) {
    if (p <= 3) {
        return count_points_exhaustive(curve, p);
    }
    require_good(curve, p);
    std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (std::int64_t y = 1; y <= p / 2; ++y) {
        chi[static_cast<std::size_t>(y * y % p)] = 1;
    }
    const Integer& a1 = curve.a1();
    const Integer& a3 = curve.a3();
    const std::int64_t b2 = residue(a1 * a1 + 4 * curve.a2(), p);
    const std::int64_t b4 = residue(2 * curve.a4() + a1 * a3, p);
    const std::int64_t b6 = residue(a3 * a3 + 4 * curve.a6(), p);
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < p; ++x) {
        // Horner over p < 2^31 keeps every product inside 63 bits.
        std::int64_t d = 4 % p;
        d = (d * x + b2) % p;
        d = (d * x + 2 * b4) % p;
        d = (d * x + b6) % p;
        count += 1 + chi[static_cast<std::size_t>(d)];
    }
    return count;
}

void check_hasse(std::int64_t p, std::int64_t t) {
    if (t * t >= 4 * p) {
        throw HasseViolation("trace " + std::to_string(t) + " at p = " + std::to_string(p) +
                             " violates |t| < 2 sqrt(p)");
    }
}

std::int64_t trace(const WeierstrassCurve& curve, std::int64_t p) {
    const std::int64_t t = 1 + p - count_points(curve, p);
    check_hasse(p, t);
    return t;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> primes;
    if (bound < 2) {
        return primes;
    }
    std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
    for (std::int64_t n = 2; n <= bound; ++n) {
        if (composite[static_cast<std::size_t>(n)]) {
            continue;
        }
        primes.push_back(n);
        for (std::int64_t m = n * n; m <= bound; m += n) {
            composite[static_cast<std::size_t>(m)] = true;
        }
    }
    return primes;
}

std::string TraceCache::key(const WeierstrassCurve& curve, std::int64_t p) {
    return curve.key() + "|" + std::to_string(p);
}

LocalData TraceCache::local_data(const WeierstrassCurve& curve, std::int64_t p) {
    const auto k = key(curve, p);
    if (auto hit = find(k)) {
        return *hit;
    }
    auto data = classify_reduction(curve, p);
    insert(k, data);
    return data;
}

std::optional<LocalData> TraceCache::find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void TraceCache::insert(const std::string& key, const LocalData& data) {
    std::unique_lock lock(mutex_);
    entries_[key] = data;
}

std::map<std::string, LocalData> TraceCache::entries() const {
    std::shared_lock lock(mutex_);
    return entries_;
}

std::size_t TraceCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

std::vector<LocalData> sweep_local_data(const WeierstrassCurve& curve, const std::vector<std::int64_t>& primes,
                                        TraceCache* cache) {
    std::vector<LocalData> out(primes.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < primes.size(); i = next++) {
                out[i] = cache ? cache->local_data(curve, primes[i]) : classify_reduction(curve, primes[i]);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next = primes.size();
        }
    };
    const std::size_t threads =
        std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), std::max<std::size_t>(1, primes.size() / 64));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

} // namespace formale
