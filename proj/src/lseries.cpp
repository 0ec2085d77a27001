#include "formale/lseries.hpp"

#include <numeric>
#include <stdexcept>

namespace formale {

std::string to_string(Provenance provenance) {
    switch (provenance) {
    case Provenance::EulerProduct:
        return "euler";
    case Provenance::EtaProduct:
        return "eta";
    case Provenance::UserSupplied:
        return "user";
    }
    return "unknown";
}

bool DirichletCoefficients::is_multiplicative() const {
    if (c.empty() || c.front() != 1) {
        return false;
    }
    const std::size_t n = c.size();
    for (std::size_t a = 2; a * a <= n; ++a) {
        for (std::size_t b = a + 1; a * b <= n; ++b) {
            if (std::gcd(a, b) == 1 && at(a * b) != at(a) * at(b)) {
                return false;
            }
        }
    }
    return true;
}

DirichletCoefficients euler_coefficients(const WeierstrassCurve& curve, std::size_t bound, TraceCache* cache) {
    if (bound < 1) {
        throw std::invalid_argument("need at least one coefficient");
    }
    const auto primes = primes_up_to(static_cast<std::int64_t>(bound));
    const auto local = sweep_local_data(curve, primes, cache);

    DirichletCoefficients out;
    out.provenance = Provenance::EulerProduct;
    out.c.assign(bound, Integer(0));
    std::vector<bool> known(bound + 1, false);
    out.c[0] = 1;
    known[1] = true;

    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::size_t p = static_cast<std::size_t>(primes[i]);
        const Integer t(static_cast<long>(local[i].trace));
        const Integer pu(static_cast<long>(p) * local[i].u);
        Integer previous = 1;  // c_{p^{k-1}}
        Integer current = t;   // c_{p^k}
        for (std::size_t q = p; q <= bound; q *= p) {
            out.c[q - 1] = current;
            known[q] = true;
            Integer next = t * current - pu * previous;
            previous = current;
            current = next;
            if (q > bound / p) {
                break;
            }
        }
    }
    // Split n = p^k m with p its smallest prime factor and m coprime to p.
    for (std::size_t n = 2; n <= bound; ++n) {
        if (known[n]) {
            continue;
        }
        std::size_t p = 2;
        while (n % p != 0) {
            ++p;
        }
        std::size_t prime_power = 1;
        std::size_t rest = n;
        while (rest % p == 0) {
            rest /= p;
            prime_power *= p;
        }
        out.c[n - 1] = out.c[prime_power - 1] * out.c[rest - 1];
        known[n] = true;
    }
    return out;
}

DirichletCoefficients eta_product_level11(std::size_t bound) {
    if (bound < 1) {
        throw std::invalid_argument("need at least one coefficient");
    }
    // prod (1 - q^n)^2 (1 - q^{11n})^2 through q^{N-1}; the leading q shifts it.
    std::vector<Integer> product(bound, Integer(0));
    product[0] = 1;
    auto multiply_by_one_minus = [&](std::size_t k) {
        for (std::size_t i = bound; i-- > k;) {
            product[i] -= product[i - k];
        }
    };
    for (std::size_t n = 1; n < bound; ++n) {
        multiply_by_one_minus(n);
        multiply_by_one_minus(n);
        if (11 * n < bound) {
            multiply_by_one_minus(11 * n);
            multiply_by_one_minus(11 * n);
        }
    }
    DirichletCoefficients out;
    out.provenance = Provenance::EtaProduct;
    out.c = std::move(product);
    return out;
}

RatSeries g_series(const DirichletCoefficients& c) {
    if (c.c.empty() || c.c.front() != 1) {
        throw std::invalid_argument("g(x) needs c_1 = 1");
    }
    return integrate(IntSeries(c.c));
}

} // namespace formale
