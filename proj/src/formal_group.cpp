#include "formale/formal_group.hpp"

#include "formale/expansion.hpp"

namespace formale {

namespace {

// Three-variable integer series, only for the associativity check.
class Trivariate {
public:
    explicit Trivariate(std::size_t bound) : bound_(bound), c_(bound * bound * bound) {}

    std::size_t bound() const { return bound_; }
    Integer& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * bound_ + j) * bound_ + k]; }
    const Integer& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * bound_ + j) * bound_ + k]; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < bound_; ++i) {
            for (std::size_t j = 0; i + j < bound_; ++j) {
                for (std::size_t k = 0; i + j + k < bound_; ++k) {
                    fn(i, j, k, at(i, j, k));
                }
            }
        }
    }

    friend Trivariate operator*(const Trivariate& a, const Trivariate& b) {
        Trivariate r(a.bound_);
        a.for_each([&](std::size_t i, std::size_t j, std::size_t k, const Integer& ca) {
            if (ca == 0) {
                return;
            }
            b.for_each([&](std::size_t i2, std::size_t j2, std::size_t k2, const Integer& cb) {
                if (cb != 0 && i + i2 + j + j2 + k + k2 < a.bound_) {
                    r.at(i + i2, j + j2, k + k2) += ca * cb;
                }
            });
        });
        return r;
    }

    friend bool operator==(const Trivariate& a, const Trivariate& b) { return a.c_ == b.c_; }

private:
    std::size_t bound_;
    std::vector<Integer> c_;
};

// Embed a bivariate series in two of the three variables.
Trivariate embed(const IntBivariate& f, std::size_t bound, int first, int second) {
    Trivariate r(bound);
    for (std::size_t d = 0; d < bound && d < f.degree_bound(); ++d) {
        for (std::size_t i = 0; i <= d; ++i) {
            std::size_t e[3] = {0, 0, 0};
            e[first] = i;
            e[second] = d - i;
            r.at(e[0], e[1], e[2]) = f.at(i, d - i);
        }
    }
    return r;
}

Trivariate substitute(const IntBivariate& f, const Trivariate& a, const Trivariate& b) {
    const std::size_t bound = a.bound();
    std::vector<Trivariate> a_pow{Trivariate(bound)};
    std::vector<Trivariate> b_pow{Trivariate(bound)};
    a_pow[0].at(0, 0, 0) = 1;
    b_pow[0].at(0, 0, 0) = 1;
    for (std::size_t k = 1; k < bound; ++k) {
        a_pow.push_back(a_pow.back() * a);
        b_pow.push_back(b_pow.back() * b);
    }
    Trivariate r(bound);
    for (std::size_t d = 0; d < bound; ++d) {
        for (std::size_t i = 0; i <= d; ++i) {
            const Integer& c = f.at(i, d - i);
            if (c == 0) {
                continue;
            }
            const Trivariate term = a_pow[i] * b_pow[d - i];
            term.for_each([&](std::size_t x, std::size_t y, std::size_t z, const Integer& v) {
                if (v != 0) {
                    r.at(x, y, z) += c * v;
                }
            });
        }
    }
    return r;
}

} // namespace

RatSeries formal_log(const IntSeries& b) { return integrate(b); }

FormalGroupLaw group_law_from_log(const RatSeries& log, std::size_t degree_bound) {
    if (log.order() < degree_bound) {
        throw InsufficientOrder("logarithm known to order " + std::to_string(log.order()) +
                                ", group law needs " + std::to_string(degree_bound));
    }
    const RatSeries f = log.truncated(degree_bound);
    const RatSeries exp = reverse(f);
    const RatBivariate sum = RatBivariate::in_x(f, degree_bound) + RatBivariate::in_y(f, degree_bound);
    const RatBivariate law = compose(exp, sum);
    FormalGroupLaw out;
    out.law = to_integer(law);
    out.degree_bound = degree_bound;
    out.integrality_verified = true;
    return out;
}

FormalGroupLaw group_law(const WeierstrassCurve& curve, std::size_t degree_bound) {
    if (degree_bound < 3) {
        throw InsufficientOrder("group law needs total degree bound >= 3");
    }
    return group_law_from_log(formal_log(invariant_differential(curve, degree_bound)), degree_bound);
}

FormalGroupLaw lseries_formal_group(const std::vector<Integer>& c, std::size_t degree_bound) {
    if (c.empty() || c.front() != 1) {
        throw std::invalid_argument("L-series coefficients must start with c_1 = 1");
    }
    return group_law_from_log(formal_log(IntSeries(c)), degree_bound);
}

RatSeries strict_isomorphism(const RatSeries& f, const RatSeries& g) {
    const std::size_t order = std::min(f.order(), g.order());
    return compose(reverse(g.truncated(order)), f.truncated(order));
}

bool intertwines(const RatSeries& phi, const IntBivariate& from, const IntBivariate& to) {
    const std::size_t bound = std::min({phi.order(), from.degree_bound(), to.degree_bound()});
    const RatBivariate lhs = compose(phi.truncated(bound), to_rational(from.truncated(bound)));
    const RatBivariate rhs = compose(to_rational(to.truncated(bound)), RatBivariate::in_x(phi, bound),
                                     RatBivariate::in_y(phi, bound));
    return lhs == rhs;
}

IsomorphismReport resolve_isomorphism(const RatSeries& f, const RatSeries& g, const IntBivariate& curve_law,
                                      const IntBivariate& lseries_law, std::size_t degree_bound) {
    IsomorphismReport report;
    report.g_inverse_after_f = strict_isomorphism(f, g);
    report.f_inverse_after_g = strict_isomorphism(g, f);
    report.g_inverse_after_f_intertwines =
        intertwines(report.g_inverse_after_f.truncated(degree_bound), curve_law, lseries_law);
    report.f_inverse_after_g_intertwines =
        intertwines(report.f_inverse_after_g.truncated(degree_bound), curve_law, lseries_law);
    if (report.g_inverse_after_f_intertwines) {
        report.chosen = "g^-1 o f";
        report.phi_integral = is_integral(report.g_inverse_after_f);
    } else if (report.f_inverse_after_g_intertwines) {
        report.chosen = "f^-1 o g";
        report.phi_integral = is_integral(report.f_inverse_after_g);
    } else {
        report.chosen = "none";
    }
    return report;
}

bool has_identity(const IntBivariate& law) {
    for (std::size_t d = 0; d < law.degree_bound(); ++d) {
        const Integer expected = d == 1 ? 1 : 0;
        if (law.at(d, 0) != expected || law.at(0, d) != expected) {
            return false;
        }
    }
    return true;
}

bool is_commutative(const IntBivariate& law) { return law == law.swapped(); }

bool is_associative(const IntBivariate& law, std::size_t degree_cap) {
    const std::size_t bound = std::min(law.degree_bound(), degree_cap);
    const auto f = law.truncated(bound);
    const Trivariate xy = embed(f, bound, 0, 1);
    const Trivariate yz = embed(f, bound, 1, 2);
    Trivariate x(bound), z(bound);
    if (bound > 1) {
        x.at(1, 0, 0) = 1;
        z.at(0, 0, 1) = 1;
    }
    return substitute(f, xy, z) == substitute(f, x, yz);
}

} // namespace formale
