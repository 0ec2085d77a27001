#pragma once

// Two-variable series truncated at a total degree bound D: only monomials
// X^i Y^j with i + j < D are stored. Storage is a dense triangle.

#include <cstddef>
#include <vector>

#include "formale/series.hpp"

namespace formale {

template <class Scalar>
class BivariateSeries {
public:
    explicit BivariateSeries(std::size_t degree_bound = 0)
        : bound_(degree_bound), coeffs_(degree_bound * (degree_bound + 1) / 2) {}

    /// f(X) as a bivariate series.
    static BivariateSeries in_x(const TruncatedSeries<Scalar>& f, std::size_t degree_bound) {
        BivariateSeries r(degree_bound);
        for (std::size_t i = 0; i < degree_bound && i < f.order(); ++i) {
            r.at(i, 0) = f[i];
        }
        return r;
    }

    /// f(Y) as a bivariate series.
    static BivariateSeries in_y(const TruncatedSeries<Scalar>& f, std::size_t degree_bound) {
        BivariateSeries r(degree_bound);
        for (std::size_t j = 0; j < degree_bound && j < f.order(); ++j) {
            r.at(0, j) = f[j];
        }
        return r;
    }

    std::size_t degree_bound() const { return bound_; }

    Scalar coeff(std::size_t i, std::size_t j) const { return i + j < bound_ ? coeffs_[index(i, j)] : Scalar(0); }

    Scalar& at(std::size_t i, std::size_t j) { return coeffs_[index(i, j)]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return coeffs_[index(i, j)]; }

    BivariateSeries truncated(std::size_t degree_bound) const {
        BivariateSeries r(std::min(degree_bound, bound_));
        for (std::size_t d = 0; d < r.bound_; ++d) {
            for (std::size_t i = 0; i <= d; ++i) {
                r.at(i, d - i) = at(i, d - i);
            }
        }
        return r;
    }

    /// Coefficient swap (i, j) -> (j, i).
    BivariateSeries swapped() const {
        BivariateSeries r(bound_);
        for (std::size_t d = 0; d < bound_; ++d) {
            for (std::size_t i = 0; i <= d; ++i) {
                r.at(d - i, i) = at(i, d - i);
            }
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    BivariateSeries& operator+=(const BivariateSeries& o) { return combine(o, 1); }
    BivariateSeries& operator-=(const BivariateSeries& o) { return combine(o, -1); }

    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
        const std::size_t bound = std::min(a.bound_, b.bound_);
        BivariateSeries r(bound);
        for (std::size_t da = 0; da < bound; ++da) {
            for (std::size_t ia = 0; ia <= da; ++ia) {
                const Scalar& ca = a.at(ia, da - ia);
                if (ca == 0) {
                    continue;
                }
                for (std::size_t db = 0; da + db < bound; ++db) {
                    for (std::size_t ib = 0; ib <= db; ++ib) {
                        const Scalar& cb = b.at(ib, db - ib);
                        if (cb != 0) {
                            r.at(ia + ib, da - ia + db - ib) += ca * cb;
                        }
                    }
                }
            }
        }
        return r;
    }

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
        return a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
    }

private:
    static std::size_t index(std::size_t i, std::size_t j) {
        const std::size_t d = i + j;
        return d * (d + 1) / 2 + i;
    }

    BivariateSeries& combine(const BivariateSeries& o, int sign) {
        if (o.bound_ < bound_) {
            *this = truncated(o.bound_);
        }
        for (std::size_t d = 0; d < bound_; ++d) {
            for (std::size_t i = 0; i <= d; ++i) {
                if (sign > 0) {
                    at(i, d - i) += o.at(i, d - i);
                } else {
                    at(i, d - i) -= o.at(i, d - i);
                }
            }
        }
        return *this;
    }

    std::size_t bound_;
    std::vector<Scalar> coeffs_;
};

using IntBivariate = BivariateSeries<Integer>;
using RatBivariate = BivariateSeries<Rational>;

/// f(A(X,Y)) for A with zero constant term.
template <class Scalar>
BivariateSeries<Scalar> compose(const TruncatedSeries<Scalar>& f, const BivariateSeries<Scalar>& inner) {
    const std::size_t bound = std::min(f.order(), inner.degree_bound());
    if (bound > 0 && inner.at(0, 0) != 0) {
        throw NonzeroConstantTerm("inner bivariate series must vanish at the origin");
    }
    const auto a = inner.truncated(bound);
    BivariateSeries<Scalar> r(bound);
    for (std::size_t k = bound; k-- > 0;) {
        r = r * a;
        r.at(0, 0) += f[k];
    }
    return r;
}

/// G(A(X,Y), B(X,Y)) for A, B with zero constant term.
template <class Scalar>
BivariateSeries<Scalar> compose(const BivariateSeries<Scalar>& g, const BivariateSeries<Scalar>& a,
                                const BivariateSeries<Scalar>& b) {
    const std::size_t bound = std::min({g.degree_bound(), a.degree_bound(), b.degree_bound()});
    if (bound > 0 && (a.at(0, 0) != 0 || b.at(0, 0) != 0)) {
        throw NonzeroConstantTerm("inner bivariate series must vanish at the origin");
    }
    std::vector<BivariateSeries<Scalar>> a_pow;
    std::vector<BivariateSeries<Scalar>> b_pow;
    BivariateSeries<Scalar> one(bound);
    if (bound > 0) {
        one.at(0, 0) = 1;
    }
    a_pow.push_back(one);
    b_pow.push_back(one);
    for (std::size_t k = 1; k < bound; ++k) {
        a_pow.push_back(a_pow.back() * a.truncated(bound));
        b_pow.push_back(b_pow.back() * b.truncated(bound));
    }
    BivariateSeries<Scalar> r(bound);
    for (std::size_t d = 0; d < bound; ++d) {
        for (std::size_t i = 0; i <= d; ++i) {
            const Scalar& c = g.at(i, d - i);
            if (c == 0) {
                continue;
            }
            auto term = a_pow[i] * b_pow[d - i];
            BivariateSeries<Scalar> scaled(bound);
            for (std::size_t e = 0; e < bound; ++e) {
                for (std::size_t t = 0; t <= e; ++t) {
                    scaled.at(t, e - t) = c * term.at(t, e - t);
                }
            }
            r += scaled;
        }
    }
    return r;
}

inline bool is_integral(const RatBivariate& f) {
    for (std::size_t d = 0; d < f.degree_bound(); ++d) {
        for (std::size_t i = 0; i <= d; ++i) {
            if (f.at(i, d - i).get_den() != 1) {
                return false;
            }
        }
    }
    return true;
}

inline IntBivariate to_integer(const RatBivariate& f) {
    IntBivariate r(f.degree_bound());
    for (std::size_t d = 0; d < f.degree_bound(); ++d) {
        for (std::size_t i = 0; i <= d; ++i) {
            r.at(i, d - i) = detail::from_rational<Integer>(f.at(i, d - i));
        }
    }
    return r;
}

inline RatBivariate to_rational(const IntBivariate& f) {
    RatBivariate r(f.degree_bound());
    for (std::size_t d = 0; d < f.degree_bound(); ++d) {
        for (std::size_t i = 0; i <= d; ++i) {
            r.at(i, d - i) = Rational(f.at(i, d - i));
        }
    }
    return r;
}

} // namespace formale
