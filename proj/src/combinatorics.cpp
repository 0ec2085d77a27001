#include "formale/combinatorics.hpp"

#include <stdexcept>

namespace formale {

namespace {

// Pascal triangle for the small upper indices the quadruple sum hits.
class BinomialTable {
public:
    explicit BinomialTable(long rows) : rows_(rows) {
        table_.reserve(static_cast<std::size_t>(rows));
        for (long n = 0; n < rows; ++n) {
            std::vector<Integer> row(static_cast<std::size_t>(n + 1));
            row.front() = 1;
            row.back() = 1;
            for (long k = 1; k < n; ++k) {
                row[static_cast<std::size_t>(k)] =
                    table_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                    table_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
            }
            table_.push_back(std::move(row));
        }
    }

    Integer operator()(long n, long k) const {
        if (n < 0 || k < 0 || k > n) {
            return 0;
        }
        if (n < rows_) {
            return table_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        }
        return binomial(n, k);
    }

private:
    long rows_;
    std::vector<std::vector<Integer>> table_;
};

const BinomialTable& binomials() {
    static const BinomialTable table(260);
    return table;
}

// base^0 .. base^max
std::vector<Integer> powers(const Integer& base, long max) {
    std::vector<Integer> out(static_cast<std::size_t>(max + 1));
    out[0] = 1;
    for (long e = 1; e <= max; ++e) {
        out[static_cast<std::size_t>(e)] = out[static_cast<std::size_t>(e - 1)] * base;
    }
    return out;
}

const Integer& power_at(const std::vector<Integer>& table, long e) {
    if (e < 0 || e >= static_cast<long>(table.size())) {
        throw std::logic_error("exponent " + std::to_string(e) + " outside the admissible range");
    }
    return table[static_cast<std::size_t>(e)];
}

} // namespace

Integer BivariatePolynomial::operator()(const Integer& x, const Integer& y) const {
    Integer r = 0;
    for (const auto& [exp, c] : terms) {
        r += c * ipow(x, exp.first) * ipow(y, exp.second);
    }
    return r;
}

Rational BivariatePolynomial::operator()(const Rational& x, const Rational& y) const {
    Rational r = 0;
    for (const auto& [exp, c] : terms) {
        Rational xp = 1;
        Rational yp = 1;
        for (unsigned i = 0; i < exp.first; ++i) {
            xp *= x;
        }
        for (unsigned j = 0; j < exp.second; ++j) {
            yp *= y;
        }
        r += Rational(c) * xp * yp;
    }
    return r;
}

RatPolynomial legendre(unsigned n) {
    RatPolynomial p;
    p.coeffs.assign(n + 1, Rational(0));
    const Rational scale(Integer(1), ipow(2, n));
    for (unsigned k = 0; 2 * k <= n; ++k) {
        Integer term = binomial(n, k) * binomial(2 * n - 2 * k, n);
        if (k % 2 == 1) {
            term = -term;
        }
        p.coeffs[n - 2 * k] = Rational(term) * scale;
    }
    p.trim();
    return p;
}

BivariatePolynomial central_trinomial(unsigned n) {
    BivariatePolynomial t;
    for (unsigned k = 0; 2 * k <= n; ++k) {
        t.terms[{n - 2 * k, k}] = binomial(n, k) * binomial(n - k, k);
    }
    return t;
}

Integer b_closed_family1(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4, unsigned n_in) {
    const long n = n_in;
    const auto& C = binomials();
    const auto p1 = powers(a1, n);
    const auto p2 = powers(a2, n);
    const auto p3 = powers(a3, n);
    const auto p4 = powers(a4, n);
    Integer total = 0;
    Integer term;
    for (long m = n / 2; m <= n; ++m) {
        for (long k = 0; 2 * k <= m; ++k) {
            const Integer outer = C(m, k) * C(m - k, k);
            for (long r = 0; r <= n - m - k; ++r) {
                const long last = n - m - k - r;
                const Integer c3 = C(m - 2 * k, r);
                const Integer c4 = C(k, last);
                if (c3 == 0 || c4 == 0) {
                    continue;
                }
                term = outer * c3 * c4;
                term *= power_at(p1, m - 2 * k - r);
                term *= power_at(p2, r);
                term *= power_at(p3, 2 * k - n + m + r);
                term *= power_at(p4, last);
                total += term;
            }
        }
    }
    return total;
}

Integer b_closed_family2(const Integer& a3, const Integer& a6, unsigned n_in) {
    if (n_in < 1) {
        throw std::invalid_argument("b_closed_family2 needs n >= 1");
    }
    const long n = n_in;
    const auto& C = binomials();
    Integer total = 0;
    for (long k = (n - 1) / 2; k <= n - 1; ++k) {
        const Integer c = C(n + k - 1, k) * C(k, n - k - 1);
        if (c == 0) {
            continue;
        }
        total += c * ipow(a3, 2 * k - n + 1) * ipow(a6, n - k - 1);
    }
    return total;
}

Rational w_coeff_family2(const Integer& a3, const Integer& a6, unsigned n) {
    return ratio(b_closed_family2(a3, a6, n), Integer(n));
}

IntSeries b_series_family2(const Integer& a3, const Integer& a6, std::size_t order) {
    IntSeries b(order);
    for (unsigned n = 1; 3 * static_cast<std::size_t>(n) - 3 < order; ++n) {
        b[3 * n - 3] = b_closed_family2(a3, a6, n);
    }
    return b;
}

Integer tate_remark_b(const Integer& b, const Integer& c, unsigned n_in) {
    const long n = n_in;
    const auto& C = binomials();
    const auto unit = powers(Integer(1 - c), 2 * n);
    const auto minus_b = powers(Integer(-b), n);
    Integer total = 0;
    for (long m = 0; m <= n - 1; ++m) {
        for (long k = 0; 2 * k <= m; ++k) {
            const Integer coeff = C(m, k) * C(m - k, k) * C(m - 2 * k, n - m - k - 1);
            if (coeff == 0) {
                continue;
            }
            total += coeff * power_at(unit, 2 * m - n - k + 1) * power_at(minus_b, n - m - 1);
        }
    }
    return total;
}

Integer tate_remark_b_unit_printed(unsigned n_in) {
    const long n = n_in;
    const auto& C = binomials();
    Integer total = 0;
    for (long m = 0; m <= n - 1; ++m) {
        for (long k = 0; 2 * k <= m; ++k) {
            const Integer coeff = C(m, k) * C(m - k, k) * C(m - 2 * k, n - m - k - 1);
            if ((n - m - 1) % 2 == 0) {
                total += coeff;
            } else {
                total -= coeff;
            }
        }
    }
    return total;
}

std::vector<RemarkComparison> compare_tate_remark(const Integer& b, const Integer& c, unsigned n_max) {
    std::vector<RemarkComparison> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        RemarkComparison row;
        row.n = n;
        row.printed = tate_remark_b(b, c, n);
        row.authoritative = b_closed_family1(1 - c, -b, -b, 0, n - 1);
        row.agree = row.printed == row.authoritative;
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<RemarkComparison> compare_tate_remark_unit(unsigned n_max) {
    std::vector<RemarkComparison> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        RemarkComparison row;
        row.n = n;
        row.printed = tate_remark_b_unit_printed(n);
        row.authoritative = b_closed_family1(0, -1, -1, 0, n - 1);
        row.agree = row.printed == row.authoritative;
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace formale
