#include "formale/curve.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "formale/local.hpp"

namespace formale {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) {
            r = mulmod(r, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

struct ReducedCoefficients {
    std::int64_t a1, a2, a3, a4, a6;
};

ReducedCoefficients reduce(const WeierstrassCurve& curve, std::int64_t p) {
    return {mod_small(curve.a1(), p), mod_small(curve.a2(), p), mod_small(curve.a3(), p), mod_small(curve.a4(), p),
            mod_small(curve.a6(), p)};
}

// Value of y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6 and its two partials, mod p.
struct Evaluation {
    std::int64_t f, fx, fy;
};

Evaluation evaluate(const ReducedCoefficients& c, std::int64_t x, std::int64_t y, std::int64_t p) {
    const auto x2 = mulmod(x, x, p);
    const auto x3 = mulmod(x2, x, p);
    auto f = mulmod(y, y, p) + mulmod(mulmod(c.a1, x, p), y, p) + mulmod(c.a3, y, p);
    f -= x3 + mulmod(c.a2, x2, p) + mulmod(c.a4, x, p) + c.a6;
    auto fx = mulmod(c.a1, y, p) - 3 * x2 - mulmod(2 * c.a2, x, p) - c.a4;
    auto fy = 2 * y + mulmod(c.a1, x, p) + c.a3;
    auto norm = [p](std::int64_t v) { return ((v % p) + p) % p; };
    return {norm(f), norm(fx), norm(fy)};
}

std::optional<std::int64_t> singular_x(const ReducedCoefficients& c, std::int64_t p) {
    if (p == 2) {
        for (std::int64_t x = 0; x < 2; ++x) {
            for (std::int64_t y = 0; y < 2; ++y) {
                const auto e = evaluate(c, x, y, p);
                if (e.f == 0 && e.fx == 0 && e.fy == 0) {
                    return x;
                }
            }
        }
        return std::nullopt;
    }
    // Odd p: F_y = 0 pins y to -(a1 x + a3) / 2.
    const std::int64_t half = (p + 1) / 2;
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t h = (mulmod(c.a1, x, p) + c.a3) % p;
        const std::int64_t y = mulmod(p - h, half, p);
        const auto e = evaluate(c, x, y, p);
        if (e.f == 0 && e.fx == 0 && e.fy == 0) {
            return x;
        }
    }
    return std::nullopt;
}

} // namespace

Integer discriminant(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4, const Integer& a6) {
    const Integer b2 = a1 * a1 + 4 * a2;
    const Integer b4 = 2 * a4 + a1 * a3;
    const Integer b6 = a3 * a3 + 4 * a6;
    const Integer b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

WeierstrassCurve::WeierstrassCurve(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    discriminant_ = formale::discriminant(a_[0], a_[1], a_[2], a_[3], a_[4]);
    if (discriminant_ == 0) {
        throw SingularCurve("curve " + to_string() + " is singular (discriminant 0)");
    }
}

WeierstrassCurve WeierstrassCurve::parse(std::string_view text) {
    std::string cleaned;
    std::copy_if(text.begin(), text.end(), std::back_inserter(cleaned),
                 [](unsigned char ch) { return !std::isspace(ch); });
    if (cleaned.size() < 2 || cleaned.front() != '[' || cleaned.back() != ']') {
        throw ParseError("curve must look like [a1,a2,a3,a4,a6], got '" + std::string(text) + "'");
    }
    std::vector<Integer> values;
    std::string_view body(cleaned);
    body = body.substr(1, body.size() - 2);
    while (true) {
        const auto comma = body.find(',');
        const std::string token(body.substr(0, comma));
        Integer v;
        const bool numeric = !token.empty() && token.find_first_not_of("+-0123456789") == std::string::npos &&
                             v.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0;
        if (!numeric) {
            throw ParseError("bad curve coefficient '" + token + "'");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        body.remove_prefix(comma + 1);
    }
    if (values.size() != 5) {
        throw ParseError("curve needs exactly five coefficients, got " + std::to_string(values.size()));
    }
    return WeierstrassCurve(values[0], values[1], values[2], values[3], values[4]);
}

bool WeierstrassCurve::has_good_reduction(std::int64_t p) const { return !divides(Integer(static_cast<long>(p)), discriminant_); }

std::string WeierstrassCurve::to_string() const { return "[" + key() + "]"; }

std::string WeierstrassCurve::key() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i != 0) {
            s += ',';
        }
        s += a_[i].get_str();
    }
    return s;
}

std::string to_string(ReductionType type) {
    switch (type) {
    case ReductionType::Good:
        return "good";
    case ReductionType::MultiplicativeSplit:
        return "split";
    case ReductionType::MultiplicativeNonsplit:
        return "nonsplit";
    case ReductionType::Additive:
        return "additive";
    }
    return "unknown";
}

ReductionType reduction_type_from_string(std::string_view name) {
    for (auto t : {ReductionType::Good, ReductionType::MultiplicativeSplit, ReductionType::MultiplicativeNonsplit,
                   ReductionType::Additive}) {
        if (to_string(t) == name) {
            return t;
        }
    }
    throw ParseError("unknown reduction type '" + std::string(name) + "'");
}

ReductionType reduction_type(const WeierstrassCurve& curve, std::int64_t p) {
    if (!is_prime(p)) {
        throw NotPrime(std::to_string(p) + " is not prime");
    }
    if (curve.has_good_reduction(p)) {
        return ReductionType::Good;
    }
    const auto c = reduce(curve, p);
    const auto x0 = singular_x(c, p);
    if (!x0) {
        throw Error("no singular point found on " + curve.to_string() + " mod " + std::to_string(p));
    }
    // Slopes t = y/x of the tangent cone are the roots of t^2 + a1 t - (3 x0 + a2).
    const std::int64_t constant = ((-(3 * *x0 + c.a2)) % p + p) % p;
    if (p == 2) {
        int roots = 0;
        for (std::int64_t t = 0; t < 2; ++t) {
            roots += (t * t + c.a1 * t + constant) % 2 == 0 ? 1 : 0;
        }
        return roots == 2 ? ReductionType::MultiplicativeSplit
               : roots == 1 ? ReductionType::Additive
                            : ReductionType::MultiplicativeNonsplit;
    }
    const std::int64_t disc = ((mulmod(c.a1, c.a1, p) - 4 * constant) % p + p) % p;
    if (disc == 0) {
        return ReductionType::Additive;
    }
    return powmod(disc, (p - 1) / 2, p) == 1 ? ReductionType::MultiplicativeSplit
                                             : ReductionType::MultiplicativeNonsplit;
}

LocalData classify_reduction(const WeierstrassCurve& curve, std::int64_t p) {
    LocalData d;
    d.p = p;
    d.reduction = reduction_type(curve, p);
    switch (d.reduction) {
    case ReductionType::Good:
        d.points = count_points(curve, p);
        d.trace = 1 + p - *d.points;
        d.u = 1;
        check_hasse(p, d.trace);
        break;
    case ReductionType::MultiplicativeSplit:
        d.trace = 1;
        break;
    case ReductionType::MultiplicativeNonsplit:
        d.trace = -1;
        break;
    case ReductionType::Additive:
        d.trace = 0;
        break;
    }
    return d;
}

} // namespace formale
