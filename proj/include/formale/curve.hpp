#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "formale/integer.hpp"

namespace formale {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over the integers.
///
/// Construction rejects singular equations. The model is used as given;
/// nothing here searches for a minimal model, so bad-prime data describes
/// the supplied equation.
class WeierstrassCurve {
public:
    WeierstrassCurve(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6);

    /// Parses "[a1,a2,a3,a4,a6]". Throws ParseError or SingularCurve.
    static WeierstrassCurve parse(std::string_view text);

    const Integer& a1() const { return a_[0]; }
    const Integer& a2() const { return a_[1]; }
    const Integer& a3() const { return a_[2]; }
    const Integer& a4() const { return a_[3]; }
    const Integer& a6() const { return a_[4]; }
    const std::array<Integer, 5>& coefficients() const { return a_; }

    const Integer& discriminant() const { return discriminant_; }

    /// True when a6 = 0, the family with a closed form for w(z).
    bool in_family1() const { return a6() == 0; }
    /// True when a1 = a2 = a4 = 0, the family y^2 + a3 y = x^3 + a6.
    bool in_family2() const { return a1() == 0 && a2() == 0 && a4() == 0; }

    bool has_good_reduction(std::int64_t p) const;

    /// "[a1,a2,a3,a4,a6]"
    std::string to_string() const;
    /// "a1,a2,a3,a4,a6", the key prefix used by the trace cache.
    std::string key() const;

    friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) { return a.a_ == b.a_; }

private:
    std::array<Integer, 5> a_;
    Integer discriminant_;
};

/// Standard discriminant -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
Integer discriminant(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4, const Integer& a6);

inline Integer discriminant(const WeierstrassCurve& curve) {
    const auto& a = curve.coefficients();
    return discriminant(a[0], a[1], a[2], a[3], a[4]);
}

enum class ReductionType { Good, MultiplicativeSplit, MultiplicativeNonsplit, Additive };

std::string to_string(ReductionType type);
ReductionType reduction_type_from_string(std::string_view name);

/// Per-prime data entering the local L-factor (1 - t p^-s + u p^{1-2s})^-1.
struct LocalData {
    std::int64_t p = 0;
    ReductionType reduction = ReductionType::Good;
    std::optional<std::int64_t> points;  // A_p, only for good reduction
    std::int64_t trace = 0;              // t_p
    int u = 0;                           // u_p

    friend bool operator==(const LocalData&, const LocalData&) = default;
};

/// Reduction type of the supplied model at p, without point counting.
///
/// For p | disc the unique singular point of the reduced curve is located by
/// vanishing of both partials, then the tangent cone y^2 + a1 xy - (3 x0 + a2) x^2
/// at it decides cusp / split node / non-split node.
ReductionType reduction_type(const WeierstrassCurve& curve, std::int64_t p);

/// Full local data; good primes get A_p and t_p from point counting.
LocalData classify_reduction(const WeierstrassCurve& curve, std::int64_t p);

} // namespace formale
