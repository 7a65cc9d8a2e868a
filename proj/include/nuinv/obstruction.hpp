#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace nuinv {

// Characteristic data of a candidate filling: Euler characteristic and
// signature (orbifold values allowed, hence rational), self-intersections of
// the tori compactifying cusps, and the caller-supplied Kronheimer-Mrowka
// nonvanishing assumption for Einstein non-Kaehler fillings.
struct FillingData {
    Rational euler;
    Rational signature;
    std::vector<Int> cusp_self_intersections{};
    std::optional<bool> km_nonvanishing{};
};

// tau_cusp = tau - (1/3) sum_i [Sigma_i].[Sigma_i]
inline Rational tau_cusp(const Rational& signature, const std::vector<Int>& cusp_self_intersections) {
    Int total = 0;
    for (const Int& s : cusp_self_intersections)
        total += s;
    return signature - Rational(total, 3);
}

struct CheckResult {
    bool holds;
    Rational lhs;
    Rational rhs;
};

// A complex hyperbolic filling forces nu = -chi + 3 tau_cusp exactly.
inline CheckResult check_ch_filling_equality(const Rational& nu, const FillingData& filling) {
    Rational rhs = -filling.euler + 3 * tau_cusp(filling.signature, filling.cusp_self_intersections);
    const bool holds = (nu == rhs);
    return CheckResult{holds, nu, std::move(rhs)};
}

// For smooth fillings nu must be an integer; a denominator > 1 hints at the
// order of orbifold singularities any filling needs.
inline bool nu_is_integer(const Rational& nu) { return nu.is_integer(); }

struct SmoothObstruction {
    bool obstructed;
    Rational value; // chi^2/(4d)
};

// Smooth-bundle case: if chi^2/(4d) is not an integer there is no smooth
// complex hyperbolic filling at all.
inline SmoothObstruction cor13_smooth_obstruction(const Rational& euler, const Rational& degree) {
    if (degree.is_zero())
        throw std::domain_error("cor13_smooth_obstruction: degree must be nonzero");
    Rational value = euler * euler / (4 * degree);
    const bool obstructed = !value.is_integer();
    return SmoothObstruction{obstructed, std::move(value)};
}

// Kaehler-Einstein filling forces chi - 3 tau_cusp >= -nu. For Einstein
// non-Kaehler fillings the bound needs km_nonvanishing; that flag is advisory
// input reported by callers, never decided here.
inline CheckResult ke_inequality(const Rational& nu, const FillingData& filling) {
    Rational lhs = filling.euler - 3 * tau_cusp(filling.signature, filling.cusp_self_intersections);
    Rational rhs = -nu;
    const bool holds = (lhs >= rhs);
    return CheckResult{holds, std::move(lhs), std::move(rhs)};
}

// Exact value the Gauss-Bonnet-type curvature integral must take for an
// Einstein ACH filling with these characteristic numbers: nu + chi - 3 tau_cusp.
// Zero precisely in the complex hyperbolic equality case.
inline Rational einstein_defect(const Rational& nu, const FillingData& filling) {
    return nu + filling.euler - 3 * tau_cusp(filling.signature, filling.cusp_self_intersections);
}

// Solve chi + 3 = d + 3 + chi^2/(4d) for the degree of a disk-bundle filling.
// The equation rearranges to (2d - chi)^2 = 0, so d = chi/2 is the unique
// solution.
inline Rational disk_bundle_degree(const Rational& euler) {
    if (euler.is_zero())
        throw std::domain_error("disk_bundle_degree: equation degenerates for chi = 0");
    return euler / 2;
}

} // namespace nuinv
