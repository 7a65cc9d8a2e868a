#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "dedekind.hpp"

namespace nuinv {

// Local data at a singular fiber: the group Z/alpha acts on a base chart by
// e^{2 pi i beta/alpha} and on the fiber by e^{2 pi i gamma/alpha}.
struct OrbifoldPoint {
    Int alpha;
    Int beta;
    Int gamma;

    OrbifoldPoint(Int a, Int b, Int c)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
        if (alpha < 2)
            throw std::invalid_argument("OrbifoldPoint: alpha must be >= 2");
        if (gcd(abs(beta), alpha) != 1 || gcd(abs(gamma), alpha) != 1)
            throw std::invalid_argument("OrbifoldPoint: beta and gamma must be coprime to alpha");
    }
};

// Circle orbifold bundle over a 2-orbifold: degree (first Chern number, a
// rational for orbifold bases), orbifold Euler characteristic of the base,
// and the singular-fiber data. The invariant circle-bundle CR structure is
// strictly pseudoconvex only for degree < 0, so construction rejects
// non-negative degrees unless explicitly overridden for exploratory use.
class SeifertData {
public:
    SeifertData(Rational degree, Rational euler, std::vector<OrbifoldPoint> points = {},
                bool allow_non_pseudoconvex = false)
        : degree_(std::move(degree)), euler_(std::move(euler)), points_(std::move(points)),
          allow_non_pseudoconvex_(allow_non_pseudoconvex) {
        if (!allow_non_pseudoconvex_ && !degree_.is_negative())
            throw std::invalid_argument(
                "SeifertData: degree must be negative (pseudoconvexity); "
                "set the non-pseudoconvex override to evaluate anyway");
    }

    const Rational& degree() const { return degree_; }
    const Rational& euler() const { return euler_; }
    const std::vector<OrbifoldPoint>& points() const { return points_; }
    bool non_pseudoconvex_allowed() const { return allow_non_pseudoconvex_; }

private:
    Rational degree_;
    Rational euler_;
    std::vector<OrbifoldPoint> points_;
    bool allow_non_pseudoconvex_;
};

inline SeifertData smooth_bundle(Rational degree, Rational euler,
                                 bool allow_non_pseudoconvex = false) {
    return SeifertData(std::move(degree), std::move(euler), {}, allow_non_pseudoconvex);
}

// Metric parameter of g = 4 rho^2 theta^2 + gamma. eta depends on rho only
// through even powers, so the parameter is rho^2 itself.
struct EtaParams {
    Rational rho2;

    explicit EtaParams(Rational r) : rho2(std::move(r)) {
        if (rho2.is_negative())
            throw std::invalid_argument("EtaParams: rho^2 must be >= 0");
    }
};

// chi = 2 - 2 genus - sum_j (1 - 1/alpha_j)
inline Rational orbifold_euler(const Int& genus, const std::vector<Int>& cone_orders) {
    if (genus < 0)
        throw std::invalid_argument("orbifold_euler: genus must be >= 0");
    Rational chi(2 - 2 * genus);
    for (const Int& a : cone_orders) {
        if (a < 2)
            throw std::invalid_argument("orbifold_euler: cone orders must be >= 2");
        chi -= Rational(a - 1, a);
    }
    return chi;
}

inline Rational dedekind_total(const SeifertData& data) {
    Rational total(0);
    for (const auto& p : data.points())
        total += s3_fast(p.alpha, p.beta, p.gamma);
    return total;
}

// nu = -d - 3 - chi^2/(4d) - 12 sum_j s(alpha_j, beta_j, gamma_j)
inline Rational nu_seifert(const SeifertData& data) {
    const Rational& d = data.degree();
    if (d.is_zero())
        throw std::domain_error("nu_seifert: degree must be nonzero");
    const Rational& chi = data.euler();
    return -d - 3 - chi * chi / (4 * d) - 12 * dedekind_total(data);
}

// eta of the metric 4 rho^2 theta^2 + gamma:
//   (1/3) (d + 3 - 2 chi rho^2 - 2 d rho^4) + 4 sum_j s_j.
// This is the closed form after substituting the base volume V = -pi d into
// Ouyang's formula: pi rho^2 chi/V = -rho^2 chi/d and pi^2 rho^4 d^2/V^2 =
// rho^4, so pi cancels identically and the value is rational.
inline Rational eta_ouyang(const SeifertData& data, const EtaParams& params) {
    if (data.degree().is_zero())
        throw std::domain_error("eta_ouyang: degree must be nonzero");
    const Rational& d = data.degree();
    const Rational& chi = data.euler();
    const Rational& r2 = params.rho2;
    return Rational(1, 3) * (d + 3 - 2 * chi * r2 - 2 * d * r2 * r2) + 4 * dedekind_total(data);
}

// Burns-Epstein invariant of a smooth invariant circle bundle: chi^2/(4d).
// Only defined without orbifold points; callers guarantee that.
inline Rational mu_smooth(const Rational& euler, const Rational& degree) {
    if (degree.is_zero())
        throw std::domain_error("mu_smooth: degree must be nonzero");
    return euler * euler / (4 * degree);
}

} // namespace nuinv
