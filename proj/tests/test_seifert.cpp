#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <nuinv/seifert.hpp>

#include "testutil.hpp"

using nuinv::EtaParams;
using nuinv::Int;
using nuinv::OrbifoldPoint;
using nuinv::Rational;
using nuinv::SeifertData;

TEST_CASE("orbifold euler characteristic") {
    CHECK(nuinv::orbifold_euler(0, {}) == Rational(2));
    CHECK(nuinv::orbifold_euler(0, {5, 5}) == Rational(2, 5));
    CHECK(nuinv::orbifold_euler(2, {}) == Rational(-2));
    CHECK(nuinv::orbifold_euler(1, {2, 3, 7}) == Rational(-85, 42)); // -(1/2 + 2/3 + 6/7)
    CHECK_THROWS_AS(nuinv::orbifold_euler(0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(nuinv::orbifold_euler(-1, {}), std::invalid_argument);
}

TEST_CASE("orbifold point validation") {
    CHECK_THROWS_AS(OrbifoldPoint(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(OrbifoldPoint(4, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(OrbifoldPoint(4, 1, 2), std::invalid_argument);
    CHECK_NOTHROW(OrbifoldPoint(5, -1, 7));
}

TEST_CASE("pseudoconvexity guard") {
    CHECK_THROWS_AS(SeifertData(Rational(1), Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(SeifertData(Rational(0), Rational(2)), std::invalid_argument);
    CHECK_NOTHROW(SeifertData(Rational(1), Rational(2), {}, true));
    CHECK_NOTHROW(SeifertData(Rational(-1, 5), Rational(2, 5)));
}

TEST_CASE("dedekind total") {
    CHECK(nuinv::dedekind_total(SeifertData(Rational(-1), Rational(2))) == Rational(0));
    const SeifertData two(Rational(-1, 5), Rational(2, 5),
                          {OrbifoldPoint(5, 4, 1), OrbifoldPoint(5, 1, 2)});
    CHECK(nuinv::dedekind_total(two) == Rational(-1, 5));
    const SeifertData twin(Rational(-1, 3), Rational(2, 3),
                           {OrbifoldPoint(3, 1, 1), OrbifoldPoint(3, 1, 1)});
    CHECK(nuinv::dedekind_total(twin) == Rational(1, 9));
}

TEST_CASE("nu on smooth bundles") {
    CHECK(nuinv::nu_seifert(nuinv::smooth_bundle(Rational(-1), Rational(2))) == Rational(-1));
    CHECK(nuinv::nu_seifert(nuinv::smooth_bundle(Rational(-1), Rational(-2))) == Rational(-1));
    for (Int p = 1; p <= 12; ++p) {
        const Rational expected = Rational(p) - 3 + Rational(1, p);
        CHECK(nuinv::nu_seifert(nuinv::smooth_bundle(Rational(-p), Rational(2))) == expected);
    }
    CHECK(nuinv::nu_seifert(nuinv::smooth_bundle(Rational(-2), Rational(2))) == Rational(-1, 2));
}

TEST_CASE("nu rejects zero degree") {
    const SeifertData degenerate(Rational(0), Rational(2), {}, true);
    CHECK_THROWS_AS(nuinv::nu_seifert(degenerate), std::domain_error);
    CHECK_THROWS_AS(nuinv::eta_ouyang(degenerate, EtaParams(Rational(1))), std::domain_error);
    CHECK_THROWS_AS(nuinv::mu_smooth(Rational(2), Rational(0)), std::domain_error);
}

TEST_CASE("eta of the parametrized metric") {
    const SeifertData sphere = nuinv::smooth_bundle(Rational(-1), Rational(2));
    CHECK(nuinv::eta_ouyang(sphere, EtaParams(Rational(1))) == Rational(0));
    const SeifertData genus2 = nuinv::smooth_bundle(Rational(-1), Rational(-2));
    CHECK(nuinv::eta_ouyang(genus2, EtaParams(Rational(1))) == Rational(8, 3));

    // rho^2 = 0 kills both metric terms
    testutil::Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        const Rational degree = -nuinv::abs(testutil::random_nonzero_rational(rng, 40, 12));
        const Rational chi = testutil::random_rational(rng, 40, 12);
        const SeifertData data = nuinv::smooth_bundle(degree, chi);
        CHECK(nuinv::eta_ouyang(data, EtaParams(Rational(0))) == (degree + 3) / 3);
    }
}

TEST_CASE("eta params reject negative rho^2") {
    CHECK_THROWS_AS(EtaParams(Rational(-1)), std::invalid_argument);
    CHECK_NOTHROW(EtaParams(Rational(0)));
}

TEST_CASE("eta polynomial structure in rho^2") {
    testutil::Rng rng(32);
    for (int i = 0; i < 60; ++i) {
        const Rational degree = -nuinv::abs(testutil::random_nonzero_rational(rng, 40, 12));
        const Rational chi = testutil::random_rational(rng, 40, 12);
        Rational x = testutil::random_rational(rng, 20, 8);
        if (x.is_negative())
            x = -x;
        const SeifertData data = nuinv::smooth_bundle(degree, chi);
        const Rational at_zero = nuinv::eta_ouyang(data, EtaParams(Rational(0)));
        const Rational at_x = nuinv::eta_ouyang(data, EtaParams(x));
        CHECK(at_zero - at_x == Rational(1, 3) * (2 * chi * x + 2 * degree * x * x));
    }
}

TEST_CASE("mu on smooth bundles") {
    CHECK(nuinv::mu_smooth(Rational(-2), Rational(-1)) == Rational(-1));
    CHECK(nuinv::mu_smooth(Rational(0), Rational(-1)) == Rational(0));
    CHECK(nuinv::mu_smooth(Rational(2), Rational(-1)) == Rational(-1));
}

TEST_CASE("nu + mu + d + 3 = 0 on smooth bundles") {
    testutil::Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        const Rational degree = -nuinv::abs(testutil::random_nonzero_rational(rng, 60, 15));
        const Rational chi = testutil::random_rational(rng, 60, 15);
        const Rational nu = nuinv::nu_seifert(nuinv::smooth_bundle(degree, chi));
        const Rational mu = nuinv::mu_smooth(chi, degree);
        CHECK(nu + mu + degree + 3 == Rational(0));
    }
}

TEST_CASE("nu is invariant under point permutation and mod-alpha shifts") {
    const std::vector<OrbifoldPoint> pts = {OrbifoldPoint(5, 4, 1), OrbifoldPoint(7, 2, 3),
                                            OrbifoldPoint(3, 1, 2)};
    const Rational degree(-2, 5);
    const Rational chi(1, 7);
    const Rational base = nuinv::nu_seifert(SeifertData(degree, chi, pts));

    std::vector<OrbifoldPoint> permuted = {pts[2], pts[0], pts[1]};
    CHECK(nuinv::nu_seifert(SeifertData(degree, chi, permuted)) == base);

    std::vector<OrbifoldPoint> shifted = {OrbifoldPoint(5, 4 + 5, 1), OrbifoldPoint(7, 2, 3 + 7),
                                          OrbifoldPoint(3, 1 - 3, 2)};
    CHECK(nuinv::nu_seifert(SeifertData(degree, chi, shifted)) == base);
}

TEST_CASE("negating every beta negates the dedekind total") {
    const std::vector<OrbifoldPoint> pts = {OrbifoldPoint(5, 4, 1), OrbifoldPoint(7, 2, 3),
                                            OrbifoldPoint(9, 2, 5)};
    std::vector<OrbifoldPoint> negated;
    for (const auto& p : pts)
        negated.emplace_back(p.alpha, -p.beta, p.gamma);
    const SeifertData a(Rational(-1), Rational(2), pts);
    const SeifertData b(Rational(-1), Rational(2), negated);
    CHECK(nuinv::dedekind_total(b) == -nuinv::dedekind_total(a));
}
