// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Criterion 12 drives the installed CLI binary (path baked in at build time,
// overridable via the NUINV_CLI environment variable).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nuinv/cli.hpp>
#include <nuinv/dedekind.hpp>
#include <nuinv/expansion.hpp>
#include <nuinv/lens.hpp>
#include <nuinv/obstruction.hpp>
#include <nuinv/seifert.hpp>

#include "testutil.hpp"

using namespace nuinv;

namespace {

int failures = 0;

double run_timed(const std::string& label, double budget_seconds,
                 const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok)
        ++failures;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " " << label;
    if (!detail.empty())
        line << " -- " << detail;
    char timing[32];
    std::snprintf(timing, sizeof(timing), "  [%.3fs]", elapsed);
    std::cout << line.str() << timing << "\n";
    return elapsed;
}

std::string capture_cli(const std::string& cli, const std::string& args, int& exit_code) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
        out.append(buf, n);
    exit_code = ::pclose(pipe);
    return out;
}

const LaurentSeries closed_b = LaurentSeries::term(Rational(-1, 8), 2, 0, 1) +
                               LaurentSeries::term(Rational(-1, 4), 1, 1, 0) +
                               LaurentSeries::term(Rational(1, 24), 0, 2, -1);

} // namespace

int main() {
    // 1. boundary term equals its printed closed form, symbolically
    run_timed("1 boundary-term closed form", 1.0, [](std::string& detail) {
        const LaurentSeries b = b_series();
        if (b != closed_b) {
            detail = "got " + b.str();
            return false;
        }
        return true;
    });

    // 2. eta expansion display under the squared reading; literal reading
    //    leaves the -d/128 t^4 residual
    run_timed("2 eta expansion and reading audit", 1.0, [](std::string& detail) {
        for (const Rational& sigma : {Rational(0), Rational(11, 6), Rational(-2, 3)}) {
            const LaurentSeries eta = eta3_series(sigma);
            const bool display =
                eta.slice_t(2) == LaurentSeries::term(Rational(-1, 8), 2, 0, 1) &&
                eta.slice_t(1) == LaurentSeries::term(Rational(-1, 4), 1, 1, 0) &&
                eta.slice_t(0) == LaurentSeries::term(Rational(7, 24), 0, 2, -1) +
                                      LaurentSeries::term(Rational(1), 0, 0, 1) +
                                      LaurentSeries(Rational(3) + sigma);
            if (!display) {
                detail = "display mismatch at sigma = " + sigma.str();
                return false;
            }
        }
        const ReadingAuditReport audit = reading_audit();
        if (audit.literal_eta3.coefficient(4, 0, 1) != Rational(-1, 128)) {
            detail = "literal t^4 coefficient is " + audit.literal_eta3.coefficient(4, 0, 1).str();
            return false;
        }
        if (audit.literal_cancels || !audit.squared_cancels) {
            detail = "cancellation flags wrong";
            return false;
        }
        return true;
    });

    // 3. limit reconstruction: positive powers vanish, constant matches, and
    //    50 random specializations agree with nu_seifert
    run_timed("3 nu limit reconstruction", 1.0, [](std::string& detail) {
        const Rational sigma(5, 4);
        const NuLimitResult lim = nu_limit(sigma);
        if (!lim.divergent_ok) {
            detail = "residual " + lim.divergent_residual.str();
            return false;
        }
        const LaurentSeries expected = LaurentSeries::term(Rational(-1), 0, 0, 1) +
                                       LaurentSeries(Rational(-3) - sigma) +
                                       LaurentSeries::term(Rational(-1, 4), 0, 2, -1);
        if (lim.constant != expected) {
            detail = "constant " + lim.constant.str();
            return false;
        }
        testutil::Rng rng(101);
        for (int i = 0; i < 50; ++i) {
            const Rational chi = testutil::random_rational(rng, 40, 12);
            const Rational d = -abs(testutil::random_nonzero_rational(rng, 40, 12));
            const auto by_t = nu_limit(Rational(0)).constant.evaluate_chi_d(chi, d);
            Rational got(0);
            if (auto it = by_t.find(0); it != by_t.end())
                got = it->second;
            if (got != nu_seifert(smooth_bundle(d, chi))) {
                detail = "specialization mismatch at chi = " + chi.str() + ", d = " + d.str();
                return false;
            }
        }
        return true;
    });

    // 4. fast path == brute force on 500 seeded triples, alpha <= 5000;
    //    float oracle within 1e-6 on every tested triple with alpha <= 1000
    //    (exhaustively for alpha <= 40)
    run_timed("4 dedekind oracle equivalence", 5.0, [](std::string& detail) {
        const auto triples = testutil::seeded_triples(0xDEDE, 500, 5000);
        for (const auto& a : triples)
            if (s3_fast(a) != s3_bruteforce(a)) {
                detail = "fast/brute mismatch at alpha = " + a.alpha.str();
                return false;
            }
        int float_checked = 0;
        for (const auto& a : triples) {
            if (a.alpha > 1000)
                continue;
            ++float_checked;
            if (std::abs(s3_bruteforce(a).to_double() - s3_float_oracle(a)) > 1e-6) {
                detail = "float mismatch at alpha = " + a.alpha.str();
                return false;
            }
        }
        for (long long alpha = 1; alpha <= 40; ++alpha)
            for (long long b = 1; b < (alpha == 1 ? 2 : alpha); ++b)
                for (long long g = 1; g < (alpha == 1 ? 2 : alpha); ++g) {
                    if (gcd(Int(b), Int(alpha)) != 1 || gcd(Int(g), Int(alpha)) != 1)
                        continue;
                    const DedekindArgs a(alpha, b, g);
                    ++float_checked;
                    if (std::abs(s3_bruteforce(a).to_double() - s3_float_oracle(a)) > 1e-6) {
                        detail = "float mismatch at (" + std::to_string(alpha) + "," +
                                 std::to_string(b) + "," + std::to_string(g) + ")";
                        return false;
                    }
                }
        detail = "500 exact + " + std::to_string(float_checked) + " float comparisons";
        return true;
    });

    // 5. closed form s(alpha, 1, 1) = (alpha-1)(alpha-2)/(12 alpha)
    run_timed("5 closed form s(alpha,1,1)", 5.0, [](std::string& detail) {
        for (Int a = 2; a <= 200; ++a) {
            const Rational expected((a - 1) * (a - 2), 12 * a);
            if (s3_fast(a, 1, 1) != expected || s3_bruteforce(a, 1, 1) != expected) {
                detail = "mismatch at alpha = " + a.str();
                return false;
            }
        }
        return true;
    });

    // 6. two-route consistency for all p <= 100 under the calibrated convention
    run_timed("6 lens two-route consistency", 10.0, [](std::string& detail) {
        if (nu_lens(LensSpace(5, 2)) != Rational(-1, 5) ||
            nu_lens(LensSpace(3, 2)) != Rational(-1)) {
            detail = "spot values wrong";
            return false;
        }
        int checked = 0;
        for (Int p = 2; p <= 100; ++p)
            for (Int q = 2; q < p; ++q) {
                if (gcd(q, p) != 1 || gcd(q - 1, p) != 1)
                    continue;
                const CrossCheckResult r = nu_cross_check(LensSpace(p, q));
                ++checked;
                if (!r.consistent) {
                    detail = "inconsistent at L(" + p.str() + "," + q.str() + ")";
                    return false;
                }
            }
        detail = std::to_string(checked) + " pairs";
        return true;
    });

    // 7. smooth-route consistency for q = 1
    run_timed("7 smooth-route consistency", 5.0, [](std::string& detail) {
        for (Int p = 1; p <= 100; ++p) {
            const Rational expected = Rational(p) - 3 + Rational(1, p);
            const Rational direct = nu_lens(LensSpace(p, 1));
            const Rational smooth = nu_seifert(smooth_bundle(Rational(-p), Rational(2)));
            if (direct != expected || smooth != expected) {
                detail = "mismatch at p = " + p.str();
                return false;
            }
        }
        return true;
    });

    // 8. nu(S^3) = -1 along all three routes; ball filling equality holds
    run_timed("8 sphere/ball consistency", 1.0, [](std::string& detail) {
        const Rational via_seifert = nu_seifert(smooth_bundle(Rational(-1), Rational(2)));
        const Rational via_lens = nu_lens(LensSpace(1, 1));
        const auto by_t = nu_limit(Rational(0)).constant.evaluate_chi_d(Rational(2), Rational(-1));
        const Rational via_limit = by_t.count(0) ? by_t.at(0) : Rational(0);
        if (via_seifert != Rational(-1) || via_lens != Rational(-1) || via_limit != Rational(-1)) {
            detail = "seifert " + via_seifert.str() + ", lens " + via_lens.str() + ", limit " +
                     via_limit.str();
            return false;
        }
        const CheckResult ball =
            check_ch_filling_equality(Rational(-1), FillingData{Rational(1), Rational(0)});
        if (!ball.holds) {
            detail = "ball equality fails";
            return false;
        }
        return true;
    });

    // 9. nu + mu + d + 3 = 0 on 100 random smooth bundles
    run_timed("9 nu + mu + d + 3 = 0", 1.0, [](std::string& detail) {
        testutil::Rng rng(102);
        for (int i = 0; i < 100; ++i) {
            const Rational d = -abs(testutil::random_nonzero_rational(rng, 60, 15));
            const Rational chi = testutil::random_rational(rng, 60, 15);
            if (nu_seifert(smooth_bundle(d, chi)) + mu_smooth(chi, d) + d + 3 != Rational(0)) {
                detail = "violated at chi = " + chi.str() + ", d = " + d.str();
                return false;
            }
        }
        return true;
    });

    // 10. disk-bundle equation
    run_timed("10 disk-bundle equation", 1.0, [](std::string& detail) {
        for (int chi_int : {-2, -4, -6, -8}) {
            const Rational chi(chi_int);
            const Rational d = disk_bundle_degree(chi);
            if (d != chi / 2 || chi + 3 != d + 3 + chi * chi / (4 * d)) {
                detail = "failure at chi = " + chi.str();
                return false;
            }
        }
        return true;
    });

    // 11. nu = -1/p - 3 eta for every L(p, q) with p <= 100
    run_timed("11 nu/eta identity", 5.0, [](std::string& detail) {
        int checked = 0;
        for (Int p = 1; p <= 100; ++p) {
            const Int qmax = (p == 1) ? Int(1) : p - 1;
            for (Int q = 1; q <= qmax; ++q) {
                if (gcd(q, p) != 1)
                    continue;
                const LensSpace L(p, q);
                ++checked;
                if (nu_lens(L) != Rational(-1, p) - 3 * eta_round(L)) {
                    detail = "violated at L(" + p.str() + "," + q.str() + ")";
                    return false;
                }
            }
        }
        detail = std::to_string(checked) + " lens spaces";
        return true;
    });

    // 12. scan determinism: byte-identical repeated runs of the CLI binary
    run_timed("12 scan determinism", 60.0, [](std::string& detail) {
        std::string cli = NUINV_CLI_BIN;
        if (const char* env = std::getenv("NUINV_CLI"))
            cli = env;
        const std::vector<std::string> commands = {
            "scan-lens 40",
            "scan-lens 40 --json",
            "scan-lens 40 --convention paper-literal",
            "scan-lens 40 --json --jobs 4",
            "scan-bundles 6 -8",
            "scan-bundles 6 -8 --json",
            "scan-bundles 6 -8 --jobs 3",
            "verify-expansion",
        };
        for (const auto& cmd : commands) {
            int code_a = 0, code_b = 0;
            const std::string a = capture_cli(cli, cmd, code_a);
            const std::string b = capture_cli(cli, cmd, code_b);
            if (code_a != code_b || a != b || a.empty()) {
                detail = "divergence in '" + cmd + "'";
                return false;
            }
        }
        detail = std::to_string(commands.size()) + " commands, two runs each";
        return true;
    });

    if (failures == 0) {
        std::cout << "acceptance: all 12 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
