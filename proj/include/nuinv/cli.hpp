#pragma once

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dedekind.hpp"
#include "expansion.hpp"
#include "lens.hpp"
#include "obstruction.hpp"
#include "seifert.hpp"
#include "seifert_json.hpp"

namespace nuinv::cli {

// Exit codes: 0 success / all-pass, 1 verification failure (cross-check,
// verify-expansion), 2 invalid input or usage.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_invalid_input = 2;

inline const char* yn(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// scan rows

struct LensRow {
    Int p, q;
    Rational nu, eta;
    bool integer = false;
    std::optional<bool> consistent; // empty when gcd(q - 1, p) > 1
};

struct BundleRow {
    Int genus, degree;
    Rational euler, nu, mu;
    bool integer = false;
    bool obstructed = false;
};

inline LensRow make_lens_row(const Int& p, const Int& q, LensConvention convention) {
    const LensSpace L(p, q);
    LensRow row;
    row.p = p;
    row.q = q;
    row.nu = nu_lens(L);
    row.eta = eta_round(L);
    row.integer = row.nu.is_integer();
    if (q == 1) {
        // smooth route: L(p, 1) is the circle bundle of degree -p over the sphere
        row.consistent = (row.nu == nu_seifert(smooth_bundle(Rational(-p), Rational(2))));
    } else if (gcd(q - 1, p) == 1) {
        row.consistent = nu_cross_check(L, convention).consistent;
    }
    return row;
}

inline BundleRow make_bundle_row(const Int& genus, const Int& degree) {
    BundleRow row;
    row.genus = genus;
    row.degree = degree;
    row.euler = Rational(2 - 2 * genus);
    row.nu = nu_seifert(smooth_bundle(Rational(degree), row.euler));
    row.mu = mu_smooth(row.euler, Rational(degree));
    row.integer = row.nu.is_integer();
    row.obstructed = cor13_smooth_obstruction(row.euler, Rational(degree)).obstructed;
    return row;
}

// Deterministic parallel map: every row is a pure function of its input, and
// results land in pre-assigned slots, so output order never depends on the
// thread schedule.
template <typename Out, typename In, typename Fn>
std::vector<Out> parallel_map(const std::vector<In>& inputs, unsigned jobs, Fn fn) {
    std::vector<Out> out(inputs.size());
    if (jobs <= 1 || inputs.size() < 2) {
        for (std::size_t i = 0; i < inputs.size(); ++i)
            out[i] = fn(inputs[i]);
        return out;
    }
    if (jobs > inputs.size())
        jobs = static_cast<unsigned>(inputs.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();)
                out[i] = fn(inputs[i]);
        });
    for (auto& th : pool)
        th.join();
    return out;
}

// All L(p, q) with p <= pmax, ordered by (p, q).
inline std::vector<LensRow> scan_lens(const Int& pmax,
                                      LensConvention convention = LensConvention::calibrated,
                                      unsigned jobs = 1) {
    if (pmax < 1)
        throw std::invalid_argument("scan-lens: pmax must be >= 1");
    std::vector<std::pair<Int, Int>> inputs;
    inputs.emplace_back(1, 1);
    for (Int p = 2; p <= pmax; ++p)
        for (Int q = 1; q < p; ++q)
            if (gcd(q, p) == 1)
                inputs.emplace_back(p, q);
    return parallel_map<LensRow>(inputs, jobs, [convention](const std::pair<Int, Int>& pq) {
        return make_lens_row(pq.first, pq.second, convention);
    });
}

// Smooth bundles over genus-g surfaces, dmin <= degree <= -1, ordered by
// (genus, degree).
inline std::vector<BundleRow> scan_bundles(const Int& genus_max, const Int& dmin,
                                           unsigned jobs = 1) {
    if (genus_max < 0)
        throw std::invalid_argument("scan-bundles: genus-max must be >= 0");
    if (dmin > -1)
        throw std::invalid_argument("scan-bundles: dmin must be <= -1");
    std::vector<std::pair<Int, Int>> inputs;
    for (Int g = 0; g <= genus_max; ++g)
        for (Int d = dmin; d <= -1; ++d)
            inputs.emplace_back(g, d);
    return parallel_map<BundleRow>(inputs, jobs, [](const std::pair<Int, Int>& gd) {
        return make_bundle_row(gd.first, gd.second);
    });
}

// ---------------------------------------------------------------------------
// output helpers

inline void print_table(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i)
        width[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    const auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    };
    emit(header);
    for (const auto& row : rows)
        emit(row);
}

namespace detail {

inline Json load_json_stream(std::istream& is, const std::string& what) {
    try {
        return Json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(what + ": invalid JSON (" + e.what() + ")");
    }
}

inline Json load_json_input(const std::string& file, std::istream& in) {
    if (file.empty() || file == "-")
        return load_json_stream(in, "stdin");
    std::ifstream f(file);
    if (!f)
        throw std::invalid_argument("cannot open input file '" + file + "'");
    return load_json_stream(f, file);
}

inline std::vector<Int> parse_int_list(const std::string& csv, const char* what) {
    std::vector<Int> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ','))
        out.push_back(parse_int(item));
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

inline OrbifoldPoint parse_point(const std::string& csv) {
    const std::vector<Int> v = parse_int_list(csv, "--point");
    if (v.size() != 3)
        throw std::invalid_argument("--point: expected alpha,beta,gamma");
    return OrbifoldPoint(v[0], v[1], v[2]);
}

struct SeifertInput {
    std::string file;
    std::string degree, euler;
    std::vector<std::string> points;
    bool allow_non_pseudoconvex = false;

    SeifertData load(std::istream& in) const {
        if (!degree.empty() || !euler.empty()) {
            if (degree.empty() || euler.empty())
                throw std::invalid_argument("inline input needs both --degree and --euler");
            std::vector<OrbifoldPoint> pts;
            pts.reserve(points.size());
            for (const auto& p : points)
                pts.push_back(parse_point(p));
            return SeifertData(Rational::parse(degree), Rational::parse(euler), std::move(pts),
                               allow_non_pseudoconvex);
        }
        return seifert_from_json(load_json_input(file, in), allow_non_pseudoconvex);
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("input", file, "JSON record file ('-' or absent reads stdin)");
        cmd->add_option("--degree", degree, "degree as n/d (inline record instead of JSON)");
        cmd->add_option("--euler", euler, "orbifold Euler characteristic as n/d");
        cmd->add_option("--point", points, "orbifold point alpha,beta,gamma (repeatable)");
        cmd->add_flag("--allow-nonpseudoconvex", allow_non_pseudoconvex,
                      "accept degree >= 0 (formulas evaluate, CR meaning is lost)");
    }
};

inline LensConvention convention_from(const std::string& name) {
    return name == "paper-literal" ? LensConvention::paper_literal : LensConvention::calibrated;
}

} // namespace detail

// ---------------------------------------------------------------------------
// command runner

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
    CLI::App app{"exact nu/eta/mu invariants of circle-fibered spherical CR 3-manifolds"};
    app.name("nuinv");
    app.require_subcommand(1);

    const std::vector<std::string> conventions = {"calibrated", "paper-literal"};

    struct {
        std::string alpha, beta, gamma;
        bool json = false;
    } ded;
    auto* ded_cmd = app.add_subcommand("dedekind", "exact Dedekind sum s(alpha, beta, gamma)");
    ded_cmd->add_option("alpha", ded.alpha)->required();
    ded_cmd->add_option("beta", ded.beta)->required();
    ded_cmd->add_option("gamma", ded.gamma)->required();
    ded_cmd->add_flag("--json", ded.json, "machine-readable record output");

    struct {
        detail::SeifertInput input;
        bool json = false;
    } nus;
    auto* nus_cmd = app.add_subcommand("nu-seifert", "nu of a Seifert orbifold circle bundle");
    nus.input.attach(nus_cmd);
    nus_cmd->add_flag("--json", nus.json, "machine-readable record output");

    struct {
        std::string p, q;
        bool json = false;
    } nul;
    auto* nul_cmd = app.add_subcommand("nu-lens", "nu of the lens space L(p, q)");
    nul_cmd->add_option("p", nul.p)->required();
    nul_cmd->add_option("q", nul.q)->required();
    nul_cmd->add_flag("--json", nul.json, "machine-readable record output");

    struct {
        std::string p, q;
        bool json = false;
    } etr;
    auto* etr_cmd = app.add_subcommand("eta-round", "eta of L(p, q) with the round metric");
    etr_cmd->add_option("p", etr.p)->required();
    etr_cmd->add_option("q", etr.q)->required();
    etr_cmd->add_flag("--json", etr.json, "machine-readable record output");

    struct {
        detail::SeifertInput input;
        std::string rho2;
        bool json = false;
    } eto;
    auto* eto_cmd =
        app.add_subcommand("eta-ouyang", "eta of the metric 4 rho^2 theta^2 + gamma");
    eto.input.attach(eto_cmd);
    eto_cmd->add_option("--rho2", eto.rho2, "squared metric parameter rho^2 as n/d")->required();
    eto_cmd->add_flag("--json", eto.json, "machine-readable record output");

    struct {
        std::string euler, degree;
        bool json = false;
    } mu;
    auto* mu_cmd = app.add_subcommand("mu", "Burns-Epstein mu = chi^2/(4d) of a smooth bundle");
    mu_cmd->add_option("euler", mu.euler)->required();
    mu_cmd->add_option("degree", mu.degree)->required();
    mu_cmd->add_flag("--json", mu.json, "machine-readable record output");

    struct {
        std::string p, q;
        std::string convention = "calibrated";
        bool json = false;
    } cc;
    auto* cc_cmd =
        app.add_subcommand("cross-check", "nu of L(p, q) along both computation routes");
    cc_cmd->add_option("p", cc.p)->required();
    cc_cmd->add_option("q", cc.q)->required();
    cc_cmd->add_option("--convention", cc.convention, "Seifert decomposition convention")
        ->check(CLI::IsMember(conventions));
    cc_cmd->add_flag("--json", cc.json, "machine-readable record output");

    struct {
        std::string nu, euler, signature, cusps;
        bool km = false;
        bool json = false;
    } ob;
    auto* ob_cmd = app.add_subcommand("obstruct", "filling-obstruction verdicts for given nu");
    ob_cmd->add_option("--nu", ob.nu, "nu-invariant as n/d")->required();
    ob_cmd->add_option("--euler", ob.euler, "Euler characteristic of the filling as n/d")
        ->required();
    ob_cmd->add_option("--signature", ob.signature, "signature of the filling as n/d")->required();
    ob_cmd->add_option("--cusps", ob.cusps, "torus self-intersections i,j,... of the cusps");
    ob_cmd->add_flag("--km", ob.km, "assume the Kronheimer-Mrowka invariant is nonzero");
    ob_cmd->add_flag("--json", ob.json, "machine-readable record output");

    struct {
        std::string pmax;
        std::string convention = "calibrated";
        unsigned jobs = 1;
        bool json = false;
    } sl;
    auto* sl_cmd = app.add_subcommand("scan-lens", "nu/eta/integrality table over all L(p, q)");
    sl_cmd->add_option("pmax", sl.pmax)->required();
    sl_cmd->add_option("--convention", sl.convention, "Seifert decomposition convention")
        ->check(CLI::IsMember(conventions));
    sl_cmd->add_option("--jobs", sl.jobs, "worker threads (output order is fixed)")
        ->check(CLI::PositiveNumber);
    sl_cmd->add_flag("--json", sl.json, "one JSON record per row");

    struct {
        std::string genus_max, dmin;
        unsigned jobs = 1;
        bool json = false;
    } sb;
    auto* sb_cmd =
        app.add_subcommand("scan-bundles", "nu/mu/obstruction table over smooth bundles");
    sb_cmd->add_option("genus-max", sb.genus_max)->required();
    sb_cmd->add_option("dmin", sb.dmin)->required();
    sb_cmd->add_option("--jobs", sb.jobs, "worker threads (output order is fixed)")
        ->check(CLI::PositiveNumber);
    sb_cmd->add_flag("--json", sb.json, "one JSON record per row");

    struct {
        std::string reading = "squared";
        int spot_checks = 50;
        bool json = false;
    } ve;
    auto* ve_cmd = app.add_subcommand("verify-expansion",
                                      "symbolic verification of the boundary-term expansion");
    ve_cmd->add_option("--reading", ve.reading, "reading of the radius expansion")
        ->check(CLI::IsMember(std::vector<std::string>{"squared", "literal"}));
    ve_cmd->add_option("--spot-check", ve.spot_checks, "number of random specializations")
        ->check(CLI::NonNegativeNumber);
    ve_cmd->add_flag("--json", ve.json, "one JSON record per check");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("nuinv");
        for (const auto& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_invalid_input;
    }

    try {
        if (ded_cmd->parsed()) {
            const DedekindArgs a(parse_int(ded.alpha), parse_int(ded.beta), parse_int(ded.gamma));
            const Rational s = s3_fast(a);
            if (ded.json) {
                Json j;
                j["alpha"] = int_to_json(a.alpha);
                j["beta"] = int_to_json(a.beta);
                j["gamma"] = int_to_json(a.gamma);
                j["s"] = s.str();
                out << j.dump() << "\n";
            } else {
                out << s.str() << "\n";
            }
            return exit_ok;
        }

        if (nus_cmd->parsed()) {
            const SeifertData data = nus.input.load(in);
            const Rational nu = nu_seifert(data);
            if (nus.json) {
                Json j = seifert_to_json(data);
                j["nu"] = nu.str();
                out << j.dump() << "\n";
            } else {
                out << nu.str() << "\n";
            }
            return exit_ok;
        }

        if (nul_cmd->parsed()) {
            const LensSpace L(parse_int(nul.p), parse_int(nul.q));
            const Rational nu = nu_lens(L);
            if (nul.json) {
                Json j;
                j["p"] = int_to_json(L.p());
                j["q"] = int_to_json(L.q());
                j["nu"] = nu.str();
                out << j.dump() << "\n";
            } else {
                out << nu.str() << "\n";
            }
            return exit_ok;
        }

        if (etr_cmd->parsed()) {
            const LensSpace L(parse_int(etr.p), parse_int(etr.q));
            const Rational eta = eta_round(L);
            if (etr.json) {
                Json j;
                j["p"] = int_to_json(L.p());
                j["q"] = int_to_json(L.q());
                j["eta"] = eta.str();
                out << j.dump() << "\n";
            } else {
                out << eta.str() << "\n";
            }
            return exit_ok;
        }

        if (eto_cmd->parsed()) {
            const SeifertData data = eto.input.load(in);
            const EtaParams params(Rational::parse(eto.rho2));
            const Rational eta = eta_ouyang(data, params);
            if (eto.json) {
                Json j = seifert_to_json(data);
                j["rho2"] = params.rho2.str();
                j["eta"] = eta.str();
                out << j.dump() << "\n";
            } else {
                out << eta.str() << "\n";
            }
            return exit_ok;
        }

        if (mu_cmd->parsed()) {
            const Rational euler = Rational::parse(mu.euler);
            const Rational degree = Rational::parse(mu.degree);
            const Rational value = mu_smooth(euler, degree);
            if (mu.json) {
                Json j;
                j["euler"] = euler.str();
                j["degree"] = degree.str();
                j["mu"] = value.str();
                out << j.dump() << "\n";
            } else {
                out << value.str() << "\n";
            }
            return exit_ok;
        }

        if (cc_cmd->parsed()) {
            const LensSpace L(parse_int(cc.p), parse_int(cc.q));
            const LensConvention conv = detail::convention_from(cc.convention);
            const CrossCheckResult r = nu_cross_check(L, conv);
            if (cc.json) {
                Json j;
                j["p"] = int_to_json(L.p());
                j["q"] = int_to_json(L.q());
                j["convention"] = cc.convention;
                j["direct"] = r.direct.str();
                j["via_seifert"] = r.via_seifert.str();
                j["consistent"] = r.consistent;
                out << j.dump() << "\n";
            } else {
                out << "direct       " << r.direct.str() << "\n";
                out << "via-seifert  " << r.via_seifert.str() << "\n";
                out << "consistent   " << yn(r.consistent) << "\n";
            }
            return r.consistent ? exit_ok : exit_verification_failed;
        }

        if (ob_cmd->parsed()) {
            FillingData filling;
            filling.euler = Rational::parse(ob.euler);
            filling.signature = Rational::parse(ob.signature);
            if (!ob.cusps.empty())
                filling.cusp_self_intersections = detail::parse_int_list(ob.cusps, "--cusps");
            if (ob.km)
                filling.km_nonvanishing = true;
            const Rational nu = Rational::parse(ob.nu);
            const Rational tc = tau_cusp(filling.signature, filling.cusp_self_intersections);
            const CheckResult ch = check_ch_filling_equality(nu, filling);
            const CheckResult ke = ke_inequality(nu, filling);
            const Rational defect = einstein_defect(nu, filling);
            if (ob.json) {
                Json j;
                j["nu"] = nu.str();
                j["euler"] = filling.euler.str();
                j["signature"] = filling.signature.str();
                Json cusps = Json::array();
                for (const Int& c : filling.cusp_self_intersections)
                    cusps.push_back(int_to_json(c));
                j["cusps"] = std::move(cusps);
                j["tau_cusp"] = tc.str();
                j["integer"] = nu_is_integer(nu);
                j["ch_equality"] = Json{{"holds", ch.holds}, {"lhs", ch.lhs.str()}, {"rhs", ch.rhs.str()}};
                j["ke_inequality"] = Json{{"holds", ke.holds}, {"lhs", ke.lhs.str()}, {"rhs", ke.rhs.str()}};
                j["einstein_defect"] = defect.str();
                if (filling.km_nonvanishing)
                    j["km_nonvanishing"] = *filling.km_nonvanishing;
                else
                    j["km_nonvanishing"] = nullptr;
                out << j.dump() << "\n";
            } else {
                out << "nu               " << nu.str() << "\n";
                out << "tau-cusp         " << tc.str() << "\n";
                out << "nu-integer       " << yn(nu_is_integer(nu)) << "\n";
                out << "ch-equality      " << (ch.holds ? "holds" : "fails") << "  [nu " << ch.lhs.str()
                    << "  -chi+3*tau " << ch.rhs.str() << "]\n";
                out << "ke-inequality    " << (ke.holds ? "holds" : "fails") << "  [chi-3*tau "
                    << ke.lhs.str() << "  -nu " << ke.rhs.str() << "]\n";
                out << "einstein-defect  " << defect.str() << "\n";
                out << "km-nonvanishing  "
                    << (filling.km_nonvanishing ? yn(*filling.km_nonvanishing) : "unset")
                    << (filling.km_nonvanishing && *filling.km_nonvanishing
                            ? "\n"
                            : "  (Einstein non-Kaehler case needs this assumption)\n");
            }
            return exit_ok;
        }

        if (sl_cmd->parsed()) {
            const auto rows =
                scan_lens(parse_int(sl.pmax), detail::convention_from(sl.convention), sl.jobs);
            if (sl.json) {
                for (const LensRow& r : rows) {
                    Json j;
                    j["p"] = int_to_json(r.p);
                    j["q"] = int_to_json(r.q);
                    j["nu"] = r.nu.str();
                    j["eta"] = r.eta.str();
                    j["integer"] = r.integer;
                    if (r.consistent)
                        j["consistent"] = *r.consistent;
                    out << j.dump() << "\n";
                }
            } else {
                std::vector<std::vector<std::string>> cells;
                cells.reserve(rows.size());
                for (const LensRow& r : rows)
                    cells.push_back({r.p.str(), r.q.str(), r.nu.str(), r.eta.str(),
                                     yn(r.integer), r.consistent ? yn(*r.consistent) : "-"});
                print_table(out, {"p", "q", "nu", "eta", "integer", "consistent"}, cells);
            }
            return exit_ok;
        }

        if (sb_cmd->parsed()) {
            const auto rows = scan_bundles(parse_int(sb.genus_max), parse_int(sb.dmin), sb.jobs);
            if (sb.json) {
                for (const BundleRow& r : rows) {
                    Json j;
                    j["genus"] = int_to_json(r.genus);
                    j["degree"] = r.degree.str();
                    j["euler"] = r.euler.str();
                    j["nu"] = r.nu.str();
                    j["mu"] = r.mu.str();
                    j["integer"] = r.integer;
                    j["obstructed"] = r.obstructed;
                    out << j.dump() << "\n";
                }
            } else {
                std::vector<std::vector<std::string>> cells;
                cells.reserve(rows.size());
                for (const BundleRow& r : rows)
                    cells.push_back({r.genus.str(), r.degree.str(), r.euler.str(), r.nu.str(),
                                     r.mu.str(), yn(r.integer), yn(r.obstructed)});
                print_table(out, {"genus", "degree", "euler", "nu", "mu", "integer", "obstructed"},
                            cells);
            }
            return exit_ok;
        }

        if (ve_cmd->parsed()) {
            const RhoReading reading =
                ve.reading == "literal" ? RhoReading::literal : RhoReading::squared;
            const auto checks = verify_expansion(reading, ve.spot_checks);
            int failed = 0;
            for (const ExpansionCheck& c : checks) {
                if (!c.pass)
                    ++failed;
                if (ve.json) {
                    Json j;
                    j["check"] = c.name;
                    j["pass"] = c.pass;
                    j["detail"] = c.detail;
                    out << j.dump() << "\n";
                } else {
                    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
                }
            }
            if (!ve.json) {
                if (failed == 0)
                    out << "all " << checks.size() << " checks passed\n";
                else
                    out << failed << " of " << checks.size() << " checks failed\n";
            }
            return failed == 0 ? exit_ok : exit_verification_failed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }

    err << "error: no subcommand\n";
    return exit_invalid_input;
}

} // namespace nuinv::cli
