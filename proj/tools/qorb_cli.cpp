// Command-line front end: computes orbital integrals, germ expansions and
// descent factors as exact rational functions of q, and runs the
// verification harness against the brute-force tree oracle.
//
// Exit codes: 0 success / all checks pass, 1 assertion failure in a verify
// suite, 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qorb/descent.hpp"
#include "qorb/gl2gl2.hpp"
#include "qorb/gsp4.hpp"
#include "qorb/invariants.hpp"
#include "qorb/relative.hpp"
#include "qorb/sl2.hpp"
#include "qorb/treecount.hpp"
#include "qorb/verify.hpp"

using json = nlohmann::json;
using namespace qorb;

namespace {

struct Row {
    std::vector<std::pair<std::string, std::string>> params;
    std::string value;                 // QRat in the fixed grammar, or a marker
    std::optional<std::string> numeric;
};

struct Table {
    std::string subject;
    std::vector<Row> rows;
};

struct OutputOptions {
    std::string format = "json";  // json|csv|latex
    std::optional<long> eval_at;
};

std::string latex_poly(const QRat& f) {
    // q^{e} exponent braces for side-by-side comparison with displays.
    std::string s = f.str();
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '^') {
            out += "^{";
            size_t j = i + 1;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) out += s[j++];
            out += "}";
            i = j - 1;
        } else {
            out += s[i];
        }
    }
    return "\\frac{" + out.substr(1, out.find(")/(") - 1) + "}{" +
           out.substr(out.find(")/(") + 3, out.size() - out.find(")/(") - 4) + "}";
}

void emit(const Table& table, const OutputOptions& opts) {
    if (opts.format == "json") {
        json j;
        j["subject"] = table.subject;
        j["rows"] = json::array();
        for (const auto& row : table.rows) {
            json r;
            for (const auto& [k, v] : row.params) r["params"][k] = v;
            r["value"] = row.value;
            if (row.numeric) {
                if (opts.eval_at) r["numeric"]["q"] = *opts.eval_at;
                r["numeric"]["value"] = *row.numeric;
            }
            j["rows"].push_back(std::move(r));
        }
        std::cout << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        if (!table.rows.empty()) {
            for (const auto& [k, v] : table.rows.front().params) std::cout << k << ",";
            std::cout << "value";
            if (opts.eval_at) std::cout << ",numeric(q=" << *opts.eval_at << ")";
            std::cout << "\n";
        }
        for (const auto& row : table.rows) {
            for (const auto& [k, v] : row.params) std::cout << v << ",";
            std::cout << row.value;
            if (row.numeric) std::cout << "," << *row.numeric;
            std::cout << "\n";
        }
    } else {  // latex
        for (const auto& row : table.rows) {
            for (const auto& [k, v] : row.params) std::cout << k << "=" << v << " & ";
            if (row.value.front() == '(') {
                std::cout << "$" << latex_poly(QRat::parse(row.value)) << "$";
            } else {
                std::cout << row.value;
            }
            if (row.numeric) std::cout << " & " << *row.numeric;
            std::cout << " \\\\\n";
        }
    }
}

Row make_row(std::vector<std::pair<std::string, std::string>> params, const QRat& value,
             const OutputOptions& opts) {
    Row row;
    row.params = std::move(params);
    row.value = value.str();
    if (opts.eval_at) row.numeric = value.eval_at(*opts.eval_at).get_str();
    return row;
}

GammaInvariants parse_invariants(const std::string& spec) {
    // split:<d> | unram:<d>[:black|white] | ram:<d> with d a half-integer.
    auto fail = [&]() -> GammaInvariants {
        throw CLI::ValidationError("invariants", "cannot parse '" + spec +
                                                     "' (split:2, unram:1:black, ram:3/2)");
    };
    auto colon = spec.find(':');
    if (colon == std::string::npos) return fail();
    std::string klass = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::string color;
    auto colon2 = rest.find(':');
    if (colon2 != std::string::npos) {
        color = rest.substr(colon2 + 1);
        rest = rest.substr(0, colon2);
    }
    HalfInt d = HalfInt::parse(rest);
    if (klass == "split") return GammaInvariants::split(d.as_integer());
    if (klass == "unram")
        return GammaInvariants::unramified(
            d.as_integer(), color == "white" ? Color::White : Color::Black);
    if (klass == "ram") return GammaInvariants::ramified(d);
    return fail();
}

struct Range {
    long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

int run_verify(const std::string& suite, const std::vector<int>& qs, int max_reach,
               long max_n, bool as_json) {
    if (max_reach > 6 || max_n > 12) {
        std::cerr << "resource bounds exceeded: the oracle sweeps are sized for "
                     "max-reach <= 6 and max-n <= 12\n";
        return 2;
    }
    verify::Report report;
    if (suite == "appendixA") {
        report = verify::appendix_a(qs, max_reach);
    } else if (suite == "sl2") {
        report = verify::sl2_suite(max_n, 3, qs);
    } else if (suite == "gl2gl2") {
        report = verify::gl2gl2_suite(4, 2);
    } else if (suite == "gsp4-regions") {
        report = verify::gsp4_regions(max_n);
    } else if (suite == "relative") {
        report = verify::relative_suite(qs, max_reach);
    } else if (suite == "descent") {
        report = verify::descent_suite(100, 20240901u);
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    if (as_json) {
        json j;
        j["suite"] = suite;
        j["pass"] = report.all_pass();
        j["cases"] = report.total_cases();
        j["checks"] = json::array();
        for (const auto& c : report.checks) {
            json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            e["cases"] = c.cases;
            if (!c.detail.empty()) e["detail"] = c.detail;
            j["checks"].push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.cases
                      << " cases)\n";
            if (!c.pass) std::cout << "       " << c.detail << "\n";
            if (c.pass && !c.detail.empty() && suite == "gsp4-regions") {
                std::cout << c.detail;  // archived residuals
            }
        }
        std::cout << (report.all_pass() ? "all checks passed" : "FAILURES present") << " ("
                  << report.total_cases() << " cases)\n";
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orbital integrals on Bruhat-Tits trees"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions opts;
    app.add_option("--format", opts.format, "output format: json, csv or latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    long eval_q = 0;
    auto* eval_opt =
        app.add_option("--eval-at", eval_q, "also evaluate each value at this q");

    auto* compute = app.add_subcommand("compute", "compute integrals and factors");
    compute->fallthrough();

    // ---- compute sl2 ----
    auto* sl2cmd = compute->add_subcommand("sl2", "SL2 orbital integrals");
    sl2cmd->fallthrough();
    std::string sl2_class = "split", sl2_center = "black", sl2_rep = "one";
    std::string sl2_depth = "0", sl2_n = "0..4";
    bool sl2_stable_flag = false, sl2_germs = false;
    sl2cmd->add_option("--class", sl2_class,
                       "split|unramified|ramified|unipotent (short forms accepted)");
    sl2cmd->add_option("--depth", sl2_depth, "depth d (half-integers as a/2)");
    sl2cmd->add_option("--center", sl2_center, "black|white (unramified only)");
    sl2cmd->add_option("--rep", sl2_rep, "unipotent representative: zero|one|u|pi|upi");
    sl2cmd->add_option("--n", sl2_n, "n or range a..b");
    sl2cmd->add_flag("--stable", sl2_stable_flag, "stable orbital integral");
    sl2cmd->add_flag("--germs", sl2_germs, "emit Shalika germ coefficients");
    std::vector<std::string> sl2_combo;
    sl2cmd->add_option("--combo", sl2_combo,
                       "integrate the combination sum c_n f_n instead "
                       "(coefficients c_0,c_1,... as rationals)")
        ->delimiter(',');

    // ---- compute gl2gl2 ----
    auto* gcmd = compute->add_subcommand("gl2gl2", "GL2 x_det GL2 orbital integrals");
    gcmd->fallthrough();
    std::string g_class = "hyperbolic", g_rep = "one";
    std::string g_inv1 = "split:0", g_inv2 = "split:0", g_parity = "mono";
    std::string g_n = "0..3", g_m = "0..3";
    bool g_stable_flag = false, g_germs = false;
    gcmd->add_option("--class", g_class, "unipotent|hyperbolic|elliptic|mixed");
    gcmd->add_option("--rep", g_rep, "unipotent orbit: zero|left|right|one|onepi");
    gcmd->add_option("--inv1", g_inv1, "first factor, e.g. split:1 or unram:2:black");
    gcmd->add_option("--inv2", g_inv2, "second factor, e.g. ram:3/2");
    gcmd->add_option("--parity", g_parity, "mono|bi (unramified elliptic pairs)");
    gcmd->add_option("--n", g_n, "n or range");
    gcmd->add_option("--m", g_m, "m or range");
    gcmd->add_flag("--stable", g_stable_flag, "stable orbital integral");
    gcmd->add_flag("--germs", g_germs, "emit Shalika germ coefficients");

    // ---- compute gsp4 ----
    auto* gsp4cmd = compute->add_subcommand("gsp4", "equivalued symplectic integrals");
    gsp4cmd->fallthrough();
    int gsp4_type = 1;
    std::string gsp4_n = "0..3", gsp4_method = "both";
    gsp4cmd->add_option("--type", gsp4_type, "vertex type: 1, 3 or 4")->required();
    gsp4cmd->add_option("--n", gsp4_n, "depth n or range");
    gsp4cmd->add_option("--method", gsp4_method, "closed|region|both");

    // ---- compute relative ----
    auto* relcmd = compute->add_subcommand("relative", "relative orbital integrals");
    relcmd->fallthrough();
    std::string rel_inv1, rel_inv2, rel_delta = "0", rel_core = "generic";
    long rel_overlap = -1;
    relcmd->add_option("--inv1", rel_inv1, "first factor invariants")->required();
    relcmd->add_option("--inv2", rel_inv2, "second factor invariants")->required();
    relcmd->add_option("--delta", rel_delta, "distance between fixed-set cores");
    relcmd->add_option("--overlap", rel_overlap, "shared apartment vertices (case B)");
    relcmd->add_option("--core", rel_core, "generic|equal|ray");
    std::string rel_case = "auto";
    relcmd->add_option("--case", rel_case, "auto (the case is detected from the config)");

    // ---- compute descent ----
    auto* descmd = compute->add_subcommand("descent", "descent comparison factors");
    descmd->fallthrough();
    std::string des_op = "ext";
    long des_t1 = 0, des_t2 = 0, des_q = 5, des_n = 2;
    std::vector<long> des_traces, des_word;
    descmd->add_option("--op", des_op, "ext|ratio|weyl-pair|weyl-many|special|levi");
    descmd->add_option("--t1", des_t1, "first Frobenius trace");
    descmd->add_option("--t2", des_t2, "second Frobenius trace");
    descmd->add_option("--q", des_q, "base field size / lambda");
    descmd->add_option("--n", des_n, "number of factors (special)");
    descmd->add_option("--traces", des_traces, "trace list (weyl-many)");
    descmd->add_option("--word", des_word, "Cartan word a_1..a_n (levi)");

    // ---- compute treecount ----
    auto* tccmd = compute->add_subcommand("treecount", "closed-form tree counts");
    tccmd->fallthrough();
    std::string tc_op = "ball";
    std::string tc_alpha = "0", tc_beta = "0", tc_delta = "0";
    long tc_r = 0, tc_v = 1, tc_n = 1, tc_i = 0;
    std::string tc_center = "vertex";
    tccmd->add_option("--op", tc_op,
                      "ball|out-of-apartment|sphere|ball-ball|tube-ball|tube-tube|chi");
    tccmd->add_option("--i", tc_i, "radius/reach for ball and out-of-apartment");
    tccmd->add_option("--alpha", tc_alpha, "first radius");
    tccmd->add_option("--beta", tc_beta, "second radius");
    tccmd->add_option("--delta", tc_delta, "distance");
    tccmd->add_option("--r", tc_r, "overlap size");
    tccmd->add_option("--V", tc_v, "convex-set vertex count");
    tccmd->add_option("--n", tc_n, "sphere distance / chi distance");
    tccmd->add_option("--center", tc_center, "vertex|midpoint");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->fallthrough();
    std::string suite;
    std::vector<int> verify_qs = {2, 3};
    int verify_reach = 4;
    long verify_maxn = 6;
    bool verify_json = false;
    verify_cmd->add_option("suite", suite,
                           "appendixA|sl2|gl2gl2|gsp4-regions|relative|descent")
        ->required();
    verify_cmd->add_option("--q", verify_qs, "residue field sizes")->delimiter(',');
    verify_cmd->add_option("--max-reach", verify_reach, "oracle reach bound");
    verify_cmd->add_option("--max-n", verify_maxn, "depth bound");
    verify_cmd->add_flag("--json", verify_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*eval_opt) opts.eval_at = eval_q;

    try {
        if (*verify_cmd) return run_verify(suite, verify_qs, verify_reach, verify_maxn,
                                           verify_json);

        Table table;
        if (*sl2cmd) {
            table.subject = "sl2";
            Range ns = parse_range(sl2_n);
            if (sl2_class == "unipotent") {
                UnipotentRepSL2 rep = sl2_rep == "zero" ? UnipotentRepSL2::Zero
                                      : sl2_rep == "u"  ? UnipotentRepSL2::U
                                      : sl2_rep == "pi" ? UnipotentRepSL2::Pi
                                      : sl2_rep == "upi" ? UnipotentRepSL2::UPi
                                                         : UnipotentRepSL2::One;
                for (long n = ns.lo; n <= ns.hi; ++n)
                    table.rows.push_back(make_row({{"rep", sl2_rep},
                                                   {"n", std::to_string(n)}},
                                                  sl2_unipotent(rep, n), opts));
            } else {
                HalfInt d = HalfInt::parse(sl2_depth);
                bool ram = sl2_class.rfind("ram", 0) == 0;
                GammaInvariants inv =
                    sl2_class == "split" ? GammaInvariants::split(d.as_integer())
                    : ram                ? GammaInvariants::ramified(d)
                                         : GammaInvariants::unramified(
                                               d.as_integer(), sl2_center == "white"
                                                                   ? Color::White
                                                                   : Color::Black);
                if (sl2_germs) {
                    auto g = sl2_shalika(inv);
                    table.rows.push_back(make_row({{"coefficient", "A"}}, g.A, opts));
                    table.rows.push_back(make_row({{"coefficient", "B"}}, g.B, opts));
                    table.rows.push_back(make_row({{"coefficient", "C"}}, g.C, opts));
                } else if (!sl2_combo.empty()) {
                    // Integral of sum c_n f_n: spherical functions are finite
                    // combinations of the basis.
                    QRat total;
                    for (size_t n = 0; n < sl2_combo.size(); ++n) {
                        mpq_class coeff(sl2_combo[n]);
                        coeff.canonicalize();
                        QRat term = sl2_stable_flag ? sl2_stable(inv, n)
                                                    : sl2_orbital(inv, n);
                        total += QRat(coeff) * term;
                    }
                    table.rows.push_back(make_row(
                        {{"class", sl2_class}, {"combo", std::to_string(sl2_combo.size())}},
                        total, opts));
                } else {
                    for (long n = ns.lo; n <= ns.hi; ++n)
                        table.rows.push_back(make_row(
                            {{"class", sl2_class}, {"n", std::to_string(n)}},
                            sl2_stable_flag ? sl2_stable(inv, n) : sl2_orbital(inv, n),
                            opts));
                }
            }
        } else if (*gcmd) {
            table.subject = "gl2gl2";
            Range ns = parse_range(g_n), ms = parse_range(g_m);
            auto push = [&](long n, long m, const QRat& v) {
                table.rows.push_back(make_row(
                    {{"n", std::to_string(n)}, {"m", std::to_string(m)}}, v, opts));
            };
            if (g_class == "unipotent") {
                UnipotentMergedG rep = g_rep == "zero"    ? UnipotentMergedG::Zero
                                       : g_rep == "left"  ? UnipotentMergedG::LeftOne
                                       : g_rep == "right" ? UnipotentMergedG::RightOne
                                       : g_rep == "onepi" ? UnipotentMergedG::OnePi
                                                          : UnipotentMergedG::One;
                for (long n = ns.lo; n <= ns.hi; ++n)
                    for (long m = ms.lo; m <= ms.hi; ++m)
                        push(n, m, g_stable_flag ? g_stable_unipotent_regular(n, m)
                                                 : g_unipotent(rep, n, m));
            } else if (g_class == "hyperbolic") {
                GammaInvariants i1 = parse_invariants(g_inv1),
                                i2 = parse_invariants(g_inv2);
                if (g_germs) {
                    auto g = g_shalika_hyperbolic(i1.depth.as_integer(),
                                                  i2.depth.as_integer());
                    for (auto [name, coeff] :
                         {std::pair<const char*, QRat>{"A", g.A}, {"B", g.B}, {"C", g.C},
                          {"D", g.D}, {"E", g.E}})
                        table.rows.push_back(make_row({{"coefficient", name}}, coeff, opts));
                } else {
                    for (long n = ns.lo; n <= ns.hi; ++n)
                        for (long m = ms.lo; m <= ms.hi; ++m)
                            push(n, m,
                                 g_hyperbolic(i1.depth.as_integer(), i2.depth.as_integer(),
                                              n, m));
                }
            } else if (g_class == "elliptic") {
                EllipticPairConfig config{parse_invariants(g_inv1),
                                          parse_invariants(g_inv2),
                                          g_parity == "bi" ? PairParity::Bichrome
                                                           : PairParity::Monochrome};
                if (g_germs) {
                    auto g = g_shalika_elliptic(config);
                    for (auto [name, coeff] :
                         {std::pair<const char*, QRat>{"A", g.A}, {"B", g.B}, {"C", g.C},
                          {"D", g.D}, {"E", g.E}})
                        table.rows.push_back(make_row({{"coefficient", name}}, coeff, opts));
                } else {
                    for (long n = ns.lo; n <= ns.hi; ++n)
                        for (long m = ms.lo; m <= ms.hi; ++m)
                            push(n, m,
                                 g_stable_flag
                                     ? g_stable_elliptic(config.inv1, config.inv2, n, m)
                                     : g_elliptic(config, n, m));
                }
            } else {  // mixed
                GammaInvariants i1 = parse_invariants(g_inv1);
                GammaInvariants i2 = parse_invariants(g_inv2);
                if (g_germs) {
                    auto g = g_shalika_mixed(i1.depth.as_integer(), i2);
                    for (auto [name, coeff] :
                         {std::pair<const char*, QRat>{"A", g.A}, {"B", g.B}, {"C", g.C},
                          {"D", g.D}, {"E", g.E}})
                        table.rows.push_back(make_row({{"coefficient", name}}, coeff, opts));
                } else {
                    for (long n = ns.lo; n <= ns.hi; ++n)
                        for (long m = ms.lo; m <= ms.hi; ++m)
                            push(n, m, g_mixed(i1.depth.as_integer(), i2, n, m));
                }
            }
        } else if (*gsp4cmd) {
            table.subject = "gsp4";
            VertexType vt;
            if (gsp4_type == 1) {
                vt = VertexType::T1;
            } else if (gsp4_type == 3) {
                vt = VertexType::T3;
            } else if (gsp4_type == 4) {
                vt = VertexType::T4;
            } else {
                std::cerr << "vertex type " << gsp4_type
                          << " carries no equivalued elements\n";
                return 2;
            }
            Range ns = parse_range(gsp4_n);
            for (long n = ns.lo; n <= ns.hi; ++n) {
                if (gsp4_method == "closed" || gsp4_method == "both")
                    table.rows.push_back(
                        make_row({{"n", std::to_string(n)}, {"method", "closed"}},
                                 orbital_closed_form(vt, n), opts));
                if (gsp4_method == "region" || gsp4_method == "both")
                    table.rows.push_back(
                        make_row({{"n", std::to_string(n)}, {"method", "region"}},
                                 orbital_region_sum(vt, n), opts));
                if (gsp4_method == "both")
                    table.rows.push_back(
                        make_row({{"n", std::to_string(n)}, {"method", "residual"}},
                                 orbital_closed_form(vt, n) - orbital_region_sum(vt, n),
                                 opts));
            }
        } else if (*relcmd) {
            table.subject = "relative";
            RelativeConfig config;
            config.inv1 = parse_invariants(rel_inv1);
            config.inv2 = parse_invariants(rel_inv2);
            config.delta = HalfInt::parse(rel_delta);
            if (rel_overlap >= 0) config.overlap_r = rel_overlap;
            config.core = rel_core == "equal" ? CoreRelation::EqualApartments
                          : rel_core == "ray" ? CoreRelation::SharedRay
                                              : CoreRelation::Generic;
            if (rel_case != "auto") {
                std::cerr << "only --case auto is supported; the case is "
                             "detected from the configuration\n";
                return 2;
            }
            RelativeCase kase = detect_case(config);
            RelativeResult res = relative_orbital(config);
            Row row;
            row.params = {{"case", to_string(kase)}};
            if (res.divergent) {
                row.value = "divergent";
            } else {
                row = make_row({{"case", to_string(kase)}}, res.value, opts);
            }
            table.rows.push_back(std::move(row));
        } else if (*descmd) {
            table.subject = "descent";
            Row row;
            if (des_op == "ext") {
                FrobeniusPair pair{des_t1, des_t2, des_q};
                if (!pair.weil_admissible())
                    std::cerr << "warning: traces exceed the Weil bound\n";
                row.params = {{"op", "ext"}};
                row.value = ext_count(pair).get_str();
            } else if (des_op == "ratio") {
                auto r = isogeny_ratio(FrobeniusPair{des_t1, des_t2, des_q});
                row.params = {{"op", "ratio"}};
                row.value = r.ratio_sq.get_str();
                row.numeric = std::to_string(r.approx);
            } else if (des_op == "weyl-pair") {
                row.params = {{"op", "weyl-pair"}};
                row.value = weyl_disc_pair_traces(des_t1, des_t2, des_q).get_str();
            } else if (des_op == "weyl-many") {
                std::vector<mpz_class> traces(des_traces.begin(), des_traces.end());
                auto d = weyl_disc_many(traces, des_q);
                row.params = {{"op", "weyl-many"}};
                row.value = d.value.get_str();
            } else if (des_op == "special") {
                auto f = special_descent_factor(des_n);
                row.params = {{"op", "special"}};
                row.value = "q^(" + f.exponent.get_str() + ")";
            } else if (des_op == "levi") {
                row.params = {{"op", "levi"}};
                row.value = "q^" + std::to_string(levi_ratio_exponent(des_word));
            } else {
                std::cerr << "unknown descent op\n";
                return 2;
            }
            table.rows.push_back(std::move(row));
        } else if (*tccmd) {
            table.subject = "treecount";
            QRat value;
            if (tc_op == "ball") {
                value = tc_center == "midpoint" ? midpoint_ball_count_by_reach(tc_i)
                                                : ball_count(BallSpec::vertex(tc_i));
            } else if (tc_op == "out-of-apartment") {
                value = ball_out_of_apartment(tc_i);
            } else if (tc_op == "sphere") {
                value = sphere_from_convex(tc_n, tc_v);
            } else if (tc_op == "ball-ball") {
                value = ball_ball_intersection(HalfInt::parse(tc_alpha),
                                               HalfInt::parse(tc_beta),
                                               HalfInt::parse(tc_delta))
                            .count;
            } else if (tc_op == "tube-ball") {
                value = tube_ball_count(HalfInt::parse(tc_alpha).as_integer(),
                                        HalfInt::parse(tc_beta),
                                        HalfInt::parse(tc_delta),
                                        tc_center == "midpoint"
                                            ? BallSpec::Center::Midpoint
                                            : BallSpec::Center::Vertex);
            } else if (tc_op == "tube-tube") {
                value = tube_tube_count(HalfInt::parse(tc_alpha).as_integer(),
                                        HalfInt::parse(tc_beta).as_integer(),
                                        HalfInt::parse(tc_delta).as_integer(), tc_r);
            } else if (tc_op == "chi") {
                value = chi(tc_n, Color::Black, ColorFilter::Any);
            } else {
                std::cerr << "unknown treecount op\n";
                return 2;
            }
            table.rows.push_back(make_row({{"op", tc_op}}, value, opts));
        } else {
            std::cerr << "missing compute subcommand\n";
            return 2;
        }
        emit(table, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
