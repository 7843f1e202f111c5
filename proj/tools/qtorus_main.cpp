#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtorus/definability.hpp"
#include "qtorus/morita.hpp"
#include "qtorus/torus_checks.hpp"
#include "qtorus/transform.hpp"

#if defined(_WIN32)
#include <io.h>
#define QTORUS_ISATTY _isatty
#define QTORUS_FILENO _fileno
#else
#include <unistd.h>
#define QTORUS_ISATTY isatty
#define QTORUS_FILENO fileno
#endif

namespace {

using nlohmann::json;
using namespace qtorus;

bool use_color() {
    static const bool enabled = [] {
        const char* env = std::getenv("QTORUS_COLOR");
        if (env && std::string(env) == "0") return false;
        return QTORUS_ISATTY(QTORUS_FILENO(stdout)) != 0;
    }();
    return enabled;
}

std::string green(const std::string& s) { return use_color() ? "\033[32m" + s + "\033[0m" : s; }
std::string red(const std::string& s) { return use_color() ? "\033[31m" + s + "\033[0m" : s; }
std::string verdict(bool ok) { return ok ? green("OK") : red("FAIL"); }

// JSON integers stay numeric while they fit a 64-bit value; larger exact
// integers are emitted as decimal strings (documented in docs/cli.md).
json json_int(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

json json_matrix(const Mat2Z& m) {
    return json::array({json::array({json_int(m.a()), json_int(m.b())}),
                        json::array({json_int(m.c()), json_int(m.d())})});
}

json json_quotients(const std::vector<Int>& qs) {
    json arr = json::array();
    for (const Int& a : qs) arr.push_back(json_int(a));
    return arr;
}

std::string quotient_list(const std::vector<Int>& qs) {
    std::string out = "[";
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) out += ", ";
        out += qs[i].get_str();
    }
    return out + "]";
}

// Report text with OK/FAIL coloring applied per line.
void print_report(const Report& report) {
    std::vector<const Report::Entry*> order;
    for (const auto& e : report.entries()) order.push_back(&e);
    std::stable_sort(order.begin(), order.end(),
                     [](auto* x, auto* y) { return x->label < y->label; });
    for (const auto* e : order) {
        if (e->ok) std::cout << green("OK") << " " << e->label << "\n";
        else
            std::cout << red("FAIL") << " " << e->label << ": lhs=" << e->lhs << " rhs=" << e->rhs
                      << "\n";
    }
    for (const auto& note : report.notes()) std::cout << "NOTE " << note << "\n";
}

json report_summary(const Report& report) {
    return json{{"checked", report.checked()}, {"failed", report.failed()}};
}

QuadNum parse_irrational(const std::string& text) {
    QuadNum x = parse_quad(text);
    if (x.is_rational()) throw RationalInput("'" + text + "' is rational");
    return x;
}

// Deterministic universe of representative exponent pairs used by
// transform-verify; documented in docs/cli.md.
std::vector<UniverseEntry> default_universe(const Int& disc) {
    QuadNum root = QuadNum::sqrt_of(disc);
    return {
        UniverseEntry{QuadNum(0), QuadNum(0)},
        UniverseEntry{QuadNum(make_rational(1, 3)), QuadNum(make_rational(1, 5))},
        UniverseEntry{root * QuadNum(make_rational(1, 7)), QuadNum(make_rational(2, 9))},
    };
}

int cmd_cf(const std::string& theta_text, bool as_json) {
    QuadNum theta = parse_quad(theta_text);
    CFExpansion cf = cf_expand(theta); // throws RationalInput on rationals
    if (as_json) {
        json out{{"theta", to_string(theta)},
                 {"preperiod", json_quotients(cf.preperiod())},
                 {"period", json_quotients(cf.period())}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "theta: " << to_string(theta) << " (approx " << theta.approx_decimal() << ")\n";
    std::cout << "preperiod: " << quotient_list(cf.preperiod()) << "\n";
    std::cout << "period: " << quotient_list(cf.period()) << "\n";
    return 0;
}

int cmd_morita(const std::string& t1_text, const std::string& t2_text, long bound, bool as_json) {
    QuadNum theta1 = parse_irrational(t1_text);
    QuadNum theta2 = parse_irrational(t2_text);
    auto witness = decide_morita(theta1, theta2);
    std::optional<Mat2Z> oracle;
    bool oracle_ran = bound > 0;
    if (oracle_ran) oracle = brute_force_search(theta1, theta2, bound);
    bool oracle_agrees = !oracle_ran || oracle.has_value() == witness.has_value();
    if (witness) {
        bool mobius_ok = mobius_apply(witness->matrix, theta1) == theta2;
        bool cosets_ok = cosets_correspond(theta1, theta2, witness->scaling);
        if (as_json) {
            json out{{"equivalent", true},
                     {"matrix", json_matrix(witness->matrix)},
                     {"det", json_int(witness->matrix.det())},
                     {"scaling", to_string(witness->scaling)},
                     {"tail_index_1", witness->tail_index_1},
                     {"tail_index_2", witness->tail_index_2},
                     {"checks", json{{"mobius", mobius_ok}, {"cosets", cosets_ok}}}};
            if (oracle_ran)
                out["oracle"] = json{{"bound", bound},
                                     {"found", oracle ? json_matrix(*oracle) : json(nullptr)},
                                     {"agrees", oracle_agrees}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "equivalent: " << green("yes") << "\n";
            std::cout << "matrix: " << to_string(witness->matrix) << "\n";
            std::cout << "det: " << witness->matrix.det() << "\n";
            std::cout << "scaling: " << to_string(witness->scaling) << " (approx "
                      << witness->scaling.approx_decimal() << ")\n";
            std::cout << "tail indices: " << witness->tail_index_1 << " " << witness->tail_index_2
                      << "\n";
            std::cout << "check moebius action: " << verdict(mobius_ok) << "\n";
            std::cout << "check coset correspondence: " << verdict(cosets_ok) << "\n";
            if (oracle_ran)
                std::cout << "oracle (bound " << bound
                          << "): " << (oracle ? to_string(*oracle) : std::string("none"))
                          << " agreement: " << verdict(oracle_agrees) << "\n";
        }
        return (mobius_ok && cosets_ok && oracle_agrees) ? 0 : 1;
    }
    CFExpansion cf1 = cf_expand(theta1);
    CFExpansion cf2 = cf_expand(theta2);
    if (as_json) {
        json out{{"equivalent", false},
                 {"evidence",
                  json{{"disc_1", json_int(theta1.disc())},
                       {"disc_2", json_int(theta2.disc())},
                       {"period_1", json_quotients(cf1.period())},
                       {"period_2", json_quotients(cf2.period())}}}};
        if (oracle_ran)
            out["oracle"] = json{{"bound", bound},
                                 {"found", oracle ? json_matrix(*oracle) : json(nullptr)},
                                 {"agrees", oracle_agrees}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "equivalent: " << red("no") << "\n";
        if (theta1.disc() != theta2.disc())
            std::cout << "evidence: distinct discriminants " << theta1.disc() << " vs "
                      << theta2.disc() << "\n";
        else
            std::cout << "evidence: distinct periods " << quotient_list(cf1.period()) << " vs "
                      << quotient_list(cf2.period()) << "\n";
        if (oracle_ran)
            std::cout << "oracle (bound " << bound
                      << "): " << (oracle ? to_string(*oracle) : std::string("none"))
                      << " agreement: " << verdict(oracle_agrees) << "\n";
    }
    return 1;
}

int cmd_torus_verify(long exp_range, bool as_json) {
    Report report = torus_core_checks(exp_range);
    if (as_json) std::cout << report_summary(report).dump() << "\n";
    else {
        print_report(report);
        std::cout << "checked: " << report.checked() << " failed: " << report.failed() << "\n";
    }
    return report.all_ok() ? 0 : 1;
}

int cmd_transform_verify(const std::string& t1_text, const std::string& t2_text, long exp_range,
                         bool as_json) {
    QuadNum theta1 = parse_irrational(t1_text);
    QuadNum theta2 = parse_irrational(t2_text);
    auto witness = decide_morita(theta1, theta2);
    if (!witness) {
        if (as_json) std::cout << json{{"equivalent", false}}.dump() << "\n";
        else std::cout << "equivalent: " << red("no") << " (no transform to verify)\n";
        return 1;
    }
    GeoTransform transform =
        build_transform(theta1, theta2, *witness, default_universe(theta1.disc()));
    Report report = check_diagram_U(transform, -exp_range, exp_range);
    report.merge(check_diagram_V(transform, -exp_range, exp_range));
    report.merge(check_pairing_preserved(transform, -exp_range, exp_range));
    if (as_json) {
        json out = report_summary(report);
        out["equivalent"] = true;
        out["matrix"] = json_matrix(witness->matrix);
        out["scaling"] = to_string(witness->scaling);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "equivalent: " << green("yes") << "\n";
        std::cout << "matrix: " << to_string(witness->matrix) << "\n";
        std::cout << "scaling: " << to_string(witness->scaling) << "\n";
        print_report(report);
        std::cout << "checked: " << report.checked() << " failed: " << report.failed() << "\n";
    }
    return report.all_ok() ? 0 : 1;
}

int cmd_rewrite(long a, long b, long c, long d, bool as_json) {
    Mat2Z m(a, b, c, d); // throws NotUnimodular unless |det| = 1
    AtomicFormula f = rewrite(m);
    if (as_json) {
        json out{{"matrix", json_matrix(m)},
                 {"formula", to_string(f)},
                 {"normalized", to_string(f.normalized())}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << to_string(f) << "\n";
    return 0;
}

int cmd_eval(const std::string& formula_text, const std::string& x_text,
             const std::string& y_text, const std::string& theta_text, bool as_json) {
    AtomicFormula f = parse_formula(formula_text);
    ExpPoint x{parse_quad(x_text)};
    ExpPoint y{parse_quad(y_text)};
    QuadNum theta = parse_irrational(theta_text);
    bool result = eval_atomic(f, x, y, theta);
    if (as_json) std::cout << json{{"result", result}}.dump() << "\n";
    else std::cout << (result ? green("true") : red("false")) << "\n";
    return result ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic toolkit for quantum 2-tori over quadratic irrationals"};
    app.require_subcommand(1);

    std::string theta_text, theta2_text, formula_text, x_text, y_text;
    long bound = 0, exp_range = 4, ma = 0, mb = 0, mc = 0, md = 0;
    bool json_cf = false, json_morita = false, json_tv = false, json_xv = false,
         json_rw = false, json_ev = false;

    CLI::App* cf = app.add_subcommand("cf", "Continued fraction of a quadratic irrational");
    cf->add_option("theta", theta_text, "value in the quadratic grammar")->required();
    cf->add_flag("--json", json_cf, "JSON output");

    CLI::App* morita = app.add_subcommand("morita", "Decide equivalence of two irrationals");
    morita->add_option("theta1", theta_text, "first value")->required();
    morita->add_option("theta2", theta2_text, "second value")->required();
    morita->add_option("--bound", bound, "also run the brute-force oracle up to this bound");
    morita->add_flag("--json", json_morita, "JSON output");

    CLI::App* tv = app.add_subcommand("torus-verify", "Operator and pairing coherence sweeps");
    tv->add_option("--exp-range", exp_range, "exponent range, >= 1")->check(CLI::Range(1L, 64L));
    tv->add_flag("--json", json_tv, "JSON output");

    CLI::App* xv = app.add_subcommand("transform-verify",
                                      "Build the induced transform and check its diagrams");
    xv->add_option("theta1", theta_text, "first value")->required();
    xv->add_option("theta2", theta2_text, "second value")->required();
    xv->add_option("--exp-range", exp_range, "exponent range, >= 1")->check(CLI::Range(1L, 16L));
    xv->add_flag("--json", json_xv, "JSON output");

    CLI::App* rw = app.add_subcommand("rewrite", "Quantifier-free formula for a GL2(Z) matrix");
    rw->add_option("a", ma, "entry m11")->required();
    rw->add_option("b", mb, "entry m12")->required();
    rw->add_option("c", mc, "entry m21")->required();
    rw->add_option("d", md, "entry m22")->required();
    rw->add_flag("--json", json_rw, "JSON output");

    CLI::App* ev = app.add_subcommand("eval", "Evaluate a formula at exponent-level points");
    ev->add_option("formula", formula_text, "C_theta(...) formula")->required();
    ev->add_option("x", x_text, "exponent of the point x")->required();
    ev->add_option("y", y_text, "exponent of the point y")->required();
    ev->add_option("theta", theta_text, "irrational theta")->required();
    ev->add_flag("--json", json_ev, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cf->parsed()) return cmd_cf(theta_text, json_cf);
        if (morita->parsed()) return cmd_morita(theta_text, theta2_text, bound, json_morita);
        if (tv->parsed()) return cmd_torus_verify(exp_range, json_tv);
        if (xv->parsed()) return cmd_transform_verify(theta_text, theta2_text, exp_range, json_xv);
        if (rw->parsed()) return cmd_rewrite(ma, mb, mc, md, json_rw);
        if (ev->parsed()) return cmd_eval(formula_text, x_text, y_text, theta_text, json_ev);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
