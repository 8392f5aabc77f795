#include "apolar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>

#include "apolar/errors.hpp"
#include "apolar/parser.hpp"
#include "apolar/system_file.hpp"
#include "apolar/theorems.hpp"

namespace apolar {

namespace {

using nlohmann::json;

json point_json(const Point& x) {
    json coords = json::array();
    for (const Rational& c : x) coords.push_back(format_rational(c));
    return coords;
}

json system_json(const PolynomialSystem& system, const std::string& path) {
    json j;
    j["system"] = path;
    j["vars"] = system.vars;
    json polys = json::array();
    for (const Polynomial& g : system.polys) polys.push_back(format_poly(g, system.vars));
    j["polynomials"] = polys;
    return j;
}

std::string dual_string(const DualPolynomial& p) {
    return format_poly(p, dual_var_names(p.nvars()));
}

std::string monomial_string(const MultiIndex& alpha, const std::vector<std::string>& vars) {
    return format_poly(Polynomial::monomial(alpha, Rational(1)), vars);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct CommonArgs {
    std::string system_path;
    std::string point_text;
    std::string poly_text;
    std::string roots_path;
    std::string order_name = "lex";
    bool json_output = false;
};

Point parse_point_arg(const std::string& text, std::size_t nvars) {
    Point x = parse_point(text);
    if (x.size() != nvars)
        throw ArityMismatch("point '" + text + "' has " + std::to_string(x.size()) +
                            " coordinates, system has " + std::to_string(nvars) + " variables");
    return x;
}

int cmd_dual(const CommonArgs& args, std::ostream& out) {
    PolynomialSystem system = load_system(args.system_path);
    Point x = parse_point_arg(args.point_text, system.nvars());
    DualSpaceBasis dual = dual_space(system.polys, x);

    if (args.json_output) {
        json j;
        j["command"] = "dual";
        j["inputs"] = system_json(system, args.system_path);
        j["inputs"]["point"] = point_json(x);
        j["multiplicity"] = dual.basis.size();
        j["truncation_degree"] = dual.truncation_degree;
        json basis = json::array();
        for (const DualPolynomial& p : dual.basis) basis.push_back(dual_string(p));
        j["basis"] = basis;
        emit(out, j);
        return 0;
    }
    out << "point: " << format_point(x) << "\n";
    out << "multiplicity: " << dual.basis.size() << "\n";
    out << "truncation degree: " << dual.truncation_degree << "\n";
    out << "basis:\n";
    for (const DualPolynomial& p : dual.basis) out << "  " << dual_string(p) << "\n";
    return 0;
}

int cmd_mult(const CommonArgs& args, std::ostream& out) {
    PolynomialSystem system = load_system(args.system_path);
    Point x = parse_point_arg(args.point_text, system.nvars());
    std::size_t mult = multiplicity(system.polys, x);

    if (args.json_output) {
        json j;
        j["command"] = "mult";
        j["inputs"] = system_json(system, args.system_path);
        j["inputs"]["point"] = point_json(x);
        j["multiplicity"] = mult;
        emit(out, j);
        return 0;
    }
    out << mult << "\n";
    return 0;
}

int cmd_bezout(const CommonArgs& args, std::ostream& out) {
    PolynomialSystem system = load_system(args.system_path);
    std::optional<std::vector<Point>> supplied;
    if (!args.roots_path.empty()) supplied = load_roots(args.roots_path, system.nvars());
    BezoutReport report = bezout_report(system, supplied);

    if (args.json_output) {
        json j;
        j["command"] = "bezout";
        j["inputs"] = system_json(system, args.system_path);
        if (supplied) j["inputs"]["roots"] = args.roots_path;
        j["bezout_number"] = report.bezout_number;
        j["verdict"] = verdict_name(report.verdict);
        if (report.verdict != BezoutVerdict::infinite) {
            j["total"] = report.total;
            j["quotient_dimension"] = *report.quotient_dim;
            j["complete"] = report.completeness;
            json roots = json::array();
            for (const auto& [x, m] : report.roots)
                roots.push_back({{"point", point_json(x)}, {"multiplicity", m}});
            j["roots"] = roots;
        }
        if (report.infinity_checked)
            j["infinity_evidence"] =
                report.infinity_factor ? format_poly(*report.infinity_factor, system.vars) : "NONE";
        emit(out, j);
        return 0;
    }
    out << "bezout number: " << report.bezout_number << "\n";
    out << "verdict: " << verdict_name(report.verdict) << "\n";
    if (report.verdict != BezoutVerdict::infinite) {
        out << "total: " << report.total << "\n";
        out << "quotient dimension: " << *report.quotient_dim << "\n";
        out << "complete: " << (report.completeness ? "yes" : "no") << "\n";
        out << "roots:\n";
        for (const auto& [x, m] : report.roots)
            out << "  " << format_point(x) << " multiplicity " << m << "\n";
    }
    if (report.infinity_checked)
        out << "infinity factor: "
            << (report.infinity_factor ? format_poly(*report.infinity_factor, system.vars) : "none")
            << "\n";
    return 0;
}

int cmd_member(const CommonArgs& args, std::ostream& out) {
    PolynomialSystem system = load_system(args.system_path);
    Polynomial f = parse_poly(args.poly_text, system.vars);
    MembershipVerdict verdict = dual_member(f, system);

    if (args.json_output) {
        json j;
        j["command"] = "member";
        j["inputs"] = system_json(system, args.system_path);
        j["inputs"]["poly"] = format_poly(f, system.vars);
        j["member"] = verdict.member;
        j["oracle_agrees"] = verdict.oracle_agrees;
        if (!verdict.member) {
            j["witness"] = {{"point", point_json(verdict.witness->first)},
                            {"functional", dual_string(verdict.witness->second)}};
        }
        emit(out, j);
        return 0;
    }
    out << "member: " << (verdict.member ? "true" : "false") << "\n";
    if (!verdict.member) {
        out << "witness point: " << format_point(verdict.witness->first) << "\n";
        out << "witness functional: " << dual_string(verdict.witness->second) << "\n";
    }
    out << "oracle agrees: " << (verdict.oracle_agrees ? "yes" : "no") << "\n";
    return 0;
}

int cmd_power(const CommonArgs& args, std::ostream& out) {
    PolynomialSystem system = load_system(args.system_path);
    Polynomial f = parse_poly(args.poly_text, system.vars);
    if (f.is_zero()) throw ZeroPolynomial("power search needs a nonzero polynomial");
    PowerCertificate cert = nullstellensatz_power(f, system);

    if (args.json_output) {
        json j;
        j["command"] = "power";
        j["inputs"] = system_json(system, args.system_path);
        j["inputs"]["poly"] = format_poly(f, system.vars);
        j["m"] = cert.m;
        j["bound"] = cert.bound;
        emit(out, j);
        return 0;
    }
    out << "m: " << cert.m << "\n";
    out << "bound: " << cert.bound << "\n";
    return 0;
}

int cmd_gb(const CommonArgs& args, std::ostream& out) {
    PolynomialSystem system = load_system(args.system_path);
    MonomialOrder order = args.order_name == "grevlex" ? MonomialOrder::grevlex(system.nvars())
                                                       : MonomialOrder::lex(system.nvars());
    GroebnerBasis gb = buchberger(system.polys, order);
    auto standards = standard_monomials(gb);

    if (args.json_output) {
        json j;
        j["command"] = "gb";
        j["inputs"] = system_json(system, args.system_path);
        j["inputs"]["order"] = order.name();
        json basis = json::array();
        for (const Polynomial& g : gb.generators) basis.push_back(format_poly(g, system.vars));
        j["basis"] = basis;
        if (standards) {
            json mons = json::array();
            for (const MultiIndex& alpha : *standards)
                mons.push_back(monomial_string(alpha, system.vars));
            j["standard_monomials"] = mons;
            j["quotient_dimension"] = standards->size();
        } else {
            j["quotient_dimension"] = "INFINITE";
        }
        emit(out, j);
        return 0;
    }
    out << "order: " << order.name() << "\n";
    out << "basis:\n";
    for (const Polynomial& g : gb.generators) out << "  " << format_poly(g, system.vars) << "\n";
    if (standards) {
        out << "standard monomials:";
        for (const MultiIndex& alpha : *standards) out << " " << monomial_string(alpha, system.vars);
        out << "\n";
        out << "quotient dimension: " << standards->size() << "\n";
    } else {
        out << "quotient dimension: INFINITE\n";
    }
    return 0;
}

int cmd_solve(const CommonArgs& args, std::ostream& out) {
    PolynomialSystem system = load_system(args.system_path);
    SolveResult result = solve_rational(system.polys);

    if (args.json_output) {
        json j;
        j["command"] = "solve";
        j["inputs"] = system_json(system, args.system_path);
        json points = json::array();
        for (const Point& x : result.points) points.push_back(point_json(x));
        j["points"] = points;
        j["complete"] = result.complete;
        emit(out, j);
        return 0;
    }
    if (result.points.empty()) out << "no rational solutions\n";
    for (const Point& x : result.points) out << format_point(x) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact dual spaces, intersection multiplicities, and ideal membership"};
    app.name("apolar");
    app.require_subcommand(1);

    CommonArgs common;
    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", common.json_output, "machine-readable report");
    };
    auto add_system = [&](CLI::App* sub) {
        sub->add_option("--system", common.system_path, "system file")->required();
    };

    CLI::App* dual = app.add_subcommand("dual", "dual-space basis and multiplicity at a point");
    add_system(dual);
    dual->add_option("--point", common.point_text, "comma-separated coordinates")->required();
    add_json(dual);

    CLI::App* mult = app.add_subcommand("mult", "intersection multiplicity at a point");
    add_system(mult);
    mult->add_option("--point", common.point_text, "comma-separated coordinates")->required();
    add_json(mult);

    CLI::App* bezout = app.add_subcommand("bezout", "multiplicity total against the degree product");
    add_system(bezout);
    bezout->add_option("--roots", common.roots_path, "roots file (computed when omitted)");
    add_json(bezout);

    CLI::App* member = app.add_subcommand("member", "differential ideal-membership test");
    add_system(member);
    member->add_option("--poly", common.poly_text, "candidate polynomial")->required();
    add_json(member);

    CLI::App* power = app.add_subcommand("power", "least power of the polynomial in the ideal");
    add_system(power);
    power->add_option("--poly", common.poly_text, "vanishing polynomial")->required();
    add_json(power);

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis and standard monomials");
    add_system(gb);
    gb->add_option("--order", common.order_name, "monomial order")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    add_json(gb);

    CLI::App* solve = app.add_subcommand("solve", "all rational common zeros");
    add_system(solve);
    add_json(solve);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(dual)) return cmd_dual(common, out);
        if (app.got_subcommand(mult)) return cmd_mult(common, out);
        if (app.got_subcommand(bezout)) return cmd_bezout(common, out);
        if (app.got_subcommand(member)) return cmd_member(common, out);
        if (app.got_subcommand(power)) return cmd_power(common, out);
        if (app.got_subcommand(gb)) return cmd_gb(common, out);
        if (app.got_subcommand(solve)) return cmd_solve(common, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace apolar
