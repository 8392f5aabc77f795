#include "apolar/theorems.hpp"

#include <algorithm>

#include "apolar/errors.hpp"
#include "apolar/parser.hpp"

namespace apolar {

PolynomialSystem PolynomialSystem::make(std::vector<std::string> vars,
                                        std::vector<Polynomial> polys) {
    validate_var_names(vars);
    if (polys.empty()) throw ArityMismatch("a system needs at least one polynomial");
    PolynomialSystem system;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].is_zero())
            throw ZeroPolynomial("polynomial " + std::to_string(i + 1) + " of the system");
        if (polys[i].nvars() != vars.size())
            throw ArityMismatch("polynomial " + std::to_string(i + 1) + " has " +
                                std::to_string(polys[i].nvars()) + " variables, system declares " +
                                std::to_string(vars.size()));
        system.degrees.push_back(polys[i].degree());
    }
    system.vars = std::move(vars);
    system.polys = std::move(polys);
    return system;
}

bool verify_common_zero(const PolynomialSystem& system, const Point& x) {
    if (x.size() != system.nvars())
        throw ArityMismatch("point has " + std::to_string(x.size()) + " coordinates, system has " +
                            std::to_string(system.nvars()) + " variables");
    for (const Polynomial& g : system.polys)
        if (!g.evaluate(x).is_zero()) return false;
    return true;
}

std::string verdict_name(BezoutVerdict v) {
    switch (v) {
        case BezoutVerdict::match: return "MATCH";
        case BezoutVerdict::deficit: return "DEFICIT";
        case BezoutVerdict::infinite: return "INFINITE";
    }
    return "";
}

BezoutReport bezout_report(const PolynomialSystem& system,
                           const std::optional<std::vector<Point>>& supplied_roots) {
    BezoutReport report;
    for (int d : system.degrees) report.bezout_number *= d;

    GroebnerBasis gb = buchberger(system.polys, MonomialOrder::lex(system.nvars()));
    auto qdim = quotient_dimension(gb);
    if (!qdim) {
        report.verdict = BezoutVerdict::infinite;
        return report;
    }
    report.quotient_dim = *qdim;

    std::vector<Point> roots;
    if (supplied_roots) {
        roots = *supplied_roots;
        for (const Point& x : roots)
            if (!verify_common_zero(system, x)) throw InvalidRoot(format_point(x));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    } else {
        roots = solve_rational(system.polys).points;
    }

    for (const Point& x : roots) {
        std::size_t mult = multiplicity(system.polys, x);
        report.total += static_cast<long long>(mult);
        report.roots.push_back({x, mult});
    }
    report.completeness = report.total == static_cast<long long>(*qdim);
    report.verdict =
        report.total == report.bezout_number ? BezoutVerdict::match : BezoutVerdict::deficit;

    if (report.verdict == BezoutVerdict::deficit && system.nvars() == 2 &&
        system.polys.size() == 2) {
        InfinityCheck check = infinity_check_2d(system);
        report.infinity_checked = true;
        report.infinity_factor = check.factor;
    }
    return report;
}

namespace {

// Binary form restricted to y = 1, as a univariate polynomial.
Polynomial dehomogenize(const Polynomial& form) {
    Polynomial u(1);
    for (const auto& [alpha, c] : form.terms()) u.add_term(MultiIndex{alpha[0]}, c);
    return u;
}

// Degree-d binary form with u(x, 1) = the given univariate u.
Polynomial rehomogenize(const Polynomial& u, int d) {
    Polynomial form(2);
    for (const auto& [alpha, c] : u.terms()) form.add_term(MultiIndex{alpha[0], d - alpha[0]}, c);
    return form;
}

}  // namespace

InfinityCheck infinity_check_2d(const PolynomialSystem& system) {
    if (system.nvars() != 2 || system.polys.size() != 2)
        throw WrongArity("infinity check needs exactly two polynomials in two variables");

    Polynomial l1 = system.polys[0].leading_form();
    Polynomial l2 = system.polys[1].leading_form();
    Polynomial g = univariate_gcd(dehomogenize(l1), dehomogenize(l2));

    // Shared zero at (0:1): both forms divisible by y.
    MultiIndex pure1{system.degrees[0], 0}, pure2{system.degrees[1], 0};
    bool both_miss_pure_x = l1.coefficient(pure1).is_zero() && l2.coefficient(pure2).is_zero();

    InfinityCheck check;
    if (g.degree() >= 1 || both_miss_pure_x) {
        check.present = true;
        Polynomial factor = rehomogenize(g, g.is_zero() ? 0 : g.degree());
        if (both_miss_pure_x) factor = factor * Polynomial::variable(2, 1);
        check.factor = factor;
    }
    return check;
}

MembershipVerdict dual_member(const Polynomial& f, const PolynomialSystem& system) {
    if (f.nvars() != system.nvars())
        throw ArityMismatch("membership candidate has " + std::to_string(f.nvars()) +
                            " variables, system has " + std::to_string(system.nvars()));

    MembershipVerdict verdict;
    verdict.member = true;
    for (const Point& x : solve_rational(system.polys).points) {
        DualSpaceBasis dual = dual_space(system.polys, x);
        for (const DualPolynomial& p : dual.basis) {
            if (!apply_functional(p, f, x).is_zero()) {
                verdict.member = false;
                verdict.witness = {x, p};
                break;
            }
        }
        if (!verdict.member) break;
    }

    GroebnerBasis gb = buchberger(system.polys, MonomialOrder::lex(system.nvars()));
    bool oracle_member = normal_form(f, gb.generators, gb.order).is_zero();
    verdict.oracle_agrees = oracle_member == verdict.member;
    return verdict;
}

PowerCertificate nullstellensatz_power(const Polynomial& f, const PolynomialSystem& system) {
    if (f.nvars() != system.nvars())
        throw ArityMismatch("power candidate has " + std::to_string(f.nvars()) +
                            " variables, system has " + std::to_string(system.nvars()));

    for (const Point& x : solve_rational(system.polys).points)
        if (!f.evaluate(x).is_zero()) throw NotVanishing(format_point(x));

    PowerCertificate cert;
    for (int d : system.degrees) cert.bound *= d;
    cert.bound += 1;

    GroebnerBasis gb = buchberger(system.polys, MonomialOrder::lex(system.nvars()));
    Polynomial power = Polynomial::constant(f.nvars(), Rational(1));
    for (long long m = 1; m <= cert.bound; ++m) {
        power = power * f;
        if (normal_form(power, gb.generators, gb.order).is_zero()) {
            cert.m = static_cast<int>(m);
            return cert;
        }
    }
    throw BoundViolation("no power of the polynomial up to " + std::to_string(cert.bound) +
                         " lies in the ideal");
}

}  // namespace apolar
