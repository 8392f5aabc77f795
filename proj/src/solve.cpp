#include "apolar/solve.hpp"

#include <algorithm>
#include <string>

#include "apolar/errors.hpp"
#include "apolar/parser.hpp"

namespace apolar {

namespace {

int univariate_degree(const Polynomial& u) { return u.is_zero() ? -1 : u.degree(); }

Rational coefficient_of(const Polynomial& u, int e) {
    MultiIndex alpha{e};
    return u.coefficient(alpha);
}

// Exact quotient of u by (t - r); the remainder must be zero.
Polynomial deflate(const Polynomial& u, const Rational& r) {
    int d = univariate_degree(u);
    std::vector<Rational> quotient(d, Rational(0));
    Rational carry(0);
    for (int k = d; k >= 1; --k) {
        carry = coefficient_of(u, k) + r * carry;
        quotient[k - 1] = carry;
    }
    Polynomial q(1);
    for (int k = 0; k < d; ++k) q.add_term(MultiIndex{k}, quotient[k]);
    return q;
}

// Content-free integer form with positive leading coefficient.
Polynomial primitive_integer_form(const Polynomial& u) {
    Integer denom_lcm(1);
    for (const auto& [alpha, c] : u.terms())
        denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(c));
    Integer content(0);
    for (const auto& [alpha, c] : u.terms())
        content = boost::multiprecision::gcd(content, numerator(c) * (denom_lcm / denominator(c)));
    Rational scale = make_rational(denom_lcm, content);
    Polynomial p = u * scale;
    if (coefficient_of(p, univariate_degree(p)) < 0) p = -p;
    return p;
}

std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> divs;
    for (Integer i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        divs.push_back(i);
        if (i * i != n) divs.push_back(n / i);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool only_last_variable(const Polynomial& g) {
    for (const auto& [alpha, c] : g.terms())
        for (std::size_t v = 0; v + 1 < alpha.size(); ++v)
            if (alpha[v] > 0) return false;
    return true;
}

Polynomial as_univariate(const Polynomial& g) {
    Polynomial u(1);
    for (const auto& [alpha, c] : g.terms()) u.add_term(MultiIndex{alpha[alpha.size() - 1]}, c);
    return u;
}

}  // namespace

UnivariateRoots univariate_rational_roots(const Polynomial& input) {
    if (input.nvars() != 1) throw ArityMismatch("rational root search needs a univariate polynomial");
    if (input.is_zero()) throw ZeroPolynomial("rational roots of 0");

    UnivariateRoots result;
    Polynomial u = input;

    // t^k factor: root 0 with multiplicity k.
    int low = u.degree();
    for (const auto& [alpha, c] : u.terms())
        if (alpha[0] < low) low = alpha[0];
    if (low > 0) {
        result.roots.push_back({Rational(0), low});
        Polynomial stripped(1);
        for (const auto& [alpha, c] : u.terms()) stripped.add_term(MultiIndex{alpha[0] - low}, c);
        u = stripped;
    }
    if (univariate_degree(u) == 0) return result;

    u = primitive_integer_form(u);
    Integer a0 = numerator(coefficient_of(u, 0));
    Integer ad = numerator(coefficient_of(u, univariate_degree(u)));

    for (const Integer& p : positive_divisors(a0)) {
        for (const Integer& q : positive_divisors(ad)) {
            if (boost::multiprecision::gcd(p, q) != 1) continue;
            for (int sign : {+1, -1}) {
                Rational candidate = make_rational(sign * p, q);
                int mult = 0;
                while (univariate_degree(u) >= 1 && u.evaluate({candidate}).is_zero()) {
                    u = deflate(u, candidate);
                    ++mult;
                }
                if (mult) result.roots.push_back({candidate, mult});
            }
        }
    }
    std::sort(result.roots.begin(), result.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (univariate_degree(u) >= 1) result.remaining_factor = primitive_integer_form(u);
    return result;
}

Polynomial univariate_gcd(Polynomial a, Polynomial b) {
    if (a.nvars() != 1 || b.nvars() != 1) throw ArityMismatch("univariate gcd on multivariate input");
    MonomialOrder order = MonomialOrder::lex(1);
    while (!b.is_zero()) {
        Polynomial r = normal_form(a, {b}, order);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / coefficient_of(a, a.degree()));
}

namespace {

struct SolverState {
    std::vector<std::string> unresolved;
};

std::vector<Point> solve_recursive(const std::vector<Polynomial>& gens, std::size_t nvars,
                                   SolverState& state) {
    GroebnerBasis gb = buchberger(gens, MonomialOrder::lex(nvars));
    if (gb.generators.size() == 1 && gb.generators[0].degree() == 0) return {};  // unit ideal

    auto standards = standard_monomials(gb);
    if (!standards) {
        std::string missing = "no finite standard monomial basis";
        // Name one variable with no pure-power leading monomial.
        for (std::size_t v = 0; v < nvars; ++v) {
            bool found = false;
            for (const Polynomial& g : gb.generators) {
                MultiIndex lm = leading_monomial(g, gb.order);
                bool pure = lm[v] > 0 || lm.order() == 0;
                for (std::size_t w = 0; w < nvars && pure; ++w)
                    if (w != v && lm[w] > 0) pure = false;
                if (pure) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                missing = "no leading monomial is a pure power of variable " + std::to_string(v + 1);
                break;
            }
        }
        throw NotZeroDimensional(missing);
    }

    if (nvars == 1) {
        UnivariateRoots roots = univariate_rational_roots(gb.generators[0]);
        if (roots.remaining_factor)
            state.unresolved.push_back(format_poly(*roots.remaining_factor, {"t"}));
        std::vector<Point> points;
        for (const auto& [r, mult] : roots.roots) points.push_back({r});
        return points;
    }

    // Lex elimination: the generator with a pure power of the last
    // variable as leading monomial is itself univariate in it.
    const Polynomial* eliminant = nullptr;
    for (const Polynomial& g : gb.generators)
        if (only_last_variable(g)) {
            eliminant = &g;
            break;
        }
    if (!eliminant) throw NotZeroDimensional("no univariate eliminant in the last variable");

    UnivariateRoots roots = univariate_rational_roots(as_univariate(*eliminant));
    if (roots.remaining_factor)
        state.unresolved.push_back(format_poly(*roots.remaining_factor, {"t"}));

    std::vector<Point> points;
    for (const auto& [r, mult] : roots.roots) {
        std::vector<Polynomial> reduced_system;
        for (const Polynomial& g : gb.generators) {
            Polynomial sub = g.substitute(nvars - 1, r);
            if (!sub.is_zero()) reduced_system.push_back(sub);
        }
        if (reduced_system.empty()) throw NotZeroDimensional("fiber is the whole subspace");
        for (Point p : solve_recursive(reduced_system, nvars - 1, state)) {
            p.push_back(r);
            points.push_back(std::move(p));
        }
    }
    return points;
}

}  // namespace

SolveResult solve_rational(const std::vector<Polynomial>& gens, bool require_all) {
    if (gens.empty()) throw ArityMismatch("empty system");
    std::size_t n = gens[0].nvars();
    for (const Polynomial& g : gens)
        if (g.nvars() != n) throw ArityMismatch("generators have mixed variable counts");
    std::vector<Polynomial> nonzero;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) throw ZeroPolynomial("solving the zero system");

    SolverState state;
    std::vector<Point> points = solve_recursive(nonzero, n, state);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    if (!state.unresolved.empty() && require_all) {
        std::string details;
        for (std::size_t i = 0; i < state.unresolved.size(); ++i)
            details += (i ? "; " : "") + ("unresolved factor " + state.unresolved[i]);
        throw IrrationalRoots(details);
    }
    return SolveResult{std::move(points), state.unresolved.empty(), std::move(state.unresolved)};
}

}  // namespace apolar
