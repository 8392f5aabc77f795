#include "apolar/dual_space.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "apolar/errors.hpp"
#include "apolar/parser.hpp"

namespace apolar {

namespace {

void require_system(const std::vector<Polynomial>& gens, const Point& x) {
    if (gens.empty()) throw ArityMismatch("empty generator list");
    std::size_t n = gens[0].nvars();
    for (const Polynomial& g : gens)
        if (g.nvars() != n) throw ArityMismatch("generators have mixed variable counts");
    if (x.size() != n)
        throw ArityMismatch("point of length " + std::to_string(x.size()) + " against " +
                            std::to_string(n) + " variables");
}

// All derivative values (D^γ g)(x) for |γ| <= d, keyed by γ.
std::map<MultiIndex, Rational, GrlexDescending> derivative_table(const Polynomial& g,
                                                                 const Point& x, int d) {
    std::map<MultiIndex, Rational, GrlexDescending> table;
    for (const MultiIndex& gamma : monomials_up_to(g.nvars(), d))
        table.emplace(gamma, g.derivative(gamma).evaluate(x));
    return table;
}

}  // namespace

Rational apply_functional(const DualPolynomial& p, const Polynomial& f, const Point& x) {
    if (p.nvars() != f.nvars())
        throw ArityMismatch("functional in " + std::to_string(p.nvars()) +
                            " dual variables applied to a polynomial in " +
                            std::to_string(f.nvars()) + " variables");
    Rational sum(0);
    for (const auto& [beta, c] : p.terms()) sum += c * f.derivative(beta).evaluate(x);
    return sum;
}

RationalMatrix paper_condition_rows(const std::vector<Polynomial>& gens, const Point& x, int d) {
    require_system(gens, x);
    std::size_t n = gens[0].nvars();
    std::vector<MultiIndex> cols = monomials_up_to(n, d);
    std::vector<MultiIndex> alphas = cols;  // same index set, |α| <= d

    RationalMatrix m(gens.size() * alphas.size(), cols.size());
    std::size_t row = 0;
    for (const Polynomial& g : gens) {
        auto derivs = derivative_table(g, x, d);
        for (const MultiIndex& alpha : alphas) {
            for (std::size_t j = 0; j < cols.size(); ++j) {
                const MultiIndex& beta = cols[j];
                if (!alpha.divides(beta)) continue;  // D^α λ^β = 0
                Rational falling(1);
                for (std::size_t v = 0; v < n; ++v)
                    for (int k = 0; k < alpha[v]; ++k) falling *= Rational(beta[v] - k);
                m.at(row, j) = falling * derivs.at(beta.minus(alpha));
            }
            ++row;
        }
    }
    return m;
}

RationalMatrix multiple_condition_rows(const std::vector<Polynomial>& gens, const Point& x, int d) {
    require_system(gens, x);
    std::size_t n = gens[0].nvars();
    std::vector<MultiIndex> cols = monomials_up_to(n, d);
    std::vector<MultiIndex> shifts = cols;

    // (X_j - x_j) factors, multiplied up per shift exponent.
    std::vector<Polynomial> linear;
    for (std::size_t j = 0; j < n; ++j)
        linear.push_back(Polynomial::variable(n, j) - Polynomial::constant(n, x[j]));

    RationalMatrix m(gens.size() * shifts.size(), cols.size());
    std::size_t row = 0;
    for (const Polynomial& g : gens) {
        for (const MultiIndex& shift : shifts) {
            Polynomial multiple = g;
            for (std::size_t j = 0; j < n; ++j)
                for (int k = 0; k < shift[j]; ++k) multiple = multiple * linear[j];
            auto derivs = derivative_table(multiple, x, d);
            for (std::size_t j = 0; j < cols.size(); ++j) m.at(row, j) = derivs.at(cols[j]);
            ++row;
        }
    }
    return m;
}

std::vector<DualPolynomial> truncated_dual(const std::vector<Polynomial>& gens, const Point& x,
                                           int d, ConditionMode mode) {
    RationalMatrix m = mode == ConditionMode::paper ? paper_condition_rows(gens, x, d)
                                                    : multiple_condition_rows(gens, x, d);
    std::vector<MultiIndex> cols = monomials_up_to(gens[0].nvars(), d);
    std::vector<DualPolynomial> basis;
    for (const std::vector<Rational>& v : null_space(m)) {
        DualPolynomial p(gens[0].nvars());
        for (std::size_t j = 0; j < cols.size(); ++j) p.add_term(cols[j], v[j]);
        basis.push_back(std::move(p));
    }
    // Lowest monomial first. Each canonical vector is monic on its free
    // (graded-lex-minimal) monomial, so the keys are distinct.
    std::sort(basis.begin(), basis.end(), [](const DualPolynomial& a, const DualPolynomial& b) {
        return ReadingOrder{}(std::prev(a.terms().end())->first, std::prev(b.terms().end())->first);
    });
    return basis;
}

DualSpaceBasis dual_space(const std::vector<Polynomial>& gens, const Point& x) {
    require_system(gens, x);
    long long cap = 1;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) throw ZeroPolynomial("dual space of a system containing 0");
        cap *= g.degree();
    }
    cap += 1;

    // Work at the origin: localize the generators, then truncate there.
    std::vector<Polynomial> local;
    local.reserve(gens.size());
    for (const Polynomial& g : gens) local.push_back(g.shifted(x));
    Point origin(x.size(), Rational(0));

    std::vector<DualPolynomial> prev = truncated_dual(local, origin, 0);
    for (int d = 1; d <= cap; ++d) {
        std::vector<DualPolynomial> cur = truncated_dual(local, origin, d);
        if (cur.size() == prev.size())
            return DualSpaceBasis{x, std::move(prev), d - 1};
        prev = std::move(cur);
    }
    throw NonIsolatedPoint(format_point(x));
}

std::size_t multiplicity(const std::vector<Polynomial>& gens, const Point& x) {
    return dual_space(gens, x).basis.size();
}

bool is_d_invariant(const std::vector<DualPolynomial>& basis) {
    if (basis.empty()) return true;
    std::size_t n = basis[0].nvars();
    int maxdeg = 0;
    for (const DualPolynomial& p : basis)
        if (!p.is_zero() && p.degree() > maxdeg) maxdeg = p.degree();
    std::vector<MultiIndex> cols = monomials_up_to(n, maxdeg);

    auto coefficient_row = [&](const DualPolynomial& p) {
        std::vector<Rational> row(cols.size(), Rational(0));
        for (std::size_t j = 0; j < cols.size(); ++j) row[j] = p.coefficient(cols[j]);
        return row;
    };

    std::vector<std::vector<Rational>> span_rows;
    for (const DualPolynomial& p : basis) span_rows.push_back(coefficient_row(p));
    RationalMatrix span = RationalMatrix::from_rows(span_rows);

    for (const DualPolynomial& p : basis) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Rational>> extended = span_rows;
            extended.push_back(coefficient_row(p.derivative(j)));
            if (!row_space_equal(span, RationalMatrix::from_rows(extended))) return false;
        }
    }
    return true;
}

}  // namespace apolar
