#include "apolar/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

struct Term {
    MultiIndex mono;
    Rational coef;
};

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
    auto it = f.terms().begin();
    Term best{it->first, it->second};
    for (++it; it != f.terms().end(); ++it)
        if (order.less(best.mono, it->first)) best = Term{it->first, it->second};
    return best;
}

Polynomial monic(const Polynomial& f, const MonomialOrder& order) {
    return f * (Rational(1) / leading_term(f, order).coef);
}

// f - (t / LT(g)) * g for a term t of f divisible by LM(g).
Polynomial reduce_once(const Polynomial& f, const Term& t, const Polynomial& g,
                       const MonomialOrder& order) {
    Term lt = leading_term(g, order);
    Polynomial quotient = Polynomial::monomial(t.mono.minus(lt.mono), t.coef / lt.coef);
    return f - quotient * g;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    MonomialOrder o{Kind::lex, {}};
    for (std::size_t i = 0; i < nvars; ++i) o.priority.push_back(i);
    return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
    MonomialOrder o{Kind::grevlex, {}};
    for (std::size_t i = 0; i < nvars; ++i) o.priority.push_back(i);
    return o;
}

bool MonomialOrder::less(const MultiIndex& a, const MultiIndex& b) const {
    if (kind == Kind::lex) {
        for (std::size_t v : priority) {
            if (a[v] != b[v]) return a[v] < b[v];
        }
        return false;
    }
    int oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    // Ties: the monomial with the larger exponent on the least
    // significant differing variable is the smaller one.
    for (std::size_t i = priority.size(); i-- > 0;) {
        std::size_t v = priority[i];
        if (a[v] != b[v]) return a[v] > b[v];
    }
    return false;
}

MultiIndex leading_monomial(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw ZeroPolynomial("leading monomial of 0");
    return leading_term(f, order).mono;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order) {
    Polynomial rest = f;
    Polynomial remainder(f.nvars());
    while (!rest.is_zero()) {
        Term t = leading_term(rest, order);
        bool reduced = false;
        for (const Polynomial& g : divisors) {
            if (g.is_zero()) continue;
            if (leading_term(g, order).mono.divides(t.mono)) {
                rest = reduce_once(rest, t, g, order);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(t.mono, t.coef);
            rest.add_term(t.mono, -t.coef);
        }
    }
    return remainder;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(monic(g, order));
    if (basis.empty()) throw ZeroPolynomial("Groebner basis of the zero ideal");

    // Pending (i, j) pairs, selected by minimal lcm of leading monomials.
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pairs.insert({i, j});
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    while (!pairs.empty()) {
        auto chosen = pairs.begin();
        MultiIndex chosen_lcm =
            leading_monomial(basis[chosen->first], order).lcm(leading_monomial(basis[chosen->second], order));
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            MultiIndex l = leading_monomial(basis[it->first], order).lcm(leading_monomial(basis[it->second], order));
            if (order.less(l, chosen_lcm)) {
                chosen = it;
                chosen_lcm = l;
            }
        }
        auto [i, j] = *chosen;
        pairs.erase(chosen);

        MultiIndex li = leading_monomial(basis[i], order);
        MultiIndex lj = leading_monomial(basis[j], order);
        if (chosen_lcm == li.plus(lj)) continue;  // coprime leading terms

        Polynomial s = Polynomial::monomial(chosen_lcm.minus(li), Rational(1)) * basis[i] -
                       Polynomial::monomial(chosen_lcm.minus(lj), Rational(1)) * basis[j];
        Polynomial reduced = normal_form(s, basis, order);
        if (!reduced.is_zero()) {
            basis.push_back(monic(reduced, order));
            add_pairs_for(basis.size() - 1);
        }
    }

    // Minimalize: drop generators whose leading monomial another one divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        MultiIndex li = leading_monomial(basis[i], order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            MultiIndex lj = leading_monomial(basis[j], order);
            if (lj.divides(li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Interreduce tails and normalize.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(monic(normal_form(minimal[i], others, order), order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(leading_monomial(b, order), leading_monomial(a, order));
    });
    return GroebnerBasis{order, std::move(reduced)};
}

std::optional<std::vector<MultiIndex>> standard_monomials(const GroebnerBasis& gb) {
    std::size_t n = gb.generators[0].nvars();
    std::vector<MultiIndex> leading;
    for (const Polynomial& g : gb.generators) leading.push_back(leading_monomial(g, gb.order));

    // Finite quotient iff every variable has a pure-power leading
    // monomial; the unit ideal qualifies through the power 0.
    std::vector<int> caps(n, -1);
    for (const MultiIndex& lm : leading) {
        std::size_t support = 0, var = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (lm[v] > 0) {
                ++support;
                var = v;
            }
        if (support == 0)
            for (std::size_t v = 0; v < n; ++v) caps[v] = 0;
        else if (support == 1 && (caps[var] < 0 || lm[var] < caps[var]))
            caps[var] = lm[var];
    }
    for (int c : caps)
        if (c < 0) return std::nullopt;

    std::vector<MultiIndex> standard;
    MultiIndex current(n);
    auto walk = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            for (const MultiIndex& lm : leading)
                if (lm.divides(current)) return;
            standard.push_back(current);
            return;
        }
        for (int e = 0; e < caps[pos]; ++e) {
            current[pos] = e;
            self(self, pos + 1);
        }
        current[pos] = 0;
    };
    walk(walk, 0);
    std::sort(standard.begin(), standard.end(),
              [](const MultiIndex& a, const MultiIndex& b) { return ReadingOrder{}(a, b); });
    return standard;
}

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb) {
    auto monos = standard_monomials(gb);
    if (!monos) return std::nullopt;
    return monos->size();
}

}  // namespace apolar
