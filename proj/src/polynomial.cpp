#include "apolar/polynomial.hpp"

#include <algorithm>
#include <string>

#include "apolar/errors.hpp"

namespace apolar {

std::vector<MultiIndex> monomials_up_to(std::size_t nvars, int degree) {
    std::vector<MultiIndex> out;
    MultiIndex current(nvars);
    // Enumerate recursively, then sort into the canonical column order.
    auto walk = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos == nvars) {
            out.push_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        current[pos] = 0;
    };
    walk(walk, 0, degree);
    std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
        return GrlexDescending{}(a, b);
    });
    return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial f(nvars);
    f.add_term(MultiIndex(nvars), c);
    return f;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t j) {
    MultiIndex alpha(nvars);
    alpha[j] = 1;
    return monomial(alpha, Rational(1));
}

Polynomial Polynomial::monomial(MultiIndex alpha, const Rational& c) {
    Polynomial f(alpha.size());
    f.add_term(alpha, c);
    return f;
}

Rational Polynomial::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_same_arity(const Polynomial& o, const char* op) const {
    if (nvars_ != o.nvars_)
        throw ArityMismatch(std::string(op) + " on polynomials in " + std::to_string(nvars_) +
                            " and " + std::to_string(o.nvars_) + " variables");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_arity(o, "add");
    Polynomial r(*this);
    for (const auto& [alpha, c] : o.terms_) r.add_term(alpha, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_arity(o, "sub");
    Polynomial r(*this);
    for (const auto& [alpha, c] : o.terms_) r.add_term(alpha, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_arity(o, "mul");
    Polynomial r(nvars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) r.add_term(a.plus(b), ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [alpha, c] : terms_) r.terms_.emplace(alpha, -c);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [alpha, coef] : terms_) r.terms_.emplace(alpha, coef * c);
    return r;
}

Polynomial Polynomial::pow(int m) const {
    Polynomial r = constant(nvars_, Rational(1));
    for (int i = 0; i < m; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(const MultiIndex& alpha) const {
    if (alpha.size() != nvars_)
        throw ArityMismatch("derivative multi-index of length " + std::to_string(alpha.size()) +
                            " against " + std::to_string(nvars_) + " variables");
    Polynomial r(nvars_);
    for (const auto& [beta, c] : terms_) {
        if (!alpha.divides(beta)) continue;
        // Falling factorial: beta_j (beta_j - 1) ... (beta_j - alpha_j + 1).
        Rational factor(1);
        for (std::size_t j = 0; j < nvars_; ++j)
            for (int k = 0; k < alpha[j]; ++k) factor *= Rational(beta[j] - k);
        r.add_term(beta.minus(alpha), c * factor);
    }
    return r;
}

Polynomial Polynomial::derivative(std::size_t j) const {
    MultiIndex alpha(nvars_);
    alpha[j] = 1;
    return derivative(alpha);
}

Rational Polynomial::evaluate(const Point& x) const {
    if (x.size() != nvars_)
        throw ArityMismatch("evaluating a polynomial in " + std::to_string(nvars_) +
                            " variables at a point of length " + std::to_string(x.size()));
    Rational sum(0);
    for (const auto& [alpha, c] : terms_) {
        Rational term = c;
        for (std::size_t j = 0; j < nvars_; ++j) term *= rational_pow(x[j], alpha[j]);
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::shifted(const Point& x0) const {
    if (x0.size() != nvars_)
        throw ArityMismatch("shifting a polynomial in " + std::to_string(nvars_) +
                            " variables by a point of length " + std::to_string(x0.size()));
    // Per-variable powers of (x_j + x0_j), built once up to the needed exponent.
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) {
        int maxe = 0;
        for (const auto& [alpha, c] : terms_)
            if (alpha[j] > maxe) maxe = alpha[j];
        powers[j].push_back(constant(nvars_, Rational(1)));
        Polynomial base = variable(nvars_, j) + constant(nvars_, x0[j]);
        for (int e = 1; e <= maxe; ++e) powers[j].push_back(powers[j].back() * base);
    }
    Polynomial r(nvars_);
    for (const auto& [alpha, c] : terms_) {
        Polynomial term = constant(nvars_, c);
        for (std::size_t j = 0; j < nvars_; ++j)
            if (alpha[j] > 0) term = term * powers[j][alpha[j]];
        r = r + term;
    }
    return r;
}

Polynomial Polynomial::substitute(std::size_t j, const Rational& value) const {
    Polynomial r(nvars_ - 1);
    for (const auto& [alpha, c] : terms_) {
        MultiIndex beta(nvars_ - 1);
        for (std::size_t i = 0, k = 0; i < nvars_; ++i)
            if (i != j) beta[k++] = alpha[i];
        r.add_term(beta, c * rational_pow(value, alpha[j]));
    }
    return r;
}

int Polynomial::degree() const {
    if (is_zero()) throw ZeroPolynomial("total degree is undefined");
    int d = 0;
    for (const auto& [alpha, c] : terms_) {
        int o = alpha.order();
        if (o > d) d = o;
    }
    return d;
}

Polynomial Polynomial::leading_form() const {
    int d = degree();
    Polynomial r(nvars_);
    for (const auto& [alpha, c] : terms_)
        if (alpha.order() == d) r.terms_.emplace(alpha, c);
    return r;
}

}  // namespace apolar
