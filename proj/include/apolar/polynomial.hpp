#ifndef APOLAR_POLYNOMIAL_HPP
#define APOLAR_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "apolar/multi_index.hpp"
#include "apolar/rational.hpp"

namespace apolar {

// Sparse multivariate polynomial with exact rational coefficients.
// Stored coefficients are never zero; the zero polynomial has an empty
// term map. Immutable after construction: every operation returns a
// fresh value.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, GrlexDescending>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t j);
    static Polynomial monomial(MultiIndex alpha, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const MultiIndex& alpha) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rational& c) const;

    // f^m by repeated exact multiplication; f^0 = 1.
    Polynomial pow(int m) const;

    // Iterated partial derivative D^alpha with falling-factorial
    // coefficients.
    Polynomial derivative(const MultiIndex& alpha) const;
    Polynomial derivative(std::size_t j) const;

    Rational evaluate(const Point& x) const;

    // g with g(y) = f(x0 + y), in the same variables.
    Polynomial shifted(const Point& x0) const;

    // Substitutes x_j = value and drops the variable; result has
    // nvars-1 variables.
    Polynomial substitute(std::size_t j, const Rational& value) const;

    // Total degree / terms of top order. Both throw ZeroPolynomial on 0.
    int degree() const;
    Polynomial leading_form() const;

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // Accumulate c * x^alpha, dropping the term if it cancels to zero.
    void add_term(const MultiIndex& alpha, const Rational& c);

private:
    void require_same_arity(const Polynomial& o, const char* op) const;

    std::size_t nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& f) { return f * c; }

}  // namespace apolar

#endif
