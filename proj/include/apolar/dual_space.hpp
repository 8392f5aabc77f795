#ifndef APOLAR_DUAL_SPACE_HPP
#define APOLAR_DUAL_SPACE_HPP

#include <cstddef>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

// A polynomial in the dual variables λ_1..λ_n, acting on ordinary
// polynomials as a constant-coefficient differential operator evaluated
// at a point.
using DualPolynomial = Polynomial;

// L_{p,x}(f) = Σ_β coeff_β(p) · (D^β f)(x). The bilinear pairing all
// dual-space conditions are built from.
Rational apply_functional(const DualPolynomial& p, const Polynomial& f, const Point& x);

// Linear conditions on the coefficients of a dual polynomial of degree
// <= d. Columns are indexed by the λ-monomials of order <= d in
// graded-lex descending order (monomials_up_to); the null space is the
// degree-<= d part of the dual space at x.
//
// paper variant: one row per pair (g_i, α), |α| <= d; the entry at
// column λ^β is the value of [D^α λ^β](D) g_i at x.
RationalMatrix paper_condition_rows(const std::vector<Polynomial>& gens, const Point& x, int d);

// multiples variant: one row per pair (g_i, β'), |β'| <= d; the row
// states L_{p,x}((X - x)^β' · g_i) = 0. Row-space equal to the paper
// variant by the adjunction identity
//   L_{p,x}((X_j - x_j)·f) = L_{∂p/∂λ_j, x}(f),
// which the test suite checks rather than assumes.
RationalMatrix multiple_condition_rows(const std::vector<Polynomial>& gens, const Point& x, int d);

enum class ConditionMode { paper, multiples };

// Canonical basis (from rref free columns) of the dual space truncated
// at degree d, listed lowest monomial first. Each element has unit
// coefficient on its graded-lex-minimal monomial.
std::vector<DualPolynomial> truncated_dual(const std::vector<Polynomial>& gens, const Point& x,
                                           int d, ConditionMode mode = ConditionMode::paper);

struct DualSpaceBasis {
    Point point;
    std::vector<DualPolynomial> basis;
    int truncation_degree;
};

// Full dual space at x, by raising the truncation degree until the
// dimension stabilizes. The truncated dimensions are exactly the degree
// filtration of the dual space, and one repeated dimension certifies
// stabilization: a dual element of higher exact degree would yield, by
// closure under differentiation, a new element at the first repeated
// degree. Degrees are capped at Π deg(g_i) + 1; reaching the cap
// without stabilizing means x lies on a positive-dimensional component
// and raises NonIsolatedPoint.
DualSpaceBasis dual_space(const std::vector<Polynomial>& gens, const Point& x);

// dim of the dual space: the intersection multiplicity of the system at
// x. Zero exactly when x is not a common zero.
std::size_t multiplicity(const std::vector<Polynomial>& gens, const Point& x);

// True iff the span of the given dual polynomials is closed under every
// ∂/∂λ_j, checked by comparing row spaces with the derivative adjoined.
bool is_d_invariant(const std::vector<DualPolynomial>& basis);

}  // namespace apolar

#endif
