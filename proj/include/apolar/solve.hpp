#ifndef APOLAR_SOLVE_HPP
#define APOLAR_SOLVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "apolar/groebner.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

struct UnivariateRoots {
    // (root, multiplicity), roots ascending.
    std::vector<std::pair<Rational, int>> roots;
    // What is left after deflating all rational roots, when nonconstant.
    std::optional<Polynomial> remaining_factor;
};

// All rational roots with multiplicities, by the rational-root theorem
// on the primitive integer form and repeated exact deflation. Requires
// a univariate nonzero input.
UnivariateRoots univariate_rational_roots(const Polynomial& u);

// Monic gcd of univariate polynomials by the Euclidean algorithm.
// gcd(f, 0) = monic f; gcd(0, 0) = 0.
Polynomial univariate_gcd(Polynomial a, Polynomial b);

struct SolveResult {
    std::vector<Point> points;  // ascending coordinate order, deduplicated
    bool complete;              // false when some branch deflated to a nonrational factor
    std::vector<std::string> unresolved;
};

// All common zeros with rational coordinates, by lex triangularization
// and exact back-substitution. Throws NotZeroDimensional when the ideal
// has a positive-dimensional component, and IrrationalRoots when
// require_all is set and some root escapes the rationals.
SolveResult solve_rational(const std::vector<Polynomial>& gens, bool require_all = true);

}  // namespace apolar

#endif
