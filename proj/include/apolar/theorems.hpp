#ifndef APOLAR_THEOREMS_HPP
#define APOLAR_THEOREMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/dual_space.hpp"
#include "apolar/groebner.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/solve.hpp"

namespace apolar {

// Named system of nonzero polynomials of shared arity, with cached
// total degrees.
struct PolynomialSystem {
    std::vector<std::string> vars;
    std::vector<Polynomial> polys;
    std::vector<int> degrees;

    static PolynomialSystem make(std::vector<std::string> vars, std::vector<Polynomial> polys);

    std::size_t nvars() const { return vars.size(); }
};

// True iff every polynomial of the system evaluates to exactly 0 at x.
bool verify_common_zero(const PolynomialSystem& system, const Point& x);

enum class BezoutVerdict { match, deficit, infinite };

std::string verdict_name(BezoutVerdict v);

struct BezoutReport {
    std::vector<std::pair<Point, std::size_t>> roots;  // ascending points
    long long total = 0;                               // sum of multiplicities
    long long bezout_number = 1;                       // product of degrees
    BezoutVerdict verdict = BezoutVerdict::match;
    // The 2-variable infinity check only runs on a DEFICIT; when it did,
    // infinity_checked is set and infinity_factor holds the shared
    // factor of the leading forms, if any.
    bool infinity_checked = false;
    std::optional<Polynomial> infinity_factor;
    bool completeness = true;  // total accounts for the whole quotient dimension
    std::optional<std::size_t> quotient_dim;  // absent on the INFINITE branch
};

// Sum of intersection multiplicities against the degree product. Roots
// are solved exactly when not supplied; supplied points are validated
// and rejected with InvalidRoot when they miss the variety.
BezoutReport bezout_report(const PolynomialSystem& system,
                           const std::optional<std::vector<Point>>& supplied_roots = std::nullopt);

struct InfinityCheck {
    bool present = false;
    std::optional<Polynomial> factor;  // set exactly when present
};

// Shared projective zero of the two leading forms, decided by the gcd
// of their dehomogenizations plus the pure-x-power test for the zero at
// (0:1). Requires exactly two polynomials in two variables.
InfinityCheck infinity_check_2d(const PolynomialSystem& system);

struct MembershipVerdict {
    bool member = false;
    // Set exactly when member is false: a dual basis element whose
    // functional does not annihilate f at its root.
    std::optional<std::pair<Point, DualPolynomial>> witness;
    bool oracle_agrees = false;
};

// Differential membership test: f lies in the ideal iff every dual
// functional at every common zero annihilates it. Cross-checked against
// the normal-form oracle. Requires a zero-dimensional system with
// rational roots.
MembershipVerdict dual_member(const Polynomial& f, const PolynomialSystem& system);

struct PowerCertificate {
    int m = 1;
    long long bound = 1;  // product of degrees, plus one
};

// Least m >= 1 with f^m in the ideal, by linear search up to the
// bound. Requires f to vanish on the whole (rational, finite) variety;
// BoundViolation past the bound would refute the bound itself.
PowerCertificate nullstellensatz_power(const Polynomial& f, const PolynomialSystem& system);

}  // namespace apolar

#endif
