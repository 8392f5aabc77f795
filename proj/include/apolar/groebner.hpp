#ifndef APOLAR_GROEBNER_HPP
#define APOLAR_GROEBNER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "apolar/polynomial.hpp"

namespace apolar {

// Total, multiplicative monomial order with 1 minimal. The priority
// permutation lists variable indices from most to least significant.
struct MonomialOrder {
    enum class Kind { lex, grevlex };

    Kind kind;
    std::vector<std::size_t> priority;

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);

    bool less(const MultiIndex& a, const MultiIndex& b) const;
    std::string name() const { return kind == Kind::lex ? "lex" : "grevlex"; }
};

// Largest monomial of f under the order. Requires f != 0.
MultiIndex leading_monomial(const Polynomial& f, const MonomialOrder& order);

// Remainder of multivariate division of f by the list G: no remainder
// term is divisible by any leading monomial of G, and f - result lies
// in the ideal generated by G. Deterministic: each reduction step uses
// the first applicable divisor in list order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order);

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> generators;  // monic, reduced, sorted by leading monomial descending
};

// Reduced Groebner basis of the ideal generated by F; unique for the
// given order. Pair selection is the normal strategy (minimal lcm of
// leading monomials), with Buchberger's coprime-leading-term criterion.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

// Monomials outside the leading-term ideal, in reading order. Finite
// (and returned) iff every variable has a pure power among the leading
// monomials; otherwise nullopt (the quotient ring is infinite-dimensional).
std::optional<std::vector<MultiIndex>> standard_monomials(const GroebnerBasis& gb);

// Size of standard_monomials; nullopt means infinite.
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb);

}  // namespace apolar

#endif
