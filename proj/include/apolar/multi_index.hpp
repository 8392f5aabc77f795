#ifndef APOLAR_MULTI_INDEX_HPP
#define APOLAR_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace apolar {

// Exponent vector of a monomial. Length = ambient variable count,
// entries nonnegative.
struct MultiIndex {
    std::vector<int> exp;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t nvars) : exp(nvars, 0) {}
    MultiIndex(std::initializer_list<int> e) : exp(e) {}

    std::size_t size() const { return exp.size(); }
    int operator[](std::size_t i) const { return exp[i]; }
    int& operator[](std::size_t i) { return exp[i]; }

    // |alpha|, the total order of the derivative / degree of the monomial.
    int order() const {
        int s = 0;
        for (int e : exp) s += e;
        return s;
    }

    bool operator==(const MultiIndex&) const = default;

    bool divides(const MultiIndex& other) const {
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > other.exp[i]) return false;
        return true;
    }

    MultiIndex plus(const MultiIndex& o) const {
        MultiIndex r(*this);
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
        return r;
    }

    // Requires o.divides(*this).
    MultiIndex minus(const MultiIndex& o) const {
        MultiIndex r(*this);
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= o.exp[i];
        return r;
    }

    MultiIndex lcm(const MultiIndex& o) const {
        MultiIndex r(*this);
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (o.exp[i] > r.exp[i]) r.exp[i] = o.exp[i];
        return r;
    }
};

// a < b under graded lexicographic order: lower total degree first,
// ties by lexicographic comparison with the first variable most
// significant.
inline bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
    int oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return a.exp < b.exp;
}

// Canonical term-iteration order: graded-lex descending, so x^2 comes
// before x*y before y^2 before x before y before 1. Used for stored
// polynomial terms, condition-matrix columns, and printing.
struct GrlexDescending {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return grlex_less(b, a);
    }
};

// Reading order for reported monomial lists: degree ascending, and
// within a degree the same x-major sequence as printing (1, x, y, x^2,
// x*y, y^2, ...).
struct ReadingOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        int oa = a.order(), ob = b.order();
        if (oa != ob) return oa < ob;
        return b.exp < a.exp;
    }
};

// All exponent vectors with order() <= degree, in GrlexDescending order.
std::vector<MultiIndex> monomials_up_to(std::size_t nvars, int degree);

}  // namespace apolar

#endif
