#ifndef APOLAR_MATRIX_HPP
#define APOLAR_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RationalMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

// Unique reduced row echelon form, by Gauss-Jordan elimination with
// first-nonzero pivoting.
RrefResult rref(const RationalMatrix& m);

// Canonical null-space basis: one vector per free column of rref(m),
// with that free coordinate set to 1. Basis size = cols - rank, and
// every vector satisfies M v = 0 exactly.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m);

// True iff the two matrices have identical nonzero rref rows. Throws
// ShapeMismatch when column counts differ.
bool row_space_equal(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace apolar

#endif
