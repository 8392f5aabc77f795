#include "apolar/matrix.hpp"

#include <string>
#include <utility>

#include "apolar/errors.hpp"

namespace apolar {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw ShapeMismatch("row " + std::to_string(i) + " has length " +
                                std::to_string(rows[i].size()) + ", expected " + std::to_string(c));
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

RrefResult rref(const RationalMatrix& m) {
    RationalMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < r.rows() && r.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == r.rows()) continue;
        r.swap_rows(row, pivot_row);

        Rational inv = Rational(1) / r.at(row, col);
        for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) *= inv;

        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            Rational factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= factor * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& m) {
    RrefResult res = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : res.pivot_cols) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < res.pivot_cols.size(); ++k)
            v[res.pivot_cols[k]] = -res.reduced.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool row_space_equal(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.cols())
        throw ShapeMismatch("comparing row spaces in dimensions " + std::to_string(a.cols()) +
                            " and " + std::to_string(b.cols()));
    RrefResult ra = rref(a), rb = rref(b);
    if (ra.rank != rb.rank) return false;
    for (std::size_t i = 0; i < ra.rank; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (ra.reduced.at(i, j) != rb.reduced.at(i, j)) return false;
    return true;
}

}  // namespace apolar
