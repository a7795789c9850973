#include "hbtrace/linalg.hpp"

#include <utility>

#include "hbtrace/errors.hpp"

namespace hbtrace {

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::append_row(const IntVector& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw InvariantViolation("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

std::size_t rank(IntMatrix m) {
    const std::size_t R = m.rows(), C = m.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t k = 0; k < C; ++k) std::swap(m(p, k), m(r, k));
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t k = c + 1; k < C; ++k)
                m(i, k) = (m(r, c) * m(i, k) - m(i, c) * m(r, k)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

namespace {

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, abs(x));
    return g;
}

void make_primitive(IntVector& v) {
    Integer g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
}

}  // namespace

std::vector<IntVector> kernel_basis(const IntMatrix& input) {
    const std::size_t R = input.rows(), C = input.cols();
    std::vector<IntVector> rows;
    for (std::size_t r = 0; r < R; ++r) rows.push_back(input.row(r));

    // Fraction-free Gauss-Jordan: row_i <- p * row_i - a * row_pivot, then strip content.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && rows[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Integer a = rows[i][c], piv = rows[r][c];
            for (std::size_t k = 0; k < C; ++k) rows[i][k] = piv * rows[i][k] - a * rows[r][k];
            make_primitive(rows[i]);
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(C, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    Integer L = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) L = lcm(L, abs(rows[k][pivot_col[k]]));

    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        IntVector v(C, 0);
        v[f] = L;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -(L * rows[k][f]) / rows[k][pivot_col[k]];
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<IntVector>& rows, const IntVector& v) {
    if (rows.empty()) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    IntMatrix m;
    for (const auto& row : rows) m.append_row(row);
    const std::size_t before = rank(m);
    m.append_row(v);
    return rank(std::move(m)) == before;
}

}  // namespace hbtrace
