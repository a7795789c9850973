#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hbtrace {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    void append_row(const IntVector& values);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank(IntMatrix m);

/// Basis of the right kernel {v : M v = 0} over the rationals, as primitive
/// integer vectors. Deterministic: one vector per non-pivot column, in column order.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// `v` lies in the rational span of `rows` (all of the same length).
bool in_span(const std::vector<IntVector>& rows, const IntVector& v);

}  // namespace hbtrace
