#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hbtrace/ideal.hpp"

namespace hbtrace {

inline constexpr std::size_t kMaxSyzygyGenerators = 12;

/// coefficient * monomial; coefficient 0 is the zero entry.
struct SignedMonomialEntry {
    std::int64_t coefficient = 0;
    Monomial monomial;

    bool is_zero() const noexcept { return coefficient == 0; }
    bool operator==(const SignedMonomialEntry&) const = default;
};

/// Matrix of signed monomials describing a fine-graded map
/// (+) S(-col_degree_j) -> (+) S(-row_degree_i).
/// Every nonzero entry satisfies row_degree_i * entry = col_degree_j.
class SignedMonomialMatrix {
public:
    /// Throws InvariantViolation when an entry breaks multihomogeneity.
    SignedMonomialMatrix(RingPtr ring, std::vector<Monomial> row_degrees,
                         std::vector<Monomial> col_degrees,
                         std::vector<std::vector<SignedMonomialEntry>> entries);

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const Ring& ring() const noexcept { return *ring_; }
    std::size_t rows() const noexcept { return row_degrees_.size(); }
    std::size_t cols() const noexcept { return col_degrees_.size(); }
    const SignedMonomialEntry& at(std::size_t r, std::size_t c) const { return entries_.at(r).at(c); }
    const std::vector<Monomial>& row_degrees() const noexcept { return row_degrees_; }
    const std::vector<Monomial>& col_degrees() const noexcept { return col_degrees_; }

    SignedMonomialMatrix negated_column(std::size_t c) const;

    bool operator==(const SignedMonomialMatrix& other) const;

private:
    RingPtr ring_;
    std::vector<Monomial> row_degrees_;
    std::vector<Monomial> col_degrees_;
    std::vector<std::vector<SignedMonomialEntry>> entries_;
};

struct MinorValue {
    std::int64_t coefficient = 0;
    /// Common exponent vector of all expansion terms; the unit when coefficient is 0.
    Monomial monomial;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

/// Generators of a two-variable ideal sorted so that x-exponents strictly
/// decrease and y-exponents strictly increase.
std::vector<Monomial> staircase_generators(const MonomialIdeal& I);

/// Bidiagonal Hilbert-Burch matrix of a two-variable ideal with m >= 2 generators:
/// (j,j) = +y^(b_{j+1}-b_j), (j+1,j) = -x^(a_j-a_{j+1}). Rows follow staircase order.
SignedMonomialMatrix hb_matrix_xy(const MonomialIdeal& I);

struct TaylorSyzygies {
    SignedMonomialMatrix matrix;  ///< rows: G(I) in canonical order
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  ///< (i, j) per column, i < j
};

/// Column (i, j): +lcm/u_i at row i, -lcm/u_j at row j, for all i < j.
TaylorSyzygies taylor_syzygies(const MonomialIdeal& I);

/// Minimal generators of the first syzygy module chosen greedily among the Taylor
/// columns in increasing (degree, pair) order. Cross-checked against beta_1(I).
SignedMonomialMatrix minimal_first_syzygies(const MonomialIdeal& I);

/// Hilbert-Burch matrix of a Cohen-Macaulay height-two ideal, validated by
/// I_{m-1}(X) = I.
SignedMonomialMatrix hb_matrix_general(const MonomialIdeal& I);

/// Determinant of the submatrix on `rows` x `cols` (sorted, equal size).
MinorValue minor(const SignedMonomialMatrix& X, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols);

/// Ideal generated by the monomials of all nonzero j-minors; I_0 is the unit ideal.
MonomialIdeal minors_ideal(const SignedMonomialMatrix& X, std::size_t j);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

std::string to_text(const SignedMonomialMatrix& X);

}  // namespace hbtrace
