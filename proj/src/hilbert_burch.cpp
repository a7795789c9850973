#include "hbtrace/hilbert_burch.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "hbtrace/betti.hpp"
#include "hbtrace/decomposition.hpp"
#include "hbtrace/errors.hpp"
#include "hbtrace/linalg.hpp"

namespace hbtrace {

SignedMonomialMatrix::SignedMonomialMatrix(RingPtr ring, std::vector<Monomial> row_degrees,
                                           std::vector<Monomial> col_degrees,
                                           std::vector<std::vector<SignedMonomialEntry>> entries)
    : ring_(std::move(ring)),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(std::move(entries)) {
    if (entries_.size() != row_degrees_.size()) throw InvariantViolation("row count mismatch");
    for (std::size_t r = 0; r < rows(); ++r) {
        if (entries_[r].size() != cols()) throw InvariantViolation("column count mismatch");
        for (std::size_t c = 0; c < cols(); ++c) {
            auto& e = entries_[r][c];
            if (e.is_zero()) {
                e.monomial = Monomial(ring_->size());
                continue;
            }
            if (row_degrees_[r] * e.monomial != col_degrees_[c])
                throw InvariantViolation("matrix entry (" + std::to_string(r) + ", " +
                                         std::to_string(c) + ") breaks multihomogeneity");
        }
    }
}

SignedMonomialMatrix SignedMonomialMatrix::negated_column(std::size_t c) const {
    auto entries = entries_;
    for (auto& row : entries) row.at(c).coefficient = -row.at(c).coefficient;
    return SignedMonomialMatrix(ring_, row_degrees_, col_degrees_, std::move(entries));
}

bool SignedMonomialMatrix::operator==(const SignedMonomialMatrix& other) const {
    return same_ring(ring_, other.ring_) && row_degrees_ == other.row_degrees_ &&
           col_degrees_ == other.col_degrees_ && entries_ == other.entries_;
}

std::vector<Monomial> staircase_generators(const MonomialIdeal& I) {
    auto gens = I.generators();
    std::sort(gens.begin(), gens.end(), [](const Monomial& u, const Monomial& v) { return u[0] > v[0]; });
    return gens;
}

SignedMonomialMatrix hb_matrix_xy(const MonomialIdeal& I) {
    if (I.arity() != 2) throw DomainError("closed-form Hilbert-Burch matrix needs exactly two variables");
    if (I.size() < 2) throw DomainError("closed-form Hilbert-Burch matrix needs at least two generators");
    const auto gens = staircase_generators(I);
    const std::size_t m = gens.size();
    std::vector<Monomial> cdeg;
    std::vector<std::vector<SignedMonomialEntry>> entries(m, std::vector<SignedMonomialEntry>(m - 1));
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const Exponent a_j = gens[j][0], a_next = gens[j + 1][0];
        const Exponent b_j = gens[j][1], b_next = gens[j + 1][1];
        cdeg.push_back(Monomial{a_j, b_next});
        entries[j][j] = {1, Monomial{0, b_next - b_j}};
        entries[j + 1][j] = {-1, Monomial{a_j - a_next, 0}};
    }
    return SignedMonomialMatrix(I.ring_ptr(), gens, std::move(cdeg), std::move(entries));
}

TaylorSyzygies taylor_syzygies(const MonomialIdeal& I) {
    if (I.size() < 2) throw DomainError("Taylor syzygies need at least two generators");
    const auto& gens = I.generators();
    const std::size_t m = gens.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Monomial> cdeg;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            pairs.emplace_back(i, j);
            cdeg.push_back(lcm(gens[i], gens[j]));
        }
    std::vector<std::vector<SignedMonomialEntry>> entries(m, std::vector<SignedMonomialEntry>(pairs.size()));
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        const auto [i, j] = pairs[c];
        entries[i][c] = {1, cdeg[c] / gens[i]};
        entries[j][c] = {-1, cdeg[c] / gens[j]};
    }
    return {SignedMonomialMatrix(I.ring_ptr(), gens, cdeg, std::move(entries)), std::move(pairs)};
}

SignedMonomialMatrix minimal_first_syzygies(const MonomialIdeal& I) {
    if (I.size() > kMaxSyzygyGenerators)
        throw ResourceError("syzygy minimalization capped at " +
                            std::to_string(kMaxSyzygyGenerators) + " generators");
    const auto taylor = taylor_syzygies(I);
    const auto& T = taylor.matrix;
    const std::size_t m = T.rows();

    std::vector<std::size_t> order(T.cols());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return canonical_compare(T.col_degrees()[a], T.col_degrees()[b]) < 0;
    });

    auto coefficients = [&](std::size_t c) {
        IntVector v(m, 0);
        for (std::size_t r = 0; r < m; ++r) v[r] = T.at(r, c).coefficient;
        return v;
    };

    // In fine degree d the syzygy module is spanned by the coefficient vectors
    // of the chosen columns whose degree divides d.
    std::vector<std::size_t> chosen;
    for (auto c : order) {
        std::vector<IntVector> span;
        for (auto k : chosen)
            if (T.col_degrees()[k].divides(T.col_degrees()[c])) span.push_back(coefficients(k));
        if (!in_span(span, coefficients(c))) chosen.push_back(c);
    }

    const std::size_t beta1 = betti_numbers(I).ideal_total(1);
    if (chosen.size() != beta1)
        throw InvariantViolation("minimal syzygy count " + std::to_string(chosen.size()) +
                                 " differs from beta_1 = " + std::to_string(beta1));

    std::vector<Monomial> cdeg;
    std::vector<std::vector<SignedMonomialEntry>> entries(m);
    for (auto c : chosen) {
        cdeg.push_back(T.col_degrees()[c]);
        for (std::size_t r = 0; r < m; ++r) entries[r].push_back(T.at(r, c));
    }
    return SignedMonomialMatrix(I.ring_ptr(), T.row_degrees(), std::move(cdeg), std::move(entries));
}

SignedMonomialMatrix hb_matrix_general(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw DomainError("Hilbert-Burch matrix needs a proper nonzero ideal");
    if (height(I) != 2) throw DomainError("Hilbert-Burch matrix needs an ideal of height two");
    if (I.size() > kMaxSyzygyGenerators)
        throw ResourceError("syzygy minimalization capped at " +
                            std::to_string(kMaxSyzygyGenerators) + " generators");
    if (!is_cohen_macaulay_h2(I)) throw DomainError("S/I is not Cohen-Macaulay");
    auto X = minimal_first_syzygies(I);
    const std::size_t m = I.size();
    if (X.cols() != m - 1) throw DomainError("S/I is not Cohen-Macaulay");
    if (!(minors_ideal(X, m - 1) == I))
        throw InvariantViolation("maximal minors of the syzygy matrix do not generate I");
    return X;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("minor coefficient overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("minor coefficient overflow");
    return r;
}

// Laplace expansion along the first remaining column, memoized on (row set, column set).
class MinorEngine {
public:
    explicit MinorEngine(const SignedMonomialMatrix& X) : X_(X) {
        if (X.rows() > 31 || X.cols() > 31) throw ResourceError("matrix too large for minor expansion");
    }

    struct Value {
        std::int64_t coefficient = 0;
        std::optional<Monomial> monomial;
    };

    Value compute(std::uint32_t rows, std::uint32_t cols) {
        if (cols == 0) return {1, Monomial(X_.ring().size())};
        const auto key = (static_cast<std::uint64_t>(rows) << 32) | cols;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const auto c0 = static_cast<std::size_t>(std::countr_zero(cols));
        const std::uint32_t rest_cols = cols & (cols - 1);
        Value out;
        int sign = 1;
        for (std::size_t r = 0; r < X_.rows(); ++r) {
            if (!(rows & (1u << r))) continue;
            const auto& e = X_.at(r, c0);
            if (!e.is_zero()) {
                Value sub = compute(rows & ~(1u << r), rest_cols);
                if (sub.coefficient != 0 || sub.monomial) {
                    if (sub.monomial) {
                        Monomial term = e.monomial * *sub.monomial;
                        if (out.monomial && *out.monomial != term)
                            throw InvariantViolation("minor expansion is not multihomogeneous");
                        out.monomial = std::move(term);
                    }
                    out.coefficient = checked_add(out.coefficient,
                                                  checked_mul(sign * e.coefficient, sub.coefficient));
                }
            }
            sign = -sign;
        }
        memo_.emplace(key, out);
        return out;
    }

private:
    const SignedMonomialMatrix& X_;
    std::map<std::uint64_t, Value> memo_;
};

std::uint32_t to_mask(const std::vector<std::size_t>& idx, std::size_t limit) {
    std::uint32_t mask = 0;
    for (auto i : idx) {
        if (i >= limit) throw DomainError("minor index out of range");
        if (mask & (1u << i)) throw DomainError("repeated minor index");
        mask |= 1u << i;
    }
    return mask;
}

MinorValue evaluate(MinorEngine& engine, const SignedMonomialMatrix& X,
                    const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw DomainError("minor needs equally many rows and columns");
    auto sorted_rows = rows, sorted_cols = cols;
    std::sort(sorted_rows.begin(), sorted_rows.end());
    std::sort(sorted_cols.begin(), sorted_cols.end());
    auto v = engine.compute(to_mask(sorted_rows, X.rows()), to_mask(sorted_cols, X.cols()));
    MinorValue out;
    out.coefficient = v.coefficient;
    out.monomial = v.coefficient != 0 && v.monomial ? *v.monomial : Monomial(X.ring().size());
    out.rows = std::move(sorted_rows);
    out.cols = std::move(sorted_cols);
    return out;
}

}  // namespace

MinorValue minor(const SignedMonomialMatrix& X, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
    MinorEngine engine(X);
    return evaluate(engine, X, rows, cols);
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t t = i; t < k; ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

MonomialIdeal minors_ideal(const SignedMonomialMatrix& X, std::size_t j) {
    if (j > std::min(X.rows(), X.cols())) throw DomainError("minor size exceeds matrix dimensions");
    if (j == 0) return MonomialIdeal::unit(X.ring_ptr());
    MinorEngine engine(X);
    std::vector<Monomial> gens;
    const auto col_sets = subsets_of_size(X.cols(), j);
    for (const auto& rows : subsets_of_size(X.rows(), j))
        for (const auto& cols : col_sets) {
            auto v = evaluate(engine, X, rows, cols);
            if (v.coefficient != 0) gens.push_back(std::move(v.monomial));
        }
    return MonomialIdeal(X.ring_ptr(), std::move(gens));
}

std::string to_text(const SignedMonomialMatrix& X) {
    std::vector<std::vector<std::string>> cells(X.rows(), std::vector<std::string>(X.cols()));
    std::size_t width = 1;
    for (std::size_t r = 0; r < X.rows(); ++r)
        for (std::size_t c = 0; c < X.cols(); ++c) {
            const auto& e = X.at(r, c);
            std::string s;
            if (e.is_zero()) {
                s = "0";
            } else {
                const std::string mono = to_string(e.monomial, X.ring());
                const auto mag = e.coefficient < 0 ? -e.coefficient : e.coefficient;
                s = e.coefficient < 0 ? "-" : "";
                if (mag != 1)
                    s += std::to_string(mag) + (mono == "1" ? "" : "*" + mono);
                else
                    s += mono;
            }
            width = std::max(width, s.size());
            cells[r][c] = std::move(s);
        }
    std::string out;
    for (const auto& row : cells) {
        out += "[";
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += std::string(width - row[c].size() + (c ? 2 : 1), ' ') + row[c];
        }
        out += " ]\n";
    }
    return out;
}

}  // namespace hbtrace
