#include "hbtrace/oracle.hpp"

#include <algorithm>
#include <exception>
#include <limits>

#include "hbtrace/betti.hpp"
#include "hbtrace/decomposition.hpp"
#include "hbtrace/errors.hpp"
#include "hbtrace/trace.hpp"

namespace hbtrace {

int quotient_dim(const MonomialIdeal& I, const Monomial& d) { return I.contains(d) ? 0 : 1; }

PsiComponent psi_component(const SignedMonomialMatrix& X, const MonomialIdeal& I, const Monomial& d) {
    PsiComponent out{d, {}, {}, {}};
    for (std::size_t j = 0; j < X.cols(); ++j)
        if (X.col_degrees()[j].divides(d) && quotient_dim(I, d / X.col_degrees()[j]) == 1)
            out.domain.push_back(j);
    for (std::size_t i = 0; i < X.rows(); ++i)
        if (X.row_degrees()[i].divides(d) && quotient_dim(I, d / X.row_degrees()[i]) == 1)
            out.codomain.push_back(i);
    out.matrix = IntMatrix(out.codomain.size(), out.domain.size());
    for (std::size_t r = 0; r < out.codomain.size(); ++r)
        for (std::size_t c = 0; c < out.domain.size(); ++c)
            out.matrix(r, c) = X.at(out.codomain[r], out.domain[c]).coefficient;
    return out;
}

std::vector<SignedMonomialEntry> apply_psi(const SignedMonomialMatrix& X, const MonomialIdeal& I,
                                           const std::vector<SignedMonomialEntry>& v) {
    if (v.size() != X.cols()) throw ArityError("vector length does not match the column count");
    std::vector<SignedMonomialEntry> out(X.rows(), {0, Monomial(X.ring().size())});
    for (std::size_t i = 0; i < X.rows(); ++i) {
        std::optional<Monomial> mono;
        Integer total = 0;
        for (std::size_t j = 0; j < X.cols(); ++j) {
            const auto& e = X.at(i, j);
            if (e.is_zero() || v[j].is_zero()) continue;
            auto w = e.monomial * v[j].monomial;
            if (mono && *mono != w) throw InvariantViolation("inhomogeneous vector passed to psi");
            mono = w;
            total += Integer(e.coefficient) * Integer(v[j].coefficient);
        }
        if (!mono || total == 0 || I.contains(*mono)) continue;
        if (total > std::numeric_limits<std::int64_t>::max() || total < std::numeric_limits<std::int64_t>::min())
            throw ResourceError("coefficient overflow in psi");
        out[i] = {static_cast<std::int64_t>(total), *mono};
    }
    return out;
}

Monomial default_degree_bound(const MonomialIdeal& I) {
    const auto l = I.lcm_of_generators();
    return l * l;
}

namespace {

std::vector<Monomial> lattice_below(const Monomial& bound, std::size_t max_points) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < bound.arity(); ++i) {
        const std::size_t side = static_cast<std::size_t>(bound[i]) + 1;
        if (count > max_points / side)
            throw ResourceError("degree bound spans more than " + std::to_string(max_points) +
                                " lattice points");
        count *= side;
    }
    std::vector<Monomial> out;
    out.reserve(count);
    Monomial cur(bound.arity());
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < bound.arity() && cur[i] == bound[i]) cur[i++] = 0;
        if (i == bound.arity()) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

struct LocalKernel {
    std::vector<std::size_t> domain;
    std::vector<IntVector> basis;
};

LocalKernel local_kernel(const SignedMonomialMatrix& X, const MonomialIdeal& I, const Monomial& d) {
    auto psi = psi_component(X, I, d);
    if (psi.domain.empty()) return {};
    return {std::move(psi.domain), kernel_basis(psi.matrix)};
}

std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw ResourceError("kernel coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

// Keeps the part of the local kernel not generated by earlier generators.
void absorb(const SignedMonomialMatrix& X, const MonomialIdeal& I, const Monomial& d, const LocalKernel& local,
            std::vector<ModuleElement>& gens) {
    if (local.basis.empty()) return;
    std::vector<IntVector> span;
    for (const auto& g : gens) {
        if (!g.degree.divides(d)) continue;
        IntVector v(local.domain.size());
        bool nonzero = false;
        for (std::size_t p = 0; p < local.domain.size(); ++p) {
            v[p] = g.coords[local.domain[p]].coefficient;
            nonzero = nonzero || v[p] != 0;
        }
        if (nonzero) span.push_back(std::move(v));
    }
    for (const auto& b : local.basis) {
        if (in_span(span, b)) continue;
        ModuleElement e{d, std::vector<SignedMonomialEntry>(X.cols(), {0, Monomial(X.ring().size())})};
        for (std::size_t p = 0; p < local.domain.size(); ++p) {
            if (b[p] == 0) continue;
            const std::size_t j = local.domain[p];
            e.coords[j] = {to_int64(b[p]), d / X.col_degrees()[j]};
        }
        for (const auto& r : apply_psi(X, I, e.coords))
            if (!r.is_zero()) throw InvariantViolation("kernel generator does not vanish under psi");
        gens.push_back(std::move(e));
        span.push_back(b);
    }
}

void check_inputs(const SignedMonomialMatrix& X, const MonomialIdeal& I, const Monomial& bound) {
    require_same_ring(X.ring_ptr(), I.ring_ptr());
    if (bound.arity() != I.arity()) throw ArityError("degree bound has the wrong number of variables");
}

}  // namespace

KernelGenerators kernel_generators(const SignedMonomialMatrix& X, const MonomialIdeal& I,
                                   const Monomial& degree_bound, std::size_t max_points) {
    check_inputs(X, I, degree_bound);
    const auto degrees = lattice_below(degree_bound, max_points);
    std::vector<LocalKernel> locals(degrees.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 32)
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        try {
            locals[k] = local_kernel(X, I, degrees[k]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    KernelGenerators out{degree_bound, {}, degrees.size()};
    for (std::size_t k = 0; k < degrees.size(); ++k) absorb(X, I, degrees[k], locals[k], out.generators);
    return out;
}

KernelGenerators kernel_generators_serial(const SignedMonomialMatrix& X, const MonomialIdeal& I,
                                          const Monomial& degree_bound, std::size_t max_points) {
    check_inputs(X, I, degree_bound);
    const auto degrees = lattice_below(degree_bound, max_points);
    KernelGenerators out{degree_bound, {}, degrees.size()};
    for (const auto& d : degrees) absorb(X, I, d, local_kernel(X, I, d), out.generators);
    return out;
}

MonomialIdeal entries_ideal(const KernelGenerators& gens, const MonomialIdeal& I) {
    std::vector<Monomial> mons = I.generators();
    for (const auto& g : gens.generators)
        for (const auto& c : g.coords)
            if (!c.is_zero()) mons.push_back(c.monomial);
    return MonomialIdeal(I.ring_ptr(), std::move(mons));
}

Monomial comparison_bound(const SignedMonomialMatrix& X, const Monomial& degree_bound) {
    Monomial l(X.ring().size());
    for (const auto& c : X.col_degrees()) l = lcm(l, c);
    return colon(degree_bound, l);
}

std::string to_string(Verdict v) { return v == Verdict::Confirmed ? "confirmed" : "refuted"; }

namespace {

void require_cm_height_two(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw DomainError("expected a proper nonzero ideal");
    if (height(I) != 2) throw DomainError("ideal does not have height 2");
    if (!is_cohen_macaulay_h2(I)) throw DomainError("S/I is not Cohen-Macaulay");
}

VerificationReport compare(std::string statement, const MonomialIdeal& I, const MonomialIdeal& lhs,
                           const MonomialIdeal& rhs, const Monomial& degree_bound, const Monomial& cmp) {
    VerificationReport out{std::move(statement), I, degree_bound, cmp, Verdict::Confirmed,
                           generators_within(lhs, cmp), generators_within(rhs, cmp), std::nullopt};
    std::vector<Discrepancy> diffs;
    for (const auto& w : out.lhs)
        if (std::find(out.rhs.begin(), out.rhs.end(), w) == out.rhs.end()) diffs.push_back({w, true});
    for (const auto& w : out.rhs)
        if (std::find(out.lhs.begin(), out.lhs.end(), w) == out.lhs.end()) diffs.push_back({w, false});
    if (!diffs.empty()) {
        out.verdict = Verdict::Refuted;
        out.witness = *std::min_element(diffs.begin(), diffs.end(), [](const auto& a, const auto& b) {
            return canonical_compare(a.monomial, b.monomial) < 0;
        });
    }
    return out;
}

}  // namespace

VerificationReport verify_kernel_theorem_xy(const MonomialIdeal& I, std::optional<Monomial> degree_bound,
                                            std::size_t max_points) {
    if (I.arity() != 2) throw DomainError("the two-variable kernel identity needs exactly two variables");
    if (!I.is_proper_nonzero() || I.size() < 2) throw DomainError("expected at least two generators");
    const auto X = hb_matrix_xy(I);
    const auto& st = X.row_degrees();
    const std::size_t m = st.size();
    const Monomial corner{st[m - 1][0], st[0][1]};
    const auto D = degree_bound.value_or(default_degree_bound(I));
    const auto lhs = entries_ideal(kernel_generators(X, I, D, max_points), I);
    const auto rhs = sum(scale(corner, minors_ideal(X, m - 2)), I);
    return compare("I_1(alpha) + I = x^(a_m) y^(b_1) I_(m-2)(X) + I", I, lhs, rhs, D, comparison_bound(X, D));
}

std::vector<SignedMonomialEntry> cofactor_vector(const SignedMonomialMatrix& X,
                                                 const std::vector<std::size_t>& rows) {
    const std::size_t n = X.cols();
    if (rows.size() + 1 != n) throw DomainError("cofactor vectors need m-2 rows");
    std::vector<SignedMonomialEntry> out(n, {0, Monomial(X.ring().size())});
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        const auto mv = minor(X, rows, cols);
        if (mv.coefficient == 0) continue;
        out[j] = {j % 2 == 0 ? mv.coefficient : -mv.coefficient, mv.monomial};
    }
    return out;
}

InclusionReport verify_inclusion(const MonomialIdeal& I, std::optional<Monomial> degree_bound,
                                 std::size_t max_points) {
    require_cm_height_two(I);
    const auto X = hilbert_burch_matrix(I);
    const std::size_t m = X.rows();
    InclusionReport out{I, false, true, 0, std::nullopt, degree_bound.value_or(default_degree_bound(I)), {}};
    out.comparison_bound = comparison_bound(X, out.degree_bound);
    for (const auto& A : subsets_of_size(m, m - 2)) {
        ++out.subsets_checked;
        const auto residual = apply_psi(X, I, cofactor_vector(X, A));
        const bool vanishes =
            std::all_of(residual.begin(), residual.end(), [](const auto& e) { return e.is_zero(); });
        if (!vanishes) {
            out.cofactor_vectors_in_kernel = false;
            out.failing_subset = A;
            break;
        }
    }
    const auto lhs = entries_ideal(kernel_generators(X, I, out.degree_bound, max_points), I);
    const auto rhs = sum(minors_ideal(X, m - 2), I);
    out.ideal_inclusion = true;
    for (const auto& w : generators_within(rhs, out.comparison_bound))
        out.ideal_inclusion = out.ideal_inclusion && lhs.contains(w);
    return out;
}

VerificationReport verify_conjecture(const MonomialIdeal& I, std::optional<Monomial> degree_bound,
                                      std::size_t max_points) {
    require_cm_height_two(I);
    const auto X = hilbert_burch_matrix(I);
    const auto D = degree_bound.value_or(default_degree_bound(I));
    const auto lhs = entries_ideal(kernel_generators(X, I, D, max_points), I);
    const auto rhs = sum(minors_ideal(X, X.rows() - 2), I);
    return compare("I_1(alpha) + I = I_(m-2)(X) + I", I, lhs, rhs, D, comparison_bound(X, D));
}

}  // namespace hbtrace
