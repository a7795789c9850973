#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hbtrace/hilbert_burch.hpp"
#include "hbtrace/ideal.hpp"
#include "hbtrace/linalg.hpp"

namespace hbtrace {

inline constexpr std::size_t kMaxLatticePoints = 1'000'000;

/// dim_K (S/I)_d, which is 0 or 1 for a monomial ideal.
int quotient_dim(const MonomialIdeal& I, const Monomial& d);

/// Degree-d component of psi : (+) R(-col_j) -> (+) R(-row_i) with R = S/I.
struct PsiComponent {
    Monomial degree;
    std::vector<std::size_t> domain;    ///< columns j with x^(d - col_j) nonzero in R
    std::vector<std::size_t> codomain;  ///< rows i with x^(d - row_i) nonzero in R
    IntMatrix matrix;                   ///< codomain.size() x domain.size()
};

PsiComponent psi_component(const SignedMonomialMatrix& X, const MonomialIdeal& I, const Monomial& d);

/// Homogeneous element of (+) R(-col_j); coords[j] is zero or c_j * x^(degree - col_j).
struct ModuleElement {
    Monomial degree;
    std::vector<SignedMonomialEntry> coords;
};

/// psi(v) reduced modulo I. Throws InvariantViolation on inhomogeneous input.
std::vector<SignedMonomialEntry> apply_psi(const SignedMonomialMatrix& X, const MonomialIdeal& I,
                                           const std::vector<SignedMonomialEntry>& v);

struct KernelGenerators {
    Monomial degree_bound;
    std::vector<ModuleElement> generators;
    std::size_t degrees_scanned = 0;
};

/// Default degree bound lcm(I)^2.
Monomial default_degree_bound(const MonomialIdeal& I);

/// Minimal homogeneous generators of ker(psi) of degree <= degree_bound, in graded
/// lexicographic order. Per-degree kernels are computed in parallel.
KernelGenerators kernel_generators(const SignedMonomialMatrix& X, const MonomialIdeal& I,
                                   const Monomial& degree_bound, std::size_t max_points = kMaxLatticePoints);
/// Single-threaded reference for kernel_generators.
KernelGenerators kernel_generators_serial(const SignedMonomialMatrix& X, const MonomialIdeal& I,
                                          const Monomial& degree_bound,
                                          std::size_t max_points = kMaxLatticePoints);

/// Ideal of S generated by the nonzero coordinates of `gens`, plus I.
MonomialIdeal entries_ideal(const KernelGenerators& gens, const MonomialIdeal& I);

/// Largest T with T * lcm(column degrees) <= degree_bound; below T the entries
/// ideal computed from kernel generators up to degree_bound is exact.
Monomial comparison_bound(const SignedMonomialMatrix& X, const Monomial& degree_bound);

enum class Verdict { Confirmed, Refuted };
std::string to_string(Verdict v);

struct Discrepancy {
    Monomial monomial;
    bool in_lhs = false;  ///< a minimal generator of the left side missing on the right, or the reverse
};

struct VerificationReport {
    std::string statement;
    MonomialIdeal ideal;
    Monomial degree_bound;
    Monomial comparison_bound;
    Verdict verdict = Verdict::Confirmed;
    std::vector<Monomial> lhs;  ///< truncated minimal generators
    std::vector<Monomial> rhs;
    std::optional<Discrepancy> witness;
};

/// Two variables: I_1(alpha) + I against x^(a_m) y^(b_1) I_{m-2}(X) + I.
VerificationReport verify_kernel_theorem_xy(const MonomialIdeal& I,
                                            std::optional<Monomial> degree_bound = std::nullopt,
                                            std::size_t max_points = kMaxLatticePoints);

struct InclusionReport {
    MonomialIdeal ideal;
    bool ideal_inclusion = false;      ///< truncated I_{m-2}(X) + I inside I_1(alpha) + I
    bool cofactor_vectors_in_kernel = false;
    std::size_t subsets_checked = 0;
    std::optional<std::vector<std::size_t>> failing_subset;
    Monomial degree_bound;
    Monomial comparison_bound;

    bool holds() const noexcept { return ideal_inclusion && cofactor_vectors_in_kernel; }
};

/// Cofactor vector c_A = sum_j (-1)^(j+1) [A | [m-1] \ j] f_j for an (m-2)-subset A of rows.
std::vector<SignedMonomialEntry> cofactor_vector(const SignedMonomialMatrix& X,
                                                 const std::vector<std::size_t>& rows);

/// Checks psi(c_A) = 0 in R for every (m-2)-subset A, and the truncated inclusion
/// I_{m-2}(X) + I in I_1(alpha) + I.
InclusionReport verify_inclusion(const MonomialIdeal& I, std::optional<Monomial> degree_bound = std::nullopt,
                                 std::size_t max_points = kMaxLatticePoints);

/// Compares I_1(alpha) + I with I_{m-2}(X) + I for any Cohen-Macaulay height-two ideal.
VerificationReport verify_conjecture(const MonomialIdeal& I, std::optional<Monomial> degree_bound = std::nullopt,
                                      std::size_t max_points = kMaxLatticePoints);

}  // namespace hbtrace
