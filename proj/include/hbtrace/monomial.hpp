#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hbtrace {

using Exponent = std::uint32_t;

/// Ordered list of distinct variable names. Shared by every value built over it.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Index of a variable name, or size() when absent.
    std::size_t index_of(const std::string& name) const;

    bool operator==(const Ring& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
/// Ring on x1, ..., xn.
RingPtr make_indexed_ring(std::size_t n, const std::string& stem = "x");
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector. The zero vector is the unit monomial.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    static Monomial variable(std::size_t n, std::size_t i, Exponent e = 1);

    std::size_t arity() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept;
    bool is_one() const noexcept;
    bool is_squarefree() const noexcept;
    /// Indices of variables with positive exponent.
    std::vector<std::size_t> support() const;
    /// A pure power x_i^e with e >= 1.
    bool is_pure_power() const noexcept;

    bool divides(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Exact division; throws InvariantViolation when b does not divide a.
Monomial operator/(const Monomial& a, const Monomial& b);
/// a / gcd(a, b), i.e. componentwise max(a_i - b_i, 0).
Monomial colon(const Monomial& a, const Monomial& b);
/// Componentwise a <= b.
bool within(const Monomial& a, const Monomial& bound);

/// Canonical total order: total degree, then lexicographic with x1 > x2 > ... .
std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b);

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_compare(a, b) < 0;
    }
};

/// "x^2*y", or "1" for the unit.
std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace hbtrace
