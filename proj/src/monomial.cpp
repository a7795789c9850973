#include "hbtrace/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "hbtrace/errors.hpp"

namespace hbtrace {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw DomainError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw DomainError("empty variable name");
        if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
    }
}

std::size_t Ring::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
}

RingPtr make_indexed_ring(std::size_t n, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return make_ring(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw ArityError("operands live in different rings");
}

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent e) {
    Monomial m(n);
    m.exps_.at(i) = e;
    return m;
}

std::uint64_t Monomial::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) s.push_back(i);
    return s;
}

bool Monomial::is_pure_power() const noexcept {
    return std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }) == 1;
}

bool Monomial::divides(const Monomial& other) const {
    if (arity() != other.arity()) throw ArityError("monomial arity mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

namespace {

void check_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw ArityError("monomial arity mismatch");
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a[i] > std::numeric_limits<Exponent>::max() - b[i])
            throw ResourceError("exponent overflow");
        r[i] = a[i] + b[i];
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (b[i] > a[i]) throw InvariantViolation("inexact monomial division");
        r[i] = a[i] - b[i];
    }
    return r;
}

Monomial colon(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
    return r;
}

bool within(const Monomial& a, const Monomial& bound) { return a.divides(bound); }

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Higher power of the earlier variable sorts first.
    for (std::size_t i = 0; i < std::min(a.arity(), b.arity()); ++i)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return a.arity() <=> b.arity();
}

std::string to_string(const Monomial& m, const Ring& ring) {
    if (m.arity() != ring.size()) throw ArityError("monomial arity does not match ring");
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace hbtrace
