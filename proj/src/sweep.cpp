#include "hbtrace/sweep.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "hbtrace/betti.hpp"
#include "hbtrace/decomposition.hpp"
#include "hbtrace/errors.hpp"

namespace hbtrace {

namespace {

Exponent uniform(Rng& rng, Exponent lo, Exponent hi) {
    return std::uniform_int_distribution<Exponent>(lo, hi)(rng);
}

MonomialIdeal relabel(const MonomialIdeal& I, const std::vector<std::size_t>& perm) {
    std::vector<Monomial> gens;
    for (const auto& u : I.generators()) {
        Monomial v(I.arity());
        for (std::size_t k = 0; k < I.arity(); ++k) v[perm[k]] = u[k];
        gens.push_back(std::move(v));
    }
    return MonomialIdeal(I.ring_ptr(), std::move(gens));
}

MonomialIdeal shuffled(Rng& rng, const MonomialIdeal& I) {
    std::vector<std::size_t> perm(I.arity());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(I, perm);
}

bool cm_height_two(const MonomialIdeal& I) {
    return I.is_proper_nonzero() && height(I) == 2 && is_cohen_macaulay_h2(I);
}

template <class Out, class In, class F>
std::vector<Out> parallel_map(const std::vector<In>& inputs, F f) {
    std::vector<std::optional<Out>> slots(inputs.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        try {
            slots[k].emplace(f(inputs[k]));
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<Out> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace

std::vector<LabeledIdeal> xy_three_generator_family(Exponent max_exp) {
    auto R = make_ring({"x", "y"});
    std::vector<LabeledIdeal> out;
    for (Exponent a = 2; a <= max_exp; ++a)
        for (Exponent b = 1; b < a; ++b)
            for (Exponent d = 2; d <= max_exp; ++d)
                for (Exponent c = 1; c < d; ++c)
                    out.push_back({"xy", {{"a", a}, {"b", b}, {"c", c}, {"d", d}},
                                   MonomialIdeal(R, {Monomial{a, 0}, Monomial{b, c}, Monomial{0, d}})});
    return out;
}

std::vector<LabeledIdeal> pattern_instances(Exponent max_param, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<LabeledIdeal> out;
    auto R3 = make_indexed_ring(3);
    auto R4 = make_indexed_ring(4);

    // (a): u in x1, x2 and v in x3, x4.
    for (Exponent p1 = 0; p1 <= max_param; ++p1)
        for (Exponent p2 = 0; p2 <= max_param; ++p2)
            for (Exponent q1 = 0; q1 <= max_param; ++q1)
                for (Exponent q2 = 0; q2 <= max_param; ++q2) {
                    if (p1 + p2 == 0 || q1 + q2 == 0) continue;
                    MonomialIdeal I(R4, {Monomial{p1, p2, 0, 0}, Monomial{0, 0, q1, q2}});
                    out.push_back({"a", {{"p1", p1}, {"p2", p2}, {"q1", q1}, {"q2", q2}}, shuffled(rng, I)});
                }
    // (b): the two-variable conditions.
    for (const auto& li : xy_three_generator_family(max_param + 1)) {
        const Exponent a = li.parameters[0].second, b = li.parameters[1].second;
        const Exponent c = li.parameters[2].second, d = li.parameters[3].second;
        if ((a - b == 1 || b == 1) && (d - c == 1 || c == 1))
            out.push_back({"b", li.parameters, shuffled(rng, li.ideal)});
    }
    // (c): (x1^a x2^b, x1 x3, x2 x3), a >= 1, a + b >= 2.
    for (Exponent a = 1; a <= max_param; ++a)
        for (Exponent b = 0; b <= max_param; ++b) {
            if (a + b < 2) continue;
            MonomialIdeal I(R3, {Monomial{a, b, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 1}});
            out.push_back({"c", {{"a", a}, {"b", b}}, shuffled(rng, I)});
        }
    // (d): (x1 x2^b, x2^(b+1), x1 x3), b >= 1.
    for (Exponent b = 1; b <= max_param; ++b) {
        MonomialIdeal I(R3, {Monomial{1, b, 0}, Monomial{0, b + 1, 0}, Monomial{1, 0, 1}});
        out.push_back({"d", {{"b", b}}, shuffled(rng, I)});
    }
    // (e)
    MonomialIdeal E(R4, {Monomial{1, 0, 1, 0}, Monomial{1, 0, 0, 1}, Monomial{0, 1, 0, 1}});
    out.push_back({"e", {}, shuffled(rng, E)});
    return out;
}

MonomialIdeal random_xy_ideal(Rng& rng, std::size_t m, Exponent max_exp) {
    if (m == 0 || m > static_cast<std::size_t>(max_exp) + 1)
        throw DomainError("cannot place " + std::to_string(m) + " staircase generators below exponent " +
                          std::to_string(max_exp));
    std::vector<Exponent> pool(max_exp + 1);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<Exponent> as, bs;
    std::sample(pool.begin(), pool.end(), std::back_inserter(as), m, rng);
    std::sample(pool.begin(), pool.end(), std::back_inserter(bs), m, rng);
    std::sort(as.rbegin(), as.rend());
    std::sort(bs.begin(), bs.end());
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < m; ++k) gens.push_back(Monomial{as[k], bs[k]});
    return MonomialIdeal(make_ring({"x", "y"}), std::move(gens));
}

EdgeSequenceData random_edge_data(Rng& rng, std::size_t n, std::size_t max_edges, Exponent max_exp) {
    if (n < 2) throw DomainError("need at least two vertices");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const std::size_t t = std::uniform_int_distribution<std::size_t>(1, std::min(max_edges, pairs.size()))(rng);
    EdgeSequenceData data{make_indexed_ring(n), {}};
    for (std::size_t k = 0; k < t; ++k)
        data.edges.push_back({pairs[k].first, pairs[k].second, uniform(rng, 1, max_exp), uniform(rng, 1, max_exp)});
    return data;
}

std::optional<MonomialIdeal> random_generically_gorenstein_cm(Rng& rng, std::size_t n, std::size_t max_edges,
                                                              Exponent max_exp, std::size_t max_generators,
                                                              std::size_t attempts) {
    for (std::size_t k = 0; k < attempts; ++k) {
        auto I = build_ideal(random_edge_data(rng, n, max_edges, max_exp));
        if (I.size() <= max_generators && cm_height_two(I)) return I;
    }
    return std::nullopt;
}

namespace {

// Random monomial in the given variables with every exponent in [1, max_exp].
Monomial random_full_monomial(Rng& rng, std::size_t n, const std::vector<std::size_t>& vars, Exponent max_exp) {
    Monomial u(n);
    for (auto v : vars) u[v] = uniform(rng, 1, max_exp);
    return u;
}

std::optional<MonomialIdeal> by_substitution(Rng& rng, std::size_t n, Exponent max_exp) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(3, std::min<std::size_t>(4, max_exp + 1))(rng);
    auto J = random_xy_ideal(rng, m, max_exp);
    // Force Cohen-Macaulay: pure powers at both ends.
    auto gens = staircase_generators(J);
    gens.front()[1] = 0;
    gens.back()[0] = 0;
    J = MonomialIdeal(J.ring_ptr(), gens);
    if (J.size() < 3) return std::nullopt;

    std::vector<std::size_t> vars(n);
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);
    const std::size_t ku = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    const std::size_t kv = std::uniform_int_distribution<std::size_t>(1, n - ku)(rng);
    const std::vector<std::size_t> uvars(vars.begin(), vars.begin() + ku);
    const std::vector<std::size_t> vvars(vars.begin() + ku, vars.begin() + ku + kv);
    const auto u = random_full_monomial(rng, n, uvars, 2);
    const auto v = random_full_monomial(rng, n, vvars, 2);

    std::vector<Monomial> out;
    for (const auto& g : J.generators()) {
        Monomial w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = u[i] * g[0] + v[i] * g[1];
        out.push_back(std::move(w));
    }
    return MonomialIdeal(make_indexed_ring(n), std::move(out));
}

std::optional<MonomialIdeal> by_repeated_radicals(Rng& rng, std::size_t n, Exponent max_exp) {
    auto data = random_edge_data(rng, n, 3, max_exp);
    // Stack a second component on one radical.
    const auto& e = data.edges[std::uniform_int_distribution<std::size_t>(0, data.edges.size() - 1)(rng)];
    auto R = data.ring;
    MonomialIdeal I = build_ideal(data);
    MonomialIdeal extra(R, {Monomial::variable(n, e.i, uniform(rng, 1, max_exp)),
                            Monomial::variable(n, e.j, uniform(rng, 1, max_exp))});
    return intersect(I, extra);
}

std::optional<MonomialIdeal> by_rejection(Rng& rng, std::size_t n, Exponent max_exp) {
    const std::size_t mu = std::uniform_int_distribution<std::size_t>(3, 5)(rng);
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < mu; ++k) {
        Monomial u(n);
        for (std::size_t i = 0; i < n; ++i) u[i] = uniform(rng, 0, std::min<Exponent>(max_exp, 2));
        if (!u.is_one()) gens.push_back(std::move(u));
    }
    return MonomialIdeal(make_indexed_ring(n), std::move(gens));
}

}  // namespace

MonomialIdeal random_non_generically_gorenstein_cm(Rng& rng, std::size_t n, Exponent max_exp) {
    if (n < 2) throw DomainError("need at least two variables");
    if (max_exp < 2) throw DomainError("exponent bound must be at least 2");
    for (std::size_t attempt = 0; attempt < 100000; ++attempt) {
        std::optional<MonomialIdeal> cand;
        switch (attempt % 3) {
            case 0: cand = by_substitution(rng, n, max_exp); break;
            case 1: cand = by_repeated_radicals(rng, n, max_exp); break;
            default: cand = by_rejection(rng, n, max_exp); break;
        }
        if (!cand || cand->size() > 8 || !cm_height_two(*cand)) continue;
        if (!is_unmixed(*cand) || is_generically_gorenstein(*cand).value) continue;
        return *cand;
    }
    throw ResourceError("no Cohen-Macaulay non generically Gorenstein ideal found");
}

std::vector<ClassificationRow> classification_sweep(const std::vector<LabeledIdeal>& inputs) {
    return parallel_map<ClassificationRow>(inputs, [](const LabeledIdeal& li) {
        auto report = verify_classification_consistency(li.ideal);
        return ClassificationRow{li, canonical_trace(li.ideal).basis, std::move(report)};
    });
}

std::vector<ConjectureRow> conjecture_sweep(const std::vector<LabeledIdeal>& inputs) {
    return parallel_map<ConjectureRow>(inputs, [](const LabeledIdeal& li) {
        return ConjectureRow{li, verify_conjecture(li.ideal)};
    });
}

}  // namespace hbtrace
