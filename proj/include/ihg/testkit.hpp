#pragma once

// Seeded random instance generation and an independent reference solver for
// acyclic instances, used by the property tests, the acceptance suite and
// the CLI `gen` command.

#include "ihg/errors.hpp"
#include "ihg/hypergraph.hpp"
#include "ihg/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ihg {

struct GenSpec {
    std::size_t nodes = 1;
    std::size_t max_edges = 0;
    std::size_t max_tail = 3;
    std::size_t max_head = 2;
    bool acyclic = false;
    std::uint64_t seed = 0;
    bool labeled = false; // attach labels to roughly a third of the propositions
};

namespace detail {

/// Uniform integer in [0, bound) by rejection. std::uniform_int_distribution is
/// implementation-defined, which would make `gen` output toolchain-dependent.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

/// k distinct elements of `pool`, chosen uniformly (partial Fisher-Yates).
inline std::vector<VertexIndex> sample(std::mt19937_64& rng, std::vector<VertexIndex> pool, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + draw(rng, pool.size() - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace detail

inline ImplicationHypergraph generate(const GenSpec& spec) {
    if (spec.nodes < 1) throw InfeasibleSpec("nodes must be at least 1");
    if (spec.max_tail < 1 || spec.max_head < 1) throw InfeasibleSpec("max_tail and max_head must be at least 1");
    if (spec.nodes < 2 && spec.max_edges > 0) throw InfeasibleSpec("edges need at least 2 propositions");

    std::mt19937_64 rng(spec.seed);
    const std::size_t n = spec.nodes;

    std::vector<Proposition> props;
    props.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Proposition p{"p" + std::to_string(i + 1), std::nullopt};
        if (spec.labeled && detail::draw(rng, 3) == 0) p.label = "statement \"" + std::to_string(i + 1) + "\" \\ holds";
        props.push_back(std::move(p));
    }

    // order[k] = vertex at position k; acyclic edges always point forward.
    std::vector<VertexIndex> order(n);
    std::iota(order.begin(), order.end(), VertexIndex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[detail::draw(rng, i)]);

    const std::size_t target = n < 2 ? 0 : detail::draw(rng, spec.max_edges + 1);
    std::set<std::pair<VertexSet, VertexSet>> seen;
    std::vector<EdgeDecl> edges;
    for (std::size_t attempt = 0; edges.size() < target && attempt < 64 * (target + 1); ++attempt) {
        VertexSet tail, head;
        if (spec.acyclic) {
            std::size_t split = 1 + detail::draw(rng, n - 1); // positions [0, split) vs [split, n)
            std::vector<VertexIndex> before(order.begin(), order.begin() + split);
            std::vector<VertexIndex> after(order.begin() + split, order.end());
            std::size_t t = 1 + detail::draw(rng, std::min(spec.max_tail, before.size()));
            std::size_t h = 1 + detail::draw(rng, std::min(spec.max_head, after.size()));
            tail = detail::sample(rng, std::move(before), t);
            head = detail::sample(rng, std::move(after), h);
        } else {
            std::size_t t = 1 + detail::draw(rng, std::min(spec.max_tail, n - 1));
            tail = detail::sample(rng, order, t);
            std::vector<VertexIndex> rest;
            for (auto v : order)
                if (!std::binary_search(tail.begin(), tail.end(), v)) rest.push_back(v);
            std::size_t h = 1 + detail::draw(rng, std::min(spec.max_head, rest.size()));
            head = detail::sample(rng, std::move(rest), h);
        }
        if (!seen.emplace(tail, head).second) continue;
        EdgeDecl decl;
        for (auto v : tail) decl.tail.push_back(props[v].id);
        for (auto v : head) decl.head.push_back(props[v].id);
        edges.push_back(std::move(decl));
    }
    return ImplicationHypergraph::build(std::move(props), edges);
}

/// Applies the defining sum directly, leaves first, straight from the edge
/// list. Shares no code with the matrix solve. Throws CyclicInput on cycles.
inline std::vector<InfoForm> fixed_point_oracle(const ImplicationHypergraph& h) {
    auto order = topological_order(h);
    if (!order) throw CyclicInput();

    std::vector<std::vector<std::size_t>> edges_from(h.size());
    for (std::size_t e = 0; e < h.edges().size(); ++e)
        for (auto v : h.edges()[e].tail) edges_from[v].push_back(e);

    std::vector<InfoForm> forms(h.size());
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        auto v = *it;
        if (edges_from[v].empty()) {
            forms[v] = {Rational(1), Rational(0)};
            continue;
        }
        InfoForm sum{Rational(0), Rational(0)};
        for (auto e : edges_from[v]) {
            const auto& edge = h.edges()[e];
            Rational share(1, static_cast<unsigned long>(edge.tail.size()));
            for (auto u : edge.head) sum = sum + share * (forms[u] + InfoForm{Rational(0), Rational(1)});
        }
        forms[v] = sum;
    }
    return forms;
}

} // namespace ihg
