#pragma once

// Implication hypergraph model: propositions, directed hyperedges
// (tail conjunction implies head conjunction) and the dependency digraph
// derived from them.

#include "ihg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ihg {

using VertexIndex = std::size_t;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<VertexIndex>;

/// Dependency arc (v, u): v appears in some tail whose head contains u.
using Arc = std::pair<VertexIndex, VertexIndex>;

inline bool is_valid_id(std::string_view id) {
    if (id.empty()) return false;
    auto c0 = static_cast<unsigned char>(id.front());
    if (!(std::isalpha(c0) || c0 == '_')) return false;
    return std::all_of(id.begin() + 1, id.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

struct Proposition {
    std::string id;
    std::optional<std::string> label;

    friend bool operator==(const Proposition&, const Proposition&) = default;
};

/// Edge as declared by name, before resolution against the proposition list.
struct EdgeDecl {
    std::vector<std::string> tail;
    std::vector<std::string> head;
};

struct Hyperedge {
    VertexSet tail;
    VertexSet head;

    friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

/// Immutable once built. Proposition order fixes matrix row/column indices.
class ImplicationHypergraph {
public:
    ImplicationHypergraph() = default;

    static ImplicationHypergraph build(std::vector<Proposition> propositions, const std::vector<EdgeDecl>& edges) {
        ImplicationHypergraph h;
        for (std::size_t i = 0; i < propositions.size(); ++i) {
            const auto& p = propositions[i];
            if (!is_valid_id(p.id))
                throw ModelError(ModelError::Kind::InvalidId, "invalid proposition id '" + p.id + "'");
            if (p.label && p.label->empty())
                throw ModelError(ModelError::Kind::EmptyLabel, "empty label on proposition '" + p.id + "'");
            if (!h.index_.emplace(p.id, i).second)
                throw ModelError(ModelError::Kind::DuplicatePropositionId, "duplicate proposition id '" + p.id + "'");
        }
        h.props_ = std::move(propositions);

        h.edges_.reserve(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto& decl = edges[e];
            if (decl.tail.empty() || decl.head.empty())
                throw ModelError(ModelError::Kind::EmptyTailOrHead, "edge " + std::to_string(e) + " has an empty tail or head");
            Hyperedge edge{h.resolve(decl.tail, e), h.resolve(decl.head, e)};
            std::vector<VertexIndex> common;
            std::set_intersection(edge.tail.begin(), edge.tail.end(), edge.head.begin(), edge.head.end(),
                                  std::back_inserter(common));
            if (!common.empty())
                throw ModelError(ModelError::Kind::SelfIntersectingEdge,
                                 "edge " + std::to_string(e) + ": '" + h.props_[common.front()].id +
                                     "' appears in both tail and head");
            h.edges_.push_back(std::move(edge));
        }
        return h;
    }

    std::size_t size() const noexcept { return props_.size(); }
    const std::vector<Proposition>& propositions() const noexcept { return props_; }
    const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
    const std::string& id(VertexIndex v) const { return props_.at(v).id; }

    std::optional<VertexIndex> index_of(std::string_view id) const {
        auto it = index_.find(std::string(id));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Name-level view of an edge, in vertex order.
    EdgeDecl edge_decl(std::size_t e) const {
        EdgeDecl d;
        for (auto v : edges_.at(e).tail) d.tail.push_back(props_[v].id);
        for (auto v : edges_.at(e).head) d.head.push_back(props_[v].id);
        return d;
    }

    friend bool operator==(const ImplicationHypergraph& a, const ImplicationHypergraph& b) {
        return a.props_ == b.props_ && a.edges_ == b.edges_;
    }

private:
    VertexSet resolve(const std::vector<std::string>& names, std::size_t edge) const {
        VertexSet out;
        out.reserve(names.size());
        for (const auto& n : names) {
            auto it = index_.find(n);
            if (it == index_.end())
                throw ModelError(ModelError::Kind::UnknownProposition,
                                 "edge " + std::to_string(edge) + " references unknown proposition '" + n + "'");
            out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<Proposition> props_;
    std::vector<Hyperedge> edges_;
    std::map<std::string, VertexIndex, std::less<>> index_;
};

/// Arcs {(v, u) : some edge has v in its tail and u in its head}, sorted.
inline std::set<Arc> dependency_digraph(const ImplicationHypergraph& h) {
    std::set<Arc> arcs;
    for (const auto& e : h.edges())
        for (auto v : e.tail)
            for (auto u : e.head) arcs.emplace(v, u);
    return arcs;
}

/// Out-neighbour lists of the dependency digraph, each sorted and unique.
inline std::vector<VertexSet> successors(const ImplicationHypergraph& h) {
    std::vector<VertexSet> out(h.size());
    for (const auto& [v, u] : dependency_digraph(h)) out[v].push_back(u);
    return out;
}

/// Propositions that appear in no tail (they imply nothing).
inline VertexSet leaves(const ImplicationHypergraph& h) {
    std::vector<bool> in_tail(h.size(), false);
    for (const auto& e : h.edges())
        for (auto v : e.tail) in_tail[v] = true;
    VertexSet out;
    for (VertexIndex v = 0; v < h.size(); ++v)
        if (!in_tail[v]) out.push_back(v);
    return out;
}

/// Kahn's algorithm on the dependency digraph, lowest index first among ready
/// vertices. Every arc (v, u) has v before u. nullopt when a cycle exists.
inline std::optional<std::vector<VertexIndex>> topological_order(const ImplicationHypergraph& h) {
    auto succ = successors(h);
    std::vector<std::size_t> indegree(h.size(), 0);
    for (const auto& s : succ)
        for (auto u : s) ++indegree[u];

    std::priority_queue<VertexIndex, std::vector<VertexIndex>, std::greater<>> ready;
    for (VertexIndex v = 0; v < h.size(); ++v)
        if (indegree[v] == 0) ready.push(v);

    std::vector<VertexIndex> order;
    order.reserve(h.size());
    while (!ready.empty()) {
        auto v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto u : succ[v])
            if (--indegree[u] == 0) ready.push(u);
    }
    if (order.size() != h.size()) return std::nullopt;
    return order;
}

inline bool is_acyclic(const ImplicationHypergraph& h) { return topological_order(h).has_value(); }

} // namespace ihg
