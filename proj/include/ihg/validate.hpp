#pragma once

// Structural checks for strictness and minimality. Findings are data, not
// exceptions: the caller decides what to do with warnings.

#include "ihg/hypergraph.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace ihg {

enum class RuleId { SelfIntersectingEdge, Strictness, MinimalityShortcut, MinimalitySupersetTail, DuplicateEdge };

enum class Severity { Error, Warning };

inline std::string_view to_string(RuleId r) {
    switch (r) {
    case RuleId::SelfIntersectingEdge: return "SELF_INTERSECTING_EDGE";
    case RuleId::Strictness: return "STRICTNESS";
    case RuleId::MinimalityShortcut: return "MINIMALITY_SHORTCUT";
    case RuleId::MinimalitySupersetTail: return "MINIMALITY_SUPERSET_TAIL";
    case RuleId::DuplicateEdge: return "DUPLICATE_EDGE";
    }
    return "UNKNOWN";
}

inline std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }

struct Finding {
    RuleId rule;
    Severity severity;
    std::vector<std::size_t> edges;    // indices into h.edges()
    std::vector<VertexIndex> vertices; // indices into h.propositions()
    std::string message;

    friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool has_errors() const {
        return std::any_of(findings.begin(), findings.end(), [](const Finding& f) { return f.severity == Severity::Error; });
    }
    bool empty() const { return findings.empty(); }
};

namespace detail {

inline std::string edge_text(const ImplicationHypergraph& h, std::size_t e) {
    auto join = [&](const VertexSet& s) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += " & ";
            out += h.id(s[i]);
        }
        return out;
    };
    const auto& edge = h.edges()[e];
    return "edge " + std::to_string(e) + " (" + join(edge.tail) + " => " + join(edge.head) + ")";
}

/// True when `target` is reachable from `start` without entering `avoid`.
inline bool reachable_avoiding(const std::vector<VertexSet>& succ, VertexIndex start, VertexIndex target, VertexIndex avoid) {
    if (start == target) return true;
    std::vector<bool> seen(succ.size(), false);
    std::vector<VertexIndex> stack{start};
    seen[start] = true;
    seen[avoid] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : succ[v]) {
            if (w == target) return true;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return false;
}

} // namespace detail

inline ValidationReport validate(const ImplicationHypergraph& h) {
    ValidationReport report;
    const auto& edges = h.edges();

    for (std::size_t e = 0; e < edges.size(); ++e) {
        VertexSet common;
        std::set_intersection(edges[e].tail.begin(), edges[e].tail.end(), edges[e].head.begin(), edges[e].head.end(),
                              std::back_inserter(common));
        if (!common.empty())
            report.findings.push_back({RuleId::SelfIntersectingEdge, Severity::Error, {e}, common,
                                       detail::edge_text(h, e) + " has propositions on both sides"});
    }

    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (std::size_t f = e + 1; f < edges.size(); ++f) {
            const auto& a = edges[e];
            const auto& b = edges[f];
            if (a == b) {
                report.findings.push_back({RuleId::DuplicateEdge, Severity::Error, {e, f}, {},
                                           detail::edge_text(h, f) + " duplicates edge " + std::to_string(e)});
                continue;
            }
            if (a.tail == b.head && a.head == b.tail) {
                report.findings.push_back({RuleId::Strictness, Severity::Error, {e, f}, {},
                                           detail::edge_text(h, f) + " reverses " + detail::edge_text(h, e)});
            }
            if (a.head == b.head && a.tail != b.tail) {
                bool a_in_b = std::includes(b.tail.begin(), b.tail.end(), a.tail.begin(), a.tail.end());
                bool b_in_a = std::includes(a.tail.begin(), a.tail.end(), b.tail.begin(), b.tail.end());
                if (a_in_b || b_in_a) {
                    auto small = a_in_b ? e : f;
                    auto large = a_in_b ? f : e;
                    report.findings.push_back({RuleId::MinimalitySupersetTail, Severity::Warning, {small, large}, {},
                                               detail::edge_text(h, large) + " has a tail strictly containing the tail of " +
                                                   detail::edge_text(h, small)});
                }
            }
        }
    }

    // Shortcut: arc v -> u alongside a longer path v -> w -> ... -> u.
    auto succ = successors(h);
    for (const auto& [v, u] : dependency_digraph(h)) {
        for (auto w : succ[v]) {
            if (w == u) continue;
            if (detail::reachable_avoiding(succ, w, u, v)) {
                std::vector<std::size_t> carriers;
                for (std::size_t e = 0; e < edges.size(); ++e)
                    if (std::binary_search(edges[e].tail.begin(), edges[e].tail.end(), v) &&
                        std::binary_search(edges[e].head.begin(), edges[e].head.end(), u))
                        carriers.push_back(e);
                report.findings.push_back({RuleId::MinimalityShortcut, Severity::Warning, std::move(carriers), {v, u},
                                           "arc " + h.id(v) + " -> " + h.id(u) + " shortcuts the path through " + h.id(w)});
                break;
            }
        }
    }
    return report;
}

} // namespace ihg
