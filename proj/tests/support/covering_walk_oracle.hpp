#pragma once

// Independent oracle for the postman solver: enumerate closed walks from
// home, depth-bounded at 2x the edge count, that cover every edge at least
// once, and report the cheapest real-edge cost found. Pure depth-first
// search over the graph's public API only; shares no code with the solver.

#include "navtest/navgraph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace navtest::testsupport {

inline std::optional<Cost> cheapest_covering_walk_cost(const Multidigraph& g) {
    const std::size_t edge_count = g.edge_count();
    if (edge_count > 60) throw std::logic_error("oracle is for small graphs only");
    const std::size_t depth_limit = 2 * edge_count;
    const std::uint64_t full = (1ULL << edge_count) - 1;
    const std::size_t home = g.vertex_index(g.home());

    // remaining[mask] = total weight of real edges not yet covered; a walk
    // can never finish cheaper than cost-so-far + remaining.
    std::optional<Cost> best;
    // dominance table: cheapest (cost, depth) pairs seen per (vertex, mask)
    std::map<std::pair<std::size_t, std::uint64_t>, std::vector<std::pair<Cost, std::size_t>>> seen;

    auto dominated = [&](std::size_t v, std::uint64_t mask, const Cost& cost, std::size_t depth) {
        auto& entries = seen[{v, mask}];
        for (auto& [c, d] : entries)
            if (c <= cost && d <= depth) return true;
        entries.emplace_back(cost, depth);
        return false;
    };

    Cost uncovered_total(0);
    for (const Edge& e : g.edges())
        if (e.kind == EdgeKind::real) uncovered_total += e.weight;

    struct Frame {
        std::size_t vertex;
        std::uint64_t mask;
        Cost cost;
        Cost uncovered;
        std::size_t depth;
    };
    std::vector<Frame> stack;
    stack.push_back({home, 0, Cost(0), uncovered_total, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (best && f.cost + f.uncovered >= *best) continue;
        if (f.mask == full && f.vertex == home) {
            if (!best || f.cost < *best) best = f.cost;
            continue;
        }
        if (f.depth == depth_limit) continue;
        if (dominated(f.vertex, f.mask, f.cost, f.depth)) continue;
        for (std::size_t ei : g.out_edge_indices(f.vertex)) {
            const Edge& e = g.edges()[ei];
            Frame next = f;
            next.vertex = g.vertex_index(e.to);
            next.depth = f.depth + 1;
            if (e.kind == EdgeKind::real) {
                next.cost = f.cost + e.weight;
                if (!(f.mask & (1ULL << ei))) next.uncovered = f.uncovered - e.weight;
            }
            next.mask = f.mask | (1ULL << ei);
            stack.push_back(next);
        }
    }
    return best;
}

} // namespace navtest::testsupport
