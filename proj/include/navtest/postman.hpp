#pragma once

#include "navtest/navgraph.hpp"

namespace navtest {

/// Result of the directed Chinese Postman solver: a minimum-cost closed tour
/// from home covering every edge at least once, and that tour cut into test
/// paths at the reset edges.
struct CppSolution {
    std::vector<EdgeId> tour;  // closed walk, reset edges included
    std::vector<Path> paths;   // tour split at resets, resets removed
    Cost total_cost{0};        // weighted real-edge traversals of the tour
};

/// Deterministic directed CPP pipeline:
///   vertex imbalances -> Floyd-Warshall all-pairs costs -> min-cost
///   transportation by successive shortest paths -> duplicate edges along
///   the shipped shortest paths -> Euler circuit from home (Hierholzer) ->
///   split at reset edges.
/// Ties are always broken toward the lowest edge index in declaration order,
/// so the same graph yields the same tour on every platform.
/// Requires a strongly connected graph with non-negative weights.
CppSolution solve_cpp(const Multidigraph& g);

/// Cuts a closed walk at every reset edge; each maximal reset-free segment
/// becomes a Path, empty segments are dropped, first-traversal order kept.
std::vector<Path> tour_to_paths(const std::vector<EdgeId>& tour, const Multidigraph& g);

} // namespace navtest
