#pragma once

#include "navtest/cost.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace navtest {

using VertexId = std::string;
using EdgeId = std::string;

enum class EdgeKind { real, reset };

/// One directed labeled link. Reset edges are the zero-cost virtual links
/// back to the home page that make a navigation graph strongly connected.
struct Edge {
    EdgeId id;
    VertexId from;
    VertexId to;
    Cost weight{1};
    EdgeKind kind{EdgeKind::real};

    bool operator==(const Edge&) const = default;
};

/// Weighted directed graph with parallel edges and self-loops. Vertices and
/// edges keep their declaration order; all tie-breaking downstream leans on
/// that order. Immutable after construction.
class Multidigraph {
public:
    /// Validates: home is a vertex, endpoints are vertices, edge ids unique,
    /// weights non-negative, reset edges point at home.
    Multidigraph(std::vector<VertexId> vertices, std::vector<Edge> edges, VertexId home);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const VertexId& home() const { return home_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Index of a vertex in declaration order; throws UnknownVertex.
    std::size_t vertex_index(const VertexId& v) const;
    bool has_vertex(const VertexId& v) const { return vertex_index_.count(v) != 0; }

    /// Edge lookup by id; throws UnknownEdge.
    const Edge& edge(const EdgeId& id) const;
    std::size_t edge_index(const EdgeId& id) const;
    bool has_edge(const EdgeId& id) const { return edge_index_.count(id) != 0; }

    /// Out-edge indices of a vertex, ascending in declaration order.
    const std::vector<std::size_t>& out_edge_indices(const VertexId& v) const {
        return adjacency_[vertex_index(v)];
    }
    const std::vector<std::size_t>& out_edge_indices(std::size_t vertex) const {
        return adjacency_[vertex];
    }

    std::size_t real_out_degree(std::size_t vertex) const;

    bool operator==(const Multidigraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_ && home_ == other.home_;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    VertexId home_;
    std::unordered_map<VertexId, std::size_t> vertex_index_;
    std::unordered_map<EdgeId, std::size_t> edge_index_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// A walk over real edges, anchored at home.
struct Path {
    std::vector<EdgeId> edges;
    Cost cost{0};

    bool operator==(const Path&) const = default;
};

/// Builds a Path from edge ids, checking incidence and the home anchor, and
/// computes its cost from the graph's weights. Reset edges are rejected.
Path make_path(const Multidigraph& g, const std::vector<EdgeId>& edge_ids);

/// True iff every ordered vertex pair is joined by a directed path. Runs two
/// reachability sweeps: home forward, and home forward on the transpose.
bool is_strongly_connected(const Multidigraph& g);

/// Copy of g where every vertex without real out-edges (and without an
/// existing reset edge) gains one zero-weight reset edge back to home.
/// Requires every vertex reachable from home; the result must come out
/// strongly connected or an error names a vertex that cannot reach home.
Multidigraph make_strongly_connected(const Multidigraph& g);

/// Total weighted real-edge traversals over a path set. Reset edges cost 0,
/// so this is just the sum of the member path costs.
Cost path_set_cost(const std::vector<Path>& paths);

/// Coverage predicate shared by the solver and path-algebra suites: a path
/// set covers g iff every real edge id of g appears in at least one path.
bool covers_all_real_edges(const Multidigraph& g, const std::vector<Path>& paths);

/// Plain-text edge list: one `id from to weight` per line, '#' comments.
/// The home vertex is the source of the first edge.
Multidigraph load_graph_fixture(const std::string& text);

} // namespace navtest
