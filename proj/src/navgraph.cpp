#include "navtest/navgraph.hpp"

#include "navtest/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace navtest {

Multidigraph::Multidigraph(std::vector<VertexId> vertices, std::vector<Edge> edges, VertexId home)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), home_(std::move(home)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i], i).second)
            throw Error(Errc::duplicate_vertex_id, "vertex '" + vertices_[i] + "' declared twice");
    }
    if (vertex_index_.count(home_) == 0)
        throw Error(Errc::unknown_vertex, "home vertex '" + home_ + "' is not declared");
    adjacency_.resize(vertices_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!edge_index_.emplace(e.id, i).second)
            throw Error(Errc::duplicate_edge_id, "edge '" + e.id + "' declared twice");
        auto from = vertex_index_.find(e.from);
        if (from == vertex_index_.end())
            throw Error(Errc::unknown_vertex, "edge '" + e.id + "' leaves undeclared vertex '" + e.from + "'");
        if (vertex_index_.count(e.to) == 0)
            throw Error(Errc::unknown_vertex, "edge '" + e.id + "' enters undeclared vertex '" + e.to + "'");
        if (e.weight < Cost(0))
            throw Error(Errc::negative_weight, "edge '" + e.id + "' has negative weight");
        if (e.kind == EdgeKind::reset && e.to != home_)
            throw Error(Errc::unknown_vertex, "reset edge '" + e.id + "' must point at home");
        adjacency_[from->second].push_back(i);
    }
}

std::size_t Multidigraph::vertex_index(const VertexId& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end()) throw Error(Errc::unknown_vertex, "no vertex named '" + v + "'");
    return it->second;
}

const Edge& Multidigraph::edge(const EdgeId& id) const { return edges_[edge_index(id)]; }

std::size_t Multidigraph::edge_index(const EdgeId& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw Error(Errc::unknown_edge, "no edge named '" + id + "'");
    return it->second;
}

std::size_t Multidigraph::real_out_degree(std::size_t vertex) const {
    std::size_t n = 0;
    for (std::size_t e : adjacency_[vertex])
        if (edges_[e].kind == EdgeKind::real) ++n;
    return n;
}

Path make_path(const Multidigraph& g, const std::vector<EdgeId>& edge_ids) {
    Path p;
    p.edges = edge_ids;
    VertexId at = g.home();
    bool first = true;
    for (const EdgeId& id : edge_ids) {
        const Edge& e = g.edge(id);
        if (e.kind == EdgeKind::reset)
            throw Error(Errc::not_a_walk, "reset edge '" + id + "' may not appear in a path");
        if (e.from != at) {
            if (first)
                throw Error(Errc::does_not_start_at_home,
                            "path starts at '" + e.from + "', home is '" + g.home() + "'");
            throw Error(Errc::not_a_walk, "edge '" + id + "' does not continue the walk at '" + at + "'");
        }
        p.cost += e.weight;
        at = e.to;
        first = false;
    }
    return p;
}

namespace {

// Forward reachability over declared out-edges; `transpose` flips direction.
std::vector<bool> reachable_from(const Multidigraph& g, std::size_t start, bool transpose) {
    std::vector<std::vector<std::size_t>> adj(g.vertex_count());
    for (const Edge& e : g.edges()) {
        std::size_t u = g.vertex_index(e.from), v = g.vertex_index(e.to);
        if (transpose) std::swap(u, v);
        adj[u].push_back(v);
    }
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return seen;
}

} // namespace

bool is_strongly_connected(const Multidigraph& g) {
    std::size_t home = g.vertex_index(g.home());
    auto fwd = reachable_from(g, home, false);
    auto bwd = reachable_from(g, home, true);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

Multidigraph make_strongly_connected(const Multidigraph& g) {
    std::size_t home = g.vertex_index(g.home());
    auto fwd = reachable_from(g, home, false);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!fwd[v])
            throw Error(Errc::not_reachable_from_home,
                        "vertex '" + g.vertices()[v] + "' is not reachable from home");

    std::vector<Edge> edges = g.edges();
    int next_reset = 1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.real_out_degree(v) != 0) continue;
        bool has_reset = false;
        for (std::size_t e : g.out_edge_indices(v))
            if (g.edges()[e].kind == EdgeKind::reset) has_reset = true;
        if (has_reset) continue; // already augmented; keeps the op idempotent
        EdgeId id;
        do {
            id = "R" + std::to_string(next_reset++);
        } while (g.has_edge(id));
        edges.push_back(Edge{id, g.vertices()[v], g.home(), Cost(0), EdgeKind::reset});
    }

    Multidigraph result(g.vertices(), std::move(edges), g.home());
    if (!is_strongly_connected(result)) {
        auto bwd = reachable_from(result, home, true);
        for (std::size_t v = 0; v < result.vertex_count(); ++v)
            if (!bwd[v])
                throw Error(Errc::not_strongly_connected_after_augmentation,
                            "vertex '" + result.vertices()[v] + "' cannot reach home");
        throw Error(Errc::not_strongly_connected_after_augmentation, "augmentation failed");
    }
    return result;
}

Cost path_set_cost(const std::vector<Path>& paths) {
    Cost total(0);
    for (const Path& p : paths) total += p.cost;
    return total;
}

bool covers_all_real_edges(const Multidigraph& g, const std::vector<Path>& paths) {
    std::set<EdgeId> seen;
    for (const Path& p : paths)
        for (const EdgeId& id : p.edges) seen.insert(id);
    for (const Edge& e : g.edges())
        if (e.kind == EdgeKind::real && seen.count(e.id) == 0) return false;
    return true;
}

Multidigraph load_graph_fixture(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<VertexId> vertices;
    std::set<VertexId> seen;
    std::vector<Edge> edges;
    VertexId home;
    int lineno = 0;
    auto note_vertex = [&](const VertexId& v) {
        if (seen.insert(v).second) vertices.push_back(v);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string id, from, to, weight;
        if (!(fields >> id)) continue; // blank line
        if (!(fields >> from >> to >> weight))
            throw Error(Errc::fixture_syntax,
                        "line " + std::to_string(lineno) + ": expected 'id from to weight'");
        std::string extra;
        if (fields >> extra)
            throw Error(Errc::fixture_syntax,
                        "line " + std::to_string(lineno) + ": trailing field '" + extra + "'");
        if (home.empty()) home = from;
        note_vertex(from);
        note_vertex(to);
        edges.push_back(Edge{id, from, to, parse_cost(weight), EdgeKind::real});
    }
    if (edges.empty()) throw Error(Errc::fixture_syntax, "fixture declares no edges");
    return Multidigraph(std::move(vertices), std::move(edges), std::move(home));
}

} // namespace navtest
