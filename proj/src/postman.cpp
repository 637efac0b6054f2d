#include "navtest/postman.hpp"

#include "navtest/errors.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace navtest {

namespace {

struct AllPairs {
    // dist[i][j]: cheapest i->j cost; via[i][j]: intermediate vertex on the
    // stored path, or npos when the direct edge first_edge[i][j] is used.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::optional<Cost>>> dist;
    std::vector<std::vector<std::size_t>> via;
    std::vector<std::vector<std::size_t>> first_edge;

    void append_path(std::size_t i, std::size_t j, std::vector<std::size_t>& out) const {
        if (i == j) return;
        if (via[i][j] == npos) {
            out.push_back(first_edge[i][j]);
            return;
        }
        append_path(i, via[i][j], out);
        append_path(via[i][j], j, out);
    }
};

AllPairs floyd_warshall(const Multidigraph& g) {
    std::size_t n = g.vertex_count();
    AllPairs ap;
    ap.dist.assign(n, std::vector<std::optional<Cost>>(n));
    ap.via.assign(n, std::vector<std::size_t>(n, AllPairs::npos));
    ap.first_edge.assign(n, std::vector<std::size_t>(n, AllPairs::npos));
    for (std::size_t v = 0; v < n; ++v) ap.dist[v][v] = Cost(0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges()[e];
        std::size_t u = g.vertex_index(edge.from), v = g.vertex_index(edge.to);
        if (u == v) continue; // self-loops never shorten any pair
        if (!ap.dist[u][v] || edge.weight < *ap.dist[u][v]) {
            ap.dist[u][v] = edge.weight;
            ap.first_edge[u][v] = e; // lowest index among parallel minima wins
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!ap.dist[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!ap.dist[k][j]) continue;
                Cost through = *ap.dist[i][k] + *ap.dist[k][j];
                if (!ap.dist[i][j] || through < *ap.dist[i][j]) {
                    ap.dist[i][j] = through;
                    ap.via[i][j] = k;
                }
            }
        }
    return ap;
}

// Minimum-cost transportation between surplus and deficit vertices by
// successive shortest paths on the bipartite residual network.
struct Shipment {
    std::size_t from_vertex, to_vertex;
    long long units;
};

std::vector<Shipment> solve_transport(const std::vector<std::pair<std::size_t, long long>>& surplus,
                                      const std::vector<std::pair<std::size_t, long long>>& deficit,
                                      const AllPairs& ap) {
    std::size_t ns = surplus.size(), nd = deficit.size();
    if (ns == 0) return {};
    // residual arc data: flow[s][d] between surplus s and deficit d
    std::vector<std::vector<long long>> flow(ns, std::vector<long long>(nd, 0));
    std::vector<long long> supply(ns), demand(nd);
    for (std::size_t s = 0; s < ns; ++s) supply[s] = surplus[s].second;
    for (std::size_t d = 0; d < nd; ++d) demand[d] = deficit[d].second;

    auto arc_cost = [&](std::size_t s, std::size_t d) -> const Cost& {
        auto& c = ap.dist[surplus[s].first][deficit[d].first];
        assert(c && "strongly connected graph always has a finite pair cost");
        return *c;
    };

    long long remaining = 0;
    for (long long u : supply) remaining += u;
    while (remaining > 0) {
        // label-correcting shortest path over the tiny residual graph:
        // node 0 = source, 1..ns = surplus, ns+1..ns+nd = deficit, last = sink
        std::size_t nodes = 1 + ns + nd + 1, sink = nodes - 1;
        std::vector<std::optional<Cost>> dist(nodes);
        std::vector<std::size_t> pred(nodes, AllPairs::npos);
        dist[0] = Cost(0);
        auto better = [&](std::size_t node, const Cost& candidate) {
            return !dist[node] || candidate < *dist[node];
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < ns; ++s)
                if (supply[s] > 0 && better(1 + s, *dist[0])) {
                    dist[1 + s] = dist[0];
                    pred[1 + s] = 0;
                    changed = true;
                }
            for (std::size_t s = 0; s < ns; ++s)
                for (std::size_t d = 0; d < nd; ++d) {
                    if (dist[1 + s] && better(1 + ns + d, *dist[1 + s] + arc_cost(s, d))) {
                        dist[1 + ns + d] = *dist[1 + s] + arc_cost(s, d);
                        pred[1 + ns + d] = 1 + s;
                        changed = true;
                    }
                    if (flow[s][d] > 0 && dist[1 + ns + d] &&
                        better(1 + s, *dist[1 + ns + d] - arc_cost(s, d))) {
                        dist[1 + s] = *dist[1 + ns + d] - arc_cost(s, d);
                        pred[1 + s] = 1 + ns + d;
                        changed = true;
                    }
                }
            for (std::size_t d = 0; d < nd; ++d)
                if (demand[d] > 0 && dist[1 + ns + d] && better(sink, *dist[1 + ns + d])) {
                    dist[sink] = dist[1 + ns + d];
                    pred[sink] = 1 + ns + d;
                    changed = true;
                }
        }
        assert(dist[sink] && "transportation problem must be feasible");

        long long bottleneck = remaining;
        for (std::size_t at = sink; at != 0; at = pred[at]) {
            std::size_t prev = pred[at];
            if (at == sink) {
                bottleneck = std::min(bottleneck, demand[prev - 1 - ns]);
            } else if (prev == 0) {
                bottleneck = std::min(bottleneck, supply[at - 1]);
            } else if (at <= ns) {
                bottleneck = std::min(bottleneck, flow[at - 1][prev - 1 - ns]); // residual arc
            } // forward surplus->deficit arcs are uncapacitated
        }
        for (std::size_t at = sink; at != 0; at = pred[at]) {
            std::size_t prev = pred[at];
            if (at == sink) {
                demand[prev - 1 - ns] -= bottleneck;
            } else if (prev == 0) {
                supply[at - 1] -= bottleneck;
            } else if (at > ns) {
                flow[prev - 1][at - 1 - ns] += bottleneck;
            } else {
                flow[at - 1][prev - 1 - ns] -= bottleneck;
            }
        }
        remaining -= bottleneck;
    }

    std::vector<Shipment> shipments;
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t d = 0; d < nd; ++d)
            if (flow[s][d] > 0)
                shipments.push_back({surplus[s].first, deficit[d].first, flow[s][d]});
    return shipments;
}

} // namespace

std::vector<Path> tour_to_paths(const std::vector<EdgeId>& tour, const Multidigraph& g) {
    if (!tour.empty()) {
        const Edge& first = g.edge(tour.front());
        if (first.from != g.home())
            throw Error(Errc::does_not_start_at_home,
                        "tour starts at '" + first.from + "', home is '" + g.home() + "'");
        VertexId at = g.home();
        for (const EdgeId& id : tour) {
            const Edge& e = g.edge(id);
            if (e.from != at)
                throw Error(Errc::not_a_walk, "edge '" + id + "' does not continue the walk at '" + at + "'");
            at = e.to;
        }
        if (at != g.home())
            throw Error(Errc::not_a_walk, "tour ends at '" + at + "' instead of closing at home");
    }
    std::vector<Path> paths;
    std::vector<EdgeId> segment;
    auto flush = [&] {
        if (!segment.empty()) paths.push_back(make_path(g, segment));
        segment.clear();
    };
    for (const EdgeId& id : tour) {
        if (g.edge(id).kind == EdgeKind::reset)
            flush();
        else
            segment.push_back(id);
    }
    flush();
    return paths;
}

CppSolution solve_cpp(const Multidigraph& g) {
    for (const Edge& e : g.edges())
        if (e.weight < Cost(0)) throw Error(Errc::negative_weight, "edge '" + e.id + "'");
    if (!is_strongly_connected(g))
        throw Error(Errc::not_strongly_connected, "the postman tour needs a strongly connected graph");

    std::size_t n = g.vertex_count();

    // 1. vertex imbalance: arrivals minus departures
    std::vector<long long> delta(n, 0);
    for (const Edge& e : g.edges()) {
        delta[g.vertex_index(e.to)] += 1;
        delta[g.vertex_index(e.from)] -= 1;
    }

    // 2.-4. balance the graph by duplicating edges along cheapest routes
    std::vector<std::size_t> duplicates; // edge indices, in shipment order
    std::vector<std::pair<std::size_t, long long>> surplus, deficit;
    for (std::size_t v = 0; v < n; ++v) {
        if (delta[v] > 0) surplus.emplace_back(v, delta[v]);
        if (delta[v] < 0) deficit.emplace_back(v, -delta[v]);
    }
    if (!surplus.empty()) {
        AllPairs ap = floyd_warshall(g);
        for (const Shipment& sh : solve_transport(surplus, deficit, ap)) {
            std::vector<std::size_t> route;
            ap.append_path(sh.from_vertex, sh.to_vertex, route);
            for (long long u = 0; u < sh.units; ++u)
                duplicates.insert(duplicates.end(), route.begin(), route.end());
        }
    }

    // 5. Euler circuit from home over original edges plus duplicates,
    //    lowest edge index first at every step
    std::vector<std::size_t> instance_edge; // instance id -> edge index
    for (std::size_t e = 0; e < g.edge_count(); ++e) instance_edge.push_back(e);
    for (std::size_t e : duplicates) instance_edge.push_back(e);

    std::vector<std::vector<std::size_t>> out(n); // vertex -> instance ids
    for (std::size_t inst = 0; inst < instance_edge.size(); ++inst)
        out[g.vertex_index(g.edges()[instance_edge[inst]].from)].push_back(inst);
    for (auto& lst : out)
        std::sort(lst.begin(), lst.end(), [&](std::size_t a, std::size_t b) {
            return std::make_pair(instance_edge[a], a) < std::make_pair(instance_edge[b], b);
        });

    std::vector<std::size_t> cursor(n, 0);
    std::vector<std::size_t> circuit; // built back to front
    // explicit stack instead of recursion: fixture graphs may be large
    std::vector<std::pair<std::size_t, std::size_t>> stack; // (vertex, instance taken to get here)
    stack.emplace_back(g.vertex_index(g.home()), AllPairs::npos);
    while (!stack.empty()) {
        auto [v, via_inst] = stack.back();
        if (cursor[v] < out[v].size()) {
            std::size_t inst = out[v][cursor[v]++];
            stack.emplace_back(g.vertex_index(g.edges()[instance_edge[inst]].to), inst);
        } else {
            stack.pop_back();
            if (via_inst != AllPairs::npos) circuit.push_back(via_inst);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    assert(circuit.size() == instance_edge.size() && "graph must be Eulerian after balancing");

    CppSolution sol;
    for (std::size_t inst : circuit) sol.tour.push_back(g.edges()[instance_edge[inst]].id);
    sol.paths = tour_to_paths(sol.tour, g);
    sol.total_cost = path_set_cost(sol.paths);
    return sol;
}

} // namespace navtest
