#include "navtest/bench.hpp"

#include "navtest/errors.hpp"
#include "navtest/pathexpr.hpp"
#include "navtest/postman.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

namespace navtest {

Multidigraph random_multidigraph(int links, SplitMix64& rng, double new_vertex_probability) {
    std::vector<VertexId> vertices{"v0"};
    std::vector<Edge> edges;
    for (int k = 0; k < links; ++k) {
        VertexId from = vertices[rng.below(vertices.size())];
        VertexId to;
        if (rng.unit() < new_vertex_probability) {
            to = "v" + std::to_string(vertices.size());
            vertices.push_back(to);
        } else {
            to = vertices[rng.below(vertices.size())];
        }
        edges.push_back(Edge{"E" + std::to_string(k + 1), from, to, Cost(1), EdgeKind::real});
    }
    return Multidigraph(std::move(vertices), std::move(edges), "v0");
}

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
    std::vector<BenchRecord> records;
    SplitMix64 rng(cfg.seed);
    for (int links = 1; links <= cfg.max_links; ++links) {
        BenchRecord rec;
        rec.links = links;
        double cost_cpp = 0, cost_nr = 0, time_cpp = 0, time_nr = 0;
        int uncensored = 0;
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
            Multidigraph g =
                make_strongly_connected(random_multidigraph(links, rng, cfg.new_vertex_probability));

            auto t0 = std::chrono::steady_clock::now();
            CppSolution sol = solve_cpp(g);
            double elapsed = ms_since(t0);
            time_cpp += elapsed;
            rec.max_time_cpp_ms = std::max(rec.max_time_cpp_ms, elapsed);
            cost_cpp += boost::rational_cast<double>(sol.total_cost);

            t0 = std::chrono::steady_clock::now();
            try {
                PathExpr expr = node_reduce(build_matrix(g), g.home());
                std::vector<Path> paths = expand_to_paths(expr, g);
                time_nr += ms_since(t0);
                Cost c = path_set_cost(paths);
                cost_nr += boost::rational_cast<double>(c);
                ++uncensored;
                if (c < sol.total_cost) ++rec.dominance_violations;
            } catch (const Error& err) {
                if (err.code() != Errc::expansion_too_large) throw;
                time_nr += ms_since(t0);
                ++rec.censored_nr;
            }
        }
        rec.mean_cost_cpp = cost_cpp / cfg.repetitions;
        rec.mean_cost_nr = uncensored ? cost_nr / uncensored : 0;
        rec.mean_time_cpp_ms = time_cpp / cfg.repetitions;
        rec.mean_time_nr_ms = time_nr / cfg.repetitions;
        records.push_back(rec);
    }
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records, bool gnuplot) {
    const char sep = gnuplot ? ' ' : ',';
    if (gnuplot)
        out << "# links mean_cost_cpp mean_cost_nr mean_time_cpp_ms mean_time_nr_ms censored_nr\n";
    else
        out << "links,mean_cost_cpp,mean_cost_nr,mean_time_cpp_ms,mean_time_nr_ms,censored_nr\n";
    char buf[160];
    for (const BenchRecord& r : records) {
        std::snprintf(buf, sizeof buf, "%d%c%.4f%c%.4f%c%.4f%c%.4f%c%d\n", r.links, sep,
                      r.mean_cost_cpp, sep, r.mean_cost_nr, sep, r.mean_time_cpp_ms, sep,
                      r.mean_time_nr_ms, sep, r.censored_nr);
        out << buf;
    }
}

} // namespace navtest
