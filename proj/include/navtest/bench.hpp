#pragma once

#include "navtest/navgraph.hpp"
#include "navtest/rng.hpp"

#include <iosfwd>

namespace navtest {

struct BenchConfig {
    int max_links = 50;
    int repetitions = 100;
    std::uint64_t seed = 1;
    double new_vertex_probability = 0.4;
};

/// Mean cost/time of both path-decomposition methods at one link count.
struct BenchRecord {
    int links = 0;
    double mean_cost_cpp = 0;
    double mean_cost_nr = 0;
    double mean_time_cpp_ms = 0;
    double mean_time_nr_ms = 0;
    int censored_nr = 0;          // node-reduction runs that hit the expansion cap
    int dominance_violations = 0; // uncensored instances where NR cost < CPP cost
    double max_time_cpp_ms = 0;
};

/// Random multidigraph grown one edge at a time: the source is uniform over
/// existing vertices and the destination is a fresh vertex with probability
/// `new_vertex_probability`, else uniform over existing ones. Loops and
/// parallel edges arise naturally; every vertex stays reachable from home.
Multidigraph random_multidigraph(int links, SplitMix64& rng, double new_vertex_probability = 0.4);

/// Runs node reduction and the postman solver over `repetitions` random
/// graphs per link count (1..max_links), timing both and averaging.
std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg);

/// CSV with columns links, mean_cost_cpp, mean_cost_nr, mean_time_cpp_ms,
/// mean_time_nr_ms, censored_nr. `gnuplot` switches to space-separated
/// columns behind a '#' header line.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records, bool gnuplot = false);

} // namespace navtest
