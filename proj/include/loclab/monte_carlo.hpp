#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "loclab/graph_ops.hpp"
#include "loclab/lcl.hpp"
#include "loclab/sim.hpp"

namespace loclab {

struct FailureStats {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::map<std::string, std::uint64_t> failure_kinds;
    std::uint64_t component_size_max = 0;    // over violating-center components
    double component_size_mean = 0.0;
    std::vector<std::uint64_t> trial_seeds;  // replay handles
    std::uint64_t seed = 0;
    std::uint64_t graph_digest = 0;

    double failure_fraction() const {
        return trials == 0 ? 0.0 : double(failures) / double(trials);
    }
};

// Independent (graph, execution) samples. A trial fails on any verifier
// violation or on a round-cap overrun; generator errors propagate as-is.
template <LocalAlgorithm A>
FailureStats monte_carlo(const std::function<Graph(std::uint64_t)>& recipe, const A& alg,
                         const LclProblem& problem, std::uint64_t trials, std::uint64_t seed,
                         int max_rounds, const EngineOptions& opt = {}) {
    require(trials >= 1, "monte_carlo: trials must be >= 1");
    FailureStats stats;
    stats.seed = seed;
    stats.trials = trials;
    std::uint64_t comp_count = 0, comp_total = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = mix64(seed, t, 0x7e1a15ULL);
        stats.trial_seeds.push_back(trial_seed);
        Graph g = recipe(trial_seed);
        if (t == 0) stats.graph_digest = g.digest();
        RunTrace trace = run_rand(g, alg, trial_seed, max_rounds, opt);
        bool failed = false;
        if (trace.hit_round_cap) {
            ++stats.failure_kinds["round_cap"];
            failed = true;
        }
        auto viols = verify(g, problem, trace.labels);
        if (!viols.empty()) {
            ++stats.failure_kinds["violation"];
            failed = true;
            std::vector<Vertex> centers;
            for (const auto& v : viols) centers.push_back(v.center);
            for (const auto& comp : connected_components(g, VertexSubset::of(centers, g.n()))) {
                stats.component_size_max = std::max(stats.component_size_max,
                                                    std::uint64_t(comp.size()));
                comp_total += comp.size();
                ++comp_count;
            }
        }
        if (failed) ++stats.failures;
    }
    if (comp_count > 0) stats.component_size_mean = double(comp_total) / double(comp_count);
    return stats;
}

} // namespace loclab
