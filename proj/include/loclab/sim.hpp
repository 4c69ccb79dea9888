#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "loclab/graph.hpp"
#include "loclab/rng.hpp"

namespace loclab {

// What a vertex is allowed to know. Locality is structural: step() receives
// nothing but this, its own state, its inbox, and its private random bits.
struct VertexContext {
    int degree = 0;
    std::optional<std::uint64_t> id;    // absent under RandLOCAL
    std::uint64_t n_param = 0;          // the instance size the vertex was told
    int delta_param = 0;
    const std::map<std::string, double>* params = nullptr; // extra global parameters
};

using Message = std::string;
using Outbox = std::vector<std::pair<int, Message>>; // (port, payload), ports unique
using Inbox = std::vector<std::pair<int, Message>>;  // sorted by receiving port

struct StepResult {
    Outbox out;
    bool halt = false;
};

// Algorithms implement: a default-constructible State, and
//   StepResult step(State&, int round, const Inbox&, const VertexContext&, BitSource&) const
//   Label      output(const State&, const VertexContext&) const
// Round 0 is init: it runs before any communication and its inbox is empty.
// A "0-round algorithm" halts at round 0 without sending.
template <class A>
concept LocalAlgorithm = requires(const A& a, typename A::State& st, const Inbox& in,
                                  const VertexContext& ctx, BitSource& bits) {
    requires std::default_initializable<typename A::State>;
    { a.step(st, 0, in, ctx, bits) } -> std::convertible_to<StepResult>;
    { a.output(st, ctx) } -> std::convertible_to<std::int64_t>;
};

struct RunTrace {
    int rounds_used = 0;                  // communication rounds executed (round 0 excluded)
    std::uint64_t messages_sent = 0;
    std::vector<int> per_round_active;    // index t-1 = vertices stepping in round t
    std::vector<std::uint64_t> per_round_messages; // index 0 = sent at round 0
    std::vector<std::int64_t> labels;
    bool all_halted = true;
    bool hit_round_cap = false;
    std::uint64_t seed = 0;
    std::uint64_t graph_digest = 0;
};

struct EngineOptions {
    int workers = 1;
    std::size_t max_message_bytes = 1 << 20; // soft cap; exceeding is a distinct diagnostic
    bool accept_radius_limited_ids = false;  // caller declares the algorithm compatible
    std::vector<std::uint64_t> stream_keys;  // per-vertex randomness keys; default = index
    std::map<std::string, double> params;    // extra read-only global parameters
};

namespace detail {

inline void sim_parallel_for(int n, int workers, const std::function<void(int, int)>& body) {
    if (workers <= 1 || n < 2 * workers) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

template <LocalAlgorithm A>
RunTrace run_engine(const Graph& g, const A& alg, std::uint64_t seed, int max_rounds,
                    const EngineOptions& opt, const IdAssignment* ids, bool randomized) {
    int n = g.n();
    require(max_rounds >= 0, "engine: negative round cap");
    if (!opt.stream_keys.empty())
        require(int(opt.stream_keys.size()) == n, "engine: stream_keys size mismatch");

    std::vector<typename A::State> state(n);
    std::vector<char> halted(n, 0);
    std::vector<Outbox> outbox(n);
    std::vector<Inbox> inbox(n);

    RunTrace trace;
    trace.seed = seed;
    trace.graph_digest = g.digest();

    auto context_for = [&](Vertex v) {
        VertexContext ctx;
        ctx.degree = g.degree(v);
        if (ids) ctx.id = ids->ids[v];
        ctx.n_param = std::uint64_t(n);
        ctx.delta_param = g.delta();
        ctx.params = &opt.params;
        return ctx;
    };
    auto stream_key = [&](Vertex v) {
        return opt.stream_keys.empty() ? std::uint64_t(v) : opt.stream_keys[v];
    };

    auto run_vertex = [&](Vertex v, int round) {
        VertexContext ctx = context_for(v);
        StepResult res;
        if (randomized) {
            StreamBits bits(vertex_round_stream(seed, stream_key(v), std::uint64_t(round)));
            res = alg.step(state[v], round, inbox[v], ctx, bits);
        } else {
            NoBits bits;
            res = alg.step(state[v], round, inbox[v], ctx, bits);
        }
        // ports valid and unique, payloads under the soft cap
        std::sort(res.out.begin(), res.out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < res.out.size(); ++i) {
            require(res.out[i].first >= 0 && res.out[i].first < ctx.degree,
                    "engine: message to invalid port", ErrorKind::defect);
            require(i == 0 || res.out[i].first != res.out[i - 1].first,
                    "engine: duplicate port in outbox", ErrorKind::defect);
            require(res.out[i].second.size() <= opt.max_message_bytes,
                    "engine: message exceeds soft cap", ErrorKind::cap);
        }
        outbox[v] = std::move(res.out);
        if (res.halt) halted[v] = 1;
    };

    // round 0: init, empty inboxes
    sim_parallel_for(n, opt.workers, [&](int lo, int hi) {
        for (Vertex v = lo; v < hi; ++v) run_vertex(v, 0);
    });
    std::uint64_t sent = 0;
    for (Vertex v = 0; v < n; ++v) sent += outbox[v].size();
    trace.per_round_messages.push_back(sent);
    trace.messages_sent += sent;

    for (int round = 1; round <= max_rounds; ++round) {
        bool any_pending = sent > 0;
        std::vector<Vertex> active;
        for (Vertex v = 0; v < n; ++v)
            if (!halted[v]) active.push_back(v);
        if (active.empty() && !any_pending) break;

        // deliver round-(t-1) outboxes as round-t inboxes
        for (Vertex v = 0; v < n; ++v) inbox[v].clear();
        for (Vertex u = 0; u < n; ++u) {
            auto nb = g.neighbors(u);
            for (auto& [port, msg] : outbox[u]) {
                Vertex v = nb[port];
                inbox[v].push_back({g.port_of(v, u), std::move(msg)});
            }
            outbox[u].clear();
        }
        for (Vertex v = 0; v < n; ++v)
            std::sort(inbox[v].begin(), inbox[v].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

        if (active.empty()) break; // in-flight messages with nobody left to read them

        trace.rounds_used = round;
        trace.per_round_active.push_back(int(active.size()));
        sim_parallel_for(int(active.size()), opt.workers, [&](int lo, int hi) {
            for (int i = lo; i < hi; ++i) run_vertex(active[i], round);
        });
        sent = 0;
        for (Vertex v = 0; v < n; ++v) sent += outbox[v].size();
        trace.per_round_messages.push_back(sent);
        trace.messages_sent += sent;
    }

    for (Vertex v = 0; v < n; ++v)
        if (!halted[v]) {
            trace.all_halted = false;
            trace.hit_round_cap = true;
            break;
        }

    trace.labels.resize(n);
    for (Vertex v = 0; v < n; ++v) trace.labels[v] = alg.output(state[v], context_for(v));
    return trace;
}

} // namespace detail

// DetLOCAL execution: unique IDs, no randomness.
template <LocalAlgorithm A>
RunTrace run_det(const Graph& g, const IdAssignment& ids, const A& alg, int max_rounds,
                 const EngineOptions& opt = {}) {
    require(int(ids.ids.size()) == g.n(), "run_det: ids size mismatch");
    if (!ids.shortened) ids.require_globally_distinct();
    else require(opt.accept_radius_limited_ids,
                 "run_det: shortened IDs need accept_radius_limited_ids");
    return detail::run_engine(g, alg, 0, max_rounds, opt, &ids, false);
}

// RandLOCAL execution: undifferentiated vertices, per-vertex random streams.
// Deterministic function of (graph, seed) for any worker count.
template <LocalAlgorithm A>
RunTrace run_rand(const Graph& g, const A& alg, std::uint64_t seed, int max_rounds,
                  const EngineOptions& opt = {}) {
    return detail::run_engine(g, alg, seed, max_rounds, opt, nullptr, true);
}

} // namespace loclab
