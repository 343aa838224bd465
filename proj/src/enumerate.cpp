#include "smc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <future>
#include <mutex>

namespace smc {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kParallelDepth = 3;   // spawn threads this deep, at most 2^3 leaves

struct Ctx {
    SolveMode mode = SolveMode::all;
    long long limit = -1;
    bool parallel = false;
    int target_size = 0;            // solution size fixed at the root
    const EnumerateOptions* opt = nullptr;
    const MatchingSink* sink = nullptr;
    Clock::time_point start;
    std::atomic<long long> calls{0};
    std::atomic<long long> deleted{0};
    std::atomic<bool> stop{false};
    std::mutex emit_mutex;
    long long emitted = 0;                   // guarded by emit_mutex
    std::vector<double> emission_seconds;    // guarded by emit_mutex
    bool truncated = false;                  // guarded by emit_mutex
};

void emit(Ctx& ctx, const Matching& m)
{
    std::lock_guard<std::mutex> lock(ctx.emit_mutex);
    if (ctx.stop.load()) return;
    ctx.emission_seconds.push_back(
        std::chrono::duration<double>(Clock::now() - ctx.start).count());
    ++ctx.emitted;
    if (!(*ctx.sink)(m)) ctx.stop.store(true);
    if (ctx.limit >= 0 && ctx.emitted >= ctx.limit) {
        ctx.truncated = true;
        ctx.stop.store(true);
    }
}

void recurse(Ctx& ctx, MatchingDigraph d, std::vector<Vertex> required, int depth)
{
    if (ctx.stop.load(std::memory_order_relaxed)) return;
    ctx.calls.fetch_add(1, std::memory_order_relaxed);

    // A required vertex that did not survive makes this subtree empty.
    for (Vertex v : required)
        if (!d.live(v)) return;
    // Whatever shares a row or column with a required vertex is excluded.
    for (Vertex v : required) {
        for (int c : d.live_cols_in_row(v.row))
            if (c != v.col) d.set_mark({v.row, c}, Mark::avoid);
        for (int r : d.live_rows_in_col(v.col))
            if (r != v.row) d.set_mark({r, v.col}, Mark::avoid);
        d.set_mark(v, Mark::keep);
    }

    // An excluded vertex that is its row's or column's best choice would
    // force itself into the matching; delete it and restore the fixpoint.
    // Repeat until no excluded vertex sits at a best position.
    long long removed = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int r = 0; r < d.rows(); ++r) {
            const int c = d.row_best(r);
            if (c >= 0 && d.mark({r, c}) == Mark::avoid) {
                d.delete_vertex({r, c});
                removed += 1 + run_idua_seeded(d, {r}, {c});
                progress = true;
            }
        }
        for (int c = 0; c < d.cols(); ++c) {
            const int r = d.col_best(c);
            if (r >= 0 && d.mark({r, c}) == Mark::avoid) {
                d.delete_vertex({r, c});
                removed += 1 + run_idua_seeded(d, {r}, {c});
                progress = true;
            }
        }
    }
    ctx.deleted.fetch_add(removed, std::memory_order_relaxed);
    if (ctx.opt->on_reduced) ctx.opt->on_reduced(d, depth);

    auto [workers_best, firms_best] = extremal_matchings(d);
    // Any solution below this node would need target_size vertices; fewer
    // surviving rows, or a lost required vertex, ends the subtree.
    if (static_cast<int>(workers_best.size()) < ctx.target_size) return;
    for (Vertex v : required)
        if (!d.live(v)) return;

    if (workers_best == firms_best) {
        emit(ctx, workers_best);
        return;
    }
    if (ctx.mode == SolveMode::worker_optimal) {
        emit(ctx, workers_best);
        return;
    }
    if (ctx.mode == SolveMode::firm_optimal) {
        emit(ctx, firms_best);
        return;
    }

    const Vertex v = pick_branch_vertex(workers_best, firms_best);
    if (ctx.opt->on_branch) ctx.opt->on_branch(v, depth);

    std::vector<Vertex> required_more = required;
    required_more.push_back(v);
    if (ctx.parallel && depth < kParallelDepth) {
        MatchingDigraph with_v = d.snapshot();
        auto future = std::async(
            std::launch::async,
            [&ctx, depth](MatchingDigraph dd, std::vector<Vertex> rr) {
                recurse(ctx, std::move(dd), std::move(rr), depth + 1);
            },
            std::move(with_v), std::move(required_more));
        d.set_mark(v, Mark::avoid);
        recurse(ctx, std::move(d), std::move(required), depth + 1);
        future.get();
    } else {
        recurse(ctx, d.snapshot(), std::move(required_more), depth + 1);
        if (ctx.stop.load(std::memory_order_relaxed)) return;
        d.set_mark(v, Mark::avoid);
        recurse(ctx, std::move(d), std::move(required), depth + 1);
    }
}

}  // namespace

EnumerationStats enumerate_kernels(const NormalForm& nf, const PairConstraints& pc,
                                   const EnumerateOptions& opt, const MatchingSink& sink)
{
    Ctx ctx;
    ctx.mode = opt.mode;
    ctx.limit = opt.limit;
    ctx.parallel = opt.parallel;
    ctx.target_size = nf.matched_size;
    ctx.opt = &opt;
    ctx.sink = &sink;
    ctx.start = Clock::now();
    if (opt.limit == 0) {
        ctx.stop.store(true);
        ctx.truncated = true;
    }
    // A vertex both required and excluded leaves nothing to enumerate.
    bool contradictory = false;
    for (Vertex v : pc.v_in)
        if (std::binary_search(pc.v_out.begin(), pc.v_out.end(), v)) contradictory = true;

    if (contradictory) {
        // nothing to do
    } else if (nf.matched_size == 0) {
        // Degenerate grid: the empty matching is the one stable matching.
        if (pc.v_in.empty() && !ctx.stop.load()) emit(ctx, {});
    } else {
        MatchingDigraph root = nf.digraph.snapshot();
        for (Vertex v : pc.v_in)
            if (root.live(v)) root.set_mark(v, Mark::keep);
        for (Vertex v : pc.v_out)
            if (root.live(v)) root.set_mark(v, Mark::avoid);
        recurse(ctx, std::move(root), pc.v_in, 0);
    }

    EnumerationStats stats;
    stats.calls = ctx.calls.load();
    stats.deleted = ctx.deleted.load();
    stats.emitted = ctx.emitted;
    stats.matched_size = ctx.target_size;
    stats.truncated = ctx.truncated;
    stats.emission_seconds = std::move(ctx.emission_seconds);
    stats.total_seconds = std::chrono::duration<double>(Clock::now() - ctx.start).count();
    return stats;
}

Vertex pick_branch_vertex(const Matching& workers_best, const Matching& firms_best)
{
    std::vector<Vertex> only_workers;
    std::set_difference(workers_best.begin(), workers_best.end(), firms_best.begin(),
                        firms_best.end(), std::back_inserter(only_workers));
    assert(!only_workers.empty());
    return only_workers.front();
}

SolveOutcome solve(const Instance& inst, const AssignmentConstraints& ac,
                   const EnumerateOptions& opt, const SolutionSink& sink)
{
    SolveOutcome out;
    out.split = split_shared(inst);
    const NormalForm nf = normal_form(out.split);
    ConstraintReduction red = reduce_constraints(*out.split, nf, ac);
    out.dropped = std::move(red.dropped);
    if (red.infeasible) {
        out.infeasible = true;
        out.reason = std::move(red.reason);
        out.stats.matched_size = nf.matched_size;
        return out;
    }
    const SplitInstance& sp = *out.split;
    out.stats = enumerate_kernels(nf, red.pairs, opt, [&](const Matching& m) {
        return sink(m, merge_matching(sp, m));
    });
    return out;
}

}  // namespace smc
