#include "smc/idua.hpp"

#include <algorithm>
#include <cassert>

namespace smc {

int reduction_pass(MatchingDigraph& d)
{
    const SplitInstance& sp = d.split();
    std::vector<Vertex> doomed;
    // Mark against the pass-start state, delete afterwards, so every pivot
    // condition is judged on the same digraph.
    for (int c = 0; c < d.cols(); ++c) {
        const int r = d.col_best(c);
        if (r < 0) continue;
        const int pivot_rank = sp.row_rank[r][c];
        for (int c2 : d.live_cols_in_row(r))
            if (sp.row_rank[r][c2] > pivot_rank) doomed.push_back({r, c2});
    }
    for (int r = 0; r < d.rows(); ++r) {
        const int c = d.row_best(r);
        if (c < 0) continue;
        const int pivot_rank = sp.col_rank[c][r];
        for (int r2 : d.live_rows_in_col(c))
            if (sp.col_rank[c][r2] > pivot_rank) doomed.push_back({r2, c});
    }
    std::sort(doomed.begin(), doomed.end());
    doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
    for (Vertex v : doomed) d.delete_vertex(v);
    return static_cast<int>(doomed.size());
}

long long run_idua_seeded(MatchingDigraph& d, const std::vector<int>& rows,
                          const std::vector<int>& cols, std::mt19937* shuffle)
{
    const SplitInstance& sp = d.split();
    const int R = d.rows();
    // Work items: r for row r, R + c for column c, each queued at most once.
    std::vector<char> pending(static_cast<size_t>(R + d.cols()), 0);
    std::vector<int> work;
    auto push = [&](int item) {
        if (!pending[item]) {
            pending[item] = 1;
            work.push_back(item);
        }
    };
    for (int r : rows) push(r);
    for (int c : cols) push(R + c);

    long long deleted = 0;
    // A settled item can only re-fire after its best-entry cursor advances;
    // deletions elsewhere just shrink the tails its condition looks at.
    auto remove = [&](Vertex v) {
        const bool was_row_best = d.row_best(v.row) == v.col;
        const bool was_col_best = d.col_best(v.col) == v.row;
        d.delete_vertex(v);
        ++deleted;
        if (was_row_best) push(v.row);
        if (was_col_best) push(R + v.col);
    };

    while (!work.empty()) {
        if (shuffle && work.size() > 1) {
            std::uniform_int_distribution<size_t> pick(0, work.size() - 1);
            std::swap(work[pick(*shuffle)], work.back());
        }
        const int item = work.back();
        work.pop_back();
        pending[item] = 0;
        if (item < R) {
            // The row's best vertex has no row arcs out; its column drops
            // every worker it ranks below that row.
            const int r = item;
            const int c = d.row_best(r);
            if (c < 0) continue;
            const int pivot_rank = sp.col_rank[c][r];
            for (int r2 = d.col_worst(c); r2 >= 0 && sp.col_rank[c][r2] > pivot_rank;
                 r2 = d.col_worst(c))
                remove({r2, c});
        } else {
            // The column's best vertex has no column arcs out; its row drops
            // every position it ranks below that column.
            const int c = item - R;
            const int r = d.col_best(c);
            if (r < 0) continue;
            const int pivot_rank = sp.row_rank[r][c];
            for (int c2 = d.row_worst(r); c2 >= 0 && sp.row_rank[r][c2] > pivot_rank;
                 c2 = d.row_worst(r))
                remove({r, c2});
        }
    }
    return deleted;
}

long long run_idua(MatchingDigraph& d, std::mt19937* shuffle)
{
    std::vector<int> rows(d.rows()), cols(d.cols());
    for (int r = 0; r < d.rows(); ++r) rows[r] = r;
    for (int c = 0; c < d.cols(); ++c) cols[c] = c;
    return run_idua_seeded(d, rows, cols, shuffle);
}

NormalForm make_normal_form(MatchingDigraph d)
{
    run_idua(d);
    NormalForm nf{std::move(d), 0, {}, {}};
    for (int r = 0; r < nf.digraph.rows(); ++r)
        if (!nf.digraph.row_empty(r)) nf.matched_rows.push_back(r);
    for (int c = 0; c < nf.digraph.cols(); ++c)
        if (!nf.digraph.col_empty(c)) nf.matched_cols.push_back(c);
    assert(nf.matched_rows.size() == nf.matched_cols.size());
    nf.matched_size = static_cast<int>(nf.matched_rows.size());
    return nf;
}

NormalForm normal_form(std::shared_ptr<const SplitInstance> split)
{
    return make_normal_form(MatchingDigraph::build(std::move(split)));
}

std::pair<Matching, Matching> extremal_matchings(const MatchingDigraph& d)
{
    Matching best_for_rows, best_for_cols;
    for (int r = 0; r < d.rows(); ++r)
        if (const int c = d.row_best(r); c >= 0) best_for_rows.push_back({r, c});
    for (int c = 0; c < d.cols(); ++c)
        if (const int r = d.col_best(c); r >= 0) best_for_cols.push_back({r, c});
    std::sort(best_for_cols.begin(), best_for_cols.end());
    return {std::move(best_for_rows), std::move(best_for_cols)};
}

OccupancyReport occupancy_report(const NormalForm& nf)
{
    const MatchingDigraph& d = nf.digraph;
    const SplitInstance& sp = d.split();
    OccupancyReport rep;
    for (int r = 0; r < d.rows(); ++r)
        if (d.row_empty(r)) rep.unemployed_workers.push_back(r);
    std::vector<char> short_firm(static_cast<size_t>(sp.base.num_firms()), 0);
    for (int c = 0; c < d.cols(); ++c)
        if (d.col_empty(c)) {
            rep.unfilled_columns.push_back(c);
            short_firm[static_cast<size_t>(sp.col_firm[c])] = 1;
        }
    for (int f = 0; f < sp.base.num_firms(); ++f)
        if (short_firm[static_cast<size_t>(f)]) rep.underfilled_firms.push_back(f);
    auto [workers_best, firms_best] = extremal_matchings(d);
    std::set_intersection(workers_best.begin(), workers_best.end(), firms_best.begin(),
                          firms_best.end(), std::back_inserter(rep.fixed_pairs));
    return rep;
}

}  // namespace smc
