#include "smc/constraints.hpp"

#include <algorithm>
#include <set>

namespace smc {

namespace {

bool contains(const std::vector<int>& sorted, int x)
{
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

ConstraintReduction reduce_constraints(const SplitInstance& split, const NormalForm& nf,
                                       const AssignmentConstraints& ac)
{
    const MatchingDigraph& d = nf.digraph;
    ConstraintReduction out;
    std::set<Vertex> v_in, v_out;

    auto fail = [&](std::string why) {
        out.infeasible = true;
        out.reason = std::move(why);
        out.pairs = {};
        return out;
    };
    auto live_cols_of_firm = [&](int w, int f) {
        std::vector<int> cols;
        for (int c : split.firm_cols[f])
            if (d.live(w, c)) cols.push_back(c);
        return cols;
    };

    // Forbidden firms: exclude each live (worker, copy); pairings already
    // eliminated can never occur, so forbidding them is redundant.
    for (const auto& [w, firms] : ac.firms_out)
        for (int f : firms) {
            auto cols = live_cols_of_firm(w, f);
            if (cols.empty())
                out.dropped.push_back("f_out " + split.row_name(w) + ": " + split.base.firm_names[f]
                                      + " never employs " + split.row_name(w)
                                      + " in a stable matching");
            for (int c : cols) v_out.insert({w, c});
        }
    for (const auto& [f, workers] : ac.workers_out)
        for (int w : workers) {
            auto cols = live_cols_of_firm(w, f);
            if (cols.empty())
                out.dropped.push_back("w_out " + split.base.firm_names[f] + ": " + split.row_name(w)
                                      + " never works there in a stable matching");
            for (int c : cols) v_out.insert({w, c});
        }

    // Required firms: a worker with an empty row is unemployed in every
    // stable matching, so any requirement on it is unsatisfiable. Otherwise
    // the worker is employed in every stable matching, and restricting the
    // employer to a set is the same as excluding the rest of the row — or
    // requiring the one candidate left.
    for (const auto& [w, firms] : ac.firms_in) {
        if (firms.empty()) continue;
        if (d.row_empty(w))
            return fail("f_in " + split.row_name(w) + ": " + split.row_name(w)
                        + " is unemployed in every stable matching");
        std::vector<Vertex> candidates;
        for (int f : firms) {
            auto cols = live_cols_of_firm(w, f);
            if (cols.empty())
                out.dropped.push_back("f_in " + split.row_name(w) + ": " + split.base.firm_names[f]
                                      + " never employs " + split.row_name(w)
                                      + " in a stable matching");
            for (int c : cols) candidates.push_back({w, c});
        }
        if (candidates.empty())
            return fail("f_in " + split.row_name(w) + ": no required firm can employ "
                        + split.row_name(w) + " in any stable matching");
        if (candidates.size() == 1) {
            v_in.insert(candidates.front());
        } else {
            for (int c : d.live_cols_in_row(w))
                if (!contains(firms, split.col_firm[c])) v_out.insert({w, c});
        }
    }

    // Allowed sets: every live outsider of each surviving copy is excluded.
    // When the firm has a single surviving copy and the allowed set narrows
    // to one live candidate, that assignment is simply required. With
    // several copies we always compile to exclusions: whether the allowed
    // set is large enough to fill every copy is for the search's size check
    // to decide, not for the reduction to prejudge.
    for (const auto& [f, workers] : ac.workers_in) {
        if (workers.empty()) continue;
        for (int w : workers)
            if (live_cols_of_firm(w, f).empty())
                out.dropped.push_back("w_in " + split.base.firm_names[f] + ": " + split.row_name(w)
                                      + " never works there in a stable matching");
        std::vector<int> surviving;
        for (int c : split.firm_cols[f])
            if (!d.col_empty(c)) surviving.push_back(c);
        if (surviving.size() == 1) {
            std::vector<int> allowed;
            for (int w : d.live_rows_in_col(surviving.front()))
                if (contains(workers, w)) allowed.push_back(w);
            if (allowed.size() == 1) {
                v_in.insert({allowed.front(), surviving.front()});
                continue;
            }
        }
        for (int c : surviving)
            for (int w : d.live_rows_in_col(c))
                if (!contains(workers, w)) v_out.insert({w, c});
    }

    // Two required vertices sharing a row or column cannot both be matched.
    for (auto it = v_in.begin(); it != v_in.end(); ++it)
        for (auto jt = std::next(it); jt != v_in.end(); ++jt)
            if (it->row == jt->row || it->col == jt->col)
                return fail("required assignments " + to_string(split, *it) + " and "
                            + to_string(split, *jt) + " conflict");
    for (Vertex v : v_in)
        if (v_out.count(v))
            return fail("assignment " + to_string(split, v) + " is both required and excluded");

    out.pairs.v_in.assign(v_in.begin(), v_in.end());
    out.pairs.v_out.assign(v_out.begin(), v_out.end());
    return out;
}

bool satisfies_constraints(const Instance& inst, const ManyToOneMatching& mu,
                           const AssignmentConstraints& ac)
{
    (void)inst;
    for (const auto& [w, firms] : ac.firms_in) {
        if (firms.empty()) continue;
        const int f = mu.of(w);
        if (f < 0 || !contains(firms, f)) return false;
    }
    for (const auto& [w, firms] : ac.firms_out) {
        const int f = mu.of(w);
        if (f >= 0 && contains(firms, f)) return false;
    }
    for (const auto& [f, workers] : ac.workers_in) {
        if (workers.empty()) continue;
        for (int w : mu.workers_at(f))
            if (!contains(workers, w)) return false;
    }
    for (const auto& [f, workers] : ac.workers_out)
        for (int w : mu.workers_at(f))
            if (contains(workers, w)) return false;
    return true;
}

bool satisfies_pairs(const Matching& m, const PairConstraints& pc)
{
    for (Vertex v : pc.v_in)
        if (!std::binary_search(m.begin(), m.end(), v)) return false;
    for (Vertex v : pc.v_out)
        if (std::binary_search(m.begin(), m.end(), v)) return false;
    return true;
}

}  // namespace smc
