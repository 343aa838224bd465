#include "smc/oracle.hpp"

#include <algorithm>

namespace smc {

namespace {

void generate_assignments(const Instance& inst, int w, ManyToOneMatching& mu,
                          std::vector<int>& load, OracleResult& res)
{
    if (w == inst.num_workers()) {
        ++res.candidates;
        if (is_stable(inst, mu)) res.all_stable.push_back(mu);
        return;
    }
    mu.employer[w] = -1;
    generate_assignments(inst, w + 1, mu, load, res);
    for (int f : inst.worker_pref[w]) {
        if (load[f] >= inst.quota[f]) continue;
        ++load[f];
        mu.employer[w] = f;
        generate_assignments(inst, w + 1, mu, load, res);
        mu.employer[w] = -1;
        --load[f];
    }
}

// A grid matching is stable iff every unchosen live vertex has a strictly
// better chosen vertex in its row or its column.
bool is_kernel(const MatchingDigraph& d, const std::vector<int>& chosen_col,
               const std::vector<int>& chosen_row)
{
    const SplitInstance& sp = d.split();
    for (int r = 0; r < d.rows(); ++r)
        for (int c : d.live_cols_in_row(r)) {
            if (chosen_col[r] == c) continue;
            const bool row_covers =
                chosen_col[r] >= 0 && sp.row_rank[r][chosen_col[r]] < sp.row_rank[r][c];
            const bool col_covers =
                chosen_row[c] >= 0 && sp.col_rank[c][chosen_row[c]] < sp.col_rank[c][r];
            if (!row_covers && !col_covers) return false;
        }
    return true;
}

void generate_matchings(const MatchingDigraph& d, int r, std::vector<int>& chosen_col,
                        std::vector<int>& chosen_row, KernelResult& res)
{
    if (r == d.rows()) {
        ++res.candidates;
        if (is_kernel(d, chosen_col, chosen_row)) {
            Matching m;
            for (int row = 0; row < d.rows(); ++row)
                if (chosen_col[row] >= 0) m.push_back({row, chosen_col[row]});
            res.kernels.push_back(std::move(m));
        }
        return;
    }
    chosen_col[r] = -1;
    generate_matchings(d, r + 1, chosen_col, chosen_row, res);
    for (int c : d.live_cols_in_row(r)) {
        if (chosen_row[c] >= 0) continue;
        chosen_col[r] = c;
        chosen_row[c] = r;
        generate_matchings(d, r + 1, chosen_col, chosen_row, res);
        chosen_row[c] = -1;
        chosen_col[r] = -1;
    }
}

}  // namespace

OracleResult brute_force_stable(const Instance& inst, long long max_candidates)
{
    OracleResult res;
    double space = 1.0;
    for (int w = 0; w < inst.num_workers(); ++w)
        space *= static_cast<double>(inst.worker_pref[w].size() + 1);
    if (space > static_cast<double>(max_candidates)) {
        res.bounded_out = true;
        res.estimate = space;
        return res;
    }
    ManyToOneMatching mu(inst.num_workers());
    std::vector<int> load(static_cast<size_t>(inst.num_firms()), 0);
    generate_assignments(inst, 0, mu, load, res);
    std::sort(res.all_stable.begin(), res.all_stable.end());
    return res;
}

std::vector<ManyToOneMatching> filter_by_constraints(const std::vector<ManyToOneMatching>& in,
                                                     const Instance& inst,
                                                     const AssignmentConstraints& ac)
{
    std::vector<ManyToOneMatching> out;
    for (const auto& mu : in)
        if (satisfies_constraints(inst, mu, ac)) out.push_back(mu);
    return out;
}

KernelResult brute_force_stable_digraph(const MatchingDigraph& d, long long max_candidates)
{
    KernelResult res;
    double space = 1.0;
    for (int r = 0; r < d.rows(); ++r)
        space *= static_cast<double>(d.live_cols_in_row(r).size() + 1);
    if (space > static_cast<double>(max_candidates)) {
        res.bounded_out = true;
        res.estimate = space;
        return res;
    }
    std::vector<int> chosen_col(static_cast<size_t>(d.rows()), -1);
    std::vector<int> chosen_row(static_cast<size_t>(d.cols()), -1);
    generate_matchings(d, 0, chosen_col, chosen_row, res);
    std::sort(res.kernels.begin(), res.kernels.end());
    return res;
}

std::vector<Matching> filter_by_pairs(const std::vector<Matching>& in, const PairConstraints& pc)
{
    std::vector<Matching> out;
    for (const auto& m : in)
        if (satisfies_pairs(m, pc)) out.push_back(m);
    return out;
}

}  // namespace smc
