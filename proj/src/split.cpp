#include "smc/split.hpp"

#include <algorithm>

namespace smc {

std::string SplitInstance::col_name(int col) const
{
    const auto& name = base.firm_names[col_firm[col]];
    if (base.quota[col_firm[col]] == 1) return name;
    return name + "#" + std::to_string(col_copy[col] + 1);
}

SplitInstance split_firms(const Instance& inst)
{
    SplitInstance split;
    split.base = inst;
    split.rows = inst.num_workers();
    split.firm_cols.resize(inst.num_firms());
    for (int f = 0; f < inst.num_firms(); ++f)
        for (int k = 0; k < inst.quota[f]; ++k) {
            split.firm_cols[f].push_back(split.cols);
            split.col_firm.push_back(f);
            split.col_copy.push_back(k);
            ++split.cols;
        }

    split.row_pref.resize(split.rows);
    for (int w = 0; w < split.rows; ++w)
        for (int f : inst.worker_pref[w])
            for (int c : split.firm_cols[f]) split.row_pref[w].push_back(c);

    split.col_pref.resize(split.cols);
    for (int c = 0; c < split.cols; ++c) split.col_pref[c] = inst.firm_pref[split.col_firm[c]];

    split.row_rank.assign(split.rows, std::vector<int>(split.cols, -1));
    for (int w = 0; w < split.rows; ++w)
        for (int r = 0; r < static_cast<int>(split.row_pref[w].size()); ++r)
            split.row_rank[w][split.row_pref[w][r]] = r;
    split.col_rank.assign(split.cols, std::vector<int>(split.rows, -1));
    for (int c = 0; c < split.cols; ++c)
        for (int r = 0; r < static_cast<int>(split.col_pref[c].size()); ++r)
            split.col_rank[c][split.col_pref[c][r]] = r;
    return split;
}

std::shared_ptr<const SplitInstance> split_shared(const Instance& inst)
{
    return std::make_shared<const SplitInstance>(split_firms(inst));
}

ManyToOneMatching merge_matching(const SplitInstance& split, const Matching& m)
{
    ManyToOneMatching mu(split.rows);
    for (const auto& v : m) mu.employer[v.row] = split.col_firm[v.col];
    return mu;
}

Matching split_preimage(const SplitInstance& split, const ManyToOneMatching& mu)
{
    Matching m;
    for (int f = 0; f < split.base.num_firms(); ++f) {
        auto staff = mu.workers_at(f);
        std::sort(staff.begin(), staff.end(), [&](int a, int b) {
            return split.base.firm_rank[f][a] < split.base.firm_rank[f][b];
        });
        for (int i = 0; i < static_cast<int>(staff.size()); ++i)
            m.push_back({staff[i], split.firm_cols[f][i]});
    }
    std::sort(m.begin(), m.end());
    return m;
}

std::string to_string(const SplitInstance& split, const Vertex& v)
{
    return "(" + split.row_name(v.row) + "," + split.col_name(v.col) + ")";
}

std::string to_string(const SplitInstance& split, const Matching& m)
{
    std::string out;
    for (const auto& v : m) {
        if (!out.empty()) out += " ";
        out += to_string(split, v);
    }
    return out.empty() ? "(empty)" : out;
}

std::string to_string(const Instance& inst, const ManyToOneMatching& mu)
{
    std::string out;
    for (int w = 0; w < static_cast<int>(mu.employer.size()); ++w) {
        if (mu.employer[w] < 0) continue;
        if (!out.empty()) out += " ";
        out += "(" + inst.worker_names[w] + "," + inst.firm_names[mu.employer[w]] + ")";
    }
    return out.empty() ? "(empty)" : out;
}

}  // namespace smc
