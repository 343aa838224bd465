#include "smc/digraph.hpp"

namespace smc {

MatchingDigraph MatchingDigraph::build(std::shared_ptr<const SplitInstance> split)
{
    MatchingDigraph d;
    d.split_ = std::move(split);
    const auto& s = *d.split_;
    d.live_.assign(static_cast<size_t>(s.rows) * s.cols, 0);
    d.mark_.assign(d.live_.size(), Mark::none);
    for (int r = 0; r < s.rows; ++r)
        for (int c : s.row_pref[r]) {
            d.live_[d.cell(r, c)] = 1;
            ++d.live_count_;
        }
    d.row_best_.assign(s.rows, 0);
    d.row_worst_.resize(s.rows);
    for (int r = 0; r < s.rows; ++r) d.row_worst_[r] = static_cast<int>(s.row_pref[r].size()) - 1;
    d.col_best_.assign(s.cols, 0);
    d.col_worst_.resize(s.cols);
    for (int c = 0; c < s.cols; ++c) d.col_worst_[c] = static_cast<int>(s.col_pref[c].size()) - 1;
    return d;
}

std::vector<Vertex> MatchingDigraph::live_vertices() const
{
    std::vector<Vertex> out;
    out.reserve(live_count_);
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c)
            if (live(r, c)) out.push_back({r, c});
    return out;
}

std::vector<int> MatchingDigraph::live_cols_in_row(int row) const
{
    std::vector<int> out;
    for (int c : split_->row_pref[row])
        if (live(row, c)) out.push_back(c);
    return out;
}

std::vector<int> MatchingDigraph::live_rows_in_col(int col) const
{
    std::vector<int> out;
    for (int r : split_->col_pref[col])
        if (live(r, col)) out.push_back(r);
    return out;
}

int MatchingDigraph::out_degree_row(Vertex v) const
{
    assert(live(v));
    const auto& pref = split_->row_pref[v.row];
    int count = 0;
    for (int pos = 0; pref[pos] != v.col; ++pos)
        if (live(v.row, pref[pos])) ++count;
    return count;
}

int MatchingDigraph::out_degree_col(Vertex v) const
{
    assert(live(v));
    const auto& pref = split_->col_pref[v.col];
    int count = 0;
    for (int pos = 0; pref[pos] != v.row; ++pos)
        if (live(pref[pos], v.col)) ++count;
    return count;
}

int MatchingDigraph::nonempty_row_count() const
{
    int count = 0;
    for (int r = 0; r < rows(); ++r)
        if (!row_empty(r)) ++count;
    return count;
}

int MatchingDigraph::nonempty_col_count() const
{
    int count = 0;
    for (int c = 0; c < cols(); ++c)
        if (!col_empty(c)) ++count;
    return count;
}

void MatchingDigraph::delete_vertex(Vertex v)
{
    assert(live(v));
    live_[cell(v.row, v.col)] = 0;
    mark_[cell(v.row, v.col)] = Mark::none;
    --live_count_;

    const auto& rp = split_->row_pref[v.row];
    const int rlen = static_cast<int>(rp.size());
    auto& rb = row_best_[v.row];
    while (rb < rlen && !live(v.row, rp[rb])) ++rb;
    auto& rw = row_worst_[v.row];
    while (rw >= 0 && !live(v.row, rp[rw])) --rw;

    const auto& cp = split_->col_pref[v.col];
    const int clen = static_cast<int>(cp.size());
    auto& cb = col_best_[v.col];
    while (cb < clen && !live(cp[cb], v.col)) ++cb;
    auto& cw = col_worst_[v.col];
    while (cw >= 0 && !live(cp[cw], v.col)) --cw;
}

}  // namespace smc
