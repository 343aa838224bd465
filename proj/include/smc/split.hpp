// One-to-one view of a many-to-one market: each firm with quota q becomes q
// unit-capacity columns that every worker ranks in the same ascending copy
// order, so the two markets have the same stable matchings up to merging.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "smc/model.hpp"

namespace smc {

// A cell of the worker x column grid; row is a worker id, col a column id.
struct Vertex {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// A one-to-one matching over the grid: vertices sorted ascending, at most one
// per row and per column.
using Matching = std::vector<Vertex>;

struct SplitInstance {
    Instance base;
    int rows = 0;                              // workers
    int cols = 0;                              // positions (sum of quotas)
    std::vector<int> col_firm;                 // column -> firm
    std::vector<int> col_copy;                 // column -> copy index, 0-based
    std::vector<std::vector<int>> firm_cols;   // firm -> its columns, ascending copy
    std::vector<std::vector<int>> row_pref;    // row -> columns, best first
    std::vector<std::vector<int>> col_pref;    // col -> rows, best first
    std::vector<std::vector<int>> row_rank;    // [row][col] -> rank or -1
    std::vector<std::vector<int>> col_rank;    // [col][row] -> rank or -1

    bool acceptable(int row, int col) const { return row_rank[row][col] >= 0; }
    // Display name: the firm's name, with "#k" appended when it has copies.
    std::string col_name(int col) const;
    std::string row_name(int row) const { return base.worker_names[row]; }
};

SplitInstance split_firms(const Instance& inst);
std::shared_ptr<const SplitInstance> split_shared(const Instance& inst);

// Collapses copies: (w, copy of f) becomes w employed at f.
ManyToOneMatching merge_matching(const SplitInstance& split, const Matching& m);

// Canonical one-to-one form of a many-to-one matching: each firm's workers,
// in the firm's preference order, occupy its copies in ascending order. For a
// stable mu this is the unique stable preimage under merge_matching.
Matching split_preimage(const SplitInstance& split, const ManyToOneMatching& mu);

std::string to_string(const SplitInstance& split, const Vertex& v);
std::string to_string(const SplitInstance& split, const Matching& m);
std::string to_string(const Instance& inst, const ManyToOneMatching& mu);

}  // namespace smc
