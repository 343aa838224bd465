// Iterated dominance elimination on the matching digraph. The reduction rule:
// whenever a vertex has no arc out within its column (its worker is the
// column's best surviving candidate), every vertex its row ranks strictly
// below it is deleted; symmetrically, whenever a vertex has no arc out within
// its row, every vertex its column ranks strictly below it is deleted.
// Iterating to a fixpoint preserves the stable-matching set and leaves a
// balanced grid: equally many nonempty rows and columns, and every stable
// matching of the fixpoint uses exactly that many vertices.
#pragma once

#include <random>
#include <vector>

#include "smc/digraph.hpp"

namespace smc {

// One full pass of the reduction rule: pivots are evaluated against the
// digraph as it stood when the pass began, and all deletions land together.
// Returns the number of vertices deleted. Reference implementation; the
// worklist below reaches the same fixpoint faster.
int reduction_pass(MatchingDigraph& d);

// Runs the reduction to its fixpoint with an incremental worklist seeded by
// the given rows and columns. A row's work item fires when the column under
// the row's best vertex still holds workers it ranks below that row; a
// column's item fires when the row of the column's best vertex still holds
// columns it ranks below that column. Deleting a vertex re-queues any row or
// column whose best-entry cursor advanced, deletions never re-enable a
// settled item, so seeding suffices. Returns the number of deletions.
// `shuffle`, when given, randomizes the processing order; the fixpoint is
// order-independent.
long long run_idua_seeded(MatchingDigraph& d, const std::vector<int>& rows,
                          const std::vector<int>& cols, std::mt19937* shuffle = nullptr);

// Full run: every row and column seeded.
long long run_idua(MatchingDigraph& d, std::mt19937* shuffle = nullptr);

// A digraph at the reduction fixpoint together with the matched-size count
// carried through the search: every stable matching has exactly matched_size
// vertices, one in each listed row and column. The count is fixed here and
// never recomputed after later deletions.
struct NormalForm {
    MatchingDigraph digraph;
    int matched_size = 0;
    std::vector<int> matched_rows;
    std::vector<int> matched_cols;
};

NormalForm make_normal_form(MatchingDigraph d);
NormalForm normal_form(std::shared_ptr<const SplitInstance> split);

// The two extremes of the stable-matching lattice: first the worker-optimal
// matching (every row's best live vertex), then the firm-optimal one (every
// column's best live vertex). Only valid on a fixpoint digraph.
std::pair<Matching, Matching> extremal_matchings(const MatchingDigraph& d);

// Facts that hold across every stable matching, read off the fixpoint:
// who is never employed, which positions stay unfilled, and which
// assignments are forced (present in both extremes, hence in all).
struct OccupancyReport {
    std::vector<int> unemployed_workers;
    std::vector<int> unfilled_columns;
    std::vector<Vertex> fixed_pairs;
    std::vector<int> underfilled_firms;   // firms with at least one unfilled position
};

OccupancyReport occupancy_report(const NormalForm& nf);

}  // namespace smc
