// Recursive enumeration of every stable matching satisfying per-vertex
// constraints, with polynomial delay between emissions. Each search node
// holds a reduced digraph plus required vertices; branching fixes one
// worker-optimal-but-not-firm-optimal vertex in or out of the matching, so
// the two subtrees partition the solutions and no matching appears twice.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "smc/constraints.hpp"
#include "smc/idua.hpp"

namespace smc {

// all: every solution, depth-first, requiring-branch first, which lists
// solutions in decreasing worker preference. worker_optimal / firm_optimal:
// just the single best solution for that side, found without branching.
enum class SolveMode { all, worker_optimal, firm_optimal };

struct EnumerationStats {
    long long calls = 0;            // search nodes entered
    long long deleted = 0;          // vertex deletions across the search
    long long emitted = 0;
    int matched_size = 0;           // size of every solution
    bool truncated = false;         // stopped at the solution limit
    std::vector<double> emission_seconds;   // elapsed time at each emission
    double total_seconds = 0.0;
};

struct EnumerateOptions {
    SolveMode mode = SolveMode::all;
    long long limit = -1;           // max solutions; negative = unlimited
    bool parallel = false;          // branches on separate threads; set order only
    // Observation hooks, mainly for tests: after a node finishes clearing
    // excluded extremal vertices, and when a node picks its branch vertex.
    std::function<void(const MatchingDigraph&, int depth)> on_reduced;
    std::function<void(Vertex, int depth)> on_branch;
};

// Return false to stop the search early.
using MatchingSink = std::function<bool(const Matching&)>;

// Emits exactly the stable matchings of the normal form that contain all of
// pc.v_in and none of pc.v_out. Requirements naming dead vertices yield an
// empty stream, as does a vertex listed on both sides; exclusions naming
// dead vertices are already satisfied.
EnumerationStats enumerate_kernels(const NormalForm& nf, const PairConstraints& pc,
                                   const EnumerateOptions& opt, const MatchingSink& sink);

// Deterministic branch choice: the smallest (row, then column) vertex that is
// worker-optimal but not firm-optimal. Requires the two matchings to differ.
Vertex pick_branch_vertex(const Matching& workers_best, const Matching& firms_best);

struct SolveOutcome {
    bool infeasible = false;        // constraints unsatisfiable; nothing emitted
    std::string reason;             // set when infeasible
    std::vector<std::string> dropped;   // constraints with no effect
    EnumerationStats stats;
    std::shared_ptr<const SplitInstance> split;
};

using SolutionSink = std::function<bool(const Matching&, const ManyToOneMatching&)>;

// Full pipeline on a validated instance: split firms into unit columns,
// reduce the digraph, compile the participant constraints, and enumerate.
// Solutions arrive through the sink as they are found, in both grid-level
// and merged many-to-one form.
SolveOutcome solve(const Instance& inst, const AssignmentConstraints& ac,
                   const EnumerateOptions& opt, const SolutionSink& sink);

}  // namespace smc
