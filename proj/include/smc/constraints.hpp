// Compiles per-participant assignment constraints into per-vertex search
// directives against a reduced digraph: vertices the matching must contain
// and vertices it must avoid.
#pragma once

#include <string>
#include <vector>

#include "smc/idua.hpp"

namespace smc {

// Grid-level form of a constrained query: every solution must contain all of
// v_in and none of v_out. Both lists are sorted, duplicate-free, and refer
// only to live vertices of the digraph they were compiled against.
struct PairConstraints {
    std::vector<Vertex> v_in;
    std::vector<Vertex> v_out;

    bool empty() const { return v_in.empty() && v_out.empty(); }
};

struct ConstraintReduction {
    PairConstraints pairs;
    // Constraints that cannot influence any stable matching, e.g. forbidding
    // a pairing the reduction already eliminated; recorded for diagnostics.
    std::vector<std::string> dropped;
    bool infeasible = false;
    std::string reason;   // names the violated constraint when infeasible
};

// Translates participant constraints to vertex constraints, given the
// reduction fixpoint. Requirements whose targets cannot occur in any stable
// matching make the query infeasible outright (pairs comes back empty);
// forbiddances of such targets are dropped as redundant. A firm-side allowed
// set narrows to the column's live candidates: a single survivor becomes a
// required vertex, otherwise every live non-member of the column is excluded.
// Conflicting requirements (same row or column required twice, or a vertex
// both required and excluded) are infeasible.
ConstraintReduction reduce_constraints(const SplitInstance& split, const NormalForm& nf,
                                       const AssignmentConstraints& ac);

// Direct check of the participant-level semantics on a full assignment:
// a worker with a nonempty required-firm set must be employed at one of
// them; a worker is never employed at a forbidden firm; every worker a firm
// employs lies inside the firm's allowed set and outside its forbidden set.
// Empty member sets are no-ops.
bool satisfies_constraints(const Instance& inst, const ManyToOneMatching& mu,
                           const AssignmentConstraints& ac);

// Grid-level counterpart: m contains all of v_in and avoids v_out.
bool satisfies_pairs(const Matching& m, const PairConstraints& pc);

}  // namespace smc
