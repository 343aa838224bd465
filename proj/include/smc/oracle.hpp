// Exhaustive ground truth for desk-scale markets: generate every assignment
// (or every grid matching), keep the stable ones, and filter by constraints
// evaluated directly on assignments. Used to pin expected values in tests
// and exposed through the CLI so reported numbers are reproducible.
#pragma once

#include <vector>

#include "smc/constraints.hpp"
#include "smc/digraph.hpp"
#include "smc/model.hpp"

namespace smc {

struct OracleResult {
    std::vector<ManyToOneMatching> all_stable;   // sorted, pairwise distinct
    long long candidates = 0;                    // assignments examined
    bool bounded_out = false;                    // refused: search space too big
    double estimate = 0.0;                       // approximate space when refused
};

// Every stable assignment, by row-wise generation (each worker takes an
// acceptable firm with a free position, or stays unmatched) and a full
// blocking-pair check per candidate. Refuses when the unpruned space
// exceeds max_candidates.
OracleResult brute_force_stable(const Instance& inst, long long max_candidates = 10'000'000);

std::vector<ManyToOneMatching> filter_by_constraints(const std::vector<ManyToOneMatching>& in,
                                                     const Instance& inst,
                                                     const AssignmentConstraints& ac);

struct KernelResult {
    std::vector<Matching> kernels;   // sorted, pairwise distinct
    long long candidates = 0;
    bool bounded_out = false;
    double estimate = 0.0;
};

// Every stable matching of the grid digraph: one live vertex per row and
// column at most, and every other live vertex has a strictly better
// same-row or same-column vertex chosen. An empty digraph has exactly the
// empty matching.
KernelResult brute_force_stable_digraph(const MatchingDigraph& d,
                                        long long max_candidates = 10'000'000);

std::vector<Matching> filter_by_pairs(const std::vector<Matching>& in, const PairConstraints& pc);

}  // namespace smc
