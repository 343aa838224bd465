// Shared fixtures and random generators for the test binaries.
#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "smc/enumerate.hpp"
#include "smc/io.hpp"
#include "smc/oracle.hpp"

namespace smc::test {

// Grid vertex in the 1-based row/column numbering the fixtures are
// discussed in; the library itself is 0-based.
inline Vertex V(int row1, int col1) { return Vertex{row1 - 1, col1 - 1}; }

inline Matching matching(std::initializer_list<Vertex> vs)
{
    Matching m(vs);
    std::sort(m.begin(), m.end());
    return m;
}

// 6 workers, 4 firms, f4 with quota 2; unbalanced (six workers, five
// positions) and w6/f3 mutually unacceptable. Splitting yields a 6x5 grid.
Instance market64();

// The query used throughout the market64 tests:
//   w_out f1: w4;  w_in f2: w1 w6;  w_out f4: w6
AssignmentConstraints market64_constraints();

// The three solutions of that query, most worker-preferred first.
std::vector<ManyToOneMatching> market64_solutions();

// 3x3 unit-quota market that is its own reduction fixpoint, with exactly
// three stable matchings arranged in a cycle. {(1,2),(2,1),(3,3)} is NOT
// one of them ((3,1) blocks it), which makes this the canonical trap for
// shortcuts that delete all excluded vertices up front.
Instance cyclic33();

// Builds an assignment from (worker name, firm name) pairs.
ManyToOneMatching mu_of(const Instance& inst, const std::vector<std::pair<std::string, std::string>>& pairs);

// Random market with <= max_workers workers and <= max_positions total
// positions; preferences are random truncated orders, mutually consistent,
// and every participant finds someone acceptable.
Instance random_market(std::mt19937& rng, int max_workers = 6, int max_positions = 6);

// Random vertex constraints over the full acceptable grid: at most one
// required vertex, at most four excluded ones. May name vertices the
// reduction kills, and may require and exclude the same vertex; both are
// legal queries (the latter simply has no solutions).
PairConstraints random_pairs(std::mt19937& rng, const SplitInstance& split);

// Random participant constraints with disjoint required/forbidden sets.
AssignmentConstraints random_assignment_constraints(std::mt19937& rng, const Instance& inst);

// Runs the enumerator and collects the emitted matchings in order.
std::vector<Matching> collect_all(const NormalForm& nf, const PairConstraints& pc,
                                  EnumerateOptions opt = {});

// Full pipeline, collecting merged assignments in emission order.
std::vector<ManyToOneMatching> solve_all(const Instance& inst, const AssignmentConstraints& ac,
                                         EnumerateOptions opt = {});

inline void require(bool cond, const char* what)
{
    if (!cond) throw std::runtime_error(what);
}

}  // namespace smc::test
