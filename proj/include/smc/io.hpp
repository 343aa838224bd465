// Plain-text market files and the benchmark-family generator.
//
// Format, by sections introduced with a bare "name:" line:
//   workers:        one worker name per line
//   firms:          one firm per line: name, optionally followed by a quota
//                   (default 1)
//   prefs:          one line per participant: "name: partner partner ..."
//                   most preferred first
//   constraints:    optional; lines "f_in|f_out|w_in|w_out owner: member ..."
// '#' starts a comment; blank lines are ignored; unknown sections and
// malformed lines are rejected with their line number.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smc/model.hpp"

namespace smc {

struct ParseResult {
    std::optional<Instance> instance;       // set iff errors is empty
    AssignmentConstraints constraints;      // empty when no constraints block
    std::vector<std::string> errors;
    // Constraint sets in the file that contradict each other; the file is
    // well-formed but the query's answer is "no stable matching".
    std::vector<std::string> contradictions;
    bool ok() const { return errors.empty(); }
};

ParseResult parse_instance(std::istream& in);
ParseResult parse_instance_text(const std::string& text);

// Canonical rendering; parsing it back reproduces the same instance and
// constraints.
std::string serialize(const Instance& inst, const AssignmentConstraints& ac = {});

// A market of n/2 independent 2x2 blocks (n even, >= 4), all quotas 1.
// Block i covers workers/firms 2i-1 and 2i: worker 2i-1 ranks firm 2i-1
// first, worker 2i ranks firm 2i first, and both firms rank the other
// block worker first. Each block has two stable configurations, so the
// market has 2^(n/2) stable matchings and is already reduction-stable.
ValidationResult generate_block_ladder(int n);

// Forbids the "own" firm for every worker with index >= from_k (1-based):
// f_out w_k: f_k. On the block ladder this pins every block from
// ceil(from_k/2) on, leaving 2^(blocks before) solutions.
AssignmentConstraints ladder_diagonal_forbidden(const Instance& inst, int from_k);

}  // namespace smc
