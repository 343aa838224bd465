// Core market model: instances, assignments, blocking pairs, stability.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace smc {

// A many-to-one matching market. Workers and firms are referred to by dense
// indices; names are kept only for the boundary. Preference lists are strict
// orders over acceptable partners, most preferred first. Rank tables are
// derived and kept consistent by validate_instance; -1 marks "unacceptable".
struct Instance {
    std::vector<std::string> worker_names;
    std::vector<std::string> firm_names;
    std::vector<int> quota;                        // per firm, >= 1
    std::vector<std::vector<int>> worker_pref;     // [w] -> firm ids
    std::vector<std::vector<int>> firm_pref;       // [f] -> worker ids
    std::vector<std::vector<int>> worker_rank;     // [w][f] -> rank or -1
    std::vector<std::vector<int>> firm_rank;       // [f][w] -> rank or -1

    int num_workers() const { return static_cast<int>(worker_names.size()); }
    int num_firms() const { return static_cast<int>(firm_names.size()); }
    int total_quota() const;

    bool acceptable(int w, int f) const { return worker_rank[w][f] >= 0; }
    // Strict preference; an unacceptable partner is worse than any acceptable
    // one, and "unmatched" (f = -1) is worse than any acceptable firm.
    bool worker_prefers(int w, int f1, int f2) const;
    bool firm_prefers(int f, int w1, int w2) const;

    bool operator==(const Instance& other) const;
};

// Boundary form of an instance before validation: names only, in input order.
struct RawInstance {
    std::vector<std::string> workers;
    std::vector<std::pair<std::string, int>> firms;    // name, quota
    // One entry per participant: name -> ranked partner names.
    std::vector<std::pair<std::string, std::vector<std::string>>> prefs;
};

struct ValidationResult {
    std::optional<Instance> instance;      // set iff errors is empty
    std::vector<std::string> errors;       // every violation, not just the first
    bool ok() const { return errors.empty(); }
};

// Checks: ids unique; quotas >= 1; at least one participant per side; every
// participant has exactly one preference line; lists nonempty, duplicate-free,
// referencing known partners of the opposite side; mutual acceptability
// (w lists f iff f lists w).
ValidationResult validate_instance(const RawInstance& raw);

// Assignment of workers to firms; employer[w] is a firm id or -1 (unmatched).
struct ManyToOneMatching {
    std::vector<int> employer;

    explicit ManyToOneMatching(int num_workers = 0) : employer(num_workers, -1) {}
    int of(int w) const { return employer[w]; }
    std::vector<int> workers_at(int f) const;
    bool operator==(const ManyToOneMatching& other) const = default;
    bool operator<(const ManyToOneMatching& other) const { return employer < other.employer; }
};

// Per-participant assignment constraints: a worker's required/forbidden firm
// sets and a firm's allowed/forbidden worker sets. Entries are sorted and
// duplicate-free; absent participants are unconstrained. firms_in[w] nonempty
// means w must be employed at one of those firms; workers_in[f] nonempty means
// every worker employed at f must belong to the set.
struct AssignmentConstraints {
    std::vector<std::pair<int, std::vector<int>>> firms_in;     // worker -> firms
    std::vector<std::pair<int, std::vector<int>>> firms_out;    // worker -> firms
    std::vector<std::pair<int, std::vector<int>>> workers_in;   // firm -> workers
    std::vector<std::pair<int, std::vector<int>>> workers_out;  // firm -> workers

    bool empty() const
    {
        return firms_in.empty() && firms_out.empty() && workers_in.empty() && workers_out.empty();
    }
    bool operator==(const AssignmentConstraints& other) const = default;
};

// Boundary form of constraints: (kind, owner, members) triples in input order.
// kind is one of "f_in", "f_out", "w_in", "w_out".
struct RawConstraints {
    struct Entry {
        std::string kind;
        std::string owner;
        std::vector<std::string> members;
    };
    std::vector<Entry> entries;
};

struct ConstraintsValidation {
    std::optional<AssignmentConstraints> constraints;  // set iff errors is empty
    std::vector<std::string> errors;                   // unknown names, bad kinds
    // A participant whose required and forbidden sets overlap makes the
    // constraint set unsatisfiable rather than malformed; the overlaps are
    // reported here and the query's answer is "no stable matching".
    std::vector<std::string> contradictions;
    bool ok() const { return errors.empty(); }
};

ConstraintsValidation validate_constraints(const Instance& inst, const RawConstraints& raw);

// True iff (w, f) blocks mu: they are mutually acceptable, not matched to
// each other, w is unemployed or prefers f to its employer, and f has a free
// position or prefers w to someone it currently employs.
bool is_blocking_pair(const Instance& inst, const ManyToOneMatching& mu, int w, int f);

// True iff mu is a valid assignment (acceptable pairs only, quotas respected)
// with no blocking pair.
bool is_stable(const Instance& inst, const ManyToOneMatching& mu);

}  // namespace smc
