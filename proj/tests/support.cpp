#include "support.hpp"

#include <algorithm>
#include <map>

namespace smc::test {

namespace {

Instance validated(const RawInstance& raw)
{
    ValidationResult v = validate_instance(raw);
    require(v.ok(), "fixture instance failed validation");
    return *v.instance;
}

}  // namespace

Instance market64()
{
    RawInstance raw;
    raw.workers = {"w1", "w2", "w3", "w4", "w5", "w6"};
    raw.firms = {{"f1", 1}, {"f2", 1}, {"f3", 1}, {"f4", 2}};
    raw.prefs = {
        {"w1", {"f1", "f2", "f3", "f4"}},
        {"w2", {"f2", "f1", "f4", "f3"}},
        {"w3", {"f3", "f4", "f1", "f2"}},
        {"w4", {"f4", "f3", "f2", "f1"}},
        {"w5", {"f4", "f1", "f2", "f3"}},
        {"w6", {"f2", "f1", "f4"}},
        {"f1", {"w5", "w4", "w3", "w2", "w1", "w6"}},
        {"f2", {"w3", "w5", "w4", "w1", "w2", "w6"}},
        {"f3", {"w2", "w1", "w5", "w4", "w3"}},
        {"f4", {"w5", "w1", "w2", "w3", "w4", "w6"}},
    };
    return validated(raw);
}

AssignmentConstraints market64_constraints()
{
    AssignmentConstraints ac;
    ac.workers_in = {{1, {0, 5}}};          // f2: w1, w6
    ac.workers_out = {{0, {3}}, {3, {5}}};  // f1: w4; f4: w6
    return ac;
}

std::vector<ManyToOneMatching> market64_solutions()
{
    const Instance inst = market64();
    return {
        mu_of(inst, {{"w1", "f2"}, {"w2", "f1"}, {"w3", "f3"}, {"w4", "f4"}, {"w5", "f4"}}),
        mu_of(inst, {{"w1", "f2"}, {"w2", "f1"}, {"w3", "f4"}, {"w4", "f3"}, {"w5", "f4"}}),
        mu_of(inst, {{"w1", "f2"}, {"w2", "f4"}, {"w3", "f1"}, {"w4", "f3"}, {"w5", "f4"}}),
    };
}

Instance cyclic33()
{
    RawInstance raw;
    raw.workers = {"w1", "w2", "w3"};
    raw.firms = {{"f1", 1}, {"f2", 1}, {"f3", 1}};
    raw.prefs = {
        {"w1", {"f3", "f2", "f1"}},
        {"w2", {"f1", "f3", "f2"}},
        {"w3", {"f2", "f1", "f3"}},
        {"f1", {"w1", "w3", "w2"}},
        {"f2", {"w2", "w1", "w3"}},
        {"f3", {"w3", "w2", "w1"}},
    };
    return validated(raw);
}

ManyToOneMatching mu_of(const Instance& inst,
                        const std::vector<std::pair<std::string, std::string>>& pairs)
{
    std::map<std::string, int> workers, firms;
    for (int w = 0; w < inst.num_workers(); ++w) workers[inst.worker_names[w]] = w;
    for (int f = 0; f < inst.num_firms(); ++f) firms[inst.firm_names[f]] = f;
    ManyToOneMatching mu(inst.num_workers());
    for (const auto& [w, f] : pairs) {
        require(workers.count(w) && firms.count(f), "mu_of: unknown participant");
        mu.employer[workers.at(w)] = firms.at(f);
    }
    return mu;
}

Instance random_market(std::mt19937& rng, int max_workers, int max_positions)
{
    auto uniform = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    const int m = uniform(1, max_workers);
    const int n = uniform(1, std::max(1, max_positions / 2 + 1));
    std::vector<int> quota(static_cast<size_t>(n), 1);
    int budget = max_positions - n;
    for (int f = 0; f < n && budget > 0; ++f) {
        const int extra = uniform(0, std::min(2, budget));
        quota[static_cast<size_t>(f)] += extra;
        budget -= extra;
    }

    // Acceptability matrix first, then one random strict order per side.
    std::vector<std::vector<char>> acc(static_cast<size_t>(m),
                                       std::vector<char>(static_cast<size_t>(n), 0));
    for (int w = 0; w < m; ++w)
        for (int f = 0; f < n; ++f) acc[w][f] = uniform(0, 9) < 7 ? 1 : 0;
    for (int w = 0; w < m; ++w)
        if (std::count(acc[w].begin(), acc[w].end(), 1) == 0) acc[w][uniform(0, n - 1)] = 1;
    for (int f = 0; f < n; ++f) {
        bool any = false;
        for (int w = 0; w < m; ++w) any = any || acc[w][f];
        if (!any) acc[uniform(0, m - 1)][f] = 1;
    }

    RawInstance raw;
    for (int w = 0; w < m; ++w) raw.workers.push_back("w" + std::to_string(w + 1));
    for (int f = 0; f < n; ++f)
        raw.firms.emplace_back("f" + std::to_string(f + 1), quota[static_cast<size_t>(f)]);
    for (int w = 0; w < m; ++w) {
        std::vector<std::string> list;
        for (int f = 0; f < n; ++f)
            if (acc[w][f]) list.push_back(raw.firms[static_cast<size_t>(f)].first);
        std::shuffle(list.begin(), list.end(), rng);
        raw.prefs.emplace_back(raw.workers[static_cast<size_t>(w)], list);
    }
    for (int f = 0; f < n; ++f) {
        std::vector<std::string> list;
        for (int w = 0; w < m; ++w)
            if (acc[w][f]) list.push_back(raw.workers[static_cast<size_t>(w)]);
        std::shuffle(list.begin(), list.end(), rng);
        raw.prefs.emplace_back(raw.firms[static_cast<size_t>(f)].first, list);
    }
    return validated(raw);
}

PairConstraints random_pairs(std::mt19937& rng, const SplitInstance& split)
{
    std::vector<Vertex> cells;
    for (int r = 0; r < split.rows; ++r)
        for (int c : split.row_pref[r]) cells.push_back({r, c});
    auto uniform = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto pick = [&]() { return cells[static_cast<size_t>(uniform(0, static_cast<int>(cells.size()) - 1))]; };

    PairConstraints pc;
    if (uniform(0, 1) == 1) pc.v_in.push_back(pick());
    const int outs = uniform(0, 4);
    for (int i = 0; i < outs; ++i) pc.v_out.push_back(pick());
    std::sort(pc.v_in.begin(), pc.v_in.end());
    std::sort(pc.v_out.begin(), pc.v_out.end());
    pc.v_out.erase(std::unique(pc.v_out.begin(), pc.v_out.end()), pc.v_out.end());
    return pc;
}

AssignmentConstraints random_assignment_constraints(std::mt19937& rng, const Instance& inst)
{
    auto uniform = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    AssignmentConstraints ac;
    for (int w = 0; w < inst.num_workers(); ++w) {
        if (uniform(0, 9) >= 3) continue;
        // Split this worker's acceptable firms into disjoint in/out picks.
        std::vector<int> firms = inst.worker_pref[w];
        std::shuffle(firms.begin(), firms.end(), rng);
        std::vector<int> in, out;
        for (int f : firms) {
            const int roll = uniform(0, 3);
            if (roll == 0) in.push_back(f);
            else if (roll == 1) out.push_back(f);
        }
        std::sort(in.begin(), in.end());
        std::sort(out.begin(), out.end());
        if (!in.empty() && uniform(0, 1) == 0) ac.firms_in.emplace_back(w, in);
        if (!out.empty()) ac.firms_out.emplace_back(w, out);
    }
    for (int f = 0; f < inst.num_firms(); ++f) {
        if (uniform(0, 9) >= 3) continue;
        std::vector<int> workers = inst.firm_pref[f];
        std::shuffle(workers.begin(), workers.end(), rng);
        std::vector<int> in, out;
        for (int w : workers) {
            const int roll = uniform(0, 3);
            if (roll == 0) in.push_back(w);
            else if (roll == 1) out.push_back(w);
        }
        std::sort(in.begin(), in.end());
        std::sort(out.begin(), out.end());
        if (!in.empty() && uniform(0, 1) == 0) ac.workers_in.emplace_back(f, in);
        if (!out.empty()) ac.workers_out.emplace_back(f, out);
    }
    return ac;
}

std::vector<Matching> collect_all(const NormalForm& nf, const PairConstraints& pc,
                                  EnumerateOptions opt)
{
    std::vector<Matching> out;
    enumerate_kernels(nf, pc, opt, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::vector<ManyToOneMatching> solve_all(const Instance& inst, const AssignmentConstraints& ac,
                                         EnumerateOptions opt)
{
    std::vector<ManyToOneMatching> out;
    solve(inst, ac, opt, [&](const Matching&, const ManyToOneMatching& mu) {
        out.push_back(mu);
        return true;
    });
    return out;
}

}  // namespace smc::test
