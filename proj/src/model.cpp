#include "smc/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace smc {

int Instance::total_quota() const
{
    return std::accumulate(quota.begin(), quota.end(), 0);
}

bool Instance::worker_prefers(int w, int f1, int f2) const
{
    int r1 = f1 >= 0 ? worker_rank[w][f1] : -1;
    int r2 = f2 >= 0 ? worker_rank[w][f2] : -1;
    if (r1 < 0) return false;
    if (r2 < 0) return true;
    return r1 < r2;
}

bool Instance::firm_prefers(int f, int w1, int w2) const
{
    int r1 = w1 >= 0 ? firm_rank[f][w1] : -1;
    int r2 = w2 >= 0 ? firm_rank[f][w2] : -1;
    if (r1 < 0) return false;
    if (r2 < 0) return true;
    return r1 < r2;
}

bool Instance::operator==(const Instance& other) const
{
    return worker_names == other.worker_names && firm_names == other.firm_names
        && quota == other.quota && worker_pref == other.worker_pref
        && firm_pref == other.firm_pref;
}

std::vector<int> ManyToOneMatching::workers_at(int f) const
{
    std::vector<int> out;
    for (int w = 0; w < static_cast<int>(employer.size()); ++w)
        if (employer[w] == f) out.push_back(w);
    return out;
}

namespace {

// Index lookup over a name list; reports duplicates into errors.
std::map<std::string, int> index_names(const std::vector<std::string>& names,
                                       const char* side,
                                       std::vector<std::string>& errors)
{
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        if (names[i].empty()) {
            errors.push_back(std::string(side) + " with empty name");
            continue;
        }
        if (!idx.emplace(names[i], i).second)
            errors.push_back(std::string("duplicate ") + side + " id '" + names[i] + "'");
    }
    return idx;
}

}  // namespace

ValidationResult validate_instance(const RawInstance& raw)
{
    ValidationResult result;
    auto& errors = result.errors;

    if (raw.workers.empty()) errors.push_back("no workers declared");
    if (raw.firms.empty()) errors.push_back("no firms declared");

    std::vector<std::string> firm_names;
    firm_names.reserve(raw.firms.size());
    for (const auto& [name, q] : raw.firms) {
        firm_names.push_back(name);
        if (q < 1)
            errors.push_back("firm '" + name + "' has quota " + std::to_string(q) + " (must be >= 1)");
    }

    auto worker_idx = index_names(raw.workers, "worker", errors);
    auto firm_idx = index_names(firm_names, "firm", errors);
    for (const auto& [name, w] : worker_idx)
        if (firm_idx.count(name))
            errors.push_back("id '" + name + "' used for both a worker and a firm");

    if (!errors.empty()) return result;

    const int m = static_cast<int>(raw.workers.size());
    const int n = static_cast<int>(raw.firms.size());

    std::vector<std::vector<int>> worker_pref(m), firm_pref(n);
    std::vector<bool> worker_seen(m, false), firm_seen(n, false);

    for (const auto& [owner, list] : raw.prefs) {
        bool is_worker = worker_idx.count(owner) > 0;
        bool is_firm = firm_idx.count(owner) > 0;
        if (!is_worker && !is_firm) {
            errors.push_back("preference line for unknown participant '" + owner + "'");
            continue;
        }
        auto& seen = is_worker ? worker_seen : firm_seen;
        auto& prefs = is_worker ? worker_pref : firm_pref;
        const auto& partner_idx = is_worker ? firm_idx : worker_idx;
        int id = is_worker ? worker_idx.at(owner) : firm_idx.at(owner);
        if (seen[id]) {
            errors.push_back("duplicate preference line for '" + owner + "'");
            continue;
        }
        seen[id] = true;
        std::set<int> used;
        for (const auto& partner : list) {
            auto it = partner_idx.find(partner);
            if (it == partner_idx.end()) {
                errors.push_back("'" + owner + "' ranks unknown partner '" + partner + "'");
                continue;
            }
            if (!used.insert(it->second).second) {
                errors.push_back("'" + owner + "' ranks '" + partner + "' more than once");
                continue;
            }
            prefs[id].push_back(it->second);
        }
        if (prefs[id].empty())
            errors.push_back("'" + owner + "' has an empty preference list");
    }

    for (int w = 0; w < m; ++w)
        if (!worker_seen[w])
            errors.push_back("missing preference line for worker '" + raw.workers[w] + "'");
    for (int f = 0; f < n; ++f)
        if (!firm_seen[f])
            errors.push_back("missing preference line for firm '" + firm_names[f] + "'");

    if (!errors.empty()) return result;

    // Rank tables, then the symmetry check: w lists f iff f lists w.
    std::vector<std::vector<int>> worker_rank(m, std::vector<int>(n, -1));
    std::vector<std::vector<int>> firm_rank(n, std::vector<int>(m, -1));
    for (int w = 0; w < m; ++w)
        for (int r = 0; r < static_cast<int>(worker_pref[w].size()); ++r)
            worker_rank[w][worker_pref[w][r]] = r;
    for (int f = 0; f < n; ++f)
        for (int r = 0; r < static_cast<int>(firm_pref[f].size()); ++r)
            firm_rank[f][firm_pref[f][r]] = r;

    for (int w = 0; w < m; ++w)
        for (int f = 0; f < n; ++f) {
            if (worker_rank[w][f] >= 0 && firm_rank[f][w] < 0)
                errors.push_back("'" + raw.workers[w] + "' ranks '" + firm_names[f]
                                 + "' but not vice versa");
            if (worker_rank[w][f] < 0 && firm_rank[f][w] >= 0)
                errors.push_back("'" + firm_names[f] + "' ranks '" + raw.workers[w]
                                 + "' but not vice versa");
        }

    if (!errors.empty()) return result;

    Instance inst;
    inst.worker_names = raw.workers;
    inst.firm_names = std::move(firm_names);
    inst.quota.reserve(n);
    for (const auto& [name, q] : raw.firms) inst.quota.push_back(q);
    inst.worker_pref = std::move(worker_pref);
    inst.firm_pref = std::move(firm_pref);
    inst.worker_rank = std::move(worker_rank);
    inst.firm_rank = std::move(firm_rank);
    result.instance = std::move(inst);
    return result;
}

ConstraintsValidation validate_constraints(const Instance& inst, const RawConstraints& raw)
{
    ConstraintsValidation result;

    std::map<std::string, int> worker_idx, firm_idx;
    for (int w = 0; w < inst.num_workers(); ++w) worker_idx[inst.worker_names[w]] = w;
    for (int f = 0; f < inst.num_firms(); ++f) firm_idx[inst.firm_names[f]] = f;

    std::map<int, std::set<int>> f_in, f_out, w_in, w_out;

    for (const auto& entry : raw.entries) {
        bool worker_owned = entry.kind == "f_in" || entry.kind == "f_out";
        bool firm_owned = entry.kind == "w_in" || entry.kind == "w_out";
        if (!worker_owned && !firm_owned) {
            result.errors.push_back("unknown constraint kind '" + entry.kind + "'");
            continue;
        }
        const auto& owner_idx = worker_owned ? worker_idx : firm_idx;
        const auto& member_idx = worker_owned ? firm_idx : worker_idx;
        auto owner_it = owner_idx.find(entry.owner);
        if (owner_it == owner_idx.end()) {
            result.errors.push_back(entry.kind + " names unknown participant '" + entry.owner + "'");
            continue;
        }
        std::set<int> members;
        for (const auto& name : entry.members) {
            auto it = member_idx.find(name);
            if (it == member_idx.end()) {
                result.errors.push_back(entry.kind + " " + entry.owner + " lists unknown participant '"
                                        + name + "'");
                continue;
            }
            members.insert(it->second);
        }
        auto& target = entry.kind == "f_in" ? f_in
                     : entry.kind == "f_out" ? f_out
                     : entry.kind == "w_in" ? w_in
                                            : w_out;
        target[owner_it->second].insert(members.begin(), members.end());
    }

    if (!result.errors.empty()) return result;

    for (const auto& [w, in] : f_in) {
        auto out_it = f_out.find(w);
        if (out_it == f_out.end()) continue;
        for (int f : in)
            if (out_it->second.count(f))
                result.contradictions.push_back("firm '" + inst.firm_names[f]
                                                + "' is both required and forbidden for worker '"
                                                + inst.worker_names[w] + "'");
    }
    for (const auto& [f, in] : w_in) {
        auto out_it = w_out.find(f);
        if (out_it == w_out.end()) continue;
        for (int w : in)
            if (out_it->second.count(w))
                result.contradictions.push_back("worker '" + inst.worker_names[w]
                                                + "' is both allowed and forbidden at firm '"
                                                + inst.firm_names[f] + "'");
    }

    AssignmentConstraints ac;
    auto flatten = [](const std::map<int, std::set<int>>& src,
                      std::vector<std::pair<int, std::vector<int>>>& dst) {
        for (const auto& [owner, members] : src)
            dst.emplace_back(owner, std::vector<int>(members.begin(), members.end()));
    };
    flatten(f_in, ac.firms_in);
    flatten(f_out, ac.firms_out);
    flatten(w_in, ac.workers_in);
    flatten(w_out, ac.workers_out);
    result.constraints = std::move(ac);
    return result;
}

bool is_blocking_pair(const Instance& inst, const ManyToOneMatching& mu, int w, int f)
{
    if (!inst.acceptable(w, f)) return false;
    if (mu.of(w) == f) return false;
    if (!inst.worker_prefers(w, f, mu.of(w))) return false;
    auto staff = mu.workers_at(f);
    if (static_cast<int>(staff.size()) < inst.quota[f]) return true;
    for (int other : staff)
        if (inst.firm_prefers(f, w, other)) return true;
    return false;
}

bool is_stable(const Instance& inst, const ManyToOneMatching& mu)
{
    if (static_cast<int>(mu.employer.size()) != inst.num_workers()) return false;
    std::vector<int> load(inst.num_firms(), 0);
    for (int w = 0; w < inst.num_workers(); ++w) {
        int f = mu.of(w);
        if (f < 0) continue;
        if (f >= inst.num_firms() || !inst.acceptable(w, f)) return false;
        if (++load[f] > inst.quota[f]) return false;
    }
    for (int w = 0; w < inst.num_workers(); ++w)
        for (int f : inst.worker_pref[w])
            if (is_blocking_pair(inst, mu, w, f)) return false;
    return true;
}

}  // namespace smc
