// Command-line surface over the solver library.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "smc/dot.hpp"
#include "smc/enumerate.hpp"
#include "smc/io.hpp"
#include "smc/oracle.hpp"

namespace {

// Exit codes: 0 = solutions exist / validation passed; 1 = no stable
// matching satisfies the query; 2 = unusable input.
constexpr int kOk = 0;
constexpr int kNoSolutions = 1;
constexpr int kInputError = 2;

int load_file(const std::string& path, smc::ParseResult& parsed)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kInputError;
    }
    parsed = smc::parse_instance(in);
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) std::cerr << "error: " << e << "\n";
        return kInputError;
    }
    return kOk;
}

int run_validate(const std::string& path)
{
    smc::ParseResult parsed;
    if (int rc = load_file(path, parsed)) return rc;
    const smc::Instance& inst = *parsed.instance;
    std::cout << "ok: " << inst.num_workers() << " workers, " << inst.num_firms() << " firms, "
              << inst.total_quota() << " positions\n";
    for (const auto& c : parsed.contradictions)
        std::cout << "warning: contradictory constraints: " << c << "\n";
    return kOk;
}

int run_normal_form(const std::string& path, const std::string& dot_path)
{
    smc::ParseResult parsed;
    if (int rc = load_file(path, parsed)) return rc;
    auto split = smc::split_shared(*parsed.instance);
    const smc::NormalForm nf = smc::normal_form(split);
    const smc::MatchingDigraph& d = nf.digraph;

    std::cout << "grid: " << d.rows() << " workers x " << d.cols() << " positions, "
              << d.live_count() << " live vertices\n";
    std::cout << "matched size: " << nf.matched_size << "\n";
    std::cout << "live vertices:\n";
    for (int r = 0; r < d.rows(); ++r) {
        std::cout << "  " << split->row_name(r) << ":";
        const auto cols = d.live_cols_in_row(r);
        if (cols.empty()) std::cout << " (none)";
        for (int c : cols) std::cout << " " << split->col_name(c);
        std::cout << "\n";
    }
    const auto [workers_best, firms_best] = smc::extremal_matchings(d);
    std::cout << "worker-optimal: " << smc::to_string(*split, workers_best) << "\n";
    std::cout << "firm-optimal:   " << smc::to_string(*split, firms_best) << "\n";

    const smc::OccupancyReport rep = smc::occupancy_report(nf);
    std::cout << "never employed:";
    if (rep.unemployed_workers.empty()) std::cout << " (none)";
    for (int w : rep.unemployed_workers) std::cout << " " << split->row_name(w);
    std::cout << "\nnever filled:";
    if (rep.unfilled_columns.empty()) std::cout << " (none)";
    for (int c : rep.unfilled_columns) std::cout << " " << split->col_name(c);
    std::cout << "\nfixed assignments:";
    if (rep.fixed_pairs.empty()) std::cout << " (none)";
    for (smc::Vertex v : rep.fixed_pairs) std::cout << " " << smc::to_string(*split, v);
    std::cout << "\n";

    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) {
            std::cerr << "error: cannot write '" << dot_path << "'\n";
            return kInputError;
        }
        smc::write_dot(out, d);
    }
    return kOk;
}

int run_solve(const std::string& path, const std::string& mode, long long limit,
              const std::string& format, bool parallel)
{
    smc::ParseResult parsed;
    if (int rc = load_file(path, parsed)) return rc;
    const smc::Instance& inst = *parsed.instance;
    const bool as_json = format == "json";
    nlohmann::json doc;
    doc["solutions"] = nlohmann::json::array();

    if (!parsed.contradictions.empty()) {
        for (const auto& c : parsed.contradictions) std::cerr << "infeasible: " << c << "\n";
        if (as_json) {
            doc["count"] = 0;
            doc["infeasible"] = true;
            doc["reason"] = parsed.contradictions.front();
            doc["truncated"] = false;
            std::cout << doc.dump(2) << "\n";
        }
        return kNoSolutions;
    }

    smc::EnumerateOptions opt;
    opt.mode = mode == "worker-opt" ? smc::SolveMode::worker_optimal
             : mode == "firm-opt"   ? smc::SolveMode::firm_optimal
                                    : smc::SolveMode::all;
    opt.limit = limit;
    opt.parallel = parallel;

    long long count = 0;
    auto sink = [&](const smc::Matching&, const smc::ManyToOneMatching& mu) {
        ++count;
        if (as_json) {
            nlohmann::json sol = nlohmann::json::array();
            for (int w = 0; w < inst.num_workers(); ++w)
                if (mu.of(w) >= 0)
                    sol.push_back({{"worker", inst.worker_names[w]},
                                   {"firm", inst.firm_names[mu.of(w)]}});
            doc["solutions"].push_back(std::move(sol));
        } else {
            // Flush per line: downstream consumers see each solution as soon
            // as it exists, not when the search ends.
            std::cout << smc::to_string(inst, mu) << std::endl;
        }
        return true;
    };
    const smc::SolveOutcome outcome = smc::solve(inst, parsed.constraints, opt, sink);

    for (const auto& msg : outcome.dropped) std::cerr << "note: dropped constraint: " << msg << "\n";
    if (outcome.infeasible) std::cerr << "infeasible: " << outcome.reason << "\n";
    if (outcome.stats.truncated) std::cerr << "note: output truncated at limit\n";
    std::cerr << "solutions: " << count << ", search nodes: " << outcome.stats.calls
              << ", deletions: " << outcome.stats.deleted << ", time: "
              << outcome.stats.total_seconds << "s\n";

    if (as_json) {
        doc["count"] = count;
        doc["infeasible"] = outcome.infeasible;
        if (outcome.infeasible) doc["reason"] = outcome.reason;
        doc["truncated"] = outcome.stats.truncated;
        doc["stats"] = {{"search_nodes", outcome.stats.calls},
                        {"deletions", outcome.stats.deleted},
                        {"matched_size", outcome.stats.matched_size},
                        {"seconds", outcome.stats.total_seconds}};
        std::cout << doc.dump(2) << "\n";
    }
    return count > 0 ? kOk : kNoSolutions;
}

int run_oracle(const std::string& path, long long max_candidates)
{
    smc::ParseResult parsed;
    if (int rc = load_file(path, parsed)) return rc;
    const smc::Instance& inst = *parsed.instance;
    const smc::OracleResult res = smc::brute_force_stable(inst, max_candidates);
    if (res.bounded_out) {
        std::cerr << "refused: about " << res.estimate
                  << " candidate assignments exceed the bound of " << max_candidates << "\n";
        return kInputError;
    }
    std::cout << "stable matchings: " << res.all_stable.size() << "\n";
    for (const auto& mu : res.all_stable) std::cout << "  " << smc::to_string(inst, mu) << "\n";

    if (!parsed.contradictions.empty()) {
        for (const auto& c : parsed.contradictions) std::cerr << "infeasible: " << c << "\n";
        return kNoSolutions;
    }
    if (!parsed.constraints.empty()) {
        const auto kept = smc::filter_by_constraints(res.all_stable, inst, parsed.constraints);
        std::cout << "satisfying constraints: " << kept.size() << "\n";
        for (const auto& mu : kept) std::cout << "  " << smc::to_string(inst, mu) << "\n";
        return kept.empty() ? kNoSolutions : kOk;
    }
    return res.all_stable.empty() ? kNoSolutions : kOk;
}

int run_gen_ladder(int n, int forbid_from)
{
    const smc::ValidationResult gen = smc::generate_block_ladder(n);
    if (!gen.ok()) {
        for (const auto& e : gen.errors) std::cerr << "error: " << e << "\n";
        return kInputError;
    }
    smc::AssignmentConstraints ac;
    if (forbid_from > 0) ac = smc::ladder_diagonal_forbidden(*gen.instance, forbid_from);
    std::cout << smc::serialize(*gen.instance, ac);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stable matching solver: find every stable assignment meeting constraints"};
    app.require_subcommand(1);

    std::string path;
    auto* validate = app.add_subcommand("validate", "Check an instance file");
    validate->add_option("file", path, "instance file")->required();

    std::string dot_path;
    auto* normal = app.add_subcommand("normal-form", "Reduce the market and report its structure");
    normal->add_option("file", path, "instance file")->required();
    normal->add_option("--dot", dot_path, "write the reduced digraph in DOT format");

    std::string mode = "all";
    std::string format = "text";
    long long limit = -1;
    bool parallel = false;
    auto* solve = app.add_subcommand("solve", "Enumerate stable matchings meeting constraints");
    solve->add_option("file", path, "instance file")->required();
    solve->add_option("--mode", mode, "all, worker-opt, or firm-opt")
        ->check(CLI::IsMember({"all", "worker-opt", "firm-opt"}));
    solve->add_option("--limit", limit, "stop after this many solutions");
    solve->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_flag("--parallel", parallel, "explore branches on multiple threads");

    long long max_candidates = 10'000'000;
    auto* oracle = app.add_subcommand("oracle", "Brute-force the full stable set (small inputs)");
    oracle->add_option("file", path, "instance file")->required();
    oracle->add_option("--max-candidates", max_candidates, "refuse larger search spaces");

    int n = 0;
    int forbid_from = 0;
    auto* gen = app.add_subcommand("gen-ladder", "Generate a 2x2-block benchmark market");
    gen->add_option("--n", n, "number of workers and firms (even, >= 4)")->required();
    gen->add_option("--forbid-diagonal-from", forbid_from,
                    "add constraints f_out w_k: f_k for all k >= this index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    if (validate->parsed()) return run_validate(path);
    if (normal->parsed()) return run_normal_form(path, dot_path);
    if (solve->parsed()) return run_solve(path, mode, limit, format, parallel);
    if (oracle->parsed()) return run_oracle(path, max_candidates);
    if (gen->parsed()) return run_gen_ladder(n, forbid_from);
    return kInputError;
}
