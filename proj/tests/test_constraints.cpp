#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "smc/constraints.hpp"
#include "smc/oracle.hpp"
#include "support.hpp"

using namespace smc;
using namespace smc::test;

namespace {

bool mentions(const std::vector<std::string>& notes, const std::string& what)
{
    for (const auto& n : notes)
        if (n.find(what) != std::string::npos) return true;
    return false;
}

struct Compiled {
    std::shared_ptr<const SplitInstance> split;
    NormalForm nf;
    ConstraintReduction cr;
};

Compiled compile(const Instance& inst, const AssignmentConstraints& ac)
{
    auto split = split_shared(inst);
    auto nf = normal_form(split);
    auto cr = reduce_constraints(*split, nf, ac);
    return {split, std::move(nf), std::move(cr)};
}

}  // namespace

TEST_SUITE("constraints") {

TEST_CASE("golden query compiles to one requirement and one exclusion")
{
    auto [split, nf, cr] = compile(market64(), market64_constraints());
    CHECK_FALSE(cr.infeasible);
    CHECK(cr.pairs.v_in == std::vector<Vertex>{V(1, 2)});
    CHECK(cr.pairs.v_out == std::vector<Vertex>{V(4, 1)});
    // w6 can never be employed, so forbidding it at f4 is vacuous and
    // listing it among f2's allowed workers changes nothing.
    CHECK(cr.dropped.size() == 2);
    CHECK(mentions(cr.dropped, "f4"));
    CHECK(mentions(cr.dropped, "f2"));
    for (const auto& note : cr.dropped) CHECK(note.find("w6") != std::string::npos);
}

TEST_CASE("empty queries compile to nothing")
{
    auto [split, nf, cr] = compile(market64(), {});
    CHECK_FALSE(cr.infeasible);
    CHECK(cr.pairs.empty());
    CHECK(cr.dropped.empty());

    // Explicit empty member sets are no-ops, not errors.
    AssignmentConstraints hollow;
    hollow.firms_in = {{0, {}}};
    hollow.workers_out = {{2, {}}};
    auto hollowed = compile(market64(), hollow);
    CHECK_FALSE(hollowed.cr.infeasible);
    CHECK(hollowed.cr.pairs.empty());
    for (const auto& mu : market64_solutions())
        CHECK(satisfies_constraints(market64(), mu, hollow));
}

TEST_CASE("requiring an always-unemployed worker is infeasible")
{
    AssignmentConstraints ac;
    ac.firms_in = {{5, {1}}};   // w6 must work, but never does
    ac.firms_out = {{0, {0}}};  // piggy-backed exclusion must not leak through
    auto [split, nf, cr] = compile(market64(), ac);
    CHECK(cr.infeasible);
    CHECK(cr.reason.find("w6") != std::string::npos);
    CHECK(cr.reason.find("unemployed") != std::string::npos);
    CHECK(cr.pairs.empty());
}

TEST_CASE("requiring a pairing the reduction eliminated is infeasible")
{
    AssignmentConstraints ac;
    ac.firms_in = {{4, {0}}};  // w5 may only work at f1; (w5,f1) is dead
    auto [split, nf, cr] = compile(market64(), ac);
    CHECK(cr.infeasible);
    CHECK(cr.reason.find("w5") != std::string::npos);
    CHECK(cr.pairs.empty());
}

TEST_CASE("multi-position allowed lists compile to exclusions only")
{
    AssignmentConstraints ac;
    ac.workers_in = {{3, {4}}};  // f4 may only employ w5
    auto [split, nf, cr] = compile(market64(), ac);

    // Not judged infeasible here even though f4 can never fill both
    // positions from {w5}; the search's size check settles it.
    CHECK_FALSE(cr.infeasible);
    CHECK(cr.pairs.v_in.empty());
    CHECK(cr.pairs.v_out ==
          std::vector<Vertex>{V(1, 5), V(2, 5), V(3, 5), V(4, 5)});

    CHECK(collect_all(nf, cr.pairs).empty());
    // And indeed no stable assignment satisfies it.
    auto all = brute_force_stable(market64());
    REQUIRE_FALSE(all.bounded_out);
    CHECK(filter_by_constraints(all.all_stable, market64(), ac).empty());
}

TEST_CASE("two requirements cannot claim the same worker")
{
    AssignmentConstraints ac;
    ac.firms_in = {{0, {2}}};    // w1 must be at f3
    ac.workers_in = {{1, {0}}};  // f2 may only employ w1, forcing (w1,f2)
    auto [split, nf, cr] = compile(market64(), ac);
    CHECK(cr.infeasible);
    CHECK(cr.reason.find("w1") != std::string::npos);
    CHECK(cr.reason.find("conflict") != std::string::npos);
    CHECK(cr.pairs.empty());
}

TEST_CASE("two requirements cannot claim the same position")
{
    AssignmentConstraints ac;
    ac.firms_in = {{0, {1}}};    // w1 must be at f2
    ac.workers_in = {{1, {1}}};  // f2 may only employ w2, forcing (w2,f2)
    auto [split, nf, cr] = compile(market64(), ac);
    CHECK(cr.infeasible);
    CHECK(cr.reason.find("conflict") != std::string::npos);
    CHECK(cr.pairs.empty());
}

TEST_CASE("a vertex cannot be required and excluded at once")
{
    AssignmentConstraints ac;
    ac.firms_in = {{4, {3}}};    // w5 must be at f4 -> requires (w5,f4#1)
    ac.workers_out = {{3, {4}}}; // f4 must not employ w5
    auto [split, nf, cr] = compile(market64(), ac);
    CHECK(cr.infeasible);
    CHECK(cr.reason.find("w5") != std::string::npos);
    CHECK(cr.pairs.empty());
}

TEST_CASE("compiled pairs reference only live vertices")
{
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = random_market(rng);
        auto ac = random_assignment_constraints(rng, inst);
        auto [split, nf, cr] = compile(inst, ac);
        if (cr.infeasible) {
            CHECK(cr.pairs.empty());
            continue;
        }
        for (auto v : cr.pairs.v_in) CHECK(nf.digraph.live(v));
        for (auto v : cr.pairs.v_out) CHECK(nf.digraph.live(v));
    }
}

TEST_CASE("compiled pairs agree with the direct evaluator on stable assignments")
{
    std::mt19937 rng(8889);
    int feasible_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        auto inst = random_market(rng, 5, 5);
        auto ac = random_assignment_constraints(rng, inst);
        auto all = brute_force_stable(inst);
        REQUIRE_FALSE(all.bounded_out);

        auto [split, nf, cr] = compile(inst, ac);
        if (cr.infeasible) {
            ++infeasible_seen;
            // Infeasible must mean: no stable assignment satisfies it.
            CHECK(filter_by_constraints(all.all_stable, inst, ac).empty());
            continue;
        }
        ++feasible_seen;
        for (const auto& mu : all.all_stable) {
            bool direct = satisfies_constraints(inst, mu, ac);
            bool compiled = satisfies_pairs(split_preimage(*split, mu), cr.pairs);
            CHECK(direct == compiled);
        }
    }
    CHECK(feasible_seen > 0);
    CHECK(infeasible_seen > 0);
}

TEST_CASE("pair membership checks")
{
    auto m = matching({V(1, 2), V(2, 1), V(3, 3), V(4, 5), V(5, 4)});

    PairConstraints pc;
    CHECK(satisfies_pairs(m, pc));

    pc.v_in = {V(1, 2), V(5, 4)};
    CHECK(satisfies_pairs(m, pc));
    pc.v_in = {V(1, 1)};
    CHECK_FALSE(satisfies_pairs(m, pc));

    pc.v_in.clear();
    pc.v_out = {V(1, 1), V(2, 2)};
    CHECK(satisfies_pairs(m, pc));
    pc.v_out = {V(3, 3)};
    CHECK_FALSE(satisfies_pairs(m, pc));
}

TEST_CASE("direct evaluator semantics on the golden query")
{
    auto inst = market64();
    auto ac = market64_constraints();
    for (const auto& mu : market64_solutions()) CHECK(satisfies_constraints(inst, mu, ac));

    // The worker-optimal assignment parks w2 at f2, outside f2's allowed set.
    auto mw = mu_of(inst, {{"w1", "f1"}, {"w2", "f2"}, {"w3", "f3"}, {"w4", "f4"}, {"w5", "f4"}});
    CHECK(is_stable(inst, mw));
    CHECK_FALSE(satisfies_constraints(inst, mw, ac));

    // Forbidding (w4,f1) bites on the firm-optimal assignment.
    auto mf = mu_of(inst, {{"w1", "f4"}, {"w2", "f3"}, {"w3", "f2"}, {"w4", "f1"}, {"w5", "f4"}});
    CHECK(is_stable(inst, mf));
    CHECK_FALSE(satisfies_constraints(inst, mf, ac));
}

}
