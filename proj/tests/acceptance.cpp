// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run directly or through ctest.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rmc/bench.hpp"
#include "rmc/binary_fast.hpp"
#include "rmc/budget_branch.hpp"
#include "rmc/column_search.hpp"
#include "rmc/dispatch.hpp"
#include "rmc/dummy_string.hpp"
#include "rmc/oracle.hpp"
#include "rmc/twosat.hpp"
#include "rmc/twosat_d1.hpp"
#include "test_util.hpp"

using namespace rmc;
using namespace rmctest;

namespace {

struct Harness {
    int failures = 0;
    int index = 0;

    void run(const std::string& name, const std::function<void()>& body) {
        ++index;
        try {
            body();
            std::printf("[PASS] criterion %d: %s\n", index, name.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] criterion %d: %s -- %s\n", index, name.c_str(), e.what());
        }
        std::fflush(stdout);
    }
};

void expect(bool cond, const std::string& what) {
    if (!cond)
        throw std::runtime_error(what);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void expect_valid(const ConRmcInstance& inst, const SolveOutcome& out, const std::string& what) {
    expect(out.yes && out.witness.has_value(), what + ": expected Yes with witness");
    expect(verify_witness(inst, *out.witness).valid, what + ": witness fails verification");
}

// Uniform-budget wrapper used by several criteria.
ConRmcInstance pivot_trap(int d) { return conrmc({"011", "111", "*00"}, {d, d, d}); }

void check_halving_vector(const SearchStats& stats, const std::string& what) {
    const auto& vec = stats.row1_budget_by_depth;
    if (vec.empty())
        return;
    const double d1 = vec[0];
    for (size_t t = 1; t < vec.size(); ++t)
        expect(vec[t] < d1 / static_cast<double>(1ULL << t) + 1.0,
               what + ": first-row budget fails the halving bound at depth " + std::to_string(t));
}

ConRmcInstance random_binary_high(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int l = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 16);
    std::vector<Cell> cells;
    std::vector<int> budgets;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < l; ++j) {
            if (rng() % 8 == 0)
                cells.push_back(Cell::wildcard());
            else
                cells.push_back(Cell::filled(static_cast<int>(rng() % 2)));
        }
        budgets.push_back(l - 1 + static_cast<int>(rng() % 2));
    }
    return ConRmcInstance(IncompleteMatrix(n, l, std::move(cells)), std::move(budgets),
                          sigma_of(2));
}

} // namespace

int main() {
    Harness h;

    h.run("mixed-token regression (radius 2 free center, radius 3 local center)", [] {
        auto t0 = std::chrono::steady_clock::now();

        SolveOutcome rmc2 = solve_minrmc(mixed_matrix(), mixed_alphabet(), 2);
        expect_valid(mixed_instance(2), rmc2, "free center at d=2");
        expect(!solve_minrmc(mixed_matrix(), mixed_alphabet(), 1).yes, "d=1 must be No");

        SolveOutcome local3 = solve_minlrmc(mixed_matrix(), mixed_alphabet(), 3);
        expect_valid(mixed_instance(3), local3, "local center at d=3");
        Row v;
        for (int s : *local3.witness)
            v.push_back(Cell::filled(s));
        bool completes = false;
        for (int i = 0; i < 4; ++i)
            completes = completes || hamming(v, mixed_matrix().row(i)) == 0;
        expect(completes, "local witness must complete a row");
        expect(!solve_minlrmc(mixed_matrix(), mixed_alphabet(), 2).yes, "local d=2 must be No");

        expect(seconds_since(t0) < 1.0, "exceeded 1 s");
    });

    h.run("incomplete-pivot regression stays Yes on every applicable route", [] {
        auto t0 = std::chrono::steady_clock::now();
        for (AlgorithmChoice algo :
             {AlgorithmChoice::ColumnSearch, AlgorithmChoice::BudgetBranch, AlgorithmChoice::Nsd,
              AlgorithmChoice::Oracle}) {
            SolveOutcome out = solve_conrmc(pivot_trap(2), algo);
            expect_valid(pivot_trap(2), out,
                         std::string("route ") + algorithm_name(algo) + " at d=2");
        }
        expect(seconds_since(t0) < 1.0, "exceeded 1 s");
    });

    // Shared corpus for criteria 3 and 4.
    struct FuzzStats {
        std::uint64_t instances = 0;
        std::uint64_t yes = 0;
    } fuzz;

    h.run("differential fuzzing: 1000 seeds, all routes vs the oracle", [&fuzz] {
        auto t0 = std::chrono::steady_clock::now();
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            ConRmcInstance inst = random_conrmc(seed);
            ++fuzz.instances;
            bool expected = brute_conrmc(inst).yes;
            fuzz.yes += expected ? 1 : 0;

            for (AlgorithmChoice algo :
                 {AlgorithmChoice::Auto, AlgorithmChoice::ColumnSearch,
                  AlgorithmChoice::BudgetBranch, AlgorithmChoice::Nsd}) {
                SolveOutcome out = solve_conrmc(inst, algo);
                expect(out.yes == expected, "route " + std::string(algorithm_name(algo)) +
                                                " disagrees at seed " + std::to_string(seed));
                if (out.yes)
                    expect(verify_witness(inst, *out.witness).valid,
                           "invalid witness at seed " + std::to_string(seed));
            }

            // Budgets clamped to {0,1} bring the 2-SAT route into play.
            std::vector<int> clamped;
            for (int b : inst.budgets)
                clamped.push_back(std::min(b, 1));
            ConRmcInstance low(inst.matrix, clamped, inst.alphabet);
            expect(solve_conrmc(low, AlgorithmChoice::TwoSat).yes == brute_conrmc(low).yes,
                   "twosat disagrees at seed " + std::to_string(seed));

            // Binary high-budget route on its own distribution.
            ConRmcInstance high = random_binary_high(seed);
            expect(solve_binary_high(high).yes == brute_conrmc(high).yes,
                   "binary disagrees at seed " + std::to_string(seed));

            // Both MinLRMC modes against the exhaustive reference.
            const int d = inst.max_budget();
            bool local = brute_minlrmc(inst.matrix, inst.alphabet, d).yes;
            expect(solve_minlrmc(inst.matrix, inst.alphabet, d, MinLrmcMode::PivotFull).yes ==
                       local,
                   "pivot-full disagrees at seed " + std::to_string(seed));
            expect(solve_minlrmc(inst.matrix, inst.alphabet, d, MinLrmcMode::PivotColumns).yes ==
                       local,
                   "pivot-columns disagrees at seed " + std::to_string(seed));
        }
        expect(fuzz.instances == 1000, "corpus incomplete");
        expect(seconds_since(t0) < 300.0, "exceeded 5 min");
    });

    h.run("structural bounds: branching, depth and budget halving", [] {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            ConRmcInstance inst = random_conrmc(seed);
            const int d = inst.max_budget();
            int k = 0;
            for (int i = 0; i < inst.matrix.rows(); ++i)
                k = std::max(k, count_wildcards(inst.matrix.row(i)));

            SolveOutcome cs = solve_conrmc_alg1(inst);
            expect(cs.stats.max_branch <= d + 1, "column-search branching exceeds d+1");
            expect(cs.stats.max_depth <= inst.matrix.cols(), "column-search depth exceeds l");

            SolveOutcome bb = solve_conrmc_dk(inst);
            expect(bb.stats.max_branch <= d + 1, "budget-branch branching exceeds d+1");
            expect(bb.stats.max_depth <= d + k, "budget-branch depth exceeds d+k");

            SolveOutcome ms = conrmc_via_nsd(inst);
            check_halving_vector(ms.stats, "seed " + std::to_string(seed));
        }
    });

    h.run("sequential at-most-one: exhaustive up to m=6, linear clause count", [] {
        auto satisfies = [](const TwoCnf& f, const Assignment& a) {
            for (const auto& c : f.clauses()) {
                bool va = c.a.negated ? !a[c.a.var] : a[c.a.var];
                bool vb = c.b.negated ? !a[c.b.var] : a[c.b.var];
                if (!va && !vb)
                    return false;
            }
            return true;
        };
        for (int m = 0; m <= 6; ++m) {
            TwoCnf f;
            std::vector<Literal> lits;
            for (int i = 0; i < m; ++i)
                lits.push_back(Literal::pos(f.new_variable()));
            at_most_one(lits, f);
            const int fresh = f.variable_count() - m;
            if (m >= 2)
                expect(static_cast<int>(f.clauses().size()) == 3 * m - 4 && fresh == m - 1,
                       "encoding size is off at m=" + std::to_string(m));
            for (int inputs = 0; inputs < (1 << m); ++inputs) {
                int trues = 0;
                Assignment a(static_cast<size_t>(f.variable_count()), false);
                for (int i = 0; i < m; ++i) {
                    a[i] = (inputs >> i) & 1;
                    trues += a[i] ? 1 : 0;
                }
                bool extendable = false;
                for (int ext = 0; ext < (1 << fresh) && !extendable; ++ext) {
                    for (int r = 0; r < fresh; ++r)
                        a[m + r] = (ext >> r) & 1;
                    extendable = satisfies(f, a);
                }
                expect(extendable == (trues <= 1),
                       "extension mismatch at m=" + std::to_string(m));
            }
        }

        // Measured clause constant c <= 4 on the d<=1 encodings.
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            ConRmcInstance raw = random_conrmc(seed);
            std::vector<int> clamped;
            for (int b : raw.budgets)
                clamped.push_back(std::min(b, 1));
            ConRmcInstance inst(raw.matrix, clamped, raw.alphabet);
            D1Encoding enc = build_d1_encoding(inst);
            const std::uint64_t cap = 4ULL *
                                      (inst.matrix.rows() + inst.alphabet.size()) *
                                      inst.matrix.cols();
            expect(enc.formula.clauses().size() <= cap, "clause count exceeds 4(n+sigma)l");
        }
    });

    h.run("halving lemma: 10^4 dummy triples hold, the wildcard triple fails", [] {
        std::mt19937_64 rng(61);
        auto random_row = [&](int l, int sigma, bool dummies) {
            Row r;
            for (int j = 0; j < l; ++j) {
                if (dummies && rng() % 4 == 0)
                    r.push_back(Cell::dummy());
                else
                    r.push_back(Cell::filled(static_cast<int>(rng() % sigma)));
            }
            return r;
        };
        int checked = 0;
        while (checked < 10000) {
            int l = 1 + static_cast<int>(rng() % 12);
            int sigma = 2 + static_cast<int>(rng() % 3);
            Row u = random_row(l, sigma, true);
            Row w = random_row(l, sigma, true);
            Row v = random_row(l, sigma, false);
            if (hamming(u, w) <= hamming(v, w))
                continue;
            ++checked;
            std::vector<bool> in_q(l, false);
            for (int j : mismatch_set(u, w))
                in_q[j] = true;
            int restricted = 0;
            for (int j = 0; j < l; ++j)
                if (!in_q[j])
                    restricted += cell_mismatch(u[j], v[j]);
            expect(2 * restricted < hamming(u, v), "halving violated under dummy semantics");
        }

        Row u = row("000000"), v = row("111111"), w = row("******");
        expect(mismatch_set(u, w).empty(), "wildcards must hide every disagreement");
        int restricted = hamming(u, v); // the kept column set is everything
        expect(!(2 * restricted < hamming(u, v)),
               "the wildcard triple must violate the halving bound");
    });

    h.run("binary high-budget route: sampled exhaustive check and linear scaling", [] {
        for (std::uint64_t seed = 0; seed < 10000; ++seed) {
            ConRmcInstance inst = random_binary_high(seed);
            SolveOutcome got = solve_binary_high(inst);
            expect(got.yes == brute_conrmc(inst).yes,
                   "binary disagrees at seed " + std::to_string(seed));
            if (got.yes)
                expect(verify_witness(inst, *got.witness).valid,
                       "binary witness invalid at seed " + std::to_string(seed));
        }

        // Runtime must grow at most 3x when n doubles at fixed l. With l = 24
        // the distinct count can never reach 2^l - 1, keeping the answer Yes.
        auto build = [](int n, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            const int l = 24;
            std::vector<Cell> cells(static_cast<size_t>(n) * l);
            for (auto& c : cells)
                c = Cell::filled(static_cast<int>(rng() % 2));
            return ConRmcInstance(IncompleteMatrix(n, l, std::move(cells)),
                                  std::vector<int>(static_cast<size_t>(n), l - 1), sigma_of(2));
        };
        auto time_solve = [](const ConRmcInstance& inst) {
            auto t0 = std::chrono::steady_clock::now();
            SolveOutcome out = solve_binary_high(inst);
            double dt = seconds_since(t0);
            expect(out.yes, "large random binary instances must be Yes");
            return dt;
        };
        ConRmcInstance small = build(1000000, 77);
        ConRmcInstance big = build(2000000, 78);
        double best_small = 1e9, best_big = 1e9;
        for (int rep = 0; rep < 3; ++rep) {
            best_small = std::min(best_small, time_solve(small));
            best_big = std::min(best_big, time_solve(big));
        }
        expect(best_big <= 3.0 * best_small,
               "doubling n scaled runtime by " + std::to_string(best_big / best_small));
    });

    h.run("dummy-padding reduction: oracle equivalence on 500 instances", [] {
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            ConRmcInstance inst = random_conrmc(seed);
            bool direct = brute_conrmc(inst).yes;
            NsdInstance padded = nsd_reduction(inst);
            expect(brute_conrmc(padded).yes == direct,
                   "padded oracle decision differs at seed " + std::to_string(seed));

            SolveOutcome via = conrmc_via_nsd(inst);
            expect(via.yes == direct, "nsd route differs at seed " + std::to_string(seed));
            if (via.yes)
                expect(verify_witness(inst, *via.witness).valid,
                       "truncated witness invalid at seed " + std::to_string(seed));
        }
    });

    if (h.failures == 0)
        std::printf("acceptance: all %d criteria passed\n", h.index);
    else
        std::printf("acceptance: %d of %d criteria FAILED\n", h.failures, h.index);
    return h.failures == 0 ? 0 : 1;
}
