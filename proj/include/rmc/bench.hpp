#pragma once

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "rmc/dispatch.hpp"
#include "rmc/generator.hpp"

namespace rmc {

struct BenchRecord {
    std::uint64_t seed = 0;
    int n = 0;
    int l = 0;
    int sigma = 0;
    int d = 0;
    int k = 0;
    std::string algorithm;
    bool yes = false;
    std::uint64_t nodes = 0;
    std::int64_t micros = 0;
};

struct BenchConfig {
    std::uint64_t seed0 = 1;
    int count = 10;
    GenParams shape; // seed field is overwritten per instance
    std::vector<AlgorithmChoice> algorithms{AlgorithmChoice::ColumnSearch,
                                            AlgorithmChoice::BudgetBranch, AlgorithmChoice::Nsd};
    OracleBudget oracle_budget;
};

struct BenchResult {
    std::vector<BenchRecord> records;
    bool agreed = true;
    std::uint64_t disagreement_seed = 0;
};

/// Runs every requested algorithm on every generated instance. Decisions are
/// cross-checked per instance; any disagreement is a bug in some solver and
/// flags the offending seed as a reproducer.
inline BenchResult run_bench(const BenchConfig& cfg) {
    BenchResult res;
    for (int t = 0; t < cfg.count; ++t) {
        GenParams params = cfg.shape;
        params.seed = cfg.seed0 + static_cast<std::uint64_t>(t);
        ParsedInstance gen = gen_instance(params);
        ConRmcInstance inst = gen.with_budgets(*gen.budgets);

        bool first = true;
        bool expected = false;
        for (AlgorithmChoice algo : cfg.algorithms) {
            auto t0 = std::chrono::steady_clock::now();
            SolveOutcome out = solve_conrmc(inst, algo, nullptr, cfg.oracle_budget);
            auto t1 = std::chrono::steady_clock::now();

            BenchRecord rec;
            rec.seed = params.seed;
            rec.n = params.rows;
            rec.l = params.cols;
            rec.sigma = params.sigma;
            rec.d = params.d;
            rec.k = params.k;
            rec.algorithm = algorithm_name(algo);
            rec.yes = out.yes;
            rec.nodes = out.stats.nodes;
            rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            res.records.push_back(rec);

            if (out.yes && !verify_witness(inst, *out.witness).valid) {
                res.agreed = false;
                res.disagreement_seed = params.seed;
            }
            if (first) {
                expected = out.yes;
                first = false;
            } else if (out.yes != expected && res.agreed) {
                res.agreed = false;
                res.disagreement_seed = params.seed;
            }
        }
    }
    return res;
}

inline std::string bench_csv_header() { return "seed,n,l,sigma,d,k,algorithm,answer,nodes,micros"; }

inline std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << bench_csv_header() << '\n';
    for (const BenchRecord& r : records)
        os << r.seed << ',' << r.n << ',' << r.l << ',' << r.sigma << ',' << r.d << ',' << r.k
           << ',' << r.algorithm << ',' << (r.yes ? "YES" : "NO") << ',' << r.nodes << ','
           << r.micros << '\n';
    return os.str();
}

} // namespace rmc
