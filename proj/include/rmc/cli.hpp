#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmc/bench.hpp"
#include "rmc/dispatch.hpp"
#include "rmc/generator.hpp"
#include "rmc/io.hpp"
#include "rmc/normalize.hpp"
#include "rmc/twosat_d1.hpp"

namespace rmc {
namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open file '" + path + "'", 0, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write file '" + path + "'", 0, 0);
    out << content;
}

inline AlgorithmChoice parse_algo(const std::string& name) {
    for (AlgorithmChoice c :
         {AlgorithmChoice::Auto, AlgorithmChoice::TwoSat, AlgorithmChoice::ColumnSearch,
          AlgorithmChoice::BudgetBranch, AlgorithmChoice::Nsd, AlgorithmChoice::BinaryFast,
          AlgorithmChoice::Oracle})
        if (name == algorithm_name(c))
            return c;
    throw UsageError("unknown algorithm '" + name + "'");
}

/// Budget resolution: --d beats --d-file beats the instance's own budget line.
inline std::vector<int> resolve_budgets(const ParsedInstance& inst, bool has_d, int d,
                                        const std::string& d_file) {
    if (has_d)
        return std::vector<int>(static_cast<size_t>(inst.matrix.rows()), d);
    if (!d_file.empty()) {
        std::istringstream in(read_file(d_file));
        std::vector<int> values;
        int v = 0;
        while (in >> v)
            values.push_back(v);
        if (!in.eof())
            throw FormatError("budget file must contain integers only", 1, 1);
        if (values.size() == 1)
            return std::vector<int>(static_cast<size_t>(inst.matrix.rows()), values.front());
        if (static_cast<int>(values.size()) != inst.matrix.rows())
            throw UsageError("budget file must hold 1 or n values");
        return values;
    }
    if (inst.budgets)
        return *inst.budgets;
    throw UsageError("no distance budget given (use --d, --d-file or a d: line)");
}

inline int uniform_budget(const std::vector<int>& budgets) {
    for (int b : budgets)
        if (b != budgets.front())
            throw UsageError("this problem needs a single uniform d");
    if (budgets.empty())
        throw UsageError("no distance budget given");
    return budgets.front();
}

inline OracleBudget env_oracle_budget() {
    OracleBudget budget;
    if (const char* env = std::getenv("RMC_ORACLE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            budget.max_candidates = v;
    }
    return budget;
}

} // namespace detail

/// Command-line front end; returns the process exit status.
/// 0 = solved/ran, 2 = usage error, 3 = file format or I/O error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solvers for radius-minimizing matrix completion"};
    app.require_subcommand(1);

    std::string instance_path, problem = "conrmc", algo_name = "auto", mode_name = "pivot-columns";
    std::string d_file, witness_file, dump_cnf, out_path, gen_mode = "planted";
    int d_value = 0;
    bool has_d = false, json_output = false, min_radius_mode = false;

    CLI::App* solve = app.add_subcommand("solve", "Decide an instance and print a witness");
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_option("--problem", problem, "minrmc|minlrmc|conrmc")
        ->check(CLI::IsMember({"minrmc", "minlrmc", "conrmc"}));
    solve->add_option("--d", d_value, "uniform distance bound")->each([&](const std::string&) {
        has_d = true;
    });
    solve->add_option("--d-file", d_file, "file with 1 or n distance bounds");
    solve->add_option("--algo", algo_name, "auto|twosat|column|budget|nsd|binary|oracle");
    solve->add_option("--mode", mode_name, "minlrmc pivot mode")
        ->check(CLI::IsMember({"pivot-full", "pivot-columns"}));
    solve->add_flag("--json", json_output, "machine-readable output");
    solve->add_flag("--min-radius", min_radius_mode, "scan for the smallest feasible d");
    solve->add_option("--dump-cnf", dump_cnf, "write the d<=1 2-CNF as DIMACS to this file");

    CLI::App* verify = app.add_subcommand("verify", "Check a witness against an instance");
    verify->add_option("instance", instance_path, "instance file")->required();
    verify->add_option("--witness-file", witness_file, "witness token file")->required();
    verify->add_option("--d", d_value, "uniform distance bound")->each([&](const std::string&) {
        has_d = true;
    });
    verify->add_option("--d-file", d_file, "file with 1 or n distance bounds");

    CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive reference decision");
    oracle->add_option("instance", instance_path, "instance file")->required();
    oracle->add_option("--problem", problem, "minrmc|minlrmc|conrmc")
        ->check(CLI::IsMember({"minrmc", "minlrmc", "conrmc"}));
    oracle->add_option("--d", d_value, "uniform distance bound")->each([&](const std::string&) {
        has_d = true;
    });
    oracle->add_option("--d-file", d_file, "file with 1 or n distance bounds");
    oracle->add_flag("--json", json_output, "machine-readable output");

    GenParams gen_params;
    CLI::App* gen = app.add_subcommand("gen", "Generate a random instance file");
    gen->add_option("--seed", gen_params.seed, "random seed");
    gen->add_option("--n", gen_params.rows, "rows");
    gen->add_option("--l", gen_params.cols, "columns");
    gen->add_option("--sigma", gen_params.sigma, "alphabet size");
    gen->add_option("--d", gen_params.d, "distance bound");
    gen->add_option("--k", gen_params.k, "missing entries per row (planted) or expectation (free)");
    gen->add_option("--mode", gen_mode, "planted|free")->check(CLI::IsMember({"planted", "free"}));
    gen->add_option("--out", out_path, "output file (default stdout)");

    BenchConfig bench_cfg;
    std::string algos_csv = "column,budget,nsd";
    CLI::App* bench = app.add_subcommand("bench", "Generate, solve and cross-check instances");
    bench->add_option("--seeds", bench_cfg.count, "number of instances");
    bench->add_option("--seed0", bench_cfg.seed0, "first seed");
    bench->add_option("--n", bench_cfg.shape.rows, "rows");
    bench->add_option("--l", bench_cfg.shape.cols, "columns");
    bench->add_option("--sigma", bench_cfg.shape.sigma, "alphabet size");
    bench->add_option("--d", bench_cfg.shape.d, "distance bound");
    bench->add_option("--k", bench_cfg.shape.k, "missing entries per row");
    bench->add_option("--mode", gen_mode, "planted|free")->check(CLI::IsMember({"planted", "free"}));
    bench->add_option("--algos", algos_csv, "comma-separated algorithm list");
    bench->add_option("--out", out_path, "CSV output file (default stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        const OracleBudget oracle_budget = detail::env_oracle_budget();

        if (gen->parsed()) {
            gen_params.planted = gen_mode == "planted";
            std::string text = serialize_instance(gen_instance(gen_params));
            if (out_path.empty())
                out << text;
            else
                detail::write_file(out_path, text);
            return 0;
        }

        if (bench->parsed()) {
            bench_cfg.shape.planted = gen_mode == "planted";
            bench_cfg.oracle_budget = oracle_budget;
            bench_cfg.algorithms.clear();
            std::istringstream list(algos_csv);
            std::string name;
            while (std::getline(list, name, ','))
                if (!name.empty())
                    bench_cfg.algorithms.push_back(detail::parse_algo(name));
            if (bench_cfg.algorithms.empty())
                throw UsageError("--algos must name at least one algorithm");
            BenchResult res = run_bench(bench_cfg);
            std::string csv = bench_csv(res.records);
            if (out_path.empty())
                out << csv;
            else
                detail::write_file(out_path, csv);
            if (!res.agreed) {
                err << "decision disagreement at seed " << res.disagreement_seed << '\n';
                return 1;
            }
            return 0;
        }

        ParsedInstance parsed = parse_instance(detail::read_file(instance_path));
        std::vector<int> budgets = detail::resolve_budgets(parsed, has_d, d_value, d_file);

        if (verify->parsed()) {
            Witness w = parse_witness(detail::read_file(witness_file), parsed.alphabet);
            if (static_cast<int>(w.size()) != parsed.matrix.cols())
                throw FormatError("witness has " + std::to_string(w.size()) +
                                      " entries, expected " + std::to_string(parsed.matrix.cols()),
                                  1, 1);
            WitnessCheck check = verify_witness(parsed.with_budgets(budgets), w);
            if (check.valid)
                out << "VALID\n";
            else
                out << "VIOLATION row " << check.violating_row + 1 << " distance "
                    << check.distance << " budget " << budgets[check.violating_row] << '\n';
            return 0;
        }

        // solve and oracle share the remaining path.
        AlgorithmChoice choice =
            oracle->parsed() ? AlgorithmChoice::Oracle : detail::parse_algo(algo_name);
        MinLrmcMode mode =
            mode_name == "pivot-full" ? MinLrmcMode::PivotFull : MinLrmcMode::PivotColumns;

        if (!dump_cnf.empty()) {
            NormalizeResult norm = normalize(parsed.with_budgets(budgets));
            if (norm.is_no())
                throw UsageError("--dump-cnf: preprocessing already decided No, no formula built");
            D1Encoding enc = build_d1_encoding(norm.reduced);
            std::ostringstream os;
            enc.formula.write_dimacs(os);
            detail::write_file(dump_cnf, os.str());
        }

        auto t0 = std::chrono::steady_clock::now();
        SolveOutcome outcome;
        AlgorithmChoice ran = choice;
        int radius = -1;
        if (min_radius_mode) {
            if (problem == "conrmc")
                throw UsageError("--min-radius needs --problem minrmc or minlrmc");
            radius = min_radius(parsed.matrix, parsed.alphabet,
                                problem == "minrmc" ? Problem::MinRmc : Problem::MinLrmc, choice,
                                oracle_budget);
            outcome = problem == "minrmc"
                          ? solve_minrmc(parsed.matrix, parsed.alphabet, radius, choice, &ran,
                                         oracle_budget)
                          : solve_minlrmc(parsed.matrix, parsed.alphabet, radius, mode, choice,
                                          oracle_budget);
        } else if (oracle->parsed()) {
            // Direct exhaustive reference, bypassing preprocessing, so the
            // witness is the lexicographically smallest one overall.
            if (problem == "minlrmc")
                outcome = brute_minlrmc(parsed.matrix, parsed.alphabet,
                                        detail::uniform_budget(budgets), oracle_budget);
            else
                outcome = brute_conrmc(parsed.with_budgets(budgets), oracle_budget);
        } else if (problem == "minrmc") {
            outcome = solve_minrmc(parsed.matrix, parsed.alphabet, detail::uniform_budget(budgets),
                                   choice, &ran, oracle_budget);
        } else if (problem == "minlrmc") {
            outcome = solve_minlrmc(parsed.matrix, parsed.alphabet,
                                    detail::uniform_budget(budgets), mode, choice, oracle_budget);
        } else {
            outcome = solve_conrmc(parsed.with_budgets(budgets), choice, &ran, oracle_budget);
        }
        auto t1 = std::chrono::steady_clock::now();
        auto micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();

        if (json_output) {
            nlohmann::json j;
            j["answer"] = outcome.yes ? "YES" : "NO";
            if (outcome.yes) {
                nlohmann::json tokens = nlohmann::json::array();
                for (int s : *outcome.witness)
                    tokens.push_back(parsed.alphabet.token(s));
                j["witness"] = tokens;
            } else {
                j["witness"] = nullptr;
            }
            j["algorithm"] = algorithm_name(ran);
            j["nodes"] = outcome.stats.nodes;
            j["micros"] = micros;
            if (min_radius_mode)
                j["min_radius"] = radius;
            out << j.dump() << '\n';
        } else {
            if (min_radius_mode)
                out << radius << '\n';
            else
                out << (outcome.yes ? "YES" : "NO") << '\n';
            if (outcome.yes)
                out << format_witness(*outcome.witness, parsed.alphabet) << '\n';
        }
        return 0;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace rmc
