#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rmc/binary_fast.hpp"
#include "rmc/budget_branch.hpp"
#include "rmc/column_search.hpp"
#include "rmc/distance.hpp"
#include "rmc/dummy_string.hpp"
#include "rmc/errors.hpp"
#include "rmc/normalize.hpp"
#include "rmc/oracle.hpp"
#include "rmc/outcome.hpp"
#include "rmc/twosat_d1.hpp"

namespace rmc {

enum class AlgorithmChoice { Auto, TwoSat, ColumnSearch, BudgetBranch, Nsd, BinaryFast, Oracle };

inline const char* algorithm_name(AlgorithmChoice c) {
    switch (c) {
        case AlgorithmChoice::Auto: return "auto";
        case AlgorithmChoice::TwoSat: return "twosat";
        case AlgorithmChoice::ColumnSearch: return "column";
        case AlgorithmChoice::BudgetBranch: return "budget";
        case AlgorithmChoice::Nsd: return "nsd";
        case AlgorithmChoice::BinaryFast: return "binary";
        case AlgorithmChoice::Oracle: return "oracle";
    }
    return "?";
}

/// Predicted work for the general-purpose routes, in saturating arithmetic.
struct CostEstimate {
    std::uint64_t column_search = 0;
    std::uint64_t budget_branch = 0;
    std::uint64_t nsd = 0;

    static constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

    static std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
        if (a != 0 && b > kSaturated / a)
            return kSaturated;
        return a * b;
    }

    static std::uint64_t sat_pow(std::uint64_t base, int exp) {
        std::uint64_t r = 1;
        for (int i = 0; i < exp; ++i)
            r = sat_mul(r, base);
        return r;
    }

    static CostEstimate of(const ConRmcInstance& inst) {
        const std::uint64_t n = static_cast<std::uint64_t>(inst.matrix.rows());
        const int l = inst.matrix.cols();
        const int d = inst.max_budget();
        int k = 0;
        for (int i = 0; i < inst.matrix.rows(); ++i)
            k = std::max(k, count_wildcards(inst.matrix.row(i)));
        const std::uint64_t sigma = static_cast<std::uint64_t>(inst.alphabet.size());

        CostEstimate c;
        c.column_search = sat_mul(sat_pow(d + 1, l), n);
        c.budget_branch = sat_mul(sat_pow(d + 1, d + k + 1), n);
        c.nsd = sat_mul(sat_mul(sat_pow(2, 4 * d + k), sat_pow(sigma, d + k)), n);
        return c;
    }

    /// Ties resolve toward budget_branch, then column_search, then nsd.
    AlgorithmChoice winner() const {
        AlgorithmChoice best = AlgorithmChoice::BudgetBranch;
        std::uint64_t best_cost = budget_branch;
        if (column_search < best_cost) {
            best = AlgorithmChoice::ColumnSearch;
            best_cost = column_search;
        }
        if (nsd < best_cost)
            best = AlgorithmChoice::Nsd;
        return best;
    }
};

namespace detail {

inline bool twosat_applicable(const ConRmcInstance& inst) {
    for (int i = 0; i < inst.matrix.rows(); ++i) {
        int comparable = inst.matrix.cols() - count_wildcards(inst.matrix.row(i));
        if (comparable > inst.budgets[i] && inst.budgets[i] > 1)
            return false;
    }
    return true;
}

inline bool binary_applicable(const ConRmcInstance& inst) {
    if (inst.alphabet.size() != 2)
        return false;
    for (int b : inst.budgets)
        if (b < inst.matrix.cols() - 1)
            return false;
    return true;
}

} // namespace detail

/// ConRMC entry point: preprocess, route to a solver, reconstruct the
/// witness. An explicit (non-Auto) choice runs on the preprocessed instance
/// and must satisfy that solver's precondition. chosen, when given, receives
/// the algorithm that actually ran.
inline SolveOutcome solve_conrmc(const ConRmcInstance& inst,
                                 AlgorithmChoice choice = AlgorithmChoice::Auto,
                                 AlgorithmChoice* chosen = nullptr,
                                 OracleBudget oracle_budget = {}) {
    NormalizeResult norm = normalize(inst);
    if (norm.is_no()) {
        // Preprocessing alone decided; no solver ran.
        if (chosen)
            *chosen = choice;
        return SolveOutcome::no({});
    }
    const ConRmcInstance& red = norm.reduced;

    AlgorithmChoice algo = choice;
    if (algo == AlgorithmChoice::Auto) {
        if (detail::twosat_applicable(red))
            algo = AlgorithmChoice::TwoSat;
        else if (detail::binary_applicable(red))
            algo = AlgorithmChoice::BinaryFast;
        else
            algo = CostEstimate::of(red).winner();
    }
    if (chosen)
        *chosen = algo;

    SolveOutcome out;
    switch (algo) {
        case AlgorithmChoice::TwoSat:
            out = solve_conrmc_d1(red);
            break;
        case AlgorithmChoice::ColumnSearch:
            out = solve_conrmc_alg1(red);
            break;
        case AlgorithmChoice::BudgetBranch:
            out = solve_conrmc_dk(red);
            break;
        case AlgorithmChoice::Nsd:
            out = conrmc_via_nsd(red);
            break;
        case AlgorithmChoice::BinaryFast:
            out = solve_binary_high(red);
            break;
        case AlgorithmChoice::Oracle:
            out = brute_conrmc(red, oracle_budget);
            break;
        case AlgorithmChoice::Auto:
            throw UsageError("unreachable algorithm choice");
    }
    if (out.yes)
        out.witness = norm.reconstruct(*out.witness);
    return out;
}

/// MinRMC: uniform budget d over all rows.
inline SolveOutcome solve_minrmc(const IncompleteMatrix& m, const Alphabet& alphabet, int d,
                                 AlgorithmChoice choice = AlgorithmChoice::Auto,
                                 AlgorithmChoice* chosen = nullptr,
                                 OracleBudget oracle_budget = {}) {
    if (d < 0)
        throw UsageError("solve_minrmc: d must be nonnegative");
    ConRmcInstance inst(m, std::vector<int>(static_cast<size_t>(m.rows()), d), alphabet);
    return solve_conrmc(inst, choice, chosen, oracle_budget);
}

enum class MinLrmcMode { PivotFull, PivotColumns };

/// MinLRMC via n ConRMC calls. PivotFull forces budget 0 on each candidate
/// center row in turn; PivotColumns restricts each sub-instance to the
/// pivot's missing columns. The smallest successful pivot index wins.
inline SolveOutcome solve_minlrmc(const IncompleteMatrix& m, const Alphabet& alphabet, int d,
                                  MinLrmcMode mode = MinLrmcMode::PivotColumns,
                                  AlgorithmChoice choice = AlgorithmChoice::Auto,
                                  OracleBudget oracle_budget = {}) {
    if (d < 0)
        throw UsageError("solve_minlrmc: d must be nonnegative");
    SearchStats total;

    for (int pivot = 0; pivot < m.rows(); ++pivot) {
        if (mode == MinLrmcMode::PivotFull) {
            std::vector<int> budgets(static_cast<size_t>(m.rows()), d);
            budgets[pivot] = 0;
            SolveOutcome out = solve_conrmc(ConRmcInstance(m, std::move(budgets), alphabet),
                                            choice, nullptr, oracle_budget);
            total.merge_max(out.stats);
            if (out.yes) {
                out.stats = total;
                return out;
            }
        } else {
            std::vector<int> holes = positions_of(m.row(pivot), Cell::wildcard());
            std::vector<int> budgets;
            bool feasible = true;
            for (int i = 0; i < m.rows() && feasible; ++i) {
                int b = d - hamming(m.row(pivot), m.row(i));
                feasible = b >= 0;
                budgets.push_back(b);
            }
            if (!feasible)
                continue;
            std::vector<Cell> cells;
            for (int i = 0; i < m.rows(); ++i)
                for (int j : holes)
                    cells.push_back(m.at(i, j));
            ConRmcInstance sub(IncompleteMatrix(m.rows(), static_cast<int>(holes.size()),
                                                std::move(cells)),
                               std::move(budgets), alphabet);
            SolveOutcome out = solve_conrmc(sub, choice, nullptr, oracle_budget);
            total.merge_max(out.stats);
            if (out.yes) {
                Witness w(static_cast<size_t>(m.cols()));
                for (int j = 0; j < m.cols(); ++j)
                    w[j] = m.at(pivot, j).code;
                for (size_t t = 0; t < holes.size(); ++t)
                    w[holes[t]] = (*out.witness)[t];
                return SolveOutcome::found(std::move(w), total);
            }
        }
    }
    return SolveOutcome::no(total);
}

struct WitnessCheck {
    bool valid = true;
    int violating_row = -1;
    int distance = 0;

    explicit operator bool() const { return valid; }
};

/// Recomputes every row distance of a complete witness against its budgets;
/// reports the first violation.
inline WitnessCheck verify_witness(const ConRmcInstance& inst, const Witness& v) {
    if (static_cast<int>(v.size()) != inst.matrix.cols())
        throw UsageError("verify_witness: witness length must equal column count");
    Row row(v.size());
    for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] < 0 || v[j] >= inst.alphabet.size())
            throw UsageError("verify_witness: witness symbol outside the alphabet");
        row[j] = Cell::filled(v[j]);
    }
    for (int i = 0; i < inst.matrix.rows(); ++i) {
        int dist = hamming(row, inst.matrix.row(i));
        if (dist > inst.budgets[i])
            return WitnessCheck{false, i, dist};
    }
    return WitnessCheck{};
}

enum class Problem { MinRmc, MinLrmc };

/// Smallest d admitting a Yes, by ascending linear scan; the scan always
/// terminates at d = l.
inline int min_radius(const IncompleteMatrix& m, const Alphabet& alphabet, Problem problem,
                      AlgorithmChoice choice = AlgorithmChoice::Auto,
                      OracleBudget oracle_budget = {}) {
    for (int d = 0;; ++d) {
        SolveOutcome out = problem == Problem::MinRmc
                               ? solve_minrmc(m, alphabet, d, choice, nullptr, oracle_budget)
                               : solve_minlrmc(m, alphabet, d, MinLrmcMode::PivotColumns, choice,
                                               oracle_budget);
        if (out.yes)
            return d;
    }
}

} // namespace rmc
