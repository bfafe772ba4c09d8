#pragma once

#include <vector>

#include "rmc/distance.hpp"
#include "rmc/errors.hpp"
#include "rmc/matrix.hpp"
#include "rmc/outcome.hpp"
#include "rmc/twosat.hpp"

namespace rmc {

/// The 2-CNF encoding of a ConRMC instance with budgets in {0,1}. Variable
/// x_{j,sigma} (index j*|Sigma|+sigma) means "the witness has sigma in column
/// j"; sequential-counter auxiliaries follow in allocation order.
struct D1Encoding {
    TwoCnf formula;
    int cols = 0;
    int sigma = 0;

    int var_of(int col, int sym) const { return col * sigma + sym; }
};

/// Builds phi = phi1 ^ phi2 ^ phi3: at most one symbol per column, exact
/// match for budget-0 rows, at most one deviation for budget-1 rows.
/// Rows that any vector satisfies must be dropped before calling.
inline D1Encoding encode_conrmc_d1(const IncompleteMatrix& m, const std::vector<int>& budgets,
                                   const Alphabet& alphabet) {
    D1Encoding enc;
    enc.cols = m.cols();
    enc.sigma = alphabet.size();
    for (int j = 0; j < enc.cols * enc.sigma; ++j)
        enc.formula.new_variable();

    for (int j = 0; j < enc.cols; ++j) {
        std::vector<Literal> xs;
        for (int s = 0; s < enc.sigma; ++s)
            xs.push_back(Literal::pos(enc.var_of(j, s)));
        at_most_one(xs, enc.formula);
    }

    for (int i = 0; i < m.rows(); ++i) {
        if (budgets[i] == 0) {
            for (int j = 0; j < enc.cols; ++j)
                if (m.at(i, j).is_filled())
                    enc.formula.add_unit(Literal::pos(enc.var_of(j, m.at(i, j).code)));
        } else {
            std::vector<Literal> deviations;
            for (int j = 0; j < enc.cols; ++j)
                if (m.at(i, j).is_filled())
                    deviations.push_back(Literal::neg(enc.var_of(j, m.at(i, j).code)));
            at_most_one(deviations, enc.formula);
        }
    }
    return enc;
}

/// Drops rows that any vector satisfies, then encodes. Throws when a
/// remaining budget lies outside {0,1}.
inline D1Encoding build_d1_encoding(const ConRmcInstance& inst) {
    std::vector<Row> rows;
    std::vector<int> budgets;
    for (int i = 0; i < inst.matrix.rows(); ++i) {
        int comparable = inst.matrix.cols() - count_wildcards(inst.matrix.row(i));
        if (comparable <= inst.budgets[i])
            continue;
        if (inst.budgets[i] != 0 && inst.budgets[i] != 1)
            throw UsageError("solve_conrmc_d1: a non-satisfied row has budget outside {0,1}");
        rows.emplace_back(inst.matrix.row(i).begin(), inst.matrix.row(i).end());
        budgets.push_back(inst.budgets[i]);
    }
    IncompleteMatrix m(static_cast<int>(rows.size()), inst.matrix.cols(),
                       detail::from_rows(rows));
    return encode_conrmc_d1(m, budgets, inst.alphabet);
}

/// Linear-time ConRMC for max budget 1. Precondition: once rows that any
/// vector satisfies are dropped, every remaining budget is 0 or 1.
inline SolveOutcome solve_conrmc_d1(const ConRmcInstance& inst) {
    D1Encoding enc = build_d1_encoding(inst);
    SearchStats stats;
    stats.nodes = 1;

    std::optional<Assignment> assignment = solve_two_sat(enc.formula);
    if (!assignment)
        return SolveOutcome::no(stats);

    // Columns with no true variable get the first symbol; phi3 already
    // charged them as deviations, so the budget still holds.
    Witness w(static_cast<size_t>(enc.cols), inst.alphabet.first().id);
    for (int j = 0; j < enc.cols; ++j)
        for (int s = 0; s < enc.sigma; ++s)
            if ((*assignment)[enc.var_of(j, s)]) {
                w[j] = s;
                break;
            }
    return SolveOutcome::found(std::move(w), stats);
}

} // namespace rmc
