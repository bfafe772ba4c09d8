#pragma once

#include <algorithm>
#include <vector>

#include "rmc/column_search.hpp"
#include "rmc/distance.hpp"
#include "rmc/matrix.hpp"
#include "rmc/normalize.hpp"
#include "rmc/outcome.hpp"
#include "rmc/search_state.hpp"

namespace rmc {
namespace detail {

/// The (d+k)-parameter branching. The first constrained row acts as the
/// pivot; its budget plus its open missing entries strictly decrease along
/// every recursion edge. When the pivot budget hits zero, the remaining
/// freedom lives entirely in the pivot's missing columns and the column
/// search finishes the job on that submatrix.
inline bool budget_branch_rec(ConRmcState& st, int depth) {
    if (!st.rows.empty() && st.budgets[0] == 0) {
        const int pivot = st.rows[0];
        ConRmcState sub(st.matrix, st.alphabet, st.stats);
        sub.assignment = st.assignment;
        for (int j = 0; j < st.matrix.cols(); ++j)
            sub.active[j] = st.active[j] && st.matrix.at(pivot, j).is_wildcard();
        for (size_t t = 1; t < st.rows.size(); ++t) {
            sub.rows.push_back(st.rows[t]);
            sub.budgets.push_back(st.budgets[t] - active_hamming(st, pivot, st.rows[t]));
        }
        if (!column_search_rec(sub, depth))
            return false;
        // Non-missing pivot entries complete the witness.
        for (int j = 0; j < st.matrix.cols(); ++j)
            if (st.active[j] && !st.matrix.at(pivot, j).is_wildcard())
                sub.assignment[j] = st.matrix.at(pivot, j).code;
        st.assignment = sub.assignment;
        return true;
    }

    st.stats.enter(depth);
    if (st.rows.empty()) {
        for (int j = 0; j < st.matrix.cols(); ++j)
            if (st.active[j])
                st.assignment[j] = st.alphabet.first().id;
        return true;
    }

    const int pivot = st.rows[0];
    // R_t = (P_*(pivot) \ P_*(row t)) u Q(pivot, row t) over active columns.
    auto in_branch_set = [&](int row, int j) {
        Cell cp = st.matrix.at(pivot, j);
        Cell cr = st.matrix.at(row, j);
        return !cr.is_wildcard() && (cp.is_wildcard() || cp.code != cr.code);
    };

    int violator = -1;
    for (size_t t = 1; t < st.rows.size() && violator < 0; ++t) {
        int size = 0;
        for (int j = 0; j < st.matrix.cols(); ++j)
            if (st.active[j] && in_branch_set(st.rows[t], j))
                ++size;
        if (size > st.budgets[t])
            violator = static_cast<int>(t);
    }
    if (violator < 0) {
        // Pivot row filled with the first symbol is within every budget.
        for (int j = 0; j < st.matrix.cols(); ++j)
            if (st.active[j])
                st.assignment[j] = st.matrix.at(pivot, j).is_wildcard()
                                       ? st.alphabet.first().id
                                       : st.matrix.at(pivot, j).code;
        return true;
    }

    const int row = st.rows[violator];
    std::vector<int> branch_cols;
    for (int j = 0; j < st.matrix.cols() &&
                    static_cast<int>(branch_cols.size()) <= st.budgets[violator];
         ++j)
        if (st.active[j] && in_branch_set(row, j))
            branch_cols.push_back(j);
    st.stats.max_branch = std::max(st.stats.max_branch, static_cast<int>(branch_cols.size()));

    for (int j : branch_cols) {
        const int sym = st.matrix.at(row, j).code;
        st.fix_column(j, sym);
        if (budget_branch_rec(st, depth + 1))
            return true;
        st.unfix_column(j, sym);
    }
    return false;
}

} // namespace detail

/// ConRMC parameterized by max budget d plus max missing entries per row k;
/// O(n l + (d+1)^{d+k+1} n). Preprocessing (normalize) runs once up front.
/// With rotate_max_missing_first, the first row with the most missing
/// entries is rotated to the front before the search (decision-neutral).
inline SolveOutcome solve_conrmc_dk(const ConRmcInstance& inst,
                                    bool rotate_max_missing_first = false) {
    NormalizeResult norm = normalize(inst);
    SearchStats stats;
    if (norm.is_no())
        return SolveOutcome::no(stats);

    detail::ConRmcState st(norm.reduced.matrix, norm.reduced.alphabet, stats);
    for (int i = 0; i < norm.reduced.matrix.rows(); ++i)
        st.rows.push_back(i);
    st.budgets = norm.reduced.budgets;

    if (rotate_max_missing_first && !st.rows.empty()) {
        int best = 0, best_k = count_wildcards(norm.reduced.matrix.row(0));
        for (size_t t = 1; t < st.rows.size(); ++t) {
            int k = count_wildcards(norm.reduced.matrix.row(st.rows[t]));
            if (k > best_k) {
                best = static_cast<int>(t);
                best_k = k;
            }
        }
        std::rotate(st.rows.begin(), st.rows.begin() + best, st.rows.begin() + best + 1);
        std::rotate(st.budgets.begin(), st.budgets.begin() + best, st.budgets.begin() + best + 1);
    }

    if (!detail::budget_branch_rec(st, 0))
        return SolveOutcome::no(stats);
    return SolveOutcome::found(norm.reconstruct(st.assignment), stats);
}

} // namespace rmc
