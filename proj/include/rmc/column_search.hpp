#pragma once

#include <algorithm>
#include <vector>

#include "rmc/distance.hpp"
#include "rmc/matrix.hpp"
#include "rmc/outcome.hpp"
#include "rmc/search_state.hpp"

namespace rmc {
namespace detail {

/// Search tree of the column-wise (d+1)-branching: pick the first row with
/// more comparable positions than budget and try matching it on each of the
/// first budget+1 such columns.
inline bool column_search_rec(ConRmcState& st, int depth) {
    st.stats.enter(depth);

    for (int b : st.budgets)
        if (b < 0)
            return false;

    int violator = -1;
    for (size_t t = 0; t < st.rows.size() && violator < 0; ++t) {
        int comparable = 0;
        for (int j = 0; j < st.matrix.cols(); ++j)
            if (st.active[j] && !st.matrix.at(st.rows[t], j).is_wildcard())
                ++comparable;
        if (comparable > st.budgets[t])
            violator = static_cast<int>(t);
    }
    if (violator < 0) {
        // Any fill satisfies every remaining row.
        for (int j = 0; j < st.matrix.cols(); ++j)
            if (st.active[j])
                st.assignment[j] = st.alphabet.first().id;
        return true;
    }

    const int row = st.rows[violator];
    std::vector<int> branch_cols;
    for (int j = 0; j < st.matrix.cols() &&
                    static_cast<int>(branch_cols.size()) <= st.budgets[violator];
         ++j)
        if (st.active[j] && !st.matrix.at(row, j).is_wildcard())
            branch_cols.push_back(j);
    st.stats.max_branch = std::max(st.stats.max_branch, static_cast<int>(branch_cols.size()));

    for (int j : branch_cols) {
        const int sym = st.matrix.at(row, j).code;
        st.fix_column(j, sym);
        if (column_search_rec(st, depth + 1))
            return true;
        st.unfix_column(j, sym);
    }
    return false;
}

} // namespace detail

/// ConRMC by column branching; O((d+1)^l * n l) over the remaining columns.
inline SolveOutcome solve_conrmc_alg1(const ConRmcInstance& inst) {
    SearchStats stats;
    detail::ConRmcState st(inst.matrix, inst.alphabet, stats);
    for (int i = 0; i < inst.matrix.rows(); ++i)
        st.rows.push_back(i);
    st.budgets = inst.budgets;

    if (!detail::column_search_rec(st, 0))
        return SolveOutcome::no(stats);
    return SolveOutcome::found(st.assignment, stats);
}

} // namespace rmc
