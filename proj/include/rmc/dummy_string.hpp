#pragma once

#include <algorithm>
#include <vector>

#include "rmc/distance.hpp"
#include "rmc/errors.hpp"
#include "rmc/matrix.hpp"
#include "rmc/outcome.hpp"
#include "rmc/search_state.hpp"

namespace rmc {
namespace detail {

inline bool ms_neighboring_rec(NsdState& st, int depth);

/// Depth-first generation of the candidate slices over the disagreement
/// columns, pruned as soon as either running mismatch count exceeds its
/// budget. Complete slices recurse immediately; enumeration order is
/// lexicographic in symbol ids.
inline bool enumerate_slices(NsdState& st, const std::vector<int>& q_cols, size_t pos,
                             int mismatch_first, int mismatch_violator, int violator, int depth,
                             int& children) {
    if (mismatch_first > st.budgets[0] || mismatch_violator > st.budgets[violator])
        return false;
    if (pos == q_cols.size()) {
        std::vector<int> saved = st.budgets;
        for (size_t t = 0; t < st.rows.size(); ++t) {
            int dist = 0;
            for (int j : q_cols)
                dist += cell_mismatch(st.matrix.at(st.rows[t], j), Cell::filled(st.assignment[j]));
            st.budgets[t] -= dist;
        }
        // Halve the first-row budget: on the kept columns the first row equals
        // the violator, so any solution is closer to it than half the old gap.
        st.budgets[0] = std::min(st.budgets[0], (saved[0] + 1) / 2 - 1);

        ++children;
        bool found = ms_neighboring_rec(st, depth + 1);
        st.budgets = saved;
        return found;
    }

    const int j = q_cols[pos];
    st.active[j] = 0;
    for (int s = 0; s < st.alphabet.size(); ++s) {
        st.assignment[j] = s;
        if (enumerate_slices(
                st, q_cols, pos + 1,
                mismatch_first + cell_mismatch(st.matrix.at(st.rows[0], j), Cell::filled(s)),
                mismatch_violator + cell_mismatch(st.matrix.at(st.rows[violator], j), Cell::filled(s)),
                violator, depth, children))
            return true;
    }
    st.assignment[j] = -1;
    st.active[j] = 1;
    return false;
}

inline bool ms_neighboring_rec(NsdState& st, int depth) {
    st.stats.enter(depth);
    st.stats.record_row1_budget(depth, st.budgets[0]);

    for (int b : st.budgets)
        if (b < 0)
            return false;

    int violator = -1;
    for (size_t t = 1; t < st.rows.size() && violator < 0; ++t)
        if (active_hamming(st, st.rows[0], st.rows[t]) > st.budgets[t])
            violator = static_cast<int>(t);
    if (violator < 0) {
        // The first row itself is a solution (it carries no dummy here).
        for (int j = 0; j < st.matrix.cols(); ++j)
            if (st.active[j])
                st.assignment[j] = st.matrix.at(st.rows[0], j).code;
        return true;
    }

    std::vector<int> q_cols;
    for (int j = 0; j < st.matrix.cols(); ++j)
        if (st.active[j] &&
            cell_mismatch(st.matrix.at(st.rows[0], j), st.matrix.at(st.rows[violator], j)))
            q_cols.push_back(j);

    // No slice can sit within both budgets at once.
    if (static_cast<int>(q_cols.size()) > st.budgets[0] + st.budgets[violator])
        return false;

    int children = 0;
    bool found = enumerate_slices(st, q_cols, 0, 0, 0, violator, depth, children);
    st.stats.max_branch = std::max(st.stats.max_branch, children);
    return found;
}

} // namespace detail

/// Neighboring String with Dummies via the halving search. Requires a
/// dummy-free first row; dummies elsewhere mismatch every alphabet symbol.
inline SolveOutcome ms_neighboring(const NsdInstance& inst) {
    if (inst.matrix.rows() > 0 && count_dummies(inst.matrix.row(0)) > 0)
        throw UsageError("ms_neighboring: first row must not contain dummy characters");

    SearchStats stats;
    detail::NsdState st(inst.matrix, inst.alphabet, stats);
    for (int i = 0; i < inst.matrix.rows(); ++i)
        st.rows.push_back(i);
    st.budgets = inst.budgets;
    if (st.rows.empty()) {
        Witness w(static_cast<size_t>(inst.matrix.cols()), inst.alphabet.first().id);
        stats.nodes = 1;
        return SolveOutcome::found(std::move(w), stats);
    }

    if (!detail::ms_neighboring_rec(st, 0))
        return SolveOutcome::no(stats);
    return SolveOutcome::found(st.assignment, stats);
}

/// NSD for arbitrary matrices: rotate the first minimum-dummy row to the
/// front and enumerate every alphabet fill of its dummy positions, handing
/// each residual instance to the halving search. The lexicographically
/// smallest successful fill wins.
inline SolveOutcome nsd_solve(const NsdInstance& inst) {
    SearchStats stats;
    const DummyMatrix& m = inst.matrix;
    if (m.rows() == 0) {
        Witness w(static_cast<size_t>(m.cols()), inst.alphabet.first().id);
        stats.nodes = 1;
        return SolveOutcome::found(std::move(w), stats);
    }

    int front = 0, front_k = count_dummies(m.row(0));
    for (int i = 1; i < m.rows(); ++i) {
        int k = count_dummies(m.row(i));
        if (k < front_k) {
            front = i;
            front_k = k;
        }
    }
    std::vector<int> order;
    order.push_back(front);
    for (int i = 0; i < m.rows(); ++i)
        if (i != front)
            order.push_back(i);

    const std::vector<int> dummy_cols = positions_of(m.row(front), Cell::dummy());
    const int k = static_cast<int>(dummy_cols.size());

    std::vector<int> fill(static_cast<size_t>(k), 0);
    bool more = true;
    while (more) {
        detail::NsdState st(m, inst.alphabet, stats);
        st.rows = order;
        st.budgets.resize(order.size());
        st.budgets[0] = inst.budgets[front] - k;
        for (size_t t = 1; t < order.size(); ++t) {
            int dist = 0;
            for (int p = 0; p < k; ++p)
                dist += cell_mismatch(m.at(order[t], dummy_cols[p]), Cell::filled(fill[p]));
            st.budgets[t] = inst.budgets[order[t]] - dist;
        }
        for (int j : dummy_cols)
            st.active[j] = 0;

        if (detail::ms_neighboring_rec(st, 0)) {
            Witness w = st.assignment;
            for (int p = 0; p < k; ++p)
                w[dummy_cols[p]] = fill[p];
            return SolveOutcome::found(std::move(w), stats);
        }
        more = detail::next_vector(fill, inst.alphabet.size());
    }
    return SolveOutcome::no(stats);
}

/// The dummy-padding reduction: missing entries become dummies and k extra
/// columns make every row carry exactly k dummies, with budgets d_i + k.
inline NsdInstance nsd_reduction(const ConRmcInstance& inst) {
    const IncompleteMatrix& s = inst.matrix;
    int k = 0;
    for (int i = 0; i < s.rows(); ++i)
        k = std::max(k, count_wildcards(s.row(i)));

    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(s.rows()) * (s.cols() + k));
    std::vector<int> budgets(inst.budgets);
    const Cell pad_sym = Cell::filled(inst.alphabet.first());
    for (int i = 0; i < s.rows(); ++i) {
        int missing = 0;
        for (int j = 0; j < s.cols(); ++j) {
            Cell c = s.at(i, j);
            if (c.is_wildcard()) {
                ++missing;
                cells.push_back(Cell::dummy());
            } else {
                cells.push_back(c);
            }
        }
        for (int p = 0; p < k; ++p)
            cells.push_back(p < missing ? pad_sym : Cell::dummy());
        budgets[i] += k;
    }
    return NsdInstance(DummyMatrix(s.rows(), s.cols() + k, std::move(cells)), std::move(budgets),
                       inst.alphabet);
}

/// ConRMC through the padding reduction; the witness is the first l entries
/// of the NSD witness.
inline SolveOutcome conrmc_via_nsd(const ConRmcInstance& inst) {
    SolveOutcome out = nsd_solve(nsd_reduction(inst));
    if (out.yes)
        out.witness->resize(static_cast<size_t>(inst.matrix.cols()));
    return out;
}

} // namespace rmc
