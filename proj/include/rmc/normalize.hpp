#pragma once

#include <map>
#include <vector>

#include "rmc/distance.hpp"
#include "rmc/matrix.hpp"
#include "rmc/outcome.hpp"

namespace rmc {

/// Result of safe preprocessing. When verdict is Open, the original instance
/// is a Yes iff the reduced one is, and a full witness is reconstructed from a
/// reduced witness plus the forced-column map.
struct NormalizeResult {
    enum class Verdict { Open, No };

    Verdict verdict = Verdict::Open;
    ConRmcInstance reduced;
    /// original column index -> symbol id forced for every removed column
    std::map<int, int> forced_columns;
    int original_cols = 0;

    bool is_no() const { return verdict == Verdict::No; }

    /// Witness for the original instance from a witness of the reduced one.
    Witness reconstruct(const Witness& reduced_witness) const {
        Witness full(static_cast<size_t>(original_cols));
        size_t next = 0;
        for (int j = 0; j < original_cols; ++j) {
            auto it = forced_columns.find(j);
            if (it != forced_columns.end())
                full[j] = it->second;
            else
                full[j] = reduced_witness[next++];
        }
        return full;
    }
};

/// Safe reductions: reject negative budgets, drop rows that any vector
/// satisfies, strip clean columns (recording their forced value), and apply
/// the dirty-column bound: more than n*d dirty columns cannot be covered.
inline NormalizeResult normalize(const ConRmcInstance& inst) {
    NormalizeResult res;
    res.original_cols = inst.matrix.cols();

    for (int b : inst.budgets) {
        if (b < 0) {
            res.verdict = NormalizeResult::Verdict::No;
            return res;
        }
    }

    // Rows whose comparable positions already fit the budget hold for any vector.
    std::vector<int> keep_rows;
    for (int i = 0; i < inst.matrix.rows(); ++i) {
        int comparable = inst.matrix.cols() - count_wildcards(inst.matrix.row(i));
        if (comparable > inst.budgets[i])
            keep_rows.push_back(i);
    }

    // A column with at most one distinct symbol among the kept rows is clean:
    // assigning that symbol (or any symbol, if all wildcard) costs nothing.
    std::vector<int> keep_cols;
    for (int j = 0; j < inst.matrix.cols(); ++j) {
        int seen = -1;
        bool dirty = false;
        for (int i : keep_rows) {
            Cell c = inst.matrix.at(i, j);
            if (!c.is_filled())
                continue;
            if (seen == -1)
                seen = c.code;
            else if (seen != c.code)
                dirty = true;
        }
        if (dirty)
            keep_cols.push_back(j);
        else
            res.forced_columns.emplace(j, seen == -1 ? inst.alphabet.first().id : seen);
    }

    std::vector<Cell> cells;
    cells.reserve(keep_rows.size() * keep_cols.size());
    std::vector<int> budgets;
    for (int i : keep_rows) {
        for (int j : keep_cols)
            cells.push_back(inst.matrix.at(i, j));
        budgets.push_back(inst.budgets[i]);
    }
    res.reduced = ConRmcInstance(
        IncompleteMatrix(static_cast<int>(keep_rows.size()), static_cast<int>(keep_cols.size()),
                         std::move(cells)),
        std::move(budgets), inst.alphabet);

    // Every remaining column is dirty by construction.
    std::uint64_t dirty_count = keep_cols.size();
    std::uint64_t bound =
        static_cast<std::uint64_t>(res.reduced.matrix.rows()) *
        static_cast<std::uint64_t>(res.reduced.max_budget());
    if (dirty_count > bound)
        res.verdict = NormalizeResult::Verdict::No;
    return res;
}

} // namespace rmc
