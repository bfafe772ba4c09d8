#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "rmc/alphabet.hpp"
#include "rmc/matrix.hpp"

namespace rmc {

/// Complete solution vector as symbol ids, one per column.
using Witness = std::vector<int>;

/// Search statistics. nodes counts every expanded search node (one per
/// recursive call, plus one per oracle candidate). row1_budget_by_depth is
/// filled only by the neighboring-string search: entry t holds the largest
/// first-row budget observed at recursion depth t.
struct SearchStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
    int max_branch = 0;
    std::vector<int> row1_budget_by_depth;

    void enter(int depth) {
        ++nodes;
        max_depth = std::max(max_depth, depth);
    }

    void record_row1_budget(int depth, int budget) {
        if (static_cast<int>(row1_budget_by_depth.size()) <= depth)
            row1_budget_by_depth.resize(depth + 1, INT_MIN_BUDGET);
        row1_budget_by_depth[depth] = std::max(row1_budget_by_depth[depth], budget);
    }

    void merge_max(const SearchStats& other) {
        nodes += other.nodes;
        max_depth = std::max(max_depth, other.max_depth);
        max_branch = std::max(max_branch, other.max_branch);
        if (row1_budget_by_depth.size() < other.row1_budget_by_depth.size())
            row1_budget_by_depth.resize(other.row1_budget_by_depth.size(), INT_MIN_BUDGET);
        for (size_t t = 0; t < other.row1_budget_by_depth.size(); ++t)
            row1_budget_by_depth[t] = std::max(row1_budget_by_depth[t], other.row1_budget_by_depth[t]);
    }

  private:
    static constexpr int INT_MIN_BUDGET = -(1 << 30);
};

/// Decision plus (for Yes) a complete witness vector over the alphabet.
struct SolveOutcome {
    bool yes = false;
    std::optional<Witness> witness;
    SearchStats stats;

    static SolveOutcome no(SearchStats s = {}) { return SolveOutcome{false, std::nullopt, std::move(s)}; }
    static SolveOutcome found(Witness w, SearchStats s = {}) {
        return SolveOutcome{true, std::move(w), std::move(s)};
    }
};

} // namespace rmc
