#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmc/distance.hpp"
#include "rmc/errors.hpp"
#include "rmc/matrix.hpp"
#include "rmc/outcome.hpp"
#include "rmc/search_state.hpp"

namespace rmc {

/// Cap on the number of candidate vectors the exhaustive oracle may try.
struct OracleBudget {
    std::uint64_t max_candidates = 10'000'000;
};

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base)
            return cap + 1;
        r *= base;
    }
    return r;
}

inline void require_enumerable(int sigma, int cols, const OracleBudget& budget) {
    if (checked_power(static_cast<std::uint64_t>(sigma), cols, budget.max_candidates) >
        budget.max_candidates)
        throw OracleBudgetError("instance too large for oracle: |Sigma|^l exceeds " +
                                std::to_string(budget.max_candidates) + " candidates");
}

template <typename MatrixT>
SolveOutcome brute_decide(const MatrixT& m, const std::vector<int>& budgets, int sigma,
                          const OracleBudget& budget) {
    require_enumerable(sigma, m.cols(), budget);
    SearchStats stats;
    std::vector<int> v(static_cast<size_t>(m.cols()), 0);
    Row cand(static_cast<size_t>(m.cols()));
    bool more = true;
    while (more) {
        ++stats.nodes;
        for (size_t j = 0; j < v.size(); ++j)
            cand[j] = Cell::filled(v[j]);
        bool ok = true;
        for (int i = 0; i < m.rows() && ok; ++i)
            ok = hamming(cand, m.row(i)) <= budgets[i];
        if (ok)
            return SolveOutcome::found(v, stats);
        more = next_vector(v, sigma);
    }
    return SolveOutcome::no(stats);
}

} // namespace detail

/// Exhaustive ConRMC decider: tries every vector of Sigma^l in lexicographic
/// order and returns the first one within all row budgets.
inline SolveOutcome brute_conrmc(const ConRmcInstance& inst, OracleBudget budget = {}) {
    return detail::brute_decide(inst.matrix, inst.budgets, inst.alphabet.size(), budget);
}

/// Exhaustive NSD decider; candidates range over the alphabet only, never the dummy.
inline SolveOutcome brute_conrmc(const NsdInstance& inst, OracleBudget budget = {}) {
    return detail::brute_decide(inst.matrix, inst.budgets, inst.alphabet.size(), budget);
}

/// Exhaustive MinLRMC decider: for each pivot row, tries every fill of its
/// missing entries and checks that every other row can be completed within d.
inline SolveOutcome brute_minlrmc(const IncompleteMatrix& m, const Alphabet& sigma, int d,
                                  OracleBudget budget = {}) {
    if (d < 0)
        throw UsageError("brute_minlrmc: d must be nonnegative");
    SearchStats stats;
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<int> holes = positions_of(m.row(i), Cell::wildcard());
        detail::require_enumerable(sigma.size(), static_cast<int>(holes.size()), budget);
        std::vector<int> fill(holes.size(), 0);
        bool more = true;
        while (more) {
            ++stats.nodes;
            Row cand(m.row(i).begin(), m.row(i).end());
            for (size_t t = 0; t < holes.size(); ++t)
                cand[holes[t]] = Cell::filled(fill[t]);
            bool ok = true;
            for (int r = 0; r < m.rows() && ok; ++r)
                ok = hamming(cand, m.row(r)) <= d;
            if (ok) {
                Witness w(cand.size());
                for (size_t j = 0; j < cand.size(); ++j)
                    w[j] = cand[j].code;
                return SolveOutcome::found(std::move(w), stats);
            }
            more = detail::next_vector(fill, sigma.size());
        }
    }
    return SolveOutcome::no(stats);
}

} // namespace rmc
