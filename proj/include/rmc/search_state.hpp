#pragma once

#include <vector>

#include "rmc/alphabet.hpp"
#include "rmc/distance.hpp"
#include "rmc/matrix.hpp"
#include "rmc/outcome.hpp"

namespace rmc {
namespace detail {

/// Shared backtracking state for the branching searches. Columns are never
/// copied; a mask plus an assignment array (original column -> symbol id,
/// -1 while open) realize submatrices, so child setup is O(1) and witnesses
/// assemble by original index.
template <typename MatrixT>
struct MaskedState {
    const MatrixT& matrix;
    const Alphabet& alphabet;
    std::vector<int> rows;      // indices of rows still constrained
    std::vector<int> budgets;   // parallel to rows
    std::vector<char> active;   // original-column mask
    std::vector<int> assignment;
    SearchStats& stats;

    MaskedState(const MatrixT& m, const Alphabet& a, SearchStats& s)
        : matrix(m), alphabet(a), active(static_cast<size_t>(m.cols()), 1),
          assignment(static_cast<size_t>(m.cols()), -1), stats(s) {}

    void fix_column(int j, int sym) {
        active[j] = 0;
        assignment[j] = sym;
        for (size_t t = 0; t < rows.size(); ++t)
            budgets[t] -= cell_mismatch(matrix.at(rows[t], j), Cell::filled(sym));
    }

    void unfix_column(int j, int sym) {
        for (size_t t = 0; t < rows.size(); ++t)
            budgets[t] += cell_mismatch(matrix.at(rows[t], j), Cell::filled(sym));
        assignment[j] = -1;
        active[j] = 1;
    }
};

using ConRmcState = MaskedState<IncompleteMatrix>;
using NsdState = MaskedState<DummyMatrix>;

template <typename MatrixT>
int active_hamming(const MaskedState<MatrixT>& st, int row_a, int row_b) {
    int d = 0;
    for (int j = 0; j < st.matrix.cols(); ++j)
        if (st.active[j])
            d += cell_mismatch(st.matrix.at(row_a, j), st.matrix.at(row_b, j));
    return d;
}

/// Lexicographic odometer over symbol ids; returns false after the last vector.
inline bool next_vector(std::vector<int>& v, int sigma) {
    for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j) {
        if (++v[j] < sigma)
            return true;
        v[j] = 0;
    }
    return false;
}

} // namespace detail
} // namespace rmc
