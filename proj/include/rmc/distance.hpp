#pragma once

#include <vector>

#include "rmc/errors.hpp"
#include "rmc/matrix.hpp"

namespace rmc {

/// Mismatch indicator for a single pair of cells. Wildcards match everything;
/// a dummy behaves like an extra ordinary character outside the alphabet, so
/// two dummies match each other but a dummy never matches a symbol.
inline int cell_mismatch(Cell a, Cell b) {
    if (a.is_wildcard() || b.is_wildcard())
        return 0;
    return a.code != b.code ? 1 : 0;
}

/// Hamming distance between two rows, skipping positions where either side is
/// a wildcard. Symmetric; 0 <= result <= length.
inline int hamming(RowView u, RowView v) {
    if (u.size() != v.size())
        throw UsageError("hamming: rows must have equal length");
    int d = 0;
    for (size_t j = 0; j < u.size(); ++j)
        d += cell_mismatch(u[j], v[j]);
    return d;
}

/// Set of column indices (0-based) where the rows comparably disagree.
inline std::vector<int> mismatch_set(RowView u, RowView v) {
    if (u.size() != v.size())
        throw UsageError("mismatch_set: rows must have equal length");
    std::vector<int> q;
    for (size_t j = 0; j < u.size(); ++j)
        if (cell_mismatch(u[j], v[j]))
            q.push_back(static_cast<int>(j));
    return q;
}

/// Positions where the row equals the given cell exactly (wildcard and dummy
/// are looked up as themselves).
inline std::vector<int> positions_of(RowView v, Cell c) {
    std::vector<int> p;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] == c)
            p.push_back(static_cast<int>(j));
    return p;
}

inline int count_wildcards(RowView v) {
    int k = 0;
    for (Cell c : v)
        k += c.is_wildcard() ? 1 : 0;
    return k;
}

inline int count_dummies(RowView v) {
    int k = 0;
    for (Cell c : v)
        k += c.is_dummy() ? 1 : 0;
    return k;
}

/// v with its missing entries replaced from w; w must be complete.
inline Row overlay(RowView v, RowView w) {
    if (v.size() != w.size())
        throw UsageError("overlay: rows must have equal length");
    Row out(v.begin(), v.end());
    for (size_t j = 0; j < v.size(); ++j) {
        if (!w[j].is_filled())
            throw UsageError("overlay: fill row must be complete");
        if (v[j].is_wildcard())
            out[j] = w[j];
    }
    return out;
}

/// Columns containing at least two distinct alphabet symbols (wildcards and
/// dummies do not count toward dirtiness).
inline std::vector<int> dirty_columns(const IncompleteMatrix& m) {
    std::vector<int> out;
    for (int j = 0; j < m.cols(); ++j) {
        int seen = -1;
        for (int i = 0; i < m.rows(); ++i) {
            Cell c = m.at(i, j);
            if (!c.is_filled())
                continue;
            if (seen == -1) {
                seen = c.code;
            } else if (seen != c.code) {
                out.push_back(j);
                break;
            }
        }
    }
    return out;
}

} // namespace rmc
