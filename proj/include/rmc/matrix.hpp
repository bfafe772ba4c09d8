#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "rmc/alphabet.hpp"
#include "rmc/errors.hpp"

namespace rmc {

/// One matrix entry: a filled symbol, a wildcard '*' (missing entry, matches
/// everything) or a dummy (matches nothing in the alphabet).
struct Cell {
    static constexpr int32_t kWildcard = -1;
    static constexpr int32_t kDummy = -2;

    int32_t code = kWildcard;

    static Cell filled(Symbol s) { return Cell{s.id}; }
    static Cell filled(int id) { return Cell{id}; }
    static Cell wildcard() { return Cell{kWildcard}; }
    static Cell dummy() { return Cell{kDummy}; }

    bool is_filled() const { return code >= 0; }
    bool is_wildcard() const { return code == kWildcard; }
    bool is_dummy() const { return code == kDummy; }
    Symbol sym() const { return Symbol{code}; }

    friend bool operator==(Cell a, Cell b) { return a.code == b.code; }
    friend bool operator!=(Cell a, Cell b) { return a.code != b.code; }
};

using Row = std::vector<Cell>;
using RowView = std::span<const Cell>;

namespace detail {

/// Rectangular grid of cells with row-major storage.
class Grid {
  public:
    Grid() = default;

    Grid(int rows, int cols, std::vector<Cell> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (rows_ < 0 || cols_ < 0 ||
            cells_.size() != static_cast<size_t>(rows_) * static_cast<size_t>(cols_))
            throw UsageError("matrix shape does not match cell count");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cell at(int i, int j) const { return cells_[static_cast<size_t>(i) * cols_ + j]; }

    RowView row(int i) const {
        return RowView(cells_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_));
    }

    const std::vector<Cell>& cells() const { return cells_; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cell> cells_;
};

inline std::vector<Cell> from_rows(const std::vector<Row>& rows) {
    std::vector<Cell> cells;
    for (const Row& r : rows) {
        if (r.size() != rows.front().size())
            throw UsageError("matrix rows must have equal length");
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return cells;
}

} // namespace detail

/// n x l grid over the alphabet plus wildcards (the incomplete input matrix).
class IncompleteMatrix {
  public:
    IncompleteMatrix() = default;

    IncompleteMatrix(int rows, int cols, std::vector<Cell> cells)
        : grid_(rows, cols, std::move(cells)) {
        for (Cell c : grid_.cells())
            if (c.is_dummy())
                throw UsageError("incomplete matrix must not contain dummy cells");
    }

    explicit IncompleteMatrix(const std::vector<Row>& rows)
        : IncompleteMatrix(static_cast<int>(rows.size()),
                           rows.empty() ? 0 : static_cast<int>(rows.front().size()),
                           detail::from_rows(rows)) {}

    int rows() const { return grid_.rows(); }
    int cols() const { return grid_.cols(); }
    Cell at(int i, int j) const { return grid_.at(i, j); }
    RowView row(int i) const { return grid_.row(i); }
    const std::vector<Cell>& cells() const { return grid_.cells(); }

    /// Largest symbol id that occurs, or -1 if the matrix is all wildcards.
    int max_symbol_id() const {
        int m = -1;
        for (Cell c : grid_.cells())
            if (c.is_filled())
                m = std::max(m, c.code);
        return m;
    }

    friend bool operator==(const IncompleteMatrix& a, const IncompleteMatrix& b) {
        return a.grid_ == b.grid_;
    }

  private:
    detail::Grid grid_;
};

/// Complete n x l grid over the alphabet plus dummies (the NSD input matrix).
class DummyMatrix {
  public:
    DummyMatrix() = default;

    DummyMatrix(int rows, int cols, std::vector<Cell> cells) : grid_(rows, cols, std::move(cells)) {
        for (Cell c : grid_.cells())
            if (c.is_wildcard())
                throw UsageError("dummy matrix must be complete (no wildcards)");
    }

    explicit DummyMatrix(const std::vector<Row>& rows)
        : DummyMatrix(static_cast<int>(rows.size()),
                      rows.empty() ? 0 : static_cast<int>(rows.front().size()),
                      detail::from_rows(rows)) {}

    int rows() const { return grid_.rows(); }
    int cols() const { return grid_.cols(); }
    Cell at(int i, int j) const { return grid_.at(i, j); }
    RowView row(int i) const { return grid_.row(i); }
    const std::vector<Cell>& cells() const { return grid_.cells(); }

    friend bool operator==(const DummyMatrix& a, const DummyMatrix& b) {
        return a.grid_ == b.grid_;
    }

  private:
    detail::Grid grid_;
};

/// ConRMC instance: incomplete matrix plus one distance budget per row.
/// Budgets may be negative; recursive calls rely on that.
struct ConRmcInstance {
    IncompleteMatrix matrix;
    std::vector<int> budgets;
    Alphabet alphabet;

    ConRmcInstance() = default;

    ConRmcInstance(IncompleteMatrix m, std::vector<int> d, Alphabet sigma)
        : matrix(std::move(m)), budgets(std::move(d)), alphabet(std::move(sigma)) {
        validate();
    }

    /// Alphabet inferred from the matrix contents: symbol ids must already be
    /// dense; a matrix without any symbol gets the synthetic one-letter alphabet.
    ConRmcInstance(IncompleteMatrix m, std::vector<int> d)
        : matrix(std::move(m)), budgets(std::move(d)) {
        int hi = matrix.max_symbol_id();
        std::vector<std::string> tokens;
        for (int i = 0; i <= hi; ++i)
            tokens.push_back(std::to_string(i));
        alphabet = tokens.empty() ? Alphabet::synthetic() : Alphabet(std::move(tokens));
        validate();
    }

    int max_budget() const {
        int d = 0;
        for (int b : budgets)
            d = std::max(d, b);
        return d;
    }

  private:
    void validate() const {
        if (static_cast<int>(budgets.size()) != matrix.rows())
            throw UsageError("budget count must equal row count");
        for (Cell c : matrix.cells())
            if (c.is_filled() && c.code >= alphabet.size())
                throw UsageError("matrix symbol id out of alphabet range");
    }
};

/// NSD instance: complete matrix over alphabet + dummy, per-row budgets.
struct NsdInstance {
    DummyMatrix matrix;
    std::vector<int> budgets;
    Alphabet alphabet;

    NsdInstance() = default;

    NsdInstance(DummyMatrix m, std::vector<int> d, Alphabet sigma)
        : matrix(std::move(m)), budgets(std::move(d)), alphabet(std::move(sigma)) {
        if (static_cast<int>(budgets.size()) != matrix.rows())
            throw UsageError("budget count must equal row count");
        for (Cell c : matrix.cells())
            if (c.is_filled() && c.code >= alphabet.size())
                throw UsageError("matrix symbol id out of alphabet range");
    }

    int max_budget() const {
        int d = 0;
        for (int b : budgets)
            d = std::max(d, b);
        return d;
    }
};

} // namespace rmc
