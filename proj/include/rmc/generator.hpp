#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rmc/errors.hpp"
#include "rmc/io.hpp"
#include "rmc/matrix.hpp"

namespace rmc {

/// Instance generator parameters. Planted instances are built around a hidden
/// center vector and are Yes at radius d by construction; free instances are
/// uniform cells with wildcard probability k/l.
struct GenParams {
    std::uint64_t seed = 0;
    int rows = 4;
    int cols = 6;
    int sigma = 2;
    int d = 1;
    int k = 1;
    bool planted = true;
};

namespace detail {

// All draws go through the modulo so that output depends only on the
// standard-specified mt19937_64 stream.
inline int bounded(std::mt19937_64& rng, int m) { return static_cast<int>(rng() % m); }

inline std::vector<int> distinct_positions(std::mt19937_64& rng, int count, int range) {
    std::vector<int> idx(static_cast<size_t>(range));
    for (int j = 0; j < range; ++j)
        idx[j] = j;
    for (int t = 0; t < count; ++t) {
        int pick = t + bounded(rng, range - t);
        std::swap(idx[t], idx[pick]);
    }
    idx.resize(static_cast<size_t>(count));
    return idx;
}

} // namespace detail

inline ParsedInstance gen_instance(const GenParams& p) {
    if (p.rows < 1 || p.cols < 1 || p.sigma < 1)
        throw UsageError("gen_instance: rows, cols and sigma must be positive");
    if (p.k > p.cols || p.k < 0)
        throw UsageError("gen_instance: k must lie in [0, cols]");
    if (p.d > p.cols || p.d < 0)
        throw UsageError("gen_instance: d must lie in [0, cols]");
    if (p.planted && p.d > 0 && p.sigma < 2)
        throw UsageError("gen_instance: planted perturbation needs at least two symbols");

    std::mt19937_64 rng(p.seed);
    std::vector<std::string> tokens;
    for (int s = 0; s < p.sigma; ++s)
        tokens.push_back(std::to_string(s));

    std::vector<Cell> cells(static_cast<size_t>(p.rows) * p.cols);
    if (p.planted) {
        std::vector<int> center(static_cast<size_t>(p.cols));
        for (int j = 0; j < p.cols; ++j)
            center[j] = detail::bounded(rng, p.sigma);
        for (int i = 0; i < p.rows; ++i) {
            Cell* row = cells.data() + static_cast<size_t>(i) * p.cols;
            for (int j = 0; j < p.cols; ++j)
                row[j] = Cell::filled(center[j]);
            int perturb = detail::bounded(rng, p.d + 1);
            for (int j : detail::distinct_positions(rng, perturb, p.cols)) {
                int other = detail::bounded(rng, p.sigma - 1);
                if (other >= center[j])
                    ++other;
                row[j] = Cell::filled(other);
            }
            for (int j : detail::distinct_positions(rng, std::min(p.k, p.cols), p.cols))
                row[j] = Cell::wildcard();
        }
    } else {
        for (size_t c = 0; c < cells.size(); ++c)
            cells[c] = detail::bounded(rng, p.cols) < p.k ? Cell::wildcard()
                                                          : Cell::filled(detail::bounded(rng, p.sigma));
    }

    ParsedInstance out;
    out.alphabet = Alphabet(std::move(tokens));
    out.alphabet_declared = true;
    out.matrix = IncompleteMatrix(p.rows, p.cols, std::move(cells));
    out.budgets = std::vector<int>(static_cast<size_t>(p.rows), p.d);
    return out;
}

} // namespace rmc
