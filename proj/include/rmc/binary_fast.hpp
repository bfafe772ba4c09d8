#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rmc/distance.hpp"
#include "rmc/errors.hpp"
#include "rmc/matrix.hpp"
#include "rmc/outcome.hpp"

namespace rmc {
namespace detail {

/// Rows packed as bit vectors, most significant bit first, so lexicographic
/// row order equals numeric order of the word sequence.
struct PackedRows {
    int cols = 0;
    int words = 0;
    std::vector<std::uint64_t> data; // row-major, `words` words per row

    std::uint64_t* row(size_t i) { return data.data() + i * words; }
    const std::uint64_t* row(size_t i) const { return data.data() + i * words; }
    size_t count() const { return words == 0 ? 0 : data.size() / words; }
};

inline std::uint64_t pad_mask(int cols, int word) {
    int lo = word * 64;
    int hi = std::min(cols, lo + 64);
    if (hi <= lo)
        return 0;
    int used = hi - lo;
    return used == 64 ? ~0ULL : ~((1ULL << (64 - used)) - 1);
}

/// LSD radix sort over the packed words, one byte per pass.
inline void radix_sort_rows(PackedRows& rows) {
    const size_t n = rows.count();
    const int w = rows.words;
    if (n <= 1 || w == 0)
        return;
    std::vector<std::uint64_t> aux(rows.data.size());
    std::vector<size_t> bucket(257);
    std::vector<std::uint64_t>* src = &rows.data;
    std::vector<std::uint64_t>* dst = &aux;
    for (int word = w - 1; word >= 0; --word) {
        for (int byte = 0; byte < 8; ++byte) {
            std::fill(bucket.begin(), bucket.end(), 0);
            const int shift = 8 * byte;
            for (size_t i = 0; i < n; ++i)
                ++bucket[(((*src)[i * w + word] >> shift) & 0xFF) + 1];
            for (int b = 0; b < 256; ++b)
                bucket[b + 1] += bucket[b];
            for (size_t i = 0; i < n; ++i) {
                size_t pos = bucket[((*src)[i * w + word] >> shift) & 0xFF]++;
                for (int t = 0; t < w; ++t)
                    (*dst)[pos * w + t] = (*src)[i * w + t];
            }
            std::swap(src, dst);
        }
    }
    if (src != &rows.data)
        rows.data = *src;
}

inline bool row_equal(const std::uint64_t* a, const std::uint64_t* b, int w) {
    for (int t = 0; t < w; ++t)
        if (a[t] != b[t])
            return false;
    return true;
}

inline bool row_less(const std::uint64_t* a, const std::uint64_t* b, int w) {
    for (int t = 0; t < w; ++t) {
        if (a[t] != b[t])
            return a[t] < b[t];
    }
    return false;
}

} // namespace detail

/// Linear-time ConRMC for binary alphabet when every budget is at least l-1.
/// Rows with budget l and rows with missing entries cannot exclude anything;
/// each remaining distinct row excludes exactly its bitwise complement, so the
/// answer is Yes iff at most 2^l - 1 distinct rows remain.
inline SolveOutcome solve_binary_high(const ConRmcInstance& inst) {
    if (inst.alphabet.size() != 2)
        throw UsageError("solve_binary_high: alphabet must be binary");
    const int cols = inst.matrix.cols();
    for (int b : inst.budgets)
        if (b < cols - 1)
            throw UsageError("solve_binary_high: every budget must be at least l-1");

    SearchStats stats;
    stats.nodes = 1;
    if (cols == 0) {
        // Only budget -1 rows survive the filters and nothing satisfies them.
        for (int b : inst.budgets)
            if (b < 0)
                return SolveOutcome::no(stats);
        return SolveOutcome::found(Witness{}, stats);
    }

    detail::PackedRows rows;
    rows.cols = cols;
    rows.words = (cols + 63) / 64;

    for (int i = 0; i < inst.matrix.rows(); ++i) {
        if (inst.budgets[i] >= cols)
            continue;
        RowView r = inst.matrix.row(i);
        if (count_wildcards(r) > 0)
            continue;
        std::vector<std::uint64_t> packed(rows.words, 0);
        for (int j = 0; j < cols; ++j)
            if (r[j].code == 1)
                packed[j / 64] |= 1ULL << (63 - j % 64);
        rows.data.insert(rows.data.end(), packed.begin(), packed.end());
    }

    detail::radix_sort_rows(rows);

    size_t distinct = 0;
    const int w = rows.words;
    for (size_t i = 0; i < rows.count(); ++i) {
        if (i == 0 || !detail::row_equal(rows.row(i), rows.row(i - 1), w)) {
            if (distinct != i)
                for (int t = 0; t < w; ++t)
                    rows.row(distinct)[t] = rows.row(i)[t];
            ++distinct;
        }
    }
    stats.nodes += distinct;

    // With l past the word width the count bound holds vacuously.
    const bool yes = cols >= 63 || distinct <= (1ULL << cols) - 1;
    if (!yes)
        return SolveOutcome::no(stats);

    // Ascending complements of the sorted distinct rows: complementing
    // reverses lexicographic order, so walk the rows backwards.
    std::vector<std::uint64_t> candidate(static_cast<size_t>(w), 0);
    auto complement_of = [&](size_t i, std::vector<std::uint64_t>& out) {
        for (int t = 0; t < w; ++t)
            out[t] = ~rows.row(i)[t] & detail::pad_mask(cols, t);
    };
    auto increment = [&]() {
        if (w == 0)
            return;
        int t = w - 1;
        std::uint64_t step = cols % 64 == 0 ? 1ULL : 1ULL << (64 - cols % 64);
        while (true) {
            std::uint64_t before = candidate[t];
            candidate[t] += step;
            if (candidate[t] > before || t == 0)
                break;
            step = 1;
            --t;
        }
    };
    std::vector<std::uint64_t> comp(static_cast<size_t>(w));
    for (size_t idx = distinct; idx-- > 0;) {
        complement_of(idx, comp);
        if (detail::row_less(candidate.data(), comp.data(), w))
            break;
        if (detail::row_equal(candidate.data(), comp.data(), w))
            increment();
    }

    Witness witness(static_cast<size_t>(cols), 0);
    for (int j = 0; j < cols; ++j)
        witness[j] = (candidate[j / 64] >> (63 - j % 64)) & 1;
    return SolveOutcome::found(std::move(witness), stats);
}

} // namespace rmc
