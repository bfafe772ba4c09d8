#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rmc/binary_fast.hpp"
#include "rmc/oracle.hpp"
#include "test_util.hpp"

using namespace rmc;
using namespace rmctest;

TEST_CASE("counting rule on tiny instances") {
    // Two distinct single-bit rows exclude both candidate vectors.
    CHECK(!solve_binary_high(conrmc({"0", "1"}, {0, 0}, 2)).yes);
    CHECK(solve_binary_high(conrmc({"0", "0"}, {0, 0}, 2)).yes);

    // All four two-bit rows exclude everything; any three leave one vector.
    CHECK(!solve_binary_high(conrmc({"00", "01", "10", "11"}, {1, 1, 1, 1}, 2)).yes);
    SolveOutcome out = solve_binary_high(conrmc({"00", "01", "10"}, {1, 1, 1}, 2));
    REQUIRE(out.yes);
    CHECK(*out.witness == wit("00")); // the only candidate left, 11 is absent
}

TEST_CASE("rows with missing entries or full budgets never exclude") {
    SolveOutcome out = solve_binary_high(conrmc({"*0"}, {1}, 2));
    REQUIRE(out.yes);
    CHECK(*out.witness == wit("00"));

    CHECK(solve_binary_high(conrmc({"01", "10"}, {2, 1}, 2)).yes);
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS_AS(solve_binary_high(conrmc({"012"}, {2}, 3)), UsageError);
    CHECK_THROWS_AS(solve_binary_high(conrmc({"01"}, {0}, 2)), UsageError);
}

TEST_CASE("wide rows take the short-circuit") {
    std::string zeros(70, '0');
    std::string ones(70, '1');
    SolveOutcome out = solve_binary_high(conrmc({ones}, {69}, 2));
    REQUIRE(out.yes);
    // 0^70 is excluded by its complement 1^70; the next vector is free.
    Witness expected(70, 0);
    expected[69] = 1;
    CHECK(*out.witness == expected);

    SolveOutcome zero_case = solve_binary_high(conrmc({zeros}, {69}, 2));
    REQUIRE(zero_case.yes);
    CHECK(*zero_case.witness == Witness(70, 0));
}

TEST_CASE("agreement with the oracle over sampled budget patterns") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 2000; ++rep) {
        const int l = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 16);
        std::vector<Cell> cells;
        std::vector<int> budgets;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < l; ++j) {
                if (rng() % 8 == 0)
                    cells.push_back(Cell::wildcard());
                else
                    cells.push_back(Cell::filled(static_cast<int>(rng() % 2)));
            }
            budgets.push_back(l - 1 + static_cast<int>(rng() % 2));
        }
        ConRmcInstance inst(IncompleteMatrix(n, l, std::move(cells)), std::move(budgets),
                            sigma_of(2));

        SolveOutcome got = solve_binary_high(inst);
        CHECK(got.yes == brute_conrmc(inst).yes);
        if (got.yes) {
            Row v;
            for (int s : *got.witness)
                v.push_back(Cell::filled(s));
            for (int i = 0; i < inst.matrix.rows(); ++i)
                CHECK(hamming(v, inst.matrix.row(i)) <= inst.budgets[i]);
        }
    }
}

TEST_CASE("each distinct tight row excludes exactly its complement") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 200; ++rep) {
        const int l = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < n; ++i) {
            std::vector<int> r;
            for (int j = 0; j < l; ++j)
                r.push_back(static_cast<int>(rng() % 2));
            rows.push_back(r);
        }

        std::vector<std::vector<int>> distinct_rows;
        for (const auto& r : rows)
            if (std::find(distinct_rows.begin(), distinct_rows.end(), r) == distinct_rows.end())
                distinct_rows.push_back(r);

        int excluded = 0;
        for (int bits = 0; bits < (1 << l); ++bits) {
            Row v;
            std::vector<int> vv;
            for (int j = 0; j < l; ++j) {
                int b = (bits >> j) & 1;
                v.push_back(Cell::filled(b));
                vv.push_back(b);
            }
            bool violates = false;
            Row r(static_cast<size_t>(l));
            for (const auto& ids : rows) {
                for (int j = 0; j < l; ++j)
                    r[j] = Cell::filled(ids[j]);
                violates = violates || hamming(v, r) > l - 1;
            }
            if (violates)
                ++excluded;

            std::vector<int> complement(vv);
            for (int& b : complement)
                b = 1 - b;
            bool complement_present =
                std::find(rows.begin(), rows.end(), complement) != rows.end();
            CHECK(violates == complement_present);
        }
        CHECK(excluded == static_cast<int>(distinct_rows.size()));
    }
}
