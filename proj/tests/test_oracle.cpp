#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmc/oracle.hpp"
#include "test_util.hpp"

using namespace rmc;
using namespace rmctest;

TEST_CASE("brute_conrmc returns the lexicographically smallest witness") {
    SolveOutcome out = brute_conrmc(conrmc({"011", "111", "*00"}, {2, 2, 2}));
    REQUIRE(out.yes);
    CHECK(*out.witness == wit("001"));
}

TEST_CASE("brute_conrmc on the mixed fixture") {
    CHECK(brute_conrmc(mixed_instance(2)).yes);
    CHECK(!brute_conrmc(mixed_instance(1)).yes);
}

TEST_CASE("brute_conrmc on a zero-column matrix") {
    SolveOutcome out = brute_conrmc(ConRmcInstance(IncompleteMatrix(2, 0, {}), {0, 0}));
    REQUIRE(out.yes);
    CHECK(out.witness->empty());
}

TEST_CASE("brute_conrmc refuses oversized instances") {
    std::vector<std::string> rows(2, std::string(30, '0'));
    CHECK_THROWS_AS(brute_conrmc(conrmc(rows, {1, 1}, 2)), OracleBudgetError);
    CHECK_NOTHROW(brute_conrmc(conrmc(rows, {1, 1}, 2), OracleBudget{1ULL << 62}));
}

TEST_CASE("brute_conrmc never puts a dummy in an NSD witness") {
    SolveOutcome out = brute_conrmc(nsd({"0%", "00"}, {1, 0}, 2));
    REQUIRE(out.yes);
    for (int s : *out.witness)
        CHECK(s >= 0);
}

TEST_CASE("brute_minlrmc on the mixed fixture") {
    SolveOutcome yes = brute_minlrmc(mixed_matrix(), mixed_alphabet(), 3);
    REQUIRE(yes.yes);
    // The completed second row is one valid local center.
    Row v;
    for (int s : mixed_local_center())
        v.push_back(Cell::filled(s));
    for (int i = 0; i < 4; ++i)
        CHECK(hamming(v, mixed_matrix().row(i)) <= 3);
    // The found witness completes some row and stays within distance 3.
    Row found;
    for (int s : *yes.witness)
        found.push_back(Cell::filled(s));
    bool completes_some_row = false;
    for (int i = 0; i < 4; ++i)
        completes_some_row = completes_some_row || hamming(found, mixed_matrix().row(i)) == 0;
    CHECK(completes_some_row);
    for (int i = 0; i < 4; ++i)
        CHECK(hamming(found, mixed_matrix().row(i)) <= 3);

    CHECK(!brute_minlrmc(mixed_matrix(), mixed_alphabet(), 2).yes);
}

TEST_CASE("brute_minlrmc trivial cases") {
    CHECK(brute_minlrmc(imatrix({"0110"}), sigma_of(2), 0).yes);
    CHECK_THROWS_AS(brute_minlrmc(imatrix({"01"}), sigma_of(2), -1), UsageError);
    // Pivot fill space too large.
    std::vector<std::string> rows = {std::string(30, '*')};
    CHECK_THROWS_AS(brute_minlrmc(imatrix(rows), sigma_of(2), 1), OracleBudgetError);
}
