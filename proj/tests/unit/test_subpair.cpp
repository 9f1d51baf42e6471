#include "pascalrank/subpair.hpp"

#include "doctest.h"
#include "support/generators.hpp"

#include <random>
#include <stdexcept>

using namespace pascalrank;

TEST_CASE("ordered sub-pair predicate") {
    Selection r({2, 7, 11, 14, 17, 20});
    Selection c({0, 4, 9, 10, 15});

    CHECK(is_ordered_subpair(Selection({2, 11}), Selection({4, 15}), r, c));
    CHECK(is_ordered_subpair(Selection({2, 7, 11}), Selection({9, 10, 15}), r, c));
    CHECK(is_ordered_subpair(Selection({2, 7, 11}), Selection({4, 9, 15}), r, c));
    CHECK(is_ordered_subpair(Selection({}), Selection({}), r, c));

    // length mismatch
    CHECK_FALSE(is_ordered_subpair(Selection({2}), Selection({4, 9}), r, c));
    // componentwise order violated
    CHECK_FALSE(is_ordered_subpair(Selection({7}), Selection({4}), r, c));
    // not subsequences
    CHECK_FALSE(is_ordered_subpair(Selection({3}), Selection({4}), r, c));
    CHECK_FALSE(is_ordered_subpair(Selection({2}), Selection({5}), r, c));
}

TEST_CASE("greedy maximal sub-pair on the six by five example") {
    SubPairIndices pair = maximal_subpair(Selection({2, 7, 11, 14, 17, 20}),
                                          Selection({0, 4, 9, 10, 15}));
    CHECK(pair.alpha == std::vector<std::size_t>{0, 1, 2});
    CHECK(pair.beta == std::vector<std::size_t>{1, 2, 4});
    CHECK(pair.length() == 3);
}

TEST_CASE("maximal sub-pair zero and identity cases") {
    CHECK(maximal_subpair(Selection({5}), Selection({0, 1})).empty());
    CHECK(maximal_subpair(Selection({}), Selection({0, 1})).empty());
    CHECK(maximal_subpair(Selection({5}), Selection({})).empty());

    SubPairIndices id = maximal_subpair(Selection({0, 1, 2}), Selection({0, 1, 2}));
    CHECK(id.alpha == std::vector<std::size_t>{0, 1, 2});
    CHECK(id.beta == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("greedy output is a valid ordered sub-pair") {
    Selection r({2, 7, 11, 14, 17, 20});
    Selection c({0, 4, 9, 10, 15});
    SubPairIndices pair = maximal_subpair(r, c);
    CHECK(is_ordered_subpair(r.at_positions(pair.alpha), c.at_positions(pair.beta), r, c));
}

TEST_CASE("alpha is always the index prefix") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        Selection r = testsupport::random_selection(rng, 30, 8);
        Selection c = testsupport::random_selection(rng, 30, 8);
        SubPairIndices pair = maximal_subpair(r, c);
        for (std::size_t i = 0; i < pair.alpha.size(); ++i) {
            CHECK(pair.alpha[i] == i);
        }
    }
}

TEST_CASE("dynamic-programming length on known cases") {
    CHECK(longest_subpair_length(Selection({2, 7, 11, 14, 17, 20}),
                                 Selection({0, 4, 9, 10, 15})) == 3);
    CHECK(longest_subpair_length(Selection({5}), Selection({0, 1})) == 0);
    CHECK(longest_subpair_length(Selection({}), Selection({})) == 0);
    CHECK(longest_subpair_length(Selection({0, 1, 2}), Selection({0, 1, 2})) == 3);
}

TEST_CASE("greedy equals dynamic programming on every small pair") {
    auto selections = testsupport::all_selections(6, 4);
    for (const Selection& r : selections) {
        for (const Selection& c : selections) {
            CHECK(maximal_subpair(r, c).length() == longest_subpair_length(r, c));
        }
    }
}

TEST_CASE("greedy equals dynamic programming on random larger pairs") {
    std::mt19937 rng(20160101);
    for (int trial = 0; trial < 200; ++trial) {
        Selection r = testsupport::random_selection(rng, 30, 8);
        Selection c = testsupport::random_selection(rng, 30, 8);
        CHECK(maximal_subpair(r, c).length() == longest_subpair_length(r, c));
    }
}

TEST_CASE("index matrix placement") {
    SubPairIndices pair{{0, 1, 2}, {1, 2, 4}};
    ExactMatrix m = index_matrix(pair, 6, 5);
    CHECK(m == ExactMatrix::from_rows({{0, 1, 0, 0, 0},
                                       {0, 0, 1, 0, 0},
                                       {0, 0, 0, 0, 1},
                                       {0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0}}));

    CHECK(index_matrix(SubPairIndices{}, 2, 2) == ExactMatrix(2, 2));
    CHECK(index_matrix(SubPairIndices{{0}, {0}}, 1, 1) == ExactMatrix::from_rows({{1}}));
}

TEST_CASE("index matrix rejects out-of-range indices") {
    CHECK_THROWS_AS(index_matrix(SubPairIndices{{0}, {3}}, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(index_matrix(SubPairIndices{{2}, {0}}, 2, 1), std::invalid_argument);
}

TEST_CASE("index matrix ones occupy distinct rows and columns") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        Selection r = testsupport::random_selection(rng, 24, 6);
        Selection c = testsupport::random_selection(rng, 24, 6);
        SubPairIndices pair = maximal_subpair(r, c);
        if (r.empty() || c.empty()) continue;
        ExactMatrix m = index_matrix(pair, r.size(), c.size());
        Integer total = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Integer row_sum = 0;
            for (std::size_t j = 0; j < m.cols(); ++j) row_sum += m(i, j);
            CHECK(row_sum <= 1);
            total += row_sum;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Integer col_sum = 0;
            for (std::size_t i = 0; i < m.rows(); ++i) col_sum += m(i, j);
            CHECK(col_sum <= 1);
        }
        CHECK(total == Integer(pair.length()));
    }
}
