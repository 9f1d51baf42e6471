#include "pascalrank/elimination.hpp"
#include "pascalrank/lacunary.hpp"
#include "pascalrank/pascal.hpp"
#include "pascalrank/rank.hpp"

#include "doctest.h"
#include "support/generators.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace pascalrank;

namespace {

const Selection kRows({2, 7, 11, 14, 17, 20});
const Selection kCols({0, 4, 9, 10, 15});

std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

} // namespace

TEST_CASE("six-point fit against three sparse degrees") {
    LacunaryFit fitted = fit(kRows, kCols, ones(6));

    CHECK(fitted.degrees == Selection({4, 9, 15}));
    REQUIRE(fitted.coefficients.size() == 3);
    CHECK(fitted.coefficients[0] == Rational(9706, 12423));
    CHECK(fitted.coefficients[1] == Rational(-15593, 149076));
    CHECK(fitted.coefficients[2] == Rational(46, 62115));
    CHECK(fitted.residual_sq == Rational(12332, 4141));
    CHECK(fitted.design == pascal_submatrix(kRows, Selection({4, 9, 15})));

    CHECK(format_decimal(fitted.coefficients[0], 4) == "0.7813");
    CHECK(format_decimal(fitted.coefficients[1], 4) == "-0.1046");
    CHECK(format_decimal(fitted.coefficients[2], 4) == "0.0007");
}

TEST_CASE("six-point fit residual vector") {
    LacunaryFit fitted = fit(kRows, kCols, ones(6));
    std::vector<Rational> res = residual_vector(fitted, ones(6));

    REQUIRE(res.size() == 6);
    CHECK(res[0] == Rational(0));
    CHECK(res[1] == Rational(0));
    CHECK(res[2] == Rational(45, 4141));
    CHECK(res[3] == Rational(-4095, 4141));
    CHECK(res[4] == Rational(-1));
    CHECK(res[5] == Rational(-1));

    Rational norm_sq(0);
    for (const Rational& v : res) norm_sq += v * v;
    CHECK(norm_sq == fitted.residual_sq);
}

TEST_CASE("normal-equation orthogonality holds exactly") {
    LacunaryFit fitted = fit(kRows, kCols, ones(6));
    std::vector<Rational> res = residual_vector(fitted, ones(6));
    std::vector<Rational> lhs = multiply(fitted.design.transposed(), res);
    for (const Rational& v : lhs) CHECK(v == Rational(0));
}

TEST_CASE("square invertible case interpolates") {
    Selection r({2, 7, 11});
    Selection c({4, 9, 15});
    std::vector<Rational> y = {Rational(3, 2), Rational(-1), Rational(7)};
    LacunaryFit fitted = fit(r, c, y);
    CHECK(fitted.residual_sq == Rational(0));
    std::vector<Rational> res = residual_vector(fitted, y);
    for (const Rational& v : res) CHECK(v == Rational(0));
}

TEST_CASE("zero data gives the zero fit") {
    LacunaryFit fitted = fit(kRows, kCols, std::vector<Rational>(6, Rational(0)));
    for (const Rational& b : fitted.coefficients) CHECK(b == Rational(0));
    CHECK(fitted.residual_sq == Rational(0));
}

TEST_CASE("derivative at one") {
    LacunaryFit fitted = fit(kRows, kCols, ones(6));

    // order 0 is plain evaluation at 1
    Rational value(0);
    for (const Rational& b : fitted.coefficients) value += b;
    CHECK(derivative_at_one(fitted, 0) == value);

    // derivative orders r_i relate to the design rows by the factorial factor
    std::vector<Rational> ab = multiply(fitted.design, fitted.coefficients);
    for (std::size_t i = 0; i < kRows.size(); ++i) {
        CHECK(derivative_at_one(fitted, kRows[i]) ==
              Rational(factorial(kRows[i])) * ab[i]);
    }

    // differentiating past the largest degree annihilates everything
    CHECK(derivative_at_one(fitted, 16) == Rational(0));
    CHECK(derivative_at_one(fitted, 100) == Rational(0));

    LacunaryFit zero = fit(kRows, kCols, std::vector<Rational>(6, Rational(0)));
    CHECK(derivative_at_one(zero, 3) == Rational(0));
}

TEST_CASE("perturbing the coefficients increases the residual") {
    LacunaryFit fitted = fit(kRows, kCols, ones(6));
    std::mt19937 rng(55555);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> perturbed = fitted.coefficients;
        bool any = false;
        for (Rational& b : perturbed) {
            int p = num(rng);
            if (p != 0) any = true;
            b += Rational(p, den(rng));
        }
        if (!any) continue;
        std::vector<Rational> res = multiply(fitted.design, perturbed);
        Rational norm_sq(0);
        for (std::size_t i = 0; i < res.size(); ++i) {
            Rational d = res[i] - Rational(1);
            norm_sq += d * d;
        }
        CHECK(norm_sq > fitted.residual_sq);
    }
}

TEST_CASE("degrees agree with the rank report column basis") {
    std::mt19937 rng(13579);
    for (int trial = 0; trial < 100; ++trial) {
        Selection r = testsupport::random_selection(rng, 20, 6);
        Selection c = testsupport::random_selection(rng, 20, 6);
        if (r.empty() || c.empty() || r[0] > c[c.size() - 1]) continue;
        LacunaryFit fitted = fit(r, c, ones(r.size()));
        RankReport report = rank_report(r, c);
        CHECK(fitted.degrees == report.col_basis);
        CHECK(bareiss_rank(fitted.design) == fitted.degrees.size());
    }
}

TEST_CASE("fit error paths") {
    CHECK_THROWS_AS(fit(kRows, kCols, ones(5)), std::invalid_argument);
    CHECK_THROWS_AS(fit(Selection({5}), Selection({0, 1}), ones(1)), std::domain_error);
    CHECK_THROWS_AS(fit(Selection({}), kCols, ones(0)), std::domain_error);
    CHECK_THROWS_AS(fit(kRows, Selection({}), ones(6)), std::domain_error);
}

TEST_CASE("fit against caller-chosen degrees") {
    // [9, 15] is an ordered sub-pair choice that is not maximal
    LacunaryFit fitted = fit_with_degrees(kRows, kCols, Selection({9, 15}), ones(6));
    CHECK(fitted.degrees == Selection({9, 15}));
    CHECK(fitted.coefficients.size() == 2);

    std::vector<Rational> res = residual_vector(fitted, ones(6));
    std::vector<Rational> lhs = multiply(fitted.design.transposed(), res);
    for (const Rational& v : lhs) CHECK(v == Rational(0));

    // maximal choice reproduces fit()
    LacunaryFit maximal = fit_with_degrees(kRows, kCols, Selection({4, 9, 15}), ones(6));
    CHECK(maximal.coefficients == fit(kRows, kCols, ones(6)).coefficients);

    // [0] fails: no row index can pair with column 0 (r_0 = 2 > 0)
    CHECK_THROWS_AS(fit_with_degrees(kRows, kCols, Selection({0}), ones(6)),
                    std::invalid_argument);
    // [10, 15] needs r_0 <= 10 and r_1 <= 15, both true, so it is accepted
    CHECK_NOTHROW(fit_with_degrees(kRows, kCols, Selection({10, 15}), ones(6)));
    // degrees not drawn from c are rejected
    CHECK_THROWS_AS(fit_with_degrees(kRows, kCols, Selection({4, 9, 14}), ones(6)),
                    std::invalid_argument);
    // more degrees than rows cannot form an ordered sub-pair
    CHECK_THROWS_AS(fit_with_degrees(Selection({2}), kCols, Selection({4, 9}), ones(1)),
                    std::invalid_argument);
}

TEST_CASE("residual_vector validates length") {
    LacunaryFit fitted = fit(kRows, kCols, ones(6));
    CHECK_THROWS_AS(residual_vector(fitted, ones(5)), std::invalid_argument);
}
