#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nakayama/cartan.hpp"

using namespace nakayama;

namespace {

ExactMatrix fromRows(const std::vector<std::vector<std::int64_t>>& rows) {
    ExactMatrix m(static_cast<std::int64_t>(rows.size()),
                  static_cast<std::int64_t>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) = rows[i][j];
    return m;
}

std::vector<BigInt> diag(std::initializer_list<std::int64_t> v) {
    return {v.begin(), v.end()};
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows(), b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t k = 0; k < a.cols(); ++k)
            if (a.at(i, k) != 0)
                for (std::int64_t j = 0; j < b.cols(); ++j)
                    out.at(i, j) += a.at(i, k) * b.at(k, j);
    return out;
}

} // namespace

TEST_CASE("Cartan matrices of the fixtures") {
    CHECK(cartanMatrix(parse("2,3,3")) == fromRows({{1, 1, 1}, {1, 1, 1}, {0, 1, 1}}));
    CHECK(cartanMatrix(parse("2,1")) == fromRows({{1, 0}, {1, 1}}));
    // selfinjective m = 4, n = 3: circulant, diagonal 2, off-diagonal 1
    CHECK(cartanMatrix(parse("4,4,4")) == fromRows({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
}

TEST_CASE("Smith normal form on the fixtures") {
    CHECK(smithNormalForm(cartanMatrix(parse("2,2"))).diagonal == diag({1, 0}));
    CHECK(smithNormalForm(cartanMatrix(parse("2,3,3,3"))).diagonal == diag({1, 1, 1, 2}));
    CHECK(smithNormalForm(ExactMatrix::identity(3)).diagonal == diag({1, 1, 1}));
    CHECK(smithNormalForm(cartanMatrix(parse("2,3,3"))).diagonal == diag({1, 1, 0}));
    CHECK(smithNormalForm(cartanMatrix(parse("3,3,3"))).diagonal == diag({1, 0, 0}));
}

TEST_CASE("Smith normal form invariants on random matrices") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        ExactMatrix m(rows, cols);
        for (std::int64_t i = 0; i < rows; ++i)
            for (std::int64_t j = 0; j < cols; ++j)
                m.at(i, j) = static_cast<std::int64_t>(rng() % 19) - 9;

        const auto snf = smithNormalForm(m, true);

        // divisibility chain, nonzeros first
        for (std::size_t k = 0; k + 1 < snf.diagonal.size(); ++k) {
            if (snf.diagonal[k + 1] != 0) {
                REQUIRE(snf.diagonal[k] != 0);
                CHECK(snf.diagonal[k + 1] % snf.diagonal[k] == 0);
            }
            CHECK(snf.diagonal[k] >= 0);
        }

        // certificate: L * M * R is the diagonal matrix, transforms unimodular
        REQUIRE(snf.leftTransform.has_value());
        REQUIRE(snf.rightTransform.has_value());
        const auto prod = multiply(multiply(*snf.leftTransform, m), *snf.rightTransform);
        for (std::int64_t i = 0; i < rows; ++i)
            for (std::int64_t j = 0; j < cols; ++j)
                CHECK(prod.at(i, j) == (i == j ? snf.diagonal[static_cast<std::size_t>(i)] : 0));
        CHECK(abs(determinant(*snf.leftTransform)) == 1);
        CHECK(abs(determinant(*snf.rightTransform)) == 1);

        // |det| equals the product of the diagonal for square matrices
        if (rows == cols) {
            BigInt prodDiag = 1;
            for (const auto& d : snf.diagonal) prodDiag *= d;
            CHECK(abs(determinant(m)) == prodDiag);
        }
    }
}

TEST_CASE("determinants of the fixtures") {
    CHECK(determinant(cartanMatrix(parse("2,3,3,3"))) == 2);
    CHECK(determinant(cartanMatrix(parse("2,3"))) == 1);
    CHECK(determinant(cartanMatrix(parse("2,2"))) == 0);
}

TEST_CASE("SNF shape of the Cartan matrix on fixtures") {
    CHECK(verifySnfShape(parse("2,3,3")));
    CHECK(verifySnfShape(parse("3,3,3")));
    CHECK(verifySnfShape(parse("1")));
    CHECK(verifySnfShape(parse("2,3,3,3")));
    CHECK(verifySnfShape(parse("2,2")));
}

TEST_CASE("cycle indicators") {
    CycleData c;
    c.vertices = {1, 3, 2};
    const auto xi = cycleIndicator(c, 4);
    CHECK(xi.rows() == 4);
    CHECK(xi.at(0, 0) == 1);
    CHECK(xi.at(1, 0) == 1);
    CHECK(xi.at(2, 0) == 1);
    CHECK(xi.at(3, 0) == 0);

    CycleData loop;
    loop.vertices = {2};
    const auto xi2 = cycleIndicator(loop, 3);
    CHECK(xi2.at(0, 0) == 0);
    CHECK(xi2.at(1, 0) == 1);
    CHECK(xi2.at(2, 0) == 0);
}

TEST_CASE("linear systems tied to cycle indicators on fixtures") {
    const auto a = checkLinearSolutions(parse("2,3,3,3"));
    CHECK(a.spanningSolutions == CheckOutcome::Pass);
    CHECK(a.nonnegativeEnumeration == CheckOutcome::Pass);
    CHECK(a.combinedSystem == CheckOutcome::Pass);

    const auto b = checkLinearSolutions(parse("2,3,3"));
    CHECK(b.spanningSolutions == CheckOutcome::Pass);
    CHECK(b.nonnegativeEnumeration == CheckOutcome::Pass);
    CHECK(b.combinedSystem == CheckOutcome::Pass);

    const auto c = checkLinearSolutions(parse("2,2"));
    CHECK(c.spanningSolutions == CheckOutcome::Pass);
    CHECK(c.nonnegativeEnumeration == CheckOutcome::Pass);
    CHECK(c.combinedSystem == CheckOutcome::Pass);
}

TEST_CASE("linear-system enumeration is budgeted, skips are explicit") {
    // w = 9 and n = 1: bound is 10 > budget 5
    const auto r = checkLinearSolutions(parse("9"), 5);
    CHECK(r.nonnegativeEnumeration == CheckOutcome::Skip);
    CHECK(r.spanningSolutions == CheckOutcome::Pass);
    CHECK(r.detail.find("budget") != std::string::npos);
}

TEST_CASE("concatenation helpers") {
    const auto m = fromRows({{1, 2}, {3, 4}});
    const auto v = vconcat(m, m.transposed());
    CHECK(v.rows() == 4);
    CHECK(v.at(2, 1) == 3);
    const auto h = hconcat(m, m.transposed());
    CHECK(h.cols() == 4);
    CHECK(h.at(1, 2) == 2);
    CHECK(rankOf(v) == rankOf(h));
}
