#include <doctest.h>

#include "crn/matrix.hpp"
#include "crn/network.hpp"
#include "crn/presets.hpp"

#include "../support/oracles.hpp"

using crn::Matrix;
using crn::Rational;

TEST_CASE("rref: identity is a fixed point") {
    const Matrix id = Matrix::identity(2);
    const auto rr = crn::rref(id);
    CHECK(rr.reduced == id);
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref: rank-1 matrix by construction") {
    const Matrix m{{1, 2}, {2, 4}};
    const auto rr = crn::rref(m);
    CHECK(rr.reduced == Matrix{{1, 2}, {0, 0}});
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("rank basics") {
    CHECK(crn::rank(Matrix(3, 4)) == 0);
    CHECK(crn::rank(Matrix::identity(3)) == 3);
}

TEST_CASE("Schmitz stoichiometric matrix has rank 5, checked by Bareiss") {
    const Matrix n = crn::stoichiometric_matrix(crn::schmitz_subnetwork());
    CHECK(n.rows() == 6);
    CHECK(n.cols() == 8);
    CHECK(oracle::bareiss_rank(n) == 5);
    CHECK(crn::rank(n) == 5);
    CHECK(crn::rref(n).pivot_columns.size() == 5);
}

TEST_CASE("kernel basis: identity has trivial kernel") {
    CHECK(crn::kernel_basis(Matrix::identity(4)).cols() == 0);
}

TEST_CASE("kernel basis: [1 -1] gives (1,1)") {
    Matrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    const Matrix k = crn::kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 1);
}

TEST_CASE("spans_direct_sum on unit vectors") {
    Matrix e1(2, 1), e2(2, 1);
    e1.at(0, 0) = 1;
    e2.at(1, 0) = 1;
    CHECK(crn::spans_direct_sum({e1, e2}));
    CHECK_FALSE(crn::spans_direct_sum({e1, e1}));
}

TEST_CASE("spans_direct_sum rejects mismatched row labels") {
    Matrix a(2, 1), b(2, 1);
    a.row_labels() = {"A", "B"};
    b.row_labels() = {"A", "C"};
    CHECK_THROWS_AS(crn::spans_direct_sum({a, b}), crn::Error);
}

TEST_CASE("hconcat aligns rows by label") {
    Matrix a(2, 1), b(2, 1);
    a.row_labels() = {"A", "B"};
    a.at(0, 0) = 1;
    b.row_labels() = {"B", "A"};
    b.at(0, 0) = 5;
    const Matrix joined = crn::hconcat({a, b});
    CHECK(joined.at(0, 1) == 0);
    CHECK(joined.at(1, 1) == 5);
}

TEST_CASE("random matrices: rank(m) == rank(m^T), rank-nullity, exact kernel") {
    oracle::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng.below(12);
        const std::size_t cols = 1 + rng.below(12);
        const Matrix m = oracle::random_matrix(rng, rows, cols);

        const std::size_t r = crn::rank(m);
        CHECK(r == crn::rank(m.transposed()));
        CHECK(r == oracle::bareiss_rank(m));

        const Matrix k = crn::kernel_basis(m);
        CHECK(r + k.cols() == cols);
        CHECK((m * k).is_zero());

        const auto rr = crn::rref(m);
        CHECK(crn::rref(rr.reduced).reduced == rr.reduced);
        for (std::size_t i = 1; i < rr.pivot_columns.size(); ++i)
            CHECK(rr.pivot_columns[i - 1] < rr.pivot_columns[i]);
    }
}

TEST_CASE("operator* agrees with the naive product") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t a = 1 + rng.below(6), b = 1 + rng.below(6), c = 1 + rng.below(6);
        const Matrix x = oracle::random_matrix(rng, a, b);
        const Matrix y = oracle::random_matrix(rng, b, c);
        CHECK(x * y == oracle::naive_multiply(x, y));
    }
}
