#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace dyneval;
using testsup::max_abs_diff;
using testsup::naive_mul;
using testsup::random_matrix;

TEST_CASE("mat_mul identity and rotation composition") {
    std::mt19937_64 rng(1);
    const DenseMatrix m = random_matrix(rng, 3, 3);
    CHECK(max_abs_diff(mat_mul(DenseMatrix::identity(3), m), m) == 0.0);

    const DenseMatrix quarter = DenseMatrix::from_rows({{0.0, -1.0}, {1.0, 0.0}});
    const DenseMatrix half = mat_mul(quarter, quarter);
    CHECK(max_abs_diff(half, DenseMatrix::from_rows({{-1.0, 0.0}, {0.0, -1.0}})) == 0.0);
}

TEST_CASE("mat_mul matches a naive triple-loop product") {
    std::mt19937_64 rng(2);
    const DenseMatrix a = random_matrix(rng, 5, 5);
    const DenseMatrix b = random_matrix(rng, 5, 5);
    CHECK(max_abs_diff(mat_mul(a, b), naive_mul(a, b)) == 0.0);
}

TEST_CASE("mat_mul rejects dimension mismatches") {
    std::mt19937_64 rng(3);
    CHECK_THROWS_AS(mat_mul(random_matrix(rng, 2, 3), random_matrix(rng, 2, 3)), DimensionError);
}

TEST_CASE("mat_mul is associative on random triples") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const DenseMatrix a = random_matrix(rng, 6, 6);
        const DenseMatrix b = random_matrix(rng, 6, 6);
        const DenseMatrix c = random_matrix(rng, 6, 6);
        const DenseMatrix left = mat_mul(mat_mul(a, b), c);
        const DenseMatrix right = mat_mul(a, mat_mul(b, c));
        CHECK(norm_inf(mat_sub(left, right)) <= 1e-12 * std::max(1.0, norm_inf(left)));
    }
}

TEST_CASE("mat_inverse on identity and diagonal matrices") {
    CHECK(max_abs_diff(mat_inverse(DenseMatrix::identity(4)), DenseMatrix::identity(4)) == 0.0);
    const DenseMatrix d = DenseMatrix::from_rows({{2.0, 0.0}, {0.0, 4.0}});
    CHECK(max_abs_diff(mat_inverse(d), DenseMatrix::from_rows({{0.5, 0.0}, {0.0, 0.25}})) == 0.0);
}

namespace {

// Cyclide coefficient rows in the (1, sin v, cos v, sin u, sin u sin v,
// sin u cos v, cos u, cos u sin v, cos u cos v) order, split as (H1 | H2).
DenseMatrix cyclide_rows() {
    const double a = 6.0, b = 4.0 * std::sqrt(2.0), c = 2.0, mu = 3.0;
    return DenseMatrix::from_rows({{mu * c, 0, 0, 0, 0, 0, b * b, 0, -mu * a},
                                   {0, 0, 0, a * b, 0, -mu * b, 0, 0, 0},
                                   {0, -mu * b, 0, 0, 0, 0, 0, b * c, 0},
                                   {a, 0, 0, 0, 0, 0, 0, 0, -c}});
}

}  // namespace

TEST_CASE("mat_inverse reproduces the block inverse of a unit-row lifting") {
    const DenseMatrix mh = cyclide_rows();
    DenseMatrix h1(4, 5), h2(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 5; ++c) h1(r, c) = mh(r, c);
        for (int c = 0; c < 4; ++c) h2(r, c) = mh(r, 5 + c);
    }
    DenseMatrix mx(9, 9);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 9; ++c) mx(r, c) = mh(r, c);
    for (int r = 0; r < 5; ++r) mx(4 + r, r) = 1.0;

    const DenseMatrix inv = mat_inverse(mx);

    // expected block form: [[0, I5], [H2^-1, -H2^-1 H1]]
    const DenseMatrix h2inv = mat_inverse(h2);
    const DenseMatrix corner = mat_scale(mat_mul(h2inv, h1), -1.0);
    DenseMatrix expected(9, 9);
    for (int r = 0; r < 5; ++r) expected(r, 4 + r) = 1.0;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) expected(5 + r, c) = h2inv(r, c);
        for (int c = 0; c < 5; ++c) expected(5 + r, 4 + c) = corner(r, c);
    }
    CHECK(max_abs_diff(inv, expected) <= 1e-12);
}

TEST_CASE("mat_inverse rejects singular input and carries a condition estimate") {
    const DenseMatrix singular = DenseMatrix::from_rows({{1.0, 2.0}, {2.0, 4.0}});
    CHECK_THROWS_AS(mat_inverse(singular), SingularMatrixError);
    try {
        mat_inverse(singular);
    } catch (const SingularMatrixError& e) {
        CHECK(std::isinf(e.condition_estimate()));
    }
}

TEST_CASE("inverse residual stays below 1e-10 for random matrices up to order 64") {
    std::mt19937_64 rng(5);
    for (int n : {4, 16, 33, 64}) {
        // diagonally dominated, hence well-conditioned
        DenseMatrix a = random_matrix(rng, n, n);
        for (int i = 0; i < n; ++i) a(i, i) += n;
        const DenseMatrix inv = mat_inverse(a);
        CHECK(norm_inf(mat_sub(mat_mul(a, inv), DenseMatrix::identity(n))) <= 1e-10);
    }
}

TEST_CASE("kron identities and the mixed-product rule") {
    CHECK(max_abs_diff(kron(DenseMatrix::identity(2), DenseMatrix::identity(3)),
                       DenseMatrix::identity(6)) == 0.0);

    const DenseMatrix swap = DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    const DenseMatrix two = DenseMatrix::from_rows({{2.0}});
    CHECK(max_abs_diff(kron(swap, two), DenseMatrix::from_rows({{0.0, 2.0}, {2.0, 0.0}})) == 0.0);

    std::mt19937_64 rng(6);
    const DenseMatrix a = random_matrix(rng, 2, 2);
    const DenseMatrix b = random_matrix(rng, 3, 3);
    const DenseMatrix c = random_matrix(rng, 2, 2);
    const DenseMatrix d = random_matrix(rng, 3, 3);
    const DenseMatrix left = mat_mul(kron(a, b), kron(c, d));
    const DenseMatrix right = kron(mat_mul(a, c), mat_mul(b, d));
    CHECK(norm_inf(mat_sub(left, right)) <= 1e-12 * std::max(1.0, norm_inf(left)));
}

TEST_CASE("block_diag assembly and multiplicativity") {
    CHECK(max_abs_diff(block_diag(DenseMatrix::identity(2), DenseMatrix::identity(3)),
                       DenseMatrix::identity(5)) == 0.0);
    CHECK(max_abs_diff(block_diag(DenseMatrix::from_rows({{1.0}}), DenseMatrix::from_rows({{2.0}})),
                       DenseMatrix::from_rows({{1.0, 0.0}, {0.0, 2.0}})) == 0.0);

    std::mt19937_64 rng(7);
    const DenseMatrix a = random_matrix(rng, 3, 3);
    const DenseMatrix b = random_matrix(rng, 2, 2);
    const DenseMatrix c = random_matrix(rng, 3, 3);
    const DenseMatrix d = random_matrix(rng, 2, 2);
    CHECK(max_abs_diff(mat_mul(block_diag(a, b), block_diag(c, d)),
                       block_diag(mat_mul(a, c), mat_mul(b, d))) == 0.0);

    CHECK_THROWS_AS(block_diag(random_matrix(rng, 2, 3), a), DimensionError);
}

TEST_CASE("mat_pow by binary exponentiation") {
    std::mt19937_64 rng(8);
    const DenseMatrix a = random_matrix(rng, 4, 4);
    CHECK(max_abs_diff(mat_pow(a, 0), DenseMatrix::identity(4)) == 0.0);

    const double angle = std::numbers::pi / 4.0;
    const DenseMatrix eighth =
        DenseMatrix::from_rows({{std::cos(angle), -std::sin(angle)},
                                {std::sin(angle), std::cos(angle)}});
    CHECK(max_abs_diff(mat_pow(eighth, 2),
                       DenseMatrix::from_rows({{0.0, -1.0}, {1.0, 0.0}})) <= 1e-14);

    DenseMatrix chain = DenseMatrix::identity(4);
    for (int i = 0; i < 5; ++i) chain = mat_mul(chain, a);
    CHECK(norm_inf(mat_sub(mat_pow(a, 5), chain)) <= 1e-12 * std::max(1.0, norm_inf(chain)));
}

TEST_CASE("pascal_rows is exact for small entries") {
    const auto rows = pascal_rows(8);
    CHECK(rows[8][4] == 70.0);
    CHECK(rows[5][2] == 10.0);
    CHECK_THROWS_AS(pascal_rows(65), PreconditionError);
}
