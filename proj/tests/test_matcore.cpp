#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ssalign/matcore.hpp"
#include "ssalign/testgen.hpp"
#include "test_util.hpp"

using namespace ssalign;
using test_util::col;
using test_util::mat;

namespace {

// Independent Kronecker oracle: entry-level index formula, no blocks.
Matrix kron_by_index(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
        }
    }
    return out;
}

// Singular values of a 2x2 matrix from the closed-form Gram eigenvalues.
std::pair<double, double> singular_values_2x2(const Matrix& m) {
    const Matrix g = m.transpose() * m;
    const double tr = g(0, 0) + g(1, 1);
    const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
    return {std::sqrt(std::max(tr / 2.0 + disc, 0.0)), std::sqrt(std::max(tr / 2.0 - disc, 0.0))};
}

}  // namespace

TEST_CASE("kron") {
    SUBCASE("identity times block is block diagonal") {
        const Matrix m = mat({{1.0, 2.0}, {3.0, 4.0}});
        const Matrix k = kron(identity(2), m);
        CHECK(k.rows() == 4);
        CHECK(k.cols() == 4);
        CHECK(k.topLeftCorner(2, 2) == m);
        CHECK(k.bottomRightCorner(2, 2) == m);
        CHECK(k.topRightCorner(2, 2).isZero(0.0));
        CHECK(k.bottomLeftCorner(2, 2).isZero(0.0));
    }

    SUBCASE("scalar case") {
        const Matrix k = kron(mat({{3.0}}), mat({{-2.0}}));
        CHECK(k.rows() == 1);
        CHECK(k(0, 0) == -6.0);
    }

    SUBCASE("2x2 expansion") {
        const Matrix a = mat({{1.0, 2.0}, {3.0, 4.0}});
        const Matrix b = mat({{0.0, 5.0}, {6.0, 7.0}});
        const Matrix expected = mat({{0.0, 5.0, 0.0, 10.0},
                                     {6.0, 7.0, 12.0, 14.0},
                                     {0.0, 15.0, 0.0, 20.0},
                                     {18.0, 21.0, 24.0, 28.0}});
        CHECK(kron(a, b) == expected);
        CHECK(kron_by_index(a, b) == expected);
    }

    SUBCASE("entry cap") {
        const Matrix tall = Matrix::Ones(4097, 1);
        const Matrix wide = Matrix::Ones(4096, 1);
        CHECK_THROWS_AS(kron(tall, wide), InstanceTooLargeError);
        CHECK_NOTHROW(kron(Matrix::Ones(64, 64), Matrix::Ones(64, 64)));
    }

    SUBCASE("mixed-product property") {
        SeededRng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix a = random_matrix(rng, 3, 3, 1.0);
            const Matrix b = random_matrix(rng, 3, 3, 1.0);
            const Matrix c = random_matrix(rng, 3, 3, 1.0);
            const Matrix d = random_matrix(rng, 3, 3, 1.0);
            const Matrix left = kron(a, b) * kron(c, d);
            const Matrix right = kron(a * c, b * d);
            CHECK((left - right).norm() <= 1e-12 * std::max(left.norm(), 1.0));
        }
    }
}

TEST_CASE("vec and unvec") {
    SUBCASE("column stacking") {
        CHECK(vec(mat({{1.0, 2.0}, {3.0, 4.0}})).col(0) == col({1.0, 3.0, 2.0, 4.0}));
        CHECK(vec(identity(2)).col(0) == col({1.0, 0.0, 0.0, 1.0}));
        const Matrix v = mat({{1.0}, {2.0}, {3.0}});
        CHECK(vec(v) == v);
    }

    SUBCASE("unvec examples") {
        Matrix v(4, 1);
        v << 1.0, 3.0, 2.0, 4.0;
        CHECK(unvec(v, 2, 2) == mat({{1.0, 2.0}, {3.0, 4.0}}));
        CHECK(unvec(Matrix::Zero(6, 1), 2, 3) == Matrix::Zero(2, 3));
        Matrix e(4, 1);
        e << 1.0, 0.0, 0.0, 1.0;
        CHECK(unvec(e, 2, 2) == identity(2));
        CHECK_THROWS_AS(unvec(v, 3, 2), DimensionMismatchError);
    }

    SUBCASE("round trip is bit-exact") {
        SeededRng rng(7);
        for (const auto [rows, cols] :
             {std::pair{1, 1}, {1, 5}, {5, 1}, {3, 4}, {6, 6}, {2, 7}}) {
            const Matrix m = random_matrix(rng, rows, cols, 10.0);
            CHECK(unvec(vec(m), rows, cols) == m);
        }
    }

    SUBCASE("vec identities for products") {
        SeededRng rng(13);
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix x = random_matrix(rng, 3, 4, 1.0);
            const Matrix y = random_matrix(rng, 4, 2, 1.0);
            const Matrix lhs = vec(x * y);
            const Matrix via_x = kron(y.transpose(), identity(3)) * vec(x);
            const Matrix via_y = kron(identity(2), x) * vec(y);
            CHECK((lhs - via_x).norm() <= 1e-12 * std::max(lhs.norm(), 1.0));
            CHECK((lhs - via_y).norm() <= 1e-12 * std::max(lhs.norm(), 1.0));
        }
    }
}

TEST_CASE("matmul, transpose, identity") {
    const Matrix m = mat({{1.0, 2.0}, {3.0, 4.0}});
    CHECK(matmul(identity(2), m) == m);
    CHECK(transpose(transpose(m)) == m);
    const Matrix n = mat({{0.0, 1.0}, {0.0, 0.0}});
    CHECK(matmul(n, n) == Matrix::Zero(2, 2));
    CHECK_THROWS_AS(matmul(Matrix::Ones(2, 3), Matrix::Ones(2, 3)), DimensionMismatchError);
    CHECK_THROWS_AS(identity(0), DimensionMismatchError);
}

TEST_CASE("matrix_from_rows") {
    CHECK(matrix_from_rows({{1.0, 2.0}, {3.0, 4.0}}) == mat({{1.0, 2.0}, {3.0, 4.0}}));
    CHECK_THROWS_AS(matrix_from_rows({{1.0}, {2.0, 3.0}}), DimensionMismatchError);
    CHECK_THROWS_AS(matrix_from_rows({}), DimensionMismatchError);
    const double nan = std::nan("");
    CHECK_THROWS_AS(matrix_from_rows({{1.0, nan}}), NonFiniteValueError);
}

TEST_CASE("numerical_rank") {
    CHECK(numerical_rank(Matrix::Zero(3, 3)) == 0);
    CHECK(numerical_rank(identity(4)) == 4);

    SUBCASE("rank-1 outer product, against the singular-value oracle") {
        const Matrix m = mat({{1.0, 2.0}, {2.0, 4.0}});
        const auto [s1, s2] = singular_values_2x2(m);
        CHECK(s1 == doctest::Approx(5.0).epsilon(1e-12));
        CHECK(s2 == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(numerical_rank(m) == 1);
    }

    SUBCASE("absolute override") {
        const Matrix m = mat({{1.0, 0.0}, {0.0, 1e-6}});
        CHECK(numerical_rank(m) == 2);
        CHECK(numerical_rank(m, {.rank_tol = 1e-3}) == 1);
    }

    CHECK_THROWS_AS(numerical_rank(Matrix(0, 0)), DimensionMismatchError);
    CHECK_THROWS_AS(numerical_rank(identity(2), {.rank_tol = -1.0}), InvalidArgumentError);
}

TEST_CASE("nullspace_basis") {
    SUBCASE("full-rank matrix has empty null space") {
        CHECK(nullspace_basis(identity(3)).empty());
    }

    SUBCASE("zero matrix spans everything") {
        const auto basis = nullspace_basis(Matrix::Zero(2, 2));
        REQUIRE(basis.size() == 2);
        CHECK(std::abs(basis[0].dot(basis[0]) - 1.0) <= 1e-12);
        CHECK(std::abs(basis[1].dot(basis[1]) - 1.0) <= 1e-12);
        CHECK(std::abs(basis[0].dot(basis[1])) <= 1e-12);
        // Orthonormal pair in R^2 spans R^2: the projector is the identity.
        Matrix proj = basis[0] * basis[0].transpose() + basis[1] * basis[1].transpose();
        CHECK((proj - identity(2)).norm() <= 1e-12);
    }

    SUBCASE("single homogeneous equation") {
        const auto basis = nullspace_basis(mat({{1.0, 1.0}}));
        REQUIRE(basis.size() == 1);
        // Hand solve: x + y = 0, unit norm -> +/- (1, -1)/sqrt(2).
        const Vector expected = col({1.0, -1.0}) / std::sqrt(2.0);
        CHECK(std::abs(std::abs(basis[0].dot(expected)) - 1.0) <= 1e-12);
    }

    SUBCASE("random rank-deficient matrices: orthonormal and annihilating") {
        SeededRng rng(21);
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix low = random_matrix(rng, 5, 2, 1.0) * random_matrix(rng, 2, 5, 1.0);
            const auto   basis = nullspace_basis(low);
            REQUIRE(basis.size() == 3);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                CHECK((low * basis[i]).norm() <= 1e-12 * low.norm());
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    const double want = i == j ? 1.0 : 0.0;
                    CHECK(std::abs(basis[i].dot(basis[j]) - want) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("solve_linear and invert") {
    SUBCASE("back-substitution example") {
        // x2 = 1, x1 = 3 - x2 = 2.
        const Matrix x = solve_linear(mat({{1.0, 1.0}, {0.0, 1.0}}), mat({{3.0}, {1.0}}));
        CHECK(test_util::rel_err(x, mat({{2.0}, {1.0}})) <= 1e-14);
    }

    SUBCASE("identity and diagonal inverses") {
        CHECK((invert(identity(3)) - identity(3)).norm() <= 1e-14);
        const Matrix inv = invert(mat({{2.0, 0.0}, {0.0, 4.0}}));
        CHECK(test_util::rel_err(inv, mat({{0.5, 0.0}, {0.0, 0.25}})) <= 1e-14);
    }

    SUBCASE("singular input carries a condition diagnostic") {
        const Matrix singular = mat({{1.0, 2.0}, {2.0, 4.0}});
        CHECK_THROWS_AS(invert(singular), SingularMatrixError);
        try {
            solve_linear(singular, identity(2));
            FAIL("expected SingularMatrixError");
        } catch (const SingularMatrixError& e) {
            CHECK(std::isinf(e.condition_estimate()));
        }
    }

    SUBCASE("well-conditioned random inverses") {
        SeededRng rng(31);
        int       checked = 0;
        while (checked < 10) {
            const Matrix a = random_matrix(rng, 4, 4, 1.0);
            if (condition_estimate(a) > 1e3) continue;
            ++checked;
            CHECK((invert(a) * a - identity(4)).norm() <= 1e-8 * 4);
        }
    }

    SUBCASE("dimension checks") {
        CHECK_THROWS_AS(solve_linear(Matrix::Ones(2, 3), Matrix::Ones(2, 1)),
                        DimensionMismatchError);
        CHECK_THROWS_AS(solve_linear(identity(2), Matrix::Ones(3, 1)), DimensionMismatchError);
    }
}

TEST_CASE("condition_estimate") {
    CHECK(condition_estimate(identity(3)) == doctest::Approx(1.0));
    CHECK(condition_estimate(mat({{1.0, 0.0}, {0.0, 1e-3}})) == doctest::Approx(1e3));
    CHECK(std::isinf(condition_estimate(Matrix::Zero(2, 2))));
}
