#include "ssalign/testgen.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ssalign/simtransform.hpp"

namespace ssalign {

namespace {

constexpr int kObservableAttempts = 64;
constexpr int kConditionAttempts = 256;

// Decorrelates the transform draw from the realization draw at equal seeds.
constexpr std::uint64_t kPairSeedSalt = 0x9e3779b97f4a7c15ull;

void require_valid(const GeneratorConfig& cfg) {
    if (cfg.n_x < 1 || cfg.n_u < 1 || cfg.n_y < 1) {
        throw InvalidArgumentError("generator dimensions must be positive");
    }
    if (!(std::isfinite(cfg.max_condition) && cfg.max_condition > 0.0)) {
        throw InvalidArgumentError("max_condition must be finite and positive");
    }
    if (!(std::isfinite(cfg.entry_scale) && cfg.entry_scale > 0.0)) {
        throw InvalidArgumentError("entry_scale must be finite and positive");
    }
}

}  // namespace

Matrix random_matrix(SeededRng& rng, Eigen::Index rows, Eigen::Index cols, double scale) {
    if (rows < 1 || cols < 1) throw DimensionMismatchError("random matrix shape must be positive");
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.symmetric(scale);
    }
    return m;
}

Realization random_observable_realization(const GeneratorConfig& cfg) {
    require_valid(cfg);
    SeededRng rng(cfg.seed);
    for (int attempt = 0; attempt < kObservableAttempts; ++attempt) {
        Matrix A = random_matrix(rng, cfg.n_x, cfg.n_x, cfg.entry_scale);
        Matrix B = random_matrix(rng, cfg.n_x, cfg.n_u, cfg.entry_scale);
        Matrix C = random_matrix(rng, cfg.n_y, cfg.n_x, cfg.entry_scale);
        Matrix D = random_matrix(rng, cfg.n_y, cfg.n_u, cfg.entry_scale);
        if (is_observable(A, C).observable) {
            return Realization(std::move(A), std::move(B), std::move(C), std::move(D));
        }
    }
    throw GenerationFailureError("no observable realization after " +
                                 std::to_string(kObservableAttempts) + " attempts");
}

std::pair<Realization, Matrix> make_similar_pair(const Realization& r,
                                                 const GeneratorConfig& cfg) {
    require_valid(cfg);
    SeededRng rng(cfg.seed ^ kPairSeedSalt);
    for (int attempt = 0; attempt < kConditionAttempts; ++attempt) {
        Matrix T = random_matrix(rng, r.n_x(), r.n_x(), cfg.entry_scale);
        if (condition_estimate(T) > cfg.max_condition) continue;
        return {transform_realization(r, T), std::move(T)};
    }
    throw GenerationFailureError("no transform with condition <= " +
                                 format_double_attr(cfg.max_condition) + " after " +
                                 std::to_string(kConditionAttempts) + " attempts");
}

Matrix brute_force_transform(const Matrix& A0, const Matrix& C0, const Matrix& A, const Matrix& C,
                             const Tolerances& tol) {
    require_valid(tol);
    if (A0.rows() < 1 || A0.rows() != A0.cols() || A.rows() != A0.rows() ||
        A.cols() != A0.cols()) {
        throw DimensionMismatchError("state matrices must be square with equal order");
    }
    const Eigen::Index n = A0.rows();
    if (C.rows() < 1 || C.cols() != n || C0.rows() != C.rows() || C0.cols() != n) {
        throw DimensionMismatchError("output matrices must be n_y x n_x with matching shapes");
    }

    // Stack T A0 - A T = 0 on top of the vectorized C T = C0 block and solve
    // the whole thing at once.
    const Matrix displacement = build_displacement_matrix(A0, A);
    const Matrix output_block = kron(identity(n), C);
    Matrix       stacked(displacement.rows() + output_block.rows(), n * n);
    stacked.topRows(displacement.rows()) = displacement;
    stacked.bottomRows(output_block.rows()) = output_block;
    Vector rhs = Vector::Zero(stacked.rows());
    rhs.tail(output_block.rows()) = vec(C0).col(0);

    Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw DecompositionFailureError("singular value decomposition did not converge");
    }
    const Vector& s = svd.singularValues();
    const double  cutoff = rank_cutoff(s, stacked.rows(), stacked.cols(), tol);
    Eigen::Index  rank = 0;
    while (rank < s.size() && s(rank) > cutoff) ++rank;
    if (rank < n * n) {
        throw NotSimilarOrAmbiguousError(
            "stacked system is rank-deficient: transform is not unique",
            {{"rank", std::to_string(rank)}, {"expected", std::to_string(n * n)}});
    }

    Vector y = svd.matrixU().transpose() * rhs;
    y.array() /= s.array();
    const Vector x = svd.matrixV() * y;

    const double residual = relative_residual((stacked * x - rhs).norm(), vec(C0).col(0).norm());
    if (residual > tol.residual_tol) {
        throw NotSimilarOrAmbiguousError(
            "stacked system is inconsistent: inputs are not an equivalent pair",
            {{"residual", format_double_attr(residual)},
             {"tol", format_double_attr(tol.residual_tol)}});
    }
    return unvec(x, n, n);
}

}  // namespace ssalign
