#include "ssalign/simtransform.hpp"

#include <limits>
#include <string>
#include <utility>

namespace ssalign {

namespace {

void require_square_pair(const Matrix& A0, const Matrix& A) {
    if (A0.rows() < 1 || A0.rows() != A0.cols()) {
        throw DimensionMismatchError("A0 must be square and nonempty");
    }
    if (A.rows() != A0.rows() || A.cols() != A0.cols()) {
        throw DimensionMismatchError("A must match A0, got " + std::to_string(A.rows()) + "x" +
                                     std::to_string(A.cols()));
    }
}

}  // namespace

Matrix build_displacement_matrix(const Matrix& A0, const Matrix& A) {
    require_square_pair(A0, A);
    const Matrix eye = identity(A0.rows());
    return kron(A0.transpose(), eye) - kron(eye, A);
}

KernelBasis kernel_candidates(const Matrix& M, Eigen::Index n_x, const Tolerances& tol) {
    if (n_x < 1) throw InvalidArgumentError("state dimension must be positive");
    if (M.rows() != n_x * n_x || M.cols() != n_x * n_x) {
        throw DimensionMismatchError("displacement matrix must be " + std::to_string(n_x * n_x) +
                                     "x" + std::to_string(n_x * n_x));
    }
    const auto vectors = nullspace_basis(M, tol);
    if (static_cast<Eigen::Index>(vectors.size()) != n_x) {
        throw KernelDimensionMismatchError(static_cast<std::ptrdiff_t>(vectors.size()), n_x);
    }
    KernelBasis basis;
    basis.candidates.reserve(vectors.size());
    for (const auto& v : vectors) basis.candidates.push_back(unvec(v, n_x, n_x));
    return basis;
}

Vector solve_alpha(const Matrix& C, const Matrix& C0, const KernelBasis& basis,
                   const Tolerances& tol) {
    require_valid(tol);
    const Eigen::Index n_x = basis.order();
    if (basis.dim() < 1 || basis.dim() != n_x) {
        throw DimensionMismatchError("kernel basis must hold exactly n_x candidates");
    }
    if (C.rows() < 1 || C.cols() != n_x) {
        throw DimensionMismatchError("C must be n_y x " + std::to_string(n_x));
    }
    if (C0.rows() != C.rows() || C0.cols() != C.cols()) {
        throw DimensionMismatchError("C0 must match C's shape");
    }

    // Column i is vec(C U_i); for a single output this is exactly the
    // transposed stacked row system.
    Matrix coeffs(C.rows() * n_x, n_x);
    for (Eigen::Index i = 0; i < n_x; ++i) {
        coeffs.col(i) = vec(C * basis.candidates[static_cast<std::size_t>(i)]).col(0);
    }
    const Matrix rhs = vec(C0);

    Eigen::BDCSVD<Matrix> svd(coeffs, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw DecompositionFailureError("singular value decomposition did not converge");
    }
    const Vector& s = svd.singularValues();
    const double  cutoff = rank_cutoff(s, coeffs.rows(), coeffs.cols(), tol);
    Eigen::Index  rank = 0;
    while (rank < s.size() && s(rank) > cutoff) ++rank;
    if (rank < n_x) {
        throw RankDeficientCoefficientsError(rank, n_x);
    }

    Vector y = svd.matrixU().transpose() * rhs.col(0);
    y.array() /= s.array();
    Vector alpha = svd.matrixV() * y;

    const double residual =
        relative_residual((coeffs * alpha - rhs.col(0)).norm(), rhs.col(0).norm());
    if (residual > tol.residual_tol) {
        throw ResidualTooLargeError("coefficient-solve", residual, tol.residual_tol);
    }
    return alpha;
}

SimilarityTransform assemble_transform(const Vector& alpha, const KernelBasis& basis,
                                       const Matrix& A0, const Matrix& A, const Matrix& C0,
                                       const Matrix& C, const Tolerances& tol) {
    require_valid(tol);
    const Eigen::Index n_x = basis.order();
    if (basis.dim() != n_x || n_x < 1) {
        throw DimensionMismatchError("kernel basis must hold exactly n_x candidates");
    }
    if (alpha.size() != basis.dim()) {
        throw DimensionMismatchError("alpha length must equal the kernel dimension");
    }
    require_square_pair(A0, A);
    if (A0.rows() != n_x) {
        throw DimensionMismatchError("state matrices must match the kernel order");
    }
    if (C.cols() != n_x || C0.rows() != C.rows() || C0.cols() != C.cols()) {
        throw DimensionMismatchError("output matrices must be n_y x n_x with matching shapes");
    }

    Matrix T = Matrix::Zero(n_x, n_x);
    for (Eigen::Index i = 0; i < basis.dim(); ++i) {
        T += alpha(i) * basis.candidates[static_cast<std::size_t>(i)];
    }

    Matrix T_inv;
    try {
        T_inv = invert(T, tol);
    } catch (const SingularMatrixError& e) {
        throw SingularTransformError(e.condition_estimate());
    }

    const double residual_state = relative_residual((T * A0 - A * T).norm(), (T * A0).norm());
    const double residual_output = relative_residual((C0 - C * T).norm(), C0.norm());
    if (residual_state > tol.residual_tol) {
        throw ResidualTooLargeError("state", residual_state, tol.residual_tol);
    }
    if (residual_output > tol.residual_tol) {
        throw ResidualTooLargeError("output", residual_output, tol.residual_tol);
    }

    const double condition = condition_estimate(T);
    return SimilarityTransform{std::move(T), std::move(T_inv), alpha, residual_state,
                               residual_output, condition};
}

SimilarityTransform find_similarity(const Matrix& A0, const Matrix& C0, const Matrix& A,
                                    const Matrix& C, const Tolerances& tol) {
    require_valid(tol);
    require_square_pair(A0, A);
    if (C0.rows() < 1 || C0.cols() != A0.rows()) {
        throw DimensionMismatchError("C0 must be n_y x n_x");
    }
    if (C.rows() != C0.rows() || C.cols() != C0.cols()) {
        throw DimensionMismatchError("C must match C0's shape");
    }
    require_finite(A0, "A0");
    require_finite(C0, "C0");
    require_finite(A, "A");
    require_finite(C, "C");

    const auto report0 = is_observable(A0, C0, tol);
    if (!report0.observable) {
        throw NotObservableError("system0", report0.rank, A0.rows());
    }
    const auto report = is_observable(A, C, tol);
    if (!report.observable) {
        throw NotObservableError("system", report.rank, A.rows());
    }

    const Matrix      M = build_displacement_matrix(A0, A);
    const KernelBasis basis = kernel_candidates(M, A0.rows(), tol);
    const Vector      alpha = solve_alpha(C, C0, basis, tol);
    return assemble_transform(alpha, basis, A0, A, C0, C, tol);
}

Realization transform_realization(const Realization& r, const Matrix& T, const Tolerances& tol) {
    if (T.rows() != r.n_x() || T.cols() != r.n_x()) {
        throw DimensionMismatchError("transform must be " + std::to_string(r.n_x()) + "x" +
                                     std::to_string(r.n_x()));
    }
    Matrix A0 = solve_linear(T, r.A * T, tol);
    Matrix B0 = solve_linear(T, r.B, tol);
    Matrix C0 = r.C * T;
    return Realization(std::move(A0), std::move(B0), std::move(C0), r.D);
}

Realization transform_realization(const Realization& r, const SimilarityTransform& t,
                                  const Tolerances& tol) {
    return transform_realization(r, t.T, tol);
}

LemmaRankReport validate_lemma_rank(const Matrix& M1, const Matrix& M2, const Tolerances& tol) {
    require_square_pair(M1, M2);
    const Eigen::Index n = M1.rows();
    const Matrix       eye = identity(n);
    const Matrix       lifted = kron(eye, M2) - kron(M1.transpose(), eye);
    const Eigen::Index rank = numerical_rank(lifted, tol);
    return LemmaRankReport{rank, rank == n * n - n};
}

}  // namespace ssalign
