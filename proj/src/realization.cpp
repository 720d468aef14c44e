#include "ssalign/realization.hpp"

#include <string>
#include <utility>

namespace ssalign {

Realization::Realization(Matrix A_, Matrix B_, Matrix C_, Matrix D_)
    : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)), D(std::move(D_)) {
    if (A.rows() < 1 || A.rows() != A.cols()) {
        throw DimensionMismatchError("A must be square and nonempty");
    }
    if (B.rows() != A.rows() || B.cols() < 1) {
        throw DimensionMismatchError("B must be " + std::to_string(A.rows()) +
                                     " x n_u with n_u >= 1");
    }
    if (C.cols() != A.rows() || C.rows() < 1) {
        throw DimensionMismatchError("C must be n_y x " + std::to_string(A.rows()) +
                                     " with n_y >= 1");
    }
    if (D.rows() != C.rows() || D.cols() != B.cols()) {
        throw DimensionMismatchError("D must be " + std::to_string(C.rows()) + "x" +
                                     std::to_string(B.cols()));
    }
    require_finite(A, "A");
    require_finite(B, "B");
    require_finite(C, "C");
    require_finite(D, "D");
}

Matrix observability_matrix(const Matrix& A, const Matrix& C) {
    if (A.rows() < 1 || A.rows() != A.cols()) {
        throw DimensionMismatchError("A must be square and nonempty");
    }
    if (C.cols() != A.rows() || C.rows() < 1) {
        throw DimensionMismatchError("C must have " + std::to_string(A.rows()) + " columns");
    }
    const Eigen::Index n = A.rows();
    const Eigen::Index p = C.rows();
    Matrix             stack(n * p, n);
    Matrix             block = C;
    stack.topRows(p) = block;
    for (Eigen::Index k = 1; k < n; ++k) {
        block = block * A;
        stack.middleRows(k * p, p) = block;
    }
    return stack;
}

ObservabilityReport is_observable(const Matrix& A, const Matrix& C, const Tolerances& tol) {
    Matrix             stack = observability_matrix(A, C);
    const Eigen::Index rank = numerical_rank(stack, tol);
    return ObservabilityReport{std::move(stack), rank, rank == A.rows()};
}

std::vector<Matrix> markov_parameters(const Realization& r, int count) {
    if (count < 1) throw InvalidArgumentError("Markov parameter count must be at least 1");
    std::vector<Matrix> params;
    params.reserve(static_cast<std::size_t>(count));
    params.push_back(r.D);
    Matrix power = r.B;  // A^(k-1) B after k-1 steps
    for (int k = 1; k < count; ++k) {
        params.push_back(r.C * power);
        power = r.A * power;
    }
    return params;
}

bool markov_equivalent(const Realization& r1, const Realization& r2, int count,
                       const Tolerances& tol) {
    require_valid(tol);
    if (r1.n_u() != r2.n_u() || r1.n_y() != r2.n_y()) {
        throw DimensionMismatchError("realizations must share input and output dimensions");
    }
    const auto p1 = markov_parameters(r1, count);
    const auto p2 = markov_parameters(r2, count);
    double     scale = 0.0;
    for (const auto& p : p1) scale = std::max(scale, p.norm());
    for (const auto& p : p2) scale = std::max(scale, p.norm());
    const double threshold =
        scale > tol.residual_tol ? tol.residual_tol * scale : tol.residual_tol;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if ((p1[i] - p2[i]).norm() > threshold) return false;
    }
    return true;
}

bool markov_equivalent(const Realization& r1, const Realization& r2, const Tolerances& tol) {
    const int count = 2 * static_cast<int>(std::max(r1.n_x(), r2.n_x()));
    return markov_equivalent(r1, r2, count, tol);
}

}  // namespace ssalign
