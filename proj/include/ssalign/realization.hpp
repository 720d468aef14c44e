#pragma once

#include <vector>

#include "ssalign/matcore.hpp"

namespace ssalign {

/// State-space quadruple x' = A x + B u, y = C x + D u. The algebra here is
/// time-domain-agnostic; continuous and discrete systems are treated alike.
struct Realization {
    Matrix A;  // n_x x n_x
    Matrix B;  // n_x x n_u
    Matrix C;  // n_y x n_x
    Matrix D;  // n_y x n_u

    Realization(Matrix A, Matrix B, Matrix C, Matrix D);

    Eigen::Index n_x() const { return A.rows(); }
    Eigen::Index n_u() const { return B.cols(); }
    Eigen::Index n_y() const { return C.rows(); }
};

struct ObservabilityReport {
    Matrix       observability_matrix;
    Eigen::Index rank = 0;
    bool         observable = false;
};

/// Kalman test matrix [C; CA; ...; C A^(n_x - 1)], shape (n_y * n_x) x n_x.
Matrix observability_matrix(const Matrix& A, const Matrix& C);

ObservabilityReport is_observable(const Matrix& A, const Matrix& C, const Tolerances& tol = {});

/// [D, CB, CAB, ..., C A^(count - 2) B].
std::vector<Matrix> markov_parameters(const Realization& r, int count);

/// True iff the first `count` Markov parameters agree within residual_tol
/// relative to the largest parameter norm (absolute when everything is tiny).
bool markov_equivalent(const Realization& r1, const Realization& r2, int count,
                       const Tolerances& tol = {});

/// Same, with count = 2 * max(n_x).
bool markov_equivalent(const Realization& r1, const Realization& r2, const Tolerances& tol = {});

}  // namespace ssalign
