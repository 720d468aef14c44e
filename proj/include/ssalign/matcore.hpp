#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ssalign/errors.hpp"

namespace ssalign {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Entry cap for Kronecker-lifted matrices. 4096 x 4096 doubles, the
/// displacement matrix of a 64-state system.
inline constexpr std::ptrdiff_t kKronEntryCap = std::ptrdiff_t(4096) * 4096;

/// Floor used in relative residual denominators so zero targets do not divide
/// by zero.
inline constexpr double kResidualFloor = 1e-300;

inline double relative_residual(double numerator, double denominator) {
    return numerator / std::max(denominator, kResidualFloor);
}

struct Tolerances {
    /// Absolute singular-value cutoff for rank decisions. 0 selects the
    /// automatic cutoff max(rows, cols) * eps * sigma_max.
    double rank_tol = 0.0;
    /// Relative Frobenius-norm acceptance threshold for residual checks.
    double residual_tol = 1e-8;
};

/// Throws InvalidArgumentError unless both tolerances are finite and >= 0.
void require_valid(const Tolerances& tol);

/// Absolute singular-value cutoff in effect for a rank decision: rank_tol
/// when set, otherwise max(rows, cols) * eps * sigma_max.
double rank_cutoff(const Vector& singular_values, Eigen::Index rows, Eigen::Index cols,
                   const Tolerances& tol);

/// Throws NonFiniteValueError if any entry of m is NaN or infinite.
void require_finite(const Matrix& m, const char* name);

/// Builds a matrix from row-major nested data, validating shape and
/// finiteness.
Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows);

Matrix identity(Eigen::Index n);
Matrix transpose(const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b, std::ptrdiff_t entry_cap = kKronEntryCap);

/// Column-stacking vectorization: entry (i + j * rows) of the result is
/// m(i, j). This is the convention under which
/// vec(X * Y) = (Y^T kron I) vec(X) = (I kron X) vec(Y).
Matrix vec(const Matrix& m);

/// Inverse of vec; bit-exact round trip with it.
Matrix unvec(const Matrix& v, Eigen::Index rows, Eigen::Index cols);

/// Number of singular values strictly above the effective cutoff.
Eigen::Index numerical_rank(const Matrix& m, const Tolerances& tol = {});

/// Orthonormal basis of the right null space at the effective rank cutoff.
std::vector<Vector> nullspace_basis(const Matrix& m, const Tolerances& tol = {});

/// Solves a * x = rhs for square a; throws SingularMatrixError when a is
/// singular to tolerance or the residual exceeds residual_tol * |rhs|.
Matrix solve_linear(const Matrix& a, const Matrix& rhs, const Tolerances& tol = {});

/// Inverse of a square matrix with |a * inv - I|_F <= residual_tol * n.
Matrix invert(const Matrix& a, const Tolerances& tol = {});

/// sigma_max / sigma_min; +inf when the smallest singular value is zero.
double condition_estimate(const Matrix& a);

}  // namespace ssalign
