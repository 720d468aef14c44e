#pragma once

#include <vector>

#include "ssalign/matcore.hpp"
#include "ssalign/realization.hpp"

namespace ssalign {

/// Candidate matrices U_1 .. U_k devectorized from an orthonormal basis of
/// the displacement-matrix kernel. Every U satisfies U A0 = A U to tolerance.
struct KernelBasis {
    std::vector<Matrix> candidates;

    Eigen::Index dim() const { return static_cast<Eigen::Index>(candidates.size()); }
    Eigen::Index order() const { return candidates.empty() ? 0 : candidates.front().rows(); }
};

/// Recovered change of coordinates with A0 = T^-1 A T and C0 = C T, plus the
/// diagnostics that certified it.
struct SimilarityTransform {
    Matrix T;
    Matrix T_inv;
    Vector alpha;
    double residual_state = 0.0;   // relative |T A0 - A T|_F
    double residual_output = 0.0;  // relative |C0 - C T|_F
    double condition_estimate = 0.0;
};

struct LemmaRankReport {
    Eigen::Index rank = 0;
    bool         satisfies_lemma = false;
};

/// M = (A0^T kron I) - (I kron A), the matrix whose kernel carries every
/// solution of T A0 = A T under column-stacking vectorization.
Matrix build_displacement_matrix(const Matrix& A0, const Matrix& A);

/// Extracts the kernel of M and devectorizes it into n_x x n_x candidates.
/// Throws KernelDimensionMismatchError unless the kernel dimension is exactly
/// n_x.
KernelBasis kernel_candidates(const Matrix& M, Eigen::Index n_x, const Tolerances& tol = {});

/// Solves C0 = C (alpha_1 U_1 + ... + alpha_n U_n) for alpha via the
/// vec-stacked least-squares system. Requires the coefficient system to have
/// full column rank and the residual to be within tolerance.
Vector solve_alpha(const Matrix& C, const Matrix& C0, const KernelBasis& basis,
                   const Tolerances& tol = {});

/// T = sum_i alpha_i U_i, verified nonsingular and satisfying both defining
/// conditions to tolerance.
SimilarityTransform assemble_transform(const Vector& alpha, const KernelBasis& basis,
                                       const Matrix& A0, const Matrix& A, const Matrix& C0,
                                       const Matrix& C, const Tolerances& tol = {});

/// Full pipeline: observability preconditions, displacement matrix, kernel
/// extraction, coefficient solve, assembly. The result is unique: successful
/// runs agree regardless of the kernel-basis orientation.
SimilarityTransform find_similarity(const Matrix& A0, const Matrix& C0, const Matrix& A,
                                    const Matrix& C, const Tolerances& tol = {});

/// (A0, B0, C0, D0) = (T^-1 A T, T^-1 B, C T, D).
Realization transform_realization(const Realization& r, const Matrix& T,
                                  const Tolerances& tol = {});
Realization transform_realization(const Realization& r, const SimilarityTransform& t,
                                  const Tolerances& tol = {});

/// Rank of (I kron M2) - (M1^T kron I); the similarity rank law expects
/// n^2 - n for non-derogatory inputs.
LemmaRankReport validate_lemma_rank(const Matrix& M1, const Matrix& M2,
                                    const Tolerances& tol = {});

}  // namespace ssalign
