#include "ssalign/matcore.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ssalign {

namespace {

void require_nonempty(const Matrix& m, const char* name) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw DimensionMismatchError(std::string(name) + " must be nonempty");
    }
}

void require_square(const Matrix& m, const char* name) {
    require_nonempty(m, name);
    if (m.rows() != m.cols()) {
        throw DimensionMismatchError(std::string(name) + " must be square, got " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

std::ptrdiff_t checked_mul(std::ptrdiff_t x, std::ptrdiff_t y) {
    if (x != 0 && y > std::numeric_limits<std::ptrdiff_t>::max() / x) return -1;
    return x * y;
}

Eigen::Index rank_at_cutoff(const Vector& singular_values, double cutoff) {
    Eigen::Index rank = 0;
    while (rank < singular_values.size() && singular_values(rank) > cutoff) ++rank;
    return rank;
}

double condition_from(const Vector& singular_values) {
    if (singular_values.size() == 0) return std::numeric_limits<double>::infinity();
    const double smin = singular_values(singular_values.size() - 1);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return singular_values(0) / smin;
}

template <typename Svd>
void require_converged(const Svd& svd) {
    if (svd.info() != Eigen::Success) {
        throw DecompositionFailureError("singular value decomposition did not converge");
    }
}

}  // namespace

void require_valid(const Tolerances& tol) {
    if (!(std::isfinite(tol.rank_tol) && tol.rank_tol >= 0.0)) {
        throw InvalidArgumentError("rank_tol must be finite and nonnegative");
    }
    if (!(std::isfinite(tol.residual_tol) && tol.residual_tol >= 0.0)) {
        throw InvalidArgumentError("residual_tol must be finite and nonnegative");
    }
}

double rank_cutoff(const Vector& singular_values, Eigen::Index rows, Eigen::Index cols,
                   const Tolerances& tol) {
    if (tol.rank_tol > 0.0) return tol.rank_tol;
    const double sigma_max = singular_values.size() > 0 ? singular_values(0) : 0.0;
    return static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon() *
           sigma_max;
}

void require_finite(const Matrix& m, const char* name) {
    if (!m.allFinite()) throw NonFiniteValueError(name);
}

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw DimensionMismatchError("matrix data must be nonempty");
    }
    const Eigen::Index nr = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index nc = static_cast<Eigen::Index>(rows.front().size());
    Matrix m(nr, nc);
    for (Eigen::Index i = 0; i < nr; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != nc) {
            throw DimensionMismatchError("matrix rows have inconsistent lengths");
        }
        for (Eigen::Index j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    require_finite(m, "matrix");
    return m;
}

Matrix identity(Eigen::Index n) {
    if (n < 1) throw DimensionMismatchError("identity order must be positive");
    return Matrix::Identity(n, n);
}

Matrix transpose(const Matrix& a) { return a.transpose(); }

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatchError("matmul inner dimensions " + std::to_string(a.cols()) +
                                     " and " + std::to_string(b.rows()) + " do not agree");
    }
    return a * b;
}

Matrix kron(const Matrix& a, const Matrix& b, std::ptrdiff_t entry_cap) {
    const std::ptrdiff_t rows = checked_mul(a.rows(), b.rows());
    const std::ptrdiff_t cols = checked_mul(a.cols(), b.cols());
    const std::ptrdiff_t entries = (rows < 0 || cols < 0) ? -1 : checked_mul(rows, cols);
    if (entries < 0 || entries > entry_cap) {
        throw InstanceTooLargeError(entries, entry_cap);
    }
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix vec(const Matrix& m) {
    // Column-major storage makes column-stacking a plain reshape.
    Matrix v(m.size(), 1);
    v.col(0) = Eigen::Map<const Vector>(m.data(), m.size());
    return v;
}

Matrix unvec(const Matrix& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.cols() != 1) throw DimensionMismatchError("unvec expects a column vector");
    if (rows < 1 || cols < 1 || v.rows() != rows * cols) {
        throw DimensionMismatchError("unvec target shape " + std::to_string(rows) + "x" +
                                     std::to_string(cols) + " does not match vector length " +
                                     std::to_string(v.rows()));
    }
    Matrix m(rows, cols);
    Eigen::Map<Vector>(m.data(), m.size()) = v.col(0);
    return m;
}

Eigen::Index numerical_rank(const Matrix& m, const Tolerances& tol) {
    require_valid(tol);
    require_nonempty(m, "matrix");
    Eigen::BDCSVD<Matrix> svd(m);
    require_converged(svd);
    const Vector& s = svd.singularValues();
    return rank_at_cutoff(s, rank_cutoff(s, m.rows(), m.cols(), tol));
}

std::vector<Vector> nullspace_basis(const Matrix& m, const Tolerances& tol) {
    require_valid(tol);
    require_nonempty(m, "matrix");
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
    require_converged(svd);
    const Vector&      s = svd.singularValues();
    const Eigen::Index rank = rank_at_cutoff(s, rank_cutoff(s, m.rows(), m.cols(), tol));
    std::vector<Vector> basis;
    basis.reserve(static_cast<std::size_t>(m.cols() - rank));
    for (Eigen::Index k = rank; k < m.cols(); ++k) basis.push_back(svd.matrixV().col(k));
    return basis;
}

Matrix solve_linear(const Matrix& a, const Matrix& rhs, const Tolerances& tol) {
    require_valid(tol);
    require_square(a, "coefficient matrix");
    if (rhs.rows() != a.rows() || rhs.cols() < 1) {
        throw DimensionMismatchError("right-hand side must have " + std::to_string(a.rows()) +
                                     " rows");
    }
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    require_converged(svd);
    const Vector&      s = svd.singularValues();
    const double       cutoff = rank_cutoff(s, a.rows(), a.cols(), tol);
    const Eigen::Index rank = rank_at_cutoff(s, cutoff);
    if (rank < a.cols()) {
        throw SingularMatrixError("matrix is singular to tolerance", condition_from(s));
    }
    Matrix y = svd.matrixU().transpose() * rhs;
    y.array().colwise() /= s.array();
    Matrix x = svd.matrixV() * y;
    if ((a * x - rhs).norm() > tol.residual_tol * rhs.norm()) {
        throw SingularMatrixError("solve residual exceeds tolerance", condition_from(s));
    }
    return x;
}

Matrix invert(const Matrix& a, const Tolerances& tol) {
    require_square(a, "matrix");
    Matrix inv = solve_linear(a, identity(a.rows()), tol);
    const double defect = (a * inv - identity(a.rows())).norm();
    if (defect > tol.residual_tol * static_cast<double>(a.rows())) {
        throw SingularMatrixError("inverse residual exceeds tolerance", condition_estimate(a));
    }
    return inv;
}

double condition_estimate(const Matrix& a) {
    require_nonempty(a, "matrix");
    Eigen::BDCSVD<Matrix> svd(a);
    require_converged(svd);
    return condition_from(svd.singularValues());
}

}  // namespace ssalign
