#pragma once

#include <iosfwd>
#include <string>

#include "ssalign/errors.hpp"
#include "ssalign/matcore.hpp"

namespace ssalign {

/// Stable process exit codes; anything not covered below exits 1.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int parse = 2;
inline constexpr int not_observable = 3;
inline constexpr int kernel_dimension = 4;
inline constexpr int rank_or_residual = 5;
inline constexpr int singular = 6;
inline constexpr int markov_mismatch = 7;
}  // namespace exit_code

int exit_code_for(ErrorKind kind);

struct CliOptions {
    double residual_tol = 1e-8;
    double rank_tol = 0.0;  // 0 = automatic cutoff
    int    markov_count = 0;  // 0 = 2 * n_x

    Tolerances tolerances() const { return Tolerances{rank_tol, residual_tol}; }
};

/// Recovers T between two realization documents and writes a transform
/// document to out_path (stdout when empty).
int cmd_find_transform(const std::string& system0_path, const std::string& system_path,
                       const std::string& out_path, const CliOptions& opts, std::ostream& out,
                       std::ostream& err);

/// Applies a transform document to a realization document.
int cmd_transform(const std::string& system_path, const std::string& transform_path,
                  const std::string& out_path, const CliOptions& opts, std::ostream& out,
                  std::ostream& err);

/// Recovers T and checks Markov-parameter equivalence of the two documents.
int cmd_verify(const std::string& system0_path, const std::string& system_path,
               const CliOptions& opts, std::ostream& out, std::ostream& err);

/// Kalman rank test for one document.
int cmd_check_observability(const std::string& system_path, const CliOptions& opts,
                            std::ostream& out, std::ostream& err);

}  // namespace ssalign
