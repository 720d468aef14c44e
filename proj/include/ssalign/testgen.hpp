#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "ssalign/matcore.hpp"
#include "ssalign/realization.hpp"

namespace ssalign {

struct GeneratorConfig {
    std::uint64_t seed = 0;
    int           n_x = 2;
    int           n_u = 1;
    int           n_y = 1;
    double        max_condition = 1e3;  // cap on generated transforms
    double        entry_scale = 1.0;
};

/// Deterministic uniform source. The mt19937_64 stream is fixed by the
/// standard and the bit-to-double mapping is explicit, so identical seeds
/// produce identical values on every platform.
class SeededRng {
   public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in (-scale, scale).
    double symmetric(double scale) { return scale * (2.0 * unit() - 1.0); }

   private:
    std::mt19937_64 engine_;
};

Matrix random_matrix(SeededRng& rng, Eigen::Index rows, Eigen::Index cols, double scale);

/// Draws realizations until the observability rank test passes.
Realization random_observable_realization(const GeneratorConfig& cfg);

/// Draws a transform with condition estimate <= max_condition and returns the
/// transformed realization together with the ground-truth transform.
std::pair<Realization, Matrix> make_similar_pair(const Realization& r, const GeneratorConfig& cfg);

/// Independent one-shot oracle: solves both defining conditions jointly as a
/// stacked least-squares system, with no kernel extraction involved.
Matrix brute_force_transform(const Matrix& A0, const Matrix& C0, const Matrix& A, const Matrix& C,
                             const Tolerances& tol = {});

}  // namespace ssalign
