#pragma once

#include <optional>
#include <string>

#include "ssalign/matcore.hpp"
#include "ssalign/realization.hpp"
#include "ssalign/simtransform.hpp"

namespace ssalign {

/// On-disk realization description: JSON object with declared dimensions and
/// row-major nested arrays. B and D may be omitted together for documents
/// that only describe the (A, C) pair.
struct RealizationDocument {
    int    n_x = 0;
    int    n_u = 0;  // 0 when B and D are omitted
    int    n_y = 0;
    Matrix A;
    Matrix C;
    std::optional<Matrix> B;
    std::optional<Matrix> D;
    std::string           label;

    bool has_inputs() const { return B.has_value() && D.has_value(); }
};

/// On-disk transform description as written by find-transform. Only T is
/// required when read back.
struct TransformDocument {
    int    n_x = 0;
    Matrix T;
    std::optional<Matrix> T_inv;
    std::optional<Vector> alpha;
    std::optional<double> residual_state;
    std::optional<double> residual_output;
    std::optional<double> condition_estimate;
};

RealizationDocument parse_realization_document(const std::string& text);
RealizationDocument load_realization_document(const std::string& path);
std::string         emit_realization_document(const RealizationDocument& doc);

TransformDocument parse_transform_document(const std::string& text);
TransformDocument load_transform_document(const std::string& path);
std::string       emit_transform_document(const TransformDocument& doc);

RealizationDocument to_document(const Realization& r, const std::string& label = "");
TransformDocument   to_document(const SimilarityTransform& t);

/// Requires B and D to be present.
Realization to_realization(const RealizationDocument& doc);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace ssalign
