#include "ssalign/errors.hpp"

#include <cstdio>
#include <sstream>

namespace ssalign {

const char* error_kind_token(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::NonFiniteValue: return "non-finite-value";
        case ErrorKind::InstanceTooLarge: return "instance-too-large";
        case ErrorKind::DecompositionFailure: return "decomposition-failure";
        case ErrorKind::SingularMatrix: return "singular-matrix";
        case ErrorKind::NotObservable: return "not-observable";
        case ErrorKind::KernelDimensionMismatch: return "kernel-dimension-mismatch";
        case ErrorKind::RankDeficientCoefficients: return "rank-deficient-coefficients";
        case ErrorKind::ResidualTooLarge: return "residual-too-large";
        case ErrorKind::SingularTransform: return "singular-transform";
        case ErrorKind::NotSimilarOrAmbiguous: return "not-similar-or-ambiguous";
        case ErrorKind::GenerationFailure: return "generation-failure";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

std::string format_double_attr(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

namespace {

bool needs_quoting(const std::string& value) {
    if (value.empty()) return true;
    for (char c : value) {
        if (c == ' ' || c == '"' || c == '=' || c == '\n' || c == '\t') return true;
    }
    return false;
}

std::string quote(const std::string& value) {
    std::string out = "\"";
    for (char c : value) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n' || c == '\t') {
            out.push_back(' ');
            continue;
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, Attributes attributes)
    : std::runtime_error(message), kind_(kind), attributes_(std::move(attributes)) {}

std::string Error::diagnostic_line() const {
    std::ostringstream line;
    line << "error kind=" << error_kind_token(kind_);
    bool has_detail = false;
    for (const auto& [key, value] : attributes_) {
        if (key == "detail") has_detail = true;
        line << ' ' << key << '=' << (needs_quoting(value) ? quote(value) : value);
    }
    if (!has_detail) line << " msg=" << quote(what());
    return line.str();
}

InstanceTooLargeError::InstanceTooLargeError(std::ptrdiff_t entries, std::ptrdiff_t cap)
    : Error(ErrorKind::InstanceTooLarge, "instance exceeds the dense size cap",
            {{"entries", std::to_string(entries)}, {"cap", std::to_string(cap)}}),
      entries_(entries),
      cap_(cap) {}

SingularMatrixError::SingularMatrixError(const std::string& message, double condition_estimate)
    : Error(ErrorKind::SingularMatrix, message,
            {{"condition", format_double_attr(condition_estimate)}}),
      condition_estimate_(condition_estimate) {}

NotObservableError::NotObservableError(const std::string& which, std::ptrdiff_t rank,
                                       std::ptrdiff_t order)
    : Error(ErrorKind::NotObservable, which + " is not observable",
            {{"which", which}, {"rank", std::to_string(rank)}, {"order", std::to_string(order)}}),
      which_(which),
      rank_(rank),
      order_(order) {}

KernelDimensionMismatchError::KernelDimensionMismatchError(std::ptrdiff_t dim,
                                                           std::ptrdiff_t expected)
    : Error(ErrorKind::KernelDimensionMismatch,
            dim < expected
                ? "displacement kernel dimension " + std::to_string(dim) + " < " +
                      std::to_string(expected) + ": state matrices are not similar"
                : "displacement kernel dimension " + std::to_string(dim) + " > " +
                      std::to_string(expected) + ": derogatory/ambiguous instance",
            {{"dim", std::to_string(dim)},
             {"expected", std::to_string(expected)},
             {"diagnosis", dim < expected ? "not-similar" : "ambiguous-derogatory"}}),
      dim_(dim),
      expected_(expected) {}

RankDeficientCoefficientsError::RankDeficientCoefficientsError(std::ptrdiff_t rank,
                                                               std::ptrdiff_t expected)
    : Error(ErrorKind::RankDeficientCoefficients,
            "coefficient system has rank " + std::to_string(rank) + ", expected " +
                std::to_string(expected) + ": mixing coefficients are not unique",
            {{"rank", std::to_string(rank)}, {"expected", std::to_string(expected)}}),
      rank_(rank),
      expected_(expected) {}

ResidualTooLargeError::ResidualTooLargeError(const std::string& stage, double residual,
                                             double tolerance)
    : Error(ErrorKind::ResidualTooLarge,
            stage + " residual " + format_double_attr(residual) + " exceeds tolerance " +
                format_double_attr(tolerance),
            {{"stage", stage},
             {"residual", format_double_attr(residual)},
             {"tol", format_double_attr(tolerance)}}),
      stage_(stage),
      residual_(residual),
      tolerance_(tolerance) {}

SingularTransformError::SingularTransformError(double condition_estimate)
    : Error(ErrorKind::SingularTransform, "assembled transform is singular to tolerance",
            {{"condition", format_double_attr(condition_estimate)}}),
      condition_estimate_(condition_estimate) {}

}  // namespace ssalign
