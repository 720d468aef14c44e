#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ssalign {

enum class ErrorKind {
    InvalidArgument,
    DimensionMismatch,
    NonFiniteValue,
    InstanceTooLarge,
    DecompositionFailure,
    SingularMatrix,
    NotObservable,
    KernelDimensionMismatch,
    RankDeficientCoefficients,
    ResidualTooLarge,
    SingularTransform,
    NotSimilarOrAmbiguous,
    GenerationFailure,
    Parse,
};

/// Stable kebab-case token used in machine-parsable diagnostics.
const char* error_kind_token(ErrorKind kind);

/// Formats a double for diagnostic key=value output.
std::string format_double_attr(double value);

class Error : public std::runtime_error {
   public:
    using Attributes = std::vector<std::pair<std::string, std::string>>;

    Error(ErrorKind kind, const std::string& message, Attributes attributes = {});

    ErrorKind         kind() const { return kind_; }
    const Attributes& attributes() const { return attributes_; }

    /// Single line of the form `error kind=<token> key=value ... msg="..."`.
    std::string diagnostic_line() const;

   private:
    ErrorKind  kind_;
    Attributes attributes_;
};

class InvalidArgumentError : public Error {
   public:
    explicit InvalidArgumentError(const std::string& message)
        : Error(ErrorKind::InvalidArgument, message) {}
};

class DimensionMismatchError : public Error {
   public:
    explicit DimensionMismatchError(const std::string& message)
        : Error(ErrorKind::DimensionMismatch, message) {}
};

class NonFiniteValueError : public Error {
   public:
    explicit NonFiniteValueError(const std::string& which)
        : Error(ErrorKind::NonFiniteValue, which + " contains a non-finite entry",
                {{"matrix", which}}) {}
};

class InstanceTooLargeError : public Error {
   public:
    InstanceTooLargeError(std::ptrdiff_t entries, std::ptrdiff_t cap);

    std::ptrdiff_t entries() const { return entries_; }
    std::ptrdiff_t cap() const { return cap_; }

   private:
    std::ptrdiff_t entries_;
    std::ptrdiff_t cap_;
};

class DecompositionFailureError : public Error {
   public:
    explicit DecompositionFailureError(const std::string& message)
        : Error(ErrorKind::DecompositionFailure, message) {}
};

class SingularMatrixError : public Error {
   public:
    SingularMatrixError(const std::string& message, double condition_estimate);

    double condition_estimate() const { return condition_estimate_; }

   private:
    double condition_estimate_;
};

class NotObservableError : public Error {
   public:
    NotObservableError(const std::string& which, std::ptrdiff_t rank, std::ptrdiff_t order);

    const std::string& which() const { return which_; }
    std::ptrdiff_t     rank() const { return rank_; }
    std::ptrdiff_t     order() const { return order_; }

   private:
    std::string    which_;
    std::ptrdiff_t rank_;
    std::ptrdiff_t order_;
};

/// Kernel of the displacement matrix has the wrong dimension. dim < expected
/// means the two state matrices share too little spectral structure (not
/// similar); dim > expected means the instance is derogatory/ambiguous and the
/// single-output uniqueness argument does not apply.
class KernelDimensionMismatchError : public Error {
   public:
    KernelDimensionMismatchError(std::ptrdiff_t dim, std::ptrdiff_t expected);

    std::ptrdiff_t dim() const { return dim_; }
    std::ptrdiff_t expected() const { return expected_; }
    bool           ambiguous() const { return dim_ > expected_; }

   private:
    std::ptrdiff_t dim_;
    std::ptrdiff_t expected_;
};

class RankDeficientCoefficientsError : public Error {
   public:
    RankDeficientCoefficientsError(std::ptrdiff_t rank, std::ptrdiff_t expected);

    std::ptrdiff_t rank() const { return rank_; }
    std::ptrdiff_t expected() const { return expected_; }

   private:
    std::ptrdiff_t rank_;
    std::ptrdiff_t expected_;
};

class ResidualTooLargeError : public Error {
   public:
    ResidualTooLargeError(const std::string& stage, double residual, double tolerance);

    const std::string& stage() const { return stage_; }
    double             residual() const { return residual_; }
    double             tolerance() const { return tolerance_; }

   private:
    std::string stage_;
    double      residual_;
    double      tolerance_;
};

class SingularTransformError : public Error {
   public:
    explicit SingularTransformError(double condition_estimate);

    double condition_estimate() const { return condition_estimate_; }

   private:
    double condition_estimate_;
};

class NotSimilarOrAmbiguousError : public Error {
   public:
    explicit NotSimilarOrAmbiguousError(const std::string& message, Attributes attributes = {})
        : Error(ErrorKind::NotSimilarOrAmbiguous, message, std::move(attributes)) {}
};

class GenerationFailureError : public Error {
   public:
    explicit GenerationFailureError(const std::string& message)
        : Error(ErrorKind::GenerationFailure, message) {}
};

class ParseError : public Error {
   public:
    explicit ParseError(const std::string& detail)
        : Error(ErrorKind::Parse, detail, {{"detail", detail}}) {}
};

}  // namespace ssalign
