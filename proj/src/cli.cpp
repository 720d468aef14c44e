#include "ssalign/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <vector>

#include "ssalign/io.hpp"
#include "ssalign/realization.hpp"
#include "ssalign/simtransform.hpp"

namespace ssalign {

namespace {

void emit_document(const std::string& text, const std::string& out_path, std::ostream& out,
                   const std::string& summary) {
    if (out_path.empty()) {
        out << text;
    } else {
        write_text_file(out_path, text);
        out << summary << " -> " << out_path << "\n";
    }
}

/// Applies T to whatever the document carries; B/D stay absent when absent.
RealizationDocument transform_document(const RealizationDocument& doc, const Matrix& T,
                                       const Tolerances& tol) {
    if (T.rows() != doc.n_x || T.cols() != doc.n_x) {
        throw DimensionMismatchError("transform order " + std::to_string(T.rows()) +
                                     " does not match realization order " +
                                     std::to_string(doc.n_x));
    }
    RealizationDocument out = doc;
    out.A = solve_linear(T, doc.A * T, tol);
    out.C = doc.C * T;
    if (doc.B) out.B = solve_linear(T, *doc.B, tol);
    return out;
}

int run_guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << e.diagnostic_line() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error kind=internal msg=\"" << e.what() << "\"\n";
        return exit_code::failure;
    }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::InvalidArgument:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::NonFiniteValue:
        case ErrorKind::InstanceTooLarge: return exit_code::parse;
        case ErrorKind::NotObservable: return exit_code::not_observable;
        case ErrorKind::KernelDimensionMismatch: return exit_code::kernel_dimension;
        case ErrorKind::RankDeficientCoefficients:
        case ErrorKind::ResidualTooLarge:
        case ErrorKind::NotSimilarOrAmbiguous: return exit_code::rank_or_residual;
        case ErrorKind::SingularMatrix:
        case ErrorKind::SingularTransform: return exit_code::singular;
        case ErrorKind::DecompositionFailure:
        case ErrorKind::GenerationFailure: return exit_code::failure;
    }
    return exit_code::failure;
}

int cmd_find_transform(const std::string& system0_path, const std::string& system_path,
                       const std::string& out_path, const CliOptions& opts, std::ostream& out,
                       std::ostream& err) {
    return run_guarded(err, [&]() {
        const RealizationDocument doc0 = load_realization_document(system0_path);
        const RealizationDocument doc = load_realization_document(system_path);
        const SimilarityTransform t =
            find_similarity(doc0.A, doc0.C, doc.A, doc.C, opts.tolerances());
        emit_document(emit_transform_document(to_document(t)), out_path, out,
                      "transform n_x=" + std::to_string(t.T.rows()) +
                          " residual_state=" + format_double_attr(t.residual_state) +
                          " residual_output=" + format_double_attr(t.residual_output));
        return exit_code::ok;
    });
}

int cmd_transform(const std::string& system_path, const std::string& transform_path,
                  const std::string& out_path, const CliOptions& opts, std::ostream& out,
                  std::ostream& err) {
    return run_guarded(err, [&]() {
        const RealizationDocument doc = load_realization_document(system_path);
        const TransformDocument   tdoc = load_transform_document(transform_path);
        const RealizationDocument transformed =
            transform_document(doc, tdoc.T, opts.tolerances());
        emit_document(emit_realization_document(transformed), out_path, out,
                      "realization n_x=" + std::to_string(transformed.n_x));
        return exit_code::ok;
    });
}

int cmd_verify(const std::string& system0_path, const std::string& system_path,
               const CliOptions& opts, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        const RealizationDocument doc0 = load_realization_document(system0_path);
        const RealizationDocument doc = load_realization_document(system_path);
        if (!doc0.has_inputs()) throw ParseError(system0_path + ": verify needs B and D");
        if (!doc.has_inputs()) throw ParseError(system_path + ": verify needs B and D");
        const Realization r0 = to_realization(doc0);
        const Realization r = to_realization(doc);

        const Tolerances          tol = opts.tolerances();
        const SimilarityTransform t = find_similarity(r0.A, r0.C, r.A, r.C, tol);
        out << "residual_state=" << format_double_attr(t.residual_state)
            << " residual_output=" << format_double_attr(t.residual_output) << "\n";

        const int count =
            opts.markov_count > 0 ? opts.markov_count : 2 * static_cast<int>(r.n_x());
        const auto params0 = markov_parameters(r0, count);
        const auto params = markov_parameters(r, count);
        double     scale = 0.0;
        for (const auto& p : params0) scale = std::max(scale, p.norm());
        for (const auto& p : params) scale = std::max(scale, p.norm());
        const double denom = std::max(scale, kResidualFloor);

        int    worst = -1;
        double worst_delta = 0.0;
        for (int i = 0; i < count; ++i) {
            const double delta =
                (params0[static_cast<std::size_t>(i)] - params[static_cast<std::size_t>(i)])
                    .norm() /
                denom;
            out << "markov[" << i << "] delta=" << format_double_attr(delta) << "\n";
            if (delta > worst_delta) {
                worst_delta = delta;
                worst = i;
            }
        }

        if (!markov_equivalent(r0, r, count, tol)) {
            err << "error kind=markov-mismatch index=" << worst
                << " delta=" << format_double_attr(worst_delta)
                << " tol=" << format_double_attr(tol.residual_tol) << "\n";
            return exit_code::markov_mismatch;
        }
        out << "verified n_x=" << r.n_x() << " markov_count=" << count << "\n";
        return exit_code::ok;
    });
}

int cmd_check_observability(const std::string& system_path, const CliOptions& opts,
                            std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        const RealizationDocument doc = load_realization_document(system_path);
        const ObservabilityReport report = is_observable(doc.A, doc.C, opts.tolerances());
        out << "rank=" << report.rank << " order=" << doc.n_x
            << " verdict=" << (report.observable ? "observable" : "not-observable") << "\n";
        return report.observable ? exit_code::ok : exit_code::not_observable;
    });
}

}  // namespace ssalign
