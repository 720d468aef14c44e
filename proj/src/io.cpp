#include "ssalign/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ssalign {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int count_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string(key) + " is required");
    const json& value = doc.at(key);
    if (!value.is_number_integer() || value.get<long long>() < 1) {
        throw ParseError(std::string(key) + " must be a positive integer");
    }
    return static_cast<int>(value.get<long long>());
}

double number_entry(const json& value, const std::string& context) {
    if (!value.is_number()) throw ParseError(context + " must be a number");
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw ParseError(context + " must be finite");
    return v;
}

Matrix matrix_field(const json& doc, const char* key, Eigen::Index rows, Eigen::Index cols) {
    const json& arr = doc.at(key);
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != rows) {
        throw ParseError(std::string(key) + " must be an array of " + std::to_string(rows) +
                         " rows");
    }
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = arr[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw ParseError(std::string(key) + " row " + std::to_string(i) + " must hold " +
                             std::to_string(cols) + " numbers");
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = number_entry(row[static_cast<std::size_t>(j)],
                                   std::string(key) + "[" + std::to_string(i) + "][" +
                                       std::to_string(j) + "]");
        }
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

RealizationDocument parse_realization_document(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("realization document must be a JSON object");

    RealizationDocument out;
    out.n_x = count_field(doc, "n_x");
    out.n_y = count_field(doc, "n_y");
    out.A = matrix_field(doc, "A", out.n_x, out.n_x);
    if (!doc.contains("C")) throw ParseError("C is required");
    out.C = matrix_field(doc, "C", out.n_y, out.n_x);

    const bool has_b = doc.contains("B");
    const bool has_d = doc.contains("D");
    if (has_b != has_d) throw ParseError("B and D must be given together or both omitted");
    if (has_b) {
        out.n_u = count_field(doc, "n_u");
        out.B = matrix_field(doc, "B", out.n_x, out.n_u);
        out.D = matrix_field(doc, "D", out.n_y, out.n_u);
    }

    if (doc.contains("label")) {
        if (!doc.at("label").is_string()) throw ParseError("label must be a string");
        out.label = doc.at("label").get<std::string>();
    }
    return out;
}

RealizationDocument load_realization_document(const std::string& path) {
    try {
        return parse_realization_document(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string emit_realization_document(const RealizationDocument& doc) {
    json out;
    if (!doc.label.empty()) out["label"] = doc.label;
    out["n_x"] = doc.n_x;
    out["n_y"] = doc.n_y;
    out["A"] = matrix_to_json(doc.A);
    out["C"] = matrix_to_json(doc.C);
    if (doc.has_inputs()) {
        out["n_u"] = doc.n_u;
        out["B"] = matrix_to_json(*doc.B);
        out["D"] = matrix_to_json(*doc.D);
    }
    return out.dump(2) + "\n";
}

TransformDocument parse_transform_document(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("transform document must be a JSON object");
    if (!doc.contains("T")) throw ParseError("T is required");
    if (!doc.at("T").is_array() || doc.at("T").empty()) {
        throw ParseError("T must be a nonempty nested array");
    }

    TransformDocument out;
    const Eigen::Index n = static_cast<Eigen::Index>(doc.at("T").size());
    out.n_x = doc.contains("n_x") ? count_field(doc, "n_x") : static_cast<int>(n);
    if (out.n_x != static_cast<int>(n)) throw ParseError("n_x does not match T's shape");
    out.T = matrix_field(doc, "T", n, n);
    if (doc.contains("T_inv")) out.T_inv = matrix_field(doc, "T_inv", n, n);
    if (doc.contains("alpha")) {
        const json& arr = doc.at("alpha");
        if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != n) {
            throw ParseError("alpha must hold n_x numbers");
        }
        Vector alpha(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            alpha(i) = number_entry(arr[static_cast<std::size_t>(i)],
                                    "alpha[" + std::to_string(i) + "]");
        }
        out.alpha = std::move(alpha);
    }
    for (const char* key : {"residual_state", "residual_output", "condition_estimate"}) {
        if (!doc.contains(key)) continue;
        const double v = number_entry(doc.at(key), key);
        if (std::string(key) == "residual_state") out.residual_state = v;
        if (std::string(key) == "residual_output") out.residual_output = v;
        if (std::string(key) == "condition_estimate") out.condition_estimate = v;
    }
    return out;
}

TransformDocument load_transform_document(const std::string& path) {
    try {
        return parse_transform_document(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string emit_transform_document(const TransformDocument& doc) {
    json out;
    out["n_x"] = doc.n_x;
    out["T"] = matrix_to_json(doc.T);
    if (doc.T_inv) out["T_inv"] = matrix_to_json(*doc.T_inv);
    if (doc.alpha) {
        json arr = json::array();
        for (Eigen::Index i = 0; i < doc.alpha->size(); ++i) arr.push_back((*doc.alpha)(i));
        out["alpha"] = std::move(arr);
    }
    if (doc.residual_state) out["residual_state"] = *doc.residual_state;
    if (doc.residual_output) out["residual_output"] = *doc.residual_output;
    if (doc.condition_estimate) out["condition_estimate"] = *doc.condition_estimate;
    return out.dump(2) + "\n";
}

RealizationDocument to_document(const Realization& r, const std::string& label) {
    RealizationDocument doc;
    doc.n_x = static_cast<int>(r.n_x());
    doc.n_u = static_cast<int>(r.n_u());
    doc.n_y = static_cast<int>(r.n_y());
    doc.A = r.A;
    doc.B = r.B;
    doc.C = r.C;
    doc.D = r.D;
    doc.label = label;
    return doc;
}

TransformDocument to_document(const SimilarityTransform& t) {
    TransformDocument doc;
    doc.n_x = static_cast<int>(t.T.rows());
    doc.T = t.T;
    doc.T_inv = t.T_inv;
    doc.alpha = t.alpha;
    doc.residual_state = t.residual_state;
    doc.residual_output = t.residual_output;
    doc.condition_estimate = t.condition_estimate;
    return doc;
}

Realization to_realization(const RealizationDocument& doc) {
    if (!doc.has_inputs()) {
        throw ParseError("document lacks B and D, which this operation needs");
    }
    return Realization(doc.A, *doc.B, doc.C, *doc.D);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
    if (!out) throw ParseError("cannot write " + path);
}

}  // namespace ssalign
