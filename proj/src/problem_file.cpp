#include "noncomm/problem_file.hpp"

#include "noncomm/error.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace noncomm {

using nlohmann::json;

std::string_view to_string(BackendKind kind) noexcept {
    switch (kind) {
        case BackendKind::RationalMatrix: return "rational-matrix";
        case BackendKind::FloatMatrix: return "float-matrix";
        case BackendKind::Scalar: return "scalar";
        case BackendKind::Free: return "free";
    }
    return "unknown";
}

std::optional<BackendKind> parse_backend(std::string_view tag) noexcept {
    if (tag == "rational-matrix") return BackendKind::RationalMatrix;
    if (tag == "float-matrix") return BackendKind::FloatMatrix;
    if (tag == "scalar") return BackendKind::Scalar;
    if (tag == "free") return BackendKind::Free;
    return std::nullopt;
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw Error(ErrorKind::Parse, "field " + field + ": " + what);
}

const json& require(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) field_error(std::string("/") + key, "missing");
    return *it;
}

Rational rational_entry(const json& value, const std::string& field) {
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const Error& e) {
            field_error(field, e.what());
        }
    }
    if (value.is_number_integer()) return Rational(value.dump(), 10);
    if (value.is_number_float())
        field_error(field, "decimal " + value.dump() + " not allowed in a rational backend; write it as \"p/q\"");
    field_error(field, "expected a rational string \"p/q\" or an integer");
}

double float_entry(const json& value, const std::string& field) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        const auto text = value.get<std::string>();
        try {
            std::size_t used = 0;
            const double d = std::stod(text, &used);
            if (used == text.size() && std::isfinite(d)) return d;
        } catch (const std::exception&) {
        }
        field_error(field, "malformed decimal \"" + text + "\"");
    }
    field_error(field, "expected a number");
}

template <class Field, class Entry>
Matrix<Field> matrix_field(const json& value, std::size_t dim, const std::string& field, Entry entry) {
    if (!value.is_array() || value.size() != dim)
        field_error(field, "expected an array of " + std::to_string(dim) + " rows");
    Matrix<Field> m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string row_field = field + "/" + std::to_string(i);
        const json& row = value[i];
        if (!row.is_array() || row.size() != dim)
            field_error(row_field, "expected a row of " + std::to_string(dim) + " entries");
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = entry(row[j], row_field + "/" + std::to_string(j));
    }
    return m;
}

template <class Field, class Entry>
ColumnVector<Field> vector_field(const json& value, std::size_t dim, const std::string& field, Entry entry) {
    if (!value.is_array() || value.size() != dim)
        field_error(field, "expected an array of " + std::to_string(dim) + " entries");
    ColumnVector<Field> y(dim);
    for (std::size_t i = 0; i < dim; ++i) y[i] = entry(value[i], field + "/" + std::to_string(i));
    return y;
}

std::size_t dimension_field(const json& doc) {
    const json& value = require(doc, "dimension");
    if (!value.is_number_unsigned() || value.get<std::size_t>() == 0)
        field_error("/dimension", "expected a positive integer");
    return value.get<std::size_t>();
}

template <class Field, class Entry>
CauchyProblem<Matrix<Field>, ColumnVector<Field>> matrix_problem(const json& doc, Entry entry) {
    const std::size_t dim = dimension_field(doc);
    return {matrix_field<Field>(require(doc, "L0"), dim, "/L0", entry),
            matrix_field<Field>(require(doc, "L1"), dim, "/L1", entry),
            vector_field<Field>(require(doc, "Y1"), dim, "/Y1", entry)};
}

template <class Parse>
auto free_text_field(const json& doc, const char* key, const char* fallback, Parse parse) {
    const auto it = doc.find(key);
    if (it == doc.end()) return parse(fallback);
    if (!it->is_string()) field_error(std::string("/") + key, "expected a free-algebra text expression");
    try {
        return parse(it->get<std::string>());
    } catch (const Error& e) {
        field_error(std::string("/") + key, e.what());
    }
}

AnyProblem problem_body(const json& doc, BackendKind kind) {
    switch (kind) {
        case BackendKind::RationalMatrix: return matrix_problem<Rational>(doc, rational_entry);
        case BackendKind::FloatMatrix: return matrix_problem<double>(doc, float_entry);
        case BackendKind::Scalar:
            return ScalarProblem(Scalar(rational_entry(require(doc, "L0"), "/L0")),
                                 Scalar(rational_entry(require(doc, "L1"), "/L1")),
                                 Scalar(rational_entry(require(doc, "Y1"), "/Y1")));
        case BackendKind::Free:
            return FreeProblem(free_text_field(doc, "L0", "A", [](std::string_view s) { return FreeElement::parse(s); }),
                               free_text_field(doc, "L1", "B", [](std::string_view s) { return FreeElement::parse(s); }),
                               free_text_field(doc, "Y1", "y1", [](std::string_view s) { return FreeVector::parse(s); }));
    }
    field_error("/backend", "unsupported backend");
}

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json rational_json(const Rational& r) { return to_string(r); }

template <class Field, class Encode>
json matrix_json(const Matrix<Field>& m, Encode encode) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(encode(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class Field, class Encode>
json vector_json(const ColumnVector<Field>& y, Encode encode) {
    json out = json::array();
    for (std::size_t i = 0; i < y.dim(); ++i) out.push_back(encode(y[i]));
    return out;
}

json float_json(double d) { return d; }

}  // namespace

ProblemFile parse_problem(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        // byte is one past the offending character.
        throw Error(ErrorKind::Parse, "syntax error at " + line_column(json_text, e.byte == 0 ? 0 : e.byte - 1) +
                                          ": invalid JSON");
    }
    if (!doc.is_object()) field_error("/", "expected a JSON object");

    const json& tag = require(doc, "backend");
    if (!tag.is_string()) field_error("/backend", "expected a string");
    const auto kind = parse_backend(tag.get<std::string>());
    if (!kind)
        field_error("/backend", "unknown backend \"" + tag.get<std::string>() +
                                    "\" (expected rational-matrix, float-matrix, scalar or free)");

    ProblemFile out{problem_body(doc, *kind), std::nullopt};
    if (const auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string()) field_error("/label", "expected a string");
        out.label = it->get<std::string>();
    }
    return out;
}

ProblemFile load_problem(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open problem file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_problem(buffer.str());
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    }
}

std::string serialize_problem(const ProblemFile& file) {
    json doc;
    doc["backend"] = std::string(to_string(file.backend()));
    std::visit(
        [&](const auto& problem) {
            using P = std::decay_t<decltype(problem)>;
            if constexpr (std::is_same_v<P, RationalMatrixProblem>) {
                doc["dimension"] = problem.l0().dim();
                doc["L0"] = matrix_json(problem.l0(), rational_json);
                doc["L1"] = matrix_json(problem.l1(), rational_json);
                doc["Y1"] = vector_json(problem.y1(), rational_json);
            } else if constexpr (std::is_same_v<P, FloatMatrixProblem>) {
                doc["dimension"] = problem.l0().dim();
                doc["L0"] = matrix_json(problem.l0(), float_json);
                doc["L1"] = matrix_json(problem.l1(), float_json);
                doc["Y1"] = vector_json(problem.y1(), float_json);
            } else if constexpr (std::is_same_v<P, ScalarProblem>) {
                doc["L0"] = to_string(problem.l0().value);
                doc["L1"] = to_string(problem.l1().value);
                doc["Y1"] = to_string(problem.y1().value);
            } else {
                doc["L0"] = problem.l0().str();
                doc["L1"] = problem.l1().str();
                doc["Y1"] = problem.y1().str();
            }
        },
        file.problem);
    if (file.label) doc["label"] = *file.label;
    return doc.dump(2) + "\n";
}

std::string format_vector(const RationalVector& y) { return vector_json(y, rational_json).dump(); }
std::string format_vector(const FloatVector& y) { return vector_json(y, float_json).dump(); }
std::string format_vector(const Scalar& y) { return to_string(y.value); }
std::string format_vector(const FreeVector& y) { return y.str(); }
std::string format_element(const RationalMatrix& m) { return matrix_json(m, rational_json).dump(); }
std::string format_element(const FloatMatrix& m) { return matrix_json(m, float_json).dump(); }
std::string format_element(const Scalar& s) { return to_string(s.value); }
std::string format_element(const FreeElement& e) { return e.str(); }

}  // namespace noncomm
