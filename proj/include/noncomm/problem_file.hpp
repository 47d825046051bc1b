#pragma once

#include "noncomm/free_algebra.hpp"
#include "noncomm/matrix.hpp"
#include "noncomm/scalar.hpp"
#include "noncomm/solver.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace noncomm {

enum class BackendKind { RationalMatrix, FloatMatrix, Scalar, Free };

std::string_view to_string(BackendKind kind) noexcept;
std::optional<BackendKind> parse_backend(std::string_view tag) noexcept;

using RationalMatrixProblem = CauchyProblem<RationalMatrix, RationalVector>;
using FloatMatrixProblem = CauchyProblem<FloatMatrix, FloatVector>;
using ScalarProblem = CauchyProblem<Scalar, Scalar>;
using FreeProblem = CauchyProblem<FreeElement, FreeVector>;

using AnyProblem = std::variant<RationalMatrixProblem, FloatMatrixProblem, ScalarProblem, FreeProblem>;

/// A Cauchy problem as stored on disk.
///
///   {
///     "backend": "rational-matrix" | "float-matrix" | "scalar" | "free",
///     "dimension": n,                        // matrix backends only
///     "L0": [["1", "1/2"], ["0", "-3"]],     // n x n; scalar: one entry
///     "L1": ...,
///     "Y1": ["1", "0"],                      // length n; scalar: one entry
///     "label": "optional text"
///   }
///
/// Rational entries are "p" / "p/q" strings or JSON integers; decimals are
/// rejected. Float entries are JSON numbers or decimal strings. The free backend
/// takes L0/L1 in free-algebra text form (default "A" and "B") and Y1 in
/// free-vector text form (default "y1").
struct ProblemFile {
    AnyProblem problem;
    std::optional<std::string> label;

    BackendKind backend() const noexcept { return static_cast<BackendKind>(problem.index()); }

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws Error(Parse) with a line/column (syntax) or JSON-pointer field (schema) diagnostic.
ProblemFile parse_problem(std::string_view json_text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Canonical JSON text; parse_problem(serialize_problem(f)) == f.
std::string serialize_problem(const ProblemFile& file);

/// Text forms used on standard output.
std::string format_vector(const RationalVector& y);
std::string format_vector(const FloatVector& y);
std::string format_vector(const Scalar& y);
std::string format_vector(const FreeVector& y);
std::string format_element(const RationalMatrix& m);
std::string format_element(const FloatMatrix& m);
std::string format_element(const Scalar& s);
std::string format_element(const FreeElement& e);

}  // namespace noncomm
