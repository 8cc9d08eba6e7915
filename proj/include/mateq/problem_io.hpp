#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "mateq/cline.hpp"
#include "mateq/generator.hpp"
#include "mateq/kcomm.hpp"
#include "mateq/linear_system.hpp"
#include "mateq/penrose.hpp"

namespace mateq {

using Json = nlohmann::ordered_json;

enum class ProblemKind { cline, penrose, kcomm, oneinv, index, oracle };

[[nodiscard]] const char* to_string(ProblemKind kind) noexcept;

/// A parsed problem file: JSON object with keys
///   field    : "Q" or "GF(p)"
///   problem  : cline | penrose | kcomm | oneinv | index | oracle
///   params   : positive integers (m, n for the power families; k for the
///              commuting family; x_rows, x_cols for raw oracle systems)
///   matrices : name -> array of arrays of entry strings
/// plus, for problem "oracle" only, a key
///   constraints : [{terms: [{left: NAME, right: NAME, sign: +-1}], rhs: NAME}]
/// Matrix rosters and params are validated strictly (unknown or missing names
/// are ValidationError; malformed JSON is ParseError with line/column).
struct ProblemFile {
  FieldSpec field;
  ProblemKind kind = ProblemKind::oneinv;
  std::map<std::string, Matrix> matrices;
  std::map<std::string, unsigned> params;
  std::optional<LinearMatrixSystem> system;  ///< assembled for oracle problems
};

/// Parse "Q" or "GF(p)" (ParseError otherwise; the modulus is validated).
[[nodiscard]] FieldSpec field_from_string(const std::string& text);

/// Parse a problem document from JSON text. The optional field override
/// reinterprets every matrix entry in that field instead of the file's.
[[nodiscard]] ProblemFile parse_problem_text(const std::string& text,
                                             const std::optional<FieldSpec>& field_override =
                                                 std::nullopt);

/// Read and parse a problem file from disk (ValidationError on unreadable
/// paths).
[[nodiscard]] ProblemFile parse_problem_file(const std::string& path,
                                             const std::optional<FieldSpec>& field_override =
                                                 std::nullopt);

/// Typed views (ValidationError when the file holds a different problem kind).
[[nodiscard]] ClineProblem as_cline(const ProblemFile& file);
[[nodiscard]] PenroseProblem as_penrose(const ProblemFile& file);
[[nodiscard]] KCommProblem as_kcomm(const ProblemFile& file);
[[nodiscard]] Matrix as_single_matrix(const ProblemFile& file);

/// Matrices serialize as arrays of arrays of canonical entry strings.
[[nodiscard]] Json matrix_to_json(const Matrix& m);
[[nodiscard]] Matrix matrix_from_json(const Json& j, const FieldSpec& field,
                                      const std::string& name);

/// Generators serialize with their symbolic term list:
/// {y_rows, y_cols, constant, terms: [{sign, left, right}]}.
[[nodiscard]] Json generator_to_json(const AffineGenerator& h);
[[nodiscard]] AffineGenerator generator_from_json(const Json& j, const FieldSpec& field);

/// Parse a standalone matrix document: a bare array of arrays.
[[nodiscard]] Matrix parse_matrix_text(const std::string& text, const FieldSpec& field,
                                       const std::string& name);

/// Read a whole file into a string (ValidationError on failure).
[[nodiscard]] std::string read_text_file(const std::string& path);

}  // namespace mateq
