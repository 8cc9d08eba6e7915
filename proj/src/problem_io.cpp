#include "mateq/problem_io.hpp"

#include <fstream>
#include <sstream>

namespace mateq {
namespace {

/// Translate a byte offset from a JSON parse error into line/column text.
std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, line_column(text, e.byte) + ": " + e.what());
  }
}

unsigned parse_positive_param(const Json& params, const std::string& name) {
  if (!params.contains(name)) {
    throw Error(ErrorCode::ValidationError, "missing required param \"" + name + "\"");
  }
  const Json& v = params.at(name);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1'000'000) {
    throw Error(ErrorCode::ValidationError,
                "param \"" + name + "\" must be an integer in [1, 10^6]");
  }
  return static_cast<unsigned>(v.get<long long>());
}

void reject_unknown_keys(const Json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw Error(ErrorCode::ValidationError, "unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

const Matrix& named_matrix(const ProblemFile& file, const std::string& name) {
  const auto it = file.matrices.find(name);
  if (it == file.matrices.end()) {
    throw Error(ErrorCode::ValidationError, "missing required matrix \"" + name + "\"");
  }
  return it->second;
}

void require_kind(const ProblemFile& file, ProblemKind kind) {
  if (file.kind != kind) {
    throw Error(ErrorCode::ValidationError,
                std::string("expected a \"") + to_string(kind) + "\" problem, file holds \"" +
                    to_string(file.kind) + "\"");
  }
}

LinearMatrixSystem parse_oracle_system(const Json& root, const ProblemFile& file) {
  if (!root.contains("constraints") || !root.at("constraints").is_array() ||
      root.at("constraints").empty()) {
    throw Error(ErrorCode::ValidationError,
                "oracle problems need a nonempty \"constraints\" array");
  }
  LinearMatrixSystem system;
  system.x_rows = file.params.at("x_rows");
  system.x_cols = file.params.at("x_cols");
  system.field = file.field;
  for (const Json& jc : root.at("constraints")) {
    reject_unknown_keys(jc, {"terms", "rhs"}, "a constraint");
    if (!jc.contains("terms") || !jc.at("terms").is_array() || jc.at("terms").empty() ||
        !jc.contains("rhs") || !jc.at("rhs").is_string()) {
      throw Error(ErrorCode::ValidationError,
                  "each constraint needs a nonempty \"terms\" array and an \"rhs\" name");
    }
    LinearConstraint constraint{{}, named_matrix(file, jc.at("rhs").get<std::string>())};
    for (const Json& jt : jc.at("terms")) {
      reject_unknown_keys(jt, {"left", "right", "sign"}, "a term");
      if (!jt.contains("left") || !jt.at("left").is_string() || !jt.contains("right") ||
          !jt.at("right").is_string() || !jt.contains("sign") ||
          !jt.at("sign").is_number_integer()) {
        throw Error(ErrorCode::ValidationError,
                    "each term needs \"left\"/\"right\" matrix names and an integer \"sign\"");
      }
      constraint.terms.push_back(LinearTerm{named_matrix(file, jt.at("left").get<std::string>()),
                                            named_matrix(file, jt.at("right").get<std::string>()),
                                            jt.at("sign").get<int>()});
    }
    system.constraints.push_back(std::move(constraint));
  }
  system.validate();
  return system;
}

}  // namespace

const char* to_string(ProblemKind kind) noexcept {
  switch (kind) {
    case ProblemKind::cline: return "cline";
    case ProblemKind::penrose: return "penrose";
    case ProblemKind::kcomm: return "kcomm";
    case ProblemKind::oneinv: return "oneinv";
    case ProblemKind::index: return "index";
    case ProblemKind::oracle: return "oracle";
  }
  return "unknown";
}

FieldSpec field_from_string(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
    const std::string digits = text.substr(3, text.size() - 4);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
        digits.size() <= 10) {
      return FieldSpec::gf(std::stoll(digits));
    }
  }
  throw Error(ErrorCode::ParseError, "field must be \"Q\" or \"GF(p)\", got \"" + text + "\"");
}

Matrix matrix_from_json(const Json& j, const FieldSpec& field, const std::string& name) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::ValidationError,
                "matrix \"" + name + "\" must be a nonempty array of rows");
  }
  std::vector<std::vector<Scalar>> rows;
  for (const Json& jrow : j) {
    if (!jrow.is_array() || jrow.empty()) {
      throw Error(ErrorCode::ValidationError,
                  "matrix \"" + name + "\" rows must be nonempty arrays");
    }
    std::vector<Scalar> row;
    for (const Json& entry : jrow) {
      if (entry.is_string()) {
        row.push_back(Scalar::parse(entry.get<std::string>(), field));
      } else if (entry.is_number_integer()) {
        row.push_back(Scalar::from_integer(entry.get<std::int64_t>(), field));
      } else {
        throw Error(ErrorCode::ParseError,
                    "matrix \"" + name + "\" entries must be strings or integers");
      }
    }
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) {
      throw Error(ErrorCode::ValidationError, "matrix \"" + name + "\" has ragged rows");
    }
  }
  return Matrix::from_rows(rows);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json generator_to_json(const AffineGenerator& h) {
  Json j;
  j["y_rows"] = h.y_rows;
  j["y_cols"] = h.y_cols;
  j["constant"] = matrix_to_json(h.constant);
  Json terms = Json::array();
  for (const auto& term : h.terms) {
    Json jt;
    jt["sign"] = term.sign;
    jt["left"] = matrix_to_json(term.left);
    jt["right"] = matrix_to_json(term.right);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

AffineGenerator generator_from_json(const Json& j, const FieldSpec& field) {
  if (!j.is_object()) {
    throw Error(ErrorCode::ValidationError, "generator must be a JSON object");
  }
  reject_unknown_keys(j, {"y_rows", "y_cols", "constant", "terms"}, "a generator");
  for (const char* key : {"y_rows", "y_cols", "constant", "terms"}) {
    if (!j.contains(key)) {
      throw Error(ErrorCode::ValidationError,
                  std::string("generator is missing key \"") + key + "\"");
    }
  }
  if (!j.at("y_rows").is_number_integer() || !j.at("y_cols").is_number_integer() ||
      j.at("y_rows").get<long long>() < 1 || j.at("y_cols").get<long long>() < 1) {
    throw Error(ErrorCode::ValidationError, "generator input shape must be positive integers");
  }
  AffineGenerator h{matrix_from_json(j.at("constant"), field, "constant"),
                    {},
                    j.at("y_rows").get<std::size_t>(),
                    j.at("y_cols").get<std::size_t>()};
  if (!j.at("terms").is_array()) {
    throw Error(ErrorCode::ValidationError, "generator \"terms\" must be an array");
  }
  for (const Json& jt : j.at("terms")) {
    reject_unknown_keys(jt, {"sign", "left", "right"}, "a generator term");
    if (!jt.contains("sign") || !jt.at("sign").is_number_integer() || !jt.contains("left") ||
        !jt.contains("right")) {
      throw Error(ErrorCode::ValidationError,
                  "each generator term needs \"sign\", \"left\", \"right\"");
    }
    h.terms.push_back(LinearTerm{matrix_from_json(jt.at("left"), field, "left"),
                                 matrix_from_json(jt.at("right"), field, "right"),
                                 jt.at("sign").get<int>()});
  }
  h.validate();
  return h;
}

Matrix parse_matrix_text(const std::string& text, const FieldSpec& field,
                         const std::string& name) {
  return matrix_from_json(parse_json(text), field, name);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ValidationError, "cannot read file \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ProblemFile parse_problem_text(const std::string& text,
                               const std::optional<FieldSpec>& field_override) {
  const Json root = parse_json(text);
  if (!root.is_object()) {
    throw Error(ErrorCode::ValidationError, "problem document must be a JSON object");
  }
  reject_unknown_keys(root, {"field", "problem", "params", "matrices", "constraints"},
                      "the problem document");
  for (const char* key : {"field", "problem", "matrices"}) {
    if (!root.contains(key)) {
      throw Error(ErrorCode::ValidationError, std::string("missing key \"") + key + "\"");
    }
  }
  if (!root.at("field").is_string() || !root.at("problem").is_string() ||
      !root.at("matrices").is_object()) {
    throw Error(ErrorCode::ValidationError,
                "\"field\"/\"problem\" must be strings and \"matrices\" an object");
  }

  ProblemFile file;
  file.field = field_override ? *field_override
                              : field_from_string(root.at("field").get<std::string>());

  const std::string kind_text = root.at("problem").get<std::string>();
  if (kind_text == "cline") file.kind = ProblemKind::cline;
  else if (kind_text == "penrose") file.kind = ProblemKind::penrose;
  else if (kind_text == "kcomm") file.kind = ProblemKind::kcomm;
  else if (kind_text == "oneinv") file.kind = ProblemKind::oneinv;
  else if (kind_text == "index") file.kind = ProblemKind::index;
  else if (kind_text == "oracle") file.kind = ProblemKind::oracle;
  else {
    throw Error(ErrorCode::ValidationError, "unknown problem kind \"" + kind_text + "\"");
  }
  if (file.kind != ProblemKind::oracle && root.contains("constraints")) {
    throw Error(ErrorCode::ValidationError,
                "\"constraints\" is only valid for oracle problems");
  }

  for (const auto& item : root.at("matrices").items()) {
    file.matrices.emplace(item.key(), matrix_from_json(item.value(), file.field, item.key()));
  }

  const Json params = root.contains("params") ? root.at("params") : Json::object();
  if (!params.is_object()) {
    throw Error(ErrorCode::ValidationError, "\"params\" must be an object");
  }
  const auto check_roster = [&](std::initializer_list<const char*> names,
                                std::initializer_list<const char*> param_names) {
    for (const char* n : names) (void)named_matrix(file, n);
    if (file.matrices.size() != names.size()) {
      throw Error(ErrorCode::ValidationError, "unexpected extra matrices in the document");
    }
    reject_unknown_keys(params, param_names, "params");
    for (const char* p : param_names) {
      file.params.emplace(p, parse_positive_param(params, p));
    }
  };

  switch (file.kind) {
    case ProblemKind::cline: check_roster({"A", "B", "C"}, {"m", "n"}); break;
    case ProblemKind::penrose: check_roster({"A", "B", "D", "E"}, {"m", "n"}); break;
    case ProblemKind::kcomm: check_roster({"A"}, {"k"}); break;
    case ProblemKind::oneinv:
    case ProblemKind::index: check_roster({"A"}, {}); break;
    case ProblemKind::oracle: {
      reject_unknown_keys(params, {"x_rows", "x_cols"}, "params");
      file.params.emplace("x_rows", parse_positive_param(params, "x_rows"));
      file.params.emplace("x_cols", parse_positive_param(params, "x_cols"));
      file.system = parse_oracle_system(root, file);
      break;
    }
  }
  return file;
}

ProblemFile parse_problem_file(const std::string& path,
                               const std::optional<FieldSpec>& field_override) {
  return parse_problem_text(read_text_file(path), field_override);
}

ClineProblem as_cline(const ProblemFile& file) {
  require_kind(file, ProblemKind::cline);
  return ClineProblem{named_matrix(file, "A"), named_matrix(file, "B"), named_matrix(file, "C"),
                      file.params.at("m"), file.params.at("n")};
}

PenroseProblem as_penrose(const ProblemFile& file) {
  require_kind(file, ProblemKind::penrose);
  return PenroseProblem{named_matrix(file, "A"), named_matrix(file, "B"),
                        named_matrix(file, "D"), named_matrix(file, "E"),
                        file.params.at("m"),     file.params.at("n")};
}

KCommProblem as_kcomm(const ProblemFile& file) {
  require_kind(file, ProblemKind::kcomm);
  return KCommProblem{named_matrix(file, "A"), file.params.at("k")};
}

Matrix as_single_matrix(const ProblemFile& file) {
  if (file.kind != ProblemKind::oneinv && file.kind != ProblemKind::index) {
    throw Error(ErrorCode::ValidationError,
                "this command expects a single-matrix (oneinv/index) problem");
  }
  return named_matrix(file, "A");
}

}  // namespace mateq
