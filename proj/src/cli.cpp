#include "mateq/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mateq/gen_inverse.hpp"
#include "mateq/problem_io.hpp"
#include "mateq/sweeps.hpp"

namespace mateq {
namespace {

constexpr std::uint64_t kDefaultSeed = 2026;
constexpr std::size_t kDefaultCap = 1'000'000;

void emit(std::ostream& out, const Json& document) { out << document.dump(2) << "\n"; }

std::string pow_text(const std::string& base, unsigned e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string ginv_text(const std::string& base, unsigned e) {
  return e == 1 ? base + "^(1)" : "(" + pow_text(base, e) + ")^(1)";
}

Json verdict_to_json(const ReproVerdict& verdict) {
  Json j;
  j["reproductive"] = verdict.reproductive;
  j["linear_idempotent"] = verdict.linear_idempotent;
  j["constant_fixed"] = verdict.constant_fixed;
  j["defect"] = matrix_to_json(verdict.defect);
  return j;
}

Json solution_set_to_json(const AffineSolutionSet& set) {
  Json j;
  j["consistent"] = set.consistent;
  j["x_rows"] = set.x_rows;
  j["x_cols"] = set.x_cols;
  if (set.consistent) {
    j["dimension"] = set.dimension();
    j["particular"] = matrix_to_json(*set.particular);
    Json basis = Json::array();
    for (const Matrix& b : set.basis) basis.push_back(matrix_to_json(b));
    j["basis"] = std::move(basis);
  }
  return j;
}

/// Options shared by the problem-consuming commands.
struct CommonOptions {
  std::string file;
  std::string field_text;
  std::string x0_file;
  std::string one_inverse_file;
  bool allow_small_power = false;
  std::size_t cap = kDefaultCap;

  [[nodiscard]] std::optional<FieldSpec> field_override() const {
    if (field_text.empty()) return std::nullopt;
    return field_from_string(field_text);
  }
};

/// Parse the --one-inverse file: a JSON object mapping witness names (from
/// `allowed`) to matrices.
std::map<std::string, Matrix> parse_supplied_inverses(const std::string& path,
                                                      const FieldSpec& field,
                                                      std::initializer_list<const char*> allowed) {
  const Json root = Json::parse(read_text_file(path), nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    throw Error(ErrorCode::ParseError,
                "supplied-inverse file must be a JSON object of name -> matrix");
  }
  std::map<std::string, Matrix> out;
  for (const auto& item : root.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || item.key() == name;
    if (!known) {
      throw Error(ErrorCode::ValidationError,
                  "unknown supplied-inverse name \"" + item.key() + "\" for this family");
    }
    out.emplace(item.key(), matrix_from_json(item.value(), field, item.key()));
  }
  return out;
}

std::optional<Matrix> take(const std::map<std::string, Matrix>& supplied,
                           const std::string& name) {
  const auto it = supplied.find(name);
  if (it == supplied.end()) return std::nullopt;
  return it->second;
}

std::optional<Matrix> parse_x0(const CommonOptions& options, const FieldSpec& field) {
  if (options.x0_file.empty()) return std::nullopt;
  return parse_matrix_text(read_text_file(options.x0_file), field, "X0");
}

Json report_header(const char* command, const ProblemFile& file) {
  Json j;
  j["command"] = command;
  j["problem"] = to_string(file.kind);
  j["field"] = file.field.name();
  Json params = Json::object();
  for (const auto& [key, value] : file.params) params[key] = value;
  j["params"] = std::move(params);
  return j;
}

void attach_witnesses(Json& j, const ConsistencyReport& report) {
  Json witnesses = Json::object();
  for (const auto& [name, matrix] : report.witnesses) witnesses[name] = matrix_to_json(matrix);
  j["witnesses"] = std::move(witnesses);
}

void attach_notes(Json& j, const std::vector<std::string>& notes) {
  Json array = Json::array();
  for (const std::string& note : notes) array.push_back(note);
  j["notes"] = std::move(array);
}

int finish_solve(std::ostream& out, Json& j, const ConsistencyReport& report,
                 const AffineGenerator& canonical_generator,
                 const std::optional<Matrix>& x0, const std::string& formula_f,
                 const std::string& formula_g,
                 const std::function<AffineGenerator(const Matrix&)>& anchored) {
  const Matrix canonical = canonical_generator.constant;
  j["canonical_particular"] = matrix_to_json(canonical);

  AffineGenerator chosen = canonical_generator;
  if (x0) {
    chosen = anchored(*x0);  // NotASolution when x0 fails the equations
    j["generator_kind"] = "anchored";
    j["x0"] = matrix_to_json(*x0);
    j["x0_equals_canonical"] = (*x0 == canonical);
    j["formula"] = formula_g;
  } else {
    j["generator_kind"] = "canonical";
    j["formula"] = formula_f;
  }
  j["generator"] = generator_to_json(chosen);
  j["reproductive"] = verdict_to_json(is_reproductive(chosen));
  attach_notes(j, report.notes);
  emit(out, j);
  return 0;
}

int finish_inconsistent(std::ostream& out, Json& j, const ConsistencyReport& report) {
  if (report.defect) j["defect"] = matrix_to_json(*report.defect);
  Json failed = Json::array();
  for (const std::string& clause : report.failed_clauses) failed.push_back(clause);
  j["failed_clauses"] = std::move(failed);
  attach_notes(j, report.notes);
  emit(out, j);
  return 2;
}

int do_solve_cline(std::ostream& out, const ProblemFile& file, const CommonOptions& options) {
  const ClineProblem prob = as_cline(file);
  std::map<std::string, Matrix> supplied;
  if (!options.one_inverse_file.empty()) {
    supplied = parse_supplied_inverses(options.one_inverse_file, file.field, {"G_AM", "G_BN"});
  }
  const ClineContext ctx = cline_context(prob, take(supplied, "G_AM"), take(supplied, "G_BN"),
                                         options.allow_small_power);
  const ConsistencyReport report = cline_consistent(ctx, prob);

  Json j = report_header("solve", file);
  j["indices"] = Json{{"A", ctx.index_a}, {"B", ctx.index_b},
                      {"power_validated", ctx.power_validated}};
  j["consistent"] = report.consistent;
  attach_witnesses(j, report);
  if (!report.consistent) return finish_inconsistent(out, j, report);

  const std::string ga = ginv_text("A", prob.m), gb = ginv_text("B", prob.n);
  const std::string am = pow_text("A", prob.m), bn = pow_text("B", prob.n);
  const std::string tail = " + Y - " + ga + "*" + am + "*Y*" + bn + "*" + gb;
  return finish_solve(out, j, report, cline_f_generator(ctx, prob),
                      parse_x0(options, file.field),
                      "f(Y) = " + ga + "*C*" + gb + tail, "g(Y) = X0" + tail,
                      [&](const Matrix& x0) { return cline_g_generator(ctx, prob, x0); });
}

int do_solve_penrose(std::ostream& out, const ProblemFile& file, const CommonOptions& options) {
  const PenroseProblem prob = as_penrose(file);
  std::map<std::string, Matrix> supplied;
  if (!options.one_inverse_file.empty()) {
    supplied = parse_supplied_inverses(options.one_inverse_file, file.field, {"G_AM", "G_DN"});
  }
  const PenroseContext ctx = penrose_context(prob, take(supplied, "G_AM"),
                                             take(supplied, "G_DN"), options.allow_small_power);
  const ConsistencyReport report = penrose_consistent(ctx, prob);

  Json j = report_header("solve", file);
  j["indices"] = Json{{"A", ctx.index_a}, {"D", ctx.index_d},
                      {"power_validated", ctx.power_validated}};
  j["consistent"] = report.consistent;
  attach_witnesses(j, report);
  if (!report.consistent) return finish_inconsistent(out, j, report);

  const std::string ga = ginv_text("A", prob.m), gd = ginv_text("D", prob.n);
  const std::string am = pow_text("A", prob.m), dn = pow_text("D", prob.n);
  const std::string tail = " + (I - " + ga + "*" + am + ")*Y*(I - " + dn + "*" + gd + ")";
  j["x1_definition"] =
      "X1 = " + ga + "*B + E*" + gd + " - " + ga + "*" + am + "*E*" + gd;
  return finish_solve(out, j, report, penrose_f_generator(ctx, prob),
                      parse_x0(options, file.field), "f(Y) = X1" + tail, "g(Y) = X0" + tail,
                      [&](const Matrix& x0) { return penrose_g_generator(ctx, prob, x0); });
}

int do_solve_kcomm(std::ostream& out, const ProblemFile& file, const CommonOptions& options) {
  const KCommProblem prob = as_kcomm(file);
  std::map<std::string, Matrix> supplied;
  if (!options.one_inverse_file.empty()) {
    supplied = parse_supplied_inverses(options.one_inverse_file, file.field, {"ABAR"});
  }
  const std::optional<Matrix> abar_user = take(supplied, "ABAR");
  const ConsistencyReport report = kcomm_consistent(prob, abar_user);

  Json j = report_header("solve", file);
  j["indices"] = Json{{"A", index_of(prob.a)}};
  j["consistent"] = report.consistent;
  attach_witnesses(j, report);
  if (!report.consistent) return finish_inconsistent(out, j, report);

  const KCommContext ctx = *find_kcomm_inverse(prob, abar_user);
  const std::optional<Matrix> x0 = parse_x0(options, file.field);
  const KCommIdentityReport id_report = kcomm_identity_report(ctx, prob, x0);
  Json identities = Json::array();
  for (const auto& item : id_report.items) {
    identities.push_back(Json{{"name", item.name}, {"holds", item.holds}});
  }
  j["identities"] = std::move(identities);

  const std::string ak = pow_text("A", prob.k);
  const std::string abark = prob.k == 1 ? "ABAR" : "ABAR^" + std::to_string(prob.k);
  const std::string tail = " + Y - (I - ABAR*A)*Y*(" + ak + "*" + abark + ") - (" + abark +
                           "*" + ak + ")*Y*(I - A*ABAR) - (ABAR*A)*Y*(A*ABAR)";
  j["xhat_definition"] = "XHAT = ABAR*A*ABAR";
  return finish_solve(out, j, report, kcomm_f_generator(ctx, prob), x0,
                      "f(Y) = XHAT" + tail, "g(Y) = X0" + tail,
                      [&](const Matrix& anchor) { return kcomm_g_generator(ctx, prob, anchor); });
}

int do_solve(std::ostream& out, const CommonOptions& options) {
  const ProblemFile file = parse_problem_file(options.file, options.field_override());
  switch (file.kind) {
    case ProblemKind::cline: return do_solve_cline(out, file, options);
    case ProblemKind::penrose: return do_solve_penrose(out, file, options);
    case ProblemKind::kcomm: return do_solve_kcomm(out, file, options);
    default:
      throw Error(ErrorCode::ValidationError,
                  "solve expects a cline, penrose, or kcomm problem; use the oneinv, index, "
                  "oracle, or enumerate command instead");
  }
}

int do_check_repro(std::ostream& out, const CommonOptions& options) {
  const Json root = Json::parse(read_text_file(options.file), nullptr, false);
  if (root.is_discarded() || !root.is_object() || !root.contains("field") ||
      !root.contains("generator")) {
    throw Error(ErrorCode::ValidationError,
                "check-repro needs a JSON object with \"field\" and \"generator\" keys "
                "(solve output works as-is)");
  }
  const FieldSpec field = options.field_override()
                              ? *options.field_override()
                              : field_from_string(root.at("field").get<std::string>());
  const AffineGenerator h = generator_from_json(root.at("generator"), field);
  const ReproVerdict verdict = is_reproductive(h);

  Json j;
  j["command"] = "check-repro";
  j["field"] = field.name();
  j["reproductive"] = verdict.reproductive;
  j["linear_idempotent"] = verdict.linear_idempotent;
  j["constant_fixed"] = verdict.constant_fixed;
  j["defect"] = matrix_to_json(verdict.defect);
  emit(out, j);
  return verdict.reproductive ? 0 : 2;
}

int do_oneinv(std::ostream& out, const CommonOptions& options) {
  const ProblemFile file = parse_problem_file(options.file, options.field_override());
  const Matrix a = as_single_matrix(file);
  const OneInverseCertificate cert = one_inverse(a);

  Json j = report_header("oneinv", file);
  j["A"] = matrix_to_json(a);
  j["g"] = matrix_to_json(cert.g);
  j["rank"] = cert.input_rank;
  j["construction"] = cert.construction;
  j["verified"] = is_one_inverse(a, cert.g);
  emit(out, j);
  return 0;
}

int do_index(std::ostream& out, const CommonOptions& options) {
  const ProblemFile file = parse_problem_file(options.file, options.field_override());
  out << index_of(as_single_matrix(file)) << "\n";
  return 0;
}

LinearMatrixSystem system_of(const ProblemFile& file) {
  switch (file.kind) {
    case ProblemKind::cline: return cline_system(as_cline(file));
    case ProblemKind::penrose: return penrose_system(as_penrose(file));
    case ProblemKind::kcomm: return kcomm_system(as_kcomm(file));
    case ProblemKind::oneinv: {
      const Matrix a = as_single_matrix(file);
      LinearMatrixSystem system;
      system.x_rows = a.cols();
      system.x_cols = a.rows();
      system.field = a.field();
      system.constraints.push_back(LinearConstraint{{LinearTerm{a, a, 1}}, a});
      return system;
    }
    case ProblemKind::oracle: return *file.system;
    default:
      throw Error(ErrorCode::ValidationError, "no linear system is associated with this kind");
  }
}

int do_oracle(std::ostream& out, const CommonOptions& options) {
  const ProblemFile file = parse_problem_file(options.file, options.field_override());
  const AffineSolutionSet set = solve_linear_system(system_of(file));
  Json j = report_header("oracle", file);
  j["solution_set"] = solution_set_to_json(set);
  emit(out, j);
  return set.consistent ? 0 : 2;
}

int do_enumerate(std::ostream& out, const CommonOptions& options) {
  const ProblemFile file = parse_problem_file(options.file, options.field_override());
  const AffineSolutionSet set = solve_linear_system(system_of(file));
  Json j = report_header("enumerate", file);
  j["consistent"] = set.consistent;
  const std::vector<Matrix> solutions = enumerate_solutions(set, options.cap);
  j["count"] = solutions.size();
  Json list = Json::array();
  for (const Matrix& x : solutions) list.push_back(matrix_to_json(x));
  j["solutions"] = std::move(list);
  emit(out, j);
  return set.consistent ? 0 : 2;
}

int do_sweep(std::ostream& out, const std::string& suite, std::uint64_t seed) {
  std::vector<SweepReport> reports;
  const bool all = suite == "all";
  if (all || suite == "cline-gf2") {
    reports.push_back(sweep_cline_exhaustive_gf2(1, 1));
    reports.push_back(sweep_cline_exhaustive_gf2(2, 2));
  }
  if (all || suite == "penrose-gf2") reports.push_back(sweep_penrose_exhaustive_gf2());
  if (all || suite == "kcomm-gf3") reports.push_back(sweep_kcomm_exhaustive_gf3());
  if (all || suite == "kcomm-gf2-3x3") reports.push_back(sweep_kcomm_random_gf2_3x3(seed, 24));
  if (all || suite == "rational-families")
    reports.push_back(sweep_random_rational_families(seed, 100));
  if (all || suite == "cline-anchor-witness")
    reports.push_back(sweep_cline_anchor_witness_gf2());
  if (all || suite == "primitives") reports.push_back(sweep_primitive_cross_checks(seed, 500));

  if (reports.empty()) {
    throw Error(ErrorCode::ValidationError,
                "unknown sweep \"" + suite +
                    "\"; valid: cline-gf2, penrose-gf2, kcomm-gf3, kcomm-gf2-3x3, "
                    "rational-families, cline-anchor-witness, primitives, all");
  }
  bool pass = true;
  for (const SweepReport& report : reports) {
    out << report.to_line() << "\n";
    for (const std::string& note : report.notes) out << "  note: " << note << "\n";
    for (const std::string& failure : report.failures) out << "  fail: " << failure << "\n";
    pass = pass && report.pass;
  }
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact consistency and closed-form general solutions for three "
               "matrix-equation families"};
  app.require_subcommand(1);

  CommonOptions options;
  std::string sweep_suite;
  std::uint64_t seed = kDefaultSeed;
  int exit_code = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_solver_flags) {
    cmd->add_option("file", options.file, "problem JSON file")->required();
    cmd->add_option("--field", options.field_text,
                    "reinterpret matrix entries over this field (Q or GF(p))");
    if (with_solver_flags) {
      cmd->add_option("--with-x0", options.x0_file,
                      "anchor the generator at this solution (JSON array of arrays)");
      cmd->add_option("--one-inverse", options.one_inverse_file,
                      "JSON object of user-supplied inner inverses (G_AM/G_BN/G_DN/ABAR)");
      cmd->add_flag("--allow-small-power", options.allow_small_power,
                    "accept exponents below the matrix index");
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "decide consistency and print the generator");
  add_common(solve, true);
  solve->callback([&] { exit_code = do_solve(out, options); });

  CLI::App* repro = app.add_subcommand("check-repro", "decide whether a generator is "
                                                      "reproductive (idempotent)");
  add_common(repro, false);
  repro->callback([&] { exit_code = do_check_repro(out, options); });

  CLI::App* oneinv = app.add_subcommand("oneinv", "canonical verified inner inverse");
  add_common(oneinv, false);
  oneinv->callback([&] { exit_code = do_oneinv(out, options); });

  CLI::App* index = app.add_subcommand("index", "print the matrix index");
  add_common(index, false);
  index->callback([&] { exit_code = do_index(out, options); });

  CLI::App* oracle = app.add_subcommand("oracle", "solve the vectorized linear system directly");
  add_common(oracle, false);
  oracle->callback([&] { exit_code = do_oracle(out, options); });

  CLI::App* enumerate = app.add_subcommand("enumerate", "list every solution (prime fields)");
  add_common(enumerate, false);
  enumerate->add_option("--cap", options.cap, "largest solution count to materialize");
  enumerate->callback([&] { exit_code = do_enumerate(out, options); });

  CLI::App* sweep = app.add_subcommand("sweep", "run a verification suite");
  sweep->add_option("suite", sweep_suite, "suite name or \"all\"")->required();
  sweep->add_option("--seed", seed, "seed for the randomized suites");
  sweep->callback([&] { exit_code = do_sweep(out, sweep_suite, seed); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mateq");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace mateq
