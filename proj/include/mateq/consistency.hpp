#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mateq/matrix.hpp"

namespace mateq {

/// Human- and machine-checkable outcome of a consistency decision: the verdict
/// plus everything needed to re-check it by hand — the chosen inner inverses
/// (witnesses), a particular solution when consistent, the residual defect
/// when inconsistent, which clauses failed, and free-form notes.
struct ConsistencyReport {
  bool consistent = false;
  std::vector<std::pair<std::string, Matrix>> witnesses;
  std::optional<Matrix> particular;
  std::optional<Matrix> defect;
  std::vector<std::string> failed_clauses;
  std::vector<std::string> notes;
};

}  // namespace mateq
