#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coxkit/group_ball.hpp"

namespace coxkit {

enum class IdealMode { kTk, kAll };

struct CheckSuiteConfig {
  /// Named types or explicit matrices.
  std::vector<std::string> types;
  /// nullopt: the full group (finite types only).
  std::optional<int> radius;
  /// Inclusive; nullopt: every k up to T_k = T (finite types only).
  std::optional<std::pair<int, int>> k_range;
  IdealMode ideals = IdealMode::kTk;
  std::set<std::string> checks;
  /// Report directory; empty means no files.
  std::string out_dir;
  std::size_t cap_elements = kDefaultElementCap;
  /// 0 means no limit.
  double timeout_secs = 0;
};

/// graded, projections, sperner, shellability, logconcave, refinement,
/// phi, monoid, curvature.
const std::vector<std::string>& known_checks();

/// ValidationError on an empty or unknown check, no type, a negative
/// radius or a bad k range.
void validate(const CheckSuiteConfig& config);

/// "0..2" or "3"; ValidationError otherwise.
std::pair<int, int> parse_k_range(const std::string& text);

enum class CheckKind { kTheorem, kConjecture, kExploratory };
enum class CheckStatus { kPass, kFail, kInconclusive, kSkipped, kReport, kResource };

std::string to_string(CheckKind kind);
std::string to_string(CheckStatus status);

struct CheckOutcome {
  std::string type;
  std::string check;
  CheckKind kind = CheckKind::kTheorem;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct SuiteReport {
  std::vector<CheckOutcome> outcomes;
  bool timed_out = false;

  bool theorem_failure() const;
  bool resource_hit() const;
  /// 0 all theorem checks pass, 1 a theorem check failed, 3 a cap or the
  /// timeout cut the run short. Conjecture outcomes never count.
  int exit_code() const;
  nlohmann::json to_json(const CheckSuiteConfig& config) const;
  std::string summary() const;
};

/// Runs every enabled check on every type; writes report.json and
/// summary.txt into `out_dir` when set.
SuiteReport run_check_suite(const CheckSuiteConfig& config);

/// Full group for finite types with no radius, else the ball of that
/// radius; ValidationError for an infinite type without a radius.
GroupBall build_ball(const std::string& type, std::optional<int> radius, std::size_t cap_elements);

bool is_type_A(const CoxeterMatrix& matrix);

}  // namespace coxkit
