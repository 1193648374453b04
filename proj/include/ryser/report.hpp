#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ryser/analysis.hpp"
#include "ryser/construct.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/solver.hpp"

namespace ryser {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "ryser-report/1";

std::string sha256_hex(std::string_view bytes);

enum class CheckStatus { Pass, Fail, Skipped, Timeout };
std::string_view to_string(CheckStatus s) noexcept;
CheckStatus check_status_from(std::string_view s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  json certificate = json::object();
  double wall_ms = 0.0;
};

/// Verification report: inputs with digests, per-check results carrying
/// their certificates, and an overall status. With `deterministic` set,
/// timings and search statistics are left out so reports are byte-stable.
class Report {
 public:
  Report(std::string command, json parameters);

  void add_input(std::string label, std::string_view bytes);
  CheckResult& add(CheckResult check);

  /// Times `fn`, which fills in status and certificate of the new check.
  template <typename Fn>
  CheckResult& run(std::string name, Fn&& fn) {
    CheckResult c;
    c.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    fn(c);
    c.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return add(std::move(c));
  }

  void set_note(std::string key, json value) { extra_[key] = std::move(value); }

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  CheckStatus overall() const;
  /// 0 all pass, 1 a check failed, 3 timeout/incomplete.
  int exit_code() const;
  json to_json(bool deterministic = false) const;

 private:
  std::string command_;
  json parameters_;
  json inputs_ = json::array();
  json extra_ = json::object();
  std::vector<CheckResult> checks_;
};

json vertex_list(std::span<const VertexId> vs);
std::vector<VertexId> parse_vertex_list(const json& j);
json status_json(SearchStatus s);

json cover_certificate(const CoverResult& res, bool with_stats = true);
json matching_certificate(const MatchingResult& res, bool with_stats = true);
json ratio_certificate(const RatioReport& rep, bool with_stats = true);
json validation_json(const ValidationResult& v);
json spec_json(const ConstructionSpec& spec);
json minimization_json(const MinimizationTrace& t);
json classification_json(const ExtensionClassification& c, bool list_candidates = true);
json closure_json(const ClosureDescription& d);
json fingerprint_json(const PartiteHypergraph& h);

/// Re-checks the embedded certificates of `report` against `h` (raw file
/// contents `bytes`) without re-running any search. The input whose digest
/// matches `bytes` names the target; certificates tagged with another
/// target are skipped.
std::vector<std::string> audit_report(const json& report, const PartiteHypergraph& h, std::string_view bytes);

}  // namespace ryser
