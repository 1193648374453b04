#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ryser/report.hpp"
#include "ryser/solver.hpp"

namespace ryser {

struct VerifyOptions {
  bool tau = true;
  bool nu = true;
  bool ratio = true;  // needs tau and nu; uniform input only
  bool enumerate_covers = false;
  std::optional<std::size_t> expect_tau;
  /// Cover and matching searches are skipped above this many vertices.
  std::size_t max_search_vertices = 400;
  bool deterministic = false;
  SolverOptions solver;
};

/// Structure, intersecting and fingerprint, then the selected tau, nu and
/// ratio checks, as a report over the file contents `bytes`.
Report verify_report(const PartiteHypergraph& h, std::string_view bytes, const std::string& label,
                     const VerifyOptions& opts = {});

enum class FStrategy { Default, AllS, Profile, Explicit };

/// Stages, in execution order. Construction always runs.
enum class PipelineCheck { Plane, Truncated, Hypotheses, Construction, Uniform, Minimize, Maximal };

std::string_view to_string(PipelineCheck c) noexcept;
std::optional<PipelineCheck> pipeline_check_from(std::string_view name);

struct PipelineConfig {
  std::uint32_t q = 3;
  std::size_t vertex = 0;   // truncation point
  std::size_t s_edge = 0;
  FStrategy f = FStrategy::Default;
  std::vector<std::size_t> profile;   // x_1..x_t for FStrategy::Profile
  bool relaxed_profile = false;
  std::vector<std::size_t> f_edges;   // for FStrategy::Explicit
  std::set<PipelineCheck> checks{PipelineCheck::Construction};
  std::optional<std::filesystem::path> out_dir;
  bool deterministic = false;
  SolverOptions solver;
};

/// Key-value config, one `key = value` per line, `#` comments. Keys: q,
/// vertex, s_edge, f (default|all_s|profile|explicit), profile, relaxed_profile,
/// f_edges, checks (comma list or "all"), out_dir, jobs, timeout,
/// deterministic. Throws ConfigError.
PipelineConfig parse_pipeline_config(std::string_view text);

void enable_all_checks(PipelineConfig& cfg);

struct PipelineOutcome {
  Report report;
  int exit_code = 0;
  std::vector<std::filesystem::path> artifacts;
};

/// Runs plane -> truncate -> construct -> verify -> minimize/maximal. Module
/// errors are recorded as a failing check and end the run with exit code 1
/// (the partial report is kept); ConfigError propagates.
PipelineOutcome run_pipeline(const PipelineConfig& cfg);

}  // namespace ryser
