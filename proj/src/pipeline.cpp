#include "ryser/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ryser/analysis.hpp"
#include "ryser/construct.hpp"
#include "ryser/error.hpp"
#include "ryser/plane.hpp"
#include "ryser/rhg_io.hpp"

namespace ryser {

namespace {

constexpr std::pair<PipelineCheck, std::string_view> kCheckNames[] = {
    {PipelineCheck::Plane, "plane"},         {PipelineCheck::Truncated, "truncated"},
    {PipelineCheck::Hypotheses, "hypotheses"}, {PipelineCheck::Construction, "construction"},
    {PipelineCheck::Uniform, "uniform"},     {PipelineCheck::Minimize, "minimize"},
    {PipelineCheck::Maximal, "maximal"},
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_size(const std::string& key, const std::string& v) {
  std::size_t out = 0;
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc{} || ptr != end || v.empty())
    throw Error(ErrorKind::ConfigError, "key '" + key + "': expected a non-negative integer, got '" + v + "'");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& key, const std::string& v) {
  std::vector<std::size_t> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_size(key, trim(item)));
  if (out.empty()) throw Error(ErrorKind::ConfigError, "key '" + key + "': empty list");
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(ErrorKind::ConfigError, "key '" + key + "': expected a boolean, got '" + v + "'");
}

CheckStatus search_status(SearchStatus s, bool ok) {
  if (s != SearchStatus::Complete) return CheckStatus::Timeout;
  return ok ? CheckStatus::Pass : CheckStatus::Fail;
}

bool input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ConfigError:
    case ErrorKind::NotPrime:
    case ErrorKind::DegenerateDegree:
    case ErrorKind::SizeExceeded:
    case ErrorKind::InvalidPointIndex:
    case ErrorKind::ProfileInvalid:
    case ErrorKind::LineNotFound:
      return true;
    default:
      return false;
  }
}

json with_target(json cert, const char* target) {
  cert["target"] = target;
  return cert;
}

json intersecting_certificate(const PartiteHypergraph& h) {
  const auto res = is_intersecting(h);
  json j;
  j["kind"] = "intersecting";
  j["value"] = res.intersecting;
  if (res.disjoint_pair) j["disjoint_pair"] = {res.disjoint_pair->first, res.disjoint_pair->second};
  json prof = json::object();
  for (const auto& [size, count] : intersection_size_profile(h)) prof[std::to_string(size)] = count;
  j["intersection_sizes"] = std::move(prof);
  return j;
}

}  // namespace

Report verify_report(const PartiteHypergraph& h, std::string_view bytes, const std::string& label,
                     const VerifyOptions& opts) {
  json params;
  params["tau"] = opts.tau || opts.ratio;
  params["nu"] = opts.nu || opts.ratio;
  params["ratio"] = opts.ratio;
  params["enumerate_covers"] = opts.enumerate_covers;
  if (opts.expect_tau) params["expect_tau"] = *opts.expect_tau;
  Report rep("verify", std::move(params));
  rep.add_input(label, bytes);
  const bool stats = !opts.deterministic;

  rep.run("structure", [&](CheckResult& c) {
    c.certificate = {{"kind", "structure"},
                     {"name", h.name()},
                     {"sides", h.num_sides()},
                     {"vertices", h.num_vertices()},
                     {"edges", h.num_edges()},
                     {"min_edge_size", h.min_edge_size()},
                     {"max_edge_size", h.max_edge_size()},
                     {"uniform", h.uniform_size().has_value()}};
  });
  rep.run("intersecting", [&](CheckResult& c) { c.certificate = intersecting_certificate(h); });
  rep.run("fingerprint", [&](CheckResult& c) { c.certificate = fingerprint_json(h); });

  auto skip = [&](const char* name, const char* reason) {
    CheckResult c;
    c.name = name;
    c.status = CheckStatus::Skipped;
    c.certificate = {{"kind", "skipped"}, {"reason", reason}};
    rep.add(std::move(c));
  };
  const bool want_tau = opts.tau || opts.ratio, want_nu = opts.nu || opts.ratio;
  if (h.num_edges() == 0 || h.num_vertices() > opts.max_search_vertices) {
    const char* reason = h.num_edges() == 0 ? "no edges" : "too many vertices";
    if (want_tau) skip("tau", reason);
    if (want_nu) skip("nu", reason);
    if (opts.ratio) skip("ratio", reason);
    return rep;
  }
  std::optional<CoverResult> cover;
  std::optional<MatchingResult> matching;
  if (want_tau) rep.run("tau", [&](CheckResult& c) {
    cover = cover_number(h, opts.enumerate_covers, opts.solver);
    c.certificate = cover_certificate(*cover, stats);
    bool ok = true;
    if (opts.expect_tau) {
      c.certificate["expected"] = *opts.expect_tau;
      ok = cover->tau == *opts.expect_tau;
    }
    c.status = search_status(cover->status, ok);
  });
  if (want_nu) rep.run("nu", [&](CheckResult& c) {
    matching = matching_number(h, opts.solver);
    c.certificate = matching_certificate(*matching, stats);
    c.status = search_status(matching->status, true);
  });
  if (!opts.ratio) return rep;
  const auto r = h.uniform_size();
  if (!r) {
    skip("ratio", "mixed edge sizes; uniformize first");
  } else if (!cover->complete() || !matching->complete()) {
    skip("ratio", "tau or nu incomplete");
  } else {
    rep.run("ratio", [&](CheckResult& c) {
      const std::size_t tau = cover->tau, nu = matching->nu;
      c.certificate = {{"kind", "bound"},
                       {"r", *r},
                       {"tau", tau},
                       {"nu", nu},
                       {"ratio", nu ? static_cast<double>(tau) / static_cast<double>(nu) : 0.0},
                       {"tau_le_r_nu", tau <= *r * nu},
                       {"is_ryser_extremal", tau == (*r - 1) * nu}};
      c.status = tau <= *r * nu ? CheckStatus::Pass : CheckStatus::Fail;
    });
  }
  return rep;
}

std::string_view to_string(PipelineCheck c) noexcept {
  for (const auto& [k, name] : kCheckNames)
    if (k == c) return name;
  return "?";
}

std::optional<PipelineCheck> pipeline_check_from(std::string_view name) {
  for (const auto& [k, n] : kCheckNames)
    if (n == name) return k;
  return std::nullopt;
}

void enable_all_checks(PipelineConfig& cfg) {
  for (const auto& [k, name] : kCheckNames) cfg.checks.insert(k);
}

PipelineConfig parse_pipeline_config(std::string_view text) {
  PipelineConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ConfigError, "line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!seen.insert(key).second)
      throw Error(ErrorKind::ConfigError, "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    if (key == "q") {
      cfg.q = static_cast<std::uint32_t>(parse_size(key, value));
    } else if (key == "vertex") {
      cfg.vertex = parse_size(key, value);
    } else if (key == "s_edge") {
      cfg.s_edge = parse_size(key, value);
    } else if (key == "f") {
      if (value == "default") cfg.f = FStrategy::Default;
      else if (value == "all_s") cfg.f = FStrategy::AllS;
      else if (value == "profile") cfg.f = FStrategy::Profile;
      else if (value == "explicit") cfg.f = FStrategy::Explicit;
      else throw Error(ErrorKind::ConfigError, "line " + std::to_string(lineno) + ": unknown F strategy '" + value + "'");
    } else if (key == "profile") {
      cfg.profile = parse_size_list(key, value);
    } else if (key == "relaxed_profile") {
      cfg.relaxed_profile = parse_bool(key, value);
    } else if (key == "f_edges") {
      cfg.f_edges = parse_size_list(key, value);
    } else if (key == "checks") {
      cfg.checks = {PipelineCheck::Construction};
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item == "all") {
          enable_all_checks(cfg);
        } else if (auto c = pipeline_check_from(item)) {
          cfg.checks.insert(*c);
        } else {
          throw Error(ErrorKind::ConfigError, "line " + std::to_string(lineno) + ": unknown check '" + item + "'");
        }
      }
    } else if (key == "out_dir") {
      if (value.empty()) throw Error(ErrorKind::ConfigError, "out_dir is empty");
      cfg.out_dir = value;
    } else if (key == "jobs") {
      cfg.solver.jobs = static_cast<unsigned>(parse_size(key, value));
    } else if (key == "timeout") {
      double t = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), t);
      if (ec != std::errc{} || ptr != value.data() + value.size() || !(t > 0))
        throw Error(ErrorKind::ConfigError, "timeout must be a positive number");
      cfg.solver.timeout_secs = t;
    } else if (key == "deterministic") {
      cfg.deterministic = parse_bool(key, value);
    } else {
      throw Error(ErrorKind::ConfigError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.f == FStrategy::Profile && cfg.profile.empty())
    throw Error(ErrorKind::ConfigError, "f = profile needs a profile list");
  if (cfg.f == FStrategy::Explicit && cfg.f_edges.empty())
    throw Error(ErrorKind::ConfigError, "f = explicit needs f_edges");
  return cfg;
}

PipelineOutcome run_pipeline(const PipelineConfig& cfg) {
  json params;
  params["q"] = cfg.q;
  params["vertex"] = cfg.vertex;
  params["s_edge"] = cfg.s_edge;
  params["f"] = cfg.f == FStrategy::Default ? "default"
                : cfg.f == FStrategy::AllS  ? "all_s"
                : cfg.f == FStrategy::Profile ? "profile"
                                              : "explicit";
  if (cfg.f == FStrategy::Profile) {
    params["profile"] = cfg.profile;
    params["relaxed_profile"] = cfg.relaxed_profile;
  }
  if (cfg.f == FStrategy::Explicit) params["f_edges"] = cfg.f_edges;
  json checks = json::array();
  for (auto c : cfg.checks) checks.push_back(to_string(c));
  params["checks"] = std::move(checks);

  PipelineOutcome out{Report("pipeline", std::move(params)), 0, {}};
  Report& rep = out.report;
  const bool stats = !cfg.deterministic;
  auto wants = [&](PipelineCheck c) { return cfg.checks.count(c) > 0; };

  auto emit = [&](const std::string& file, const std::string& contents) {
    if (!cfg.out_dir) return;
    const auto path = *cfg.out_dir / file;
    write_file_atomic(path, contents);
    out.artifacts.push_back(path);
  };

  std::string stage = "plane";
  try {
    if (cfg.out_dir) {
      std::error_code ec;
      std::filesystem::create_directories(*cfg.out_dir, ec);
      if (ec) throw Error(ErrorKind::IoError, "cannot create " + cfg.out_dir->string() + ": " + ec.message());
    }
    const auto plane = build_plane(cfg.q);
    if (wants(PipelineCheck::Plane)) {
      rep.run("plane.axioms", [&](CheckResult& c) {
        const auto ax = check_plane_axioms(plane);
        c.status = ax.ok() ? CheckStatus::Pass : CheckStatus::Fail;
        c.certificate = {{"kind", "plane_axioms"},
                         {"points", plane.num_points()},
                         {"lines", plane.num_lines()},
                         {"line_size", plane.order() + 1},
                         {"counts_ok", ax.counts_ok},
                         {"points_on_one_line", ax.points_on_one_line},
                         {"lines_meet_once", ax.lines_meet_once}};
        if (!ax.ok()) c.certificate["counterexample"] = ax.counterexample;
      });
    }

    stage = "truncate";
    const auto T = truncate(plane, cfg.vertex);
    const auto t_text = format_rhg(T);
    rep.add_input("T.rhg", t_text);
    emit("T.rhg", t_text);
    const std::size_t r = T.num_sides();
    if (wants(PipelineCheck::Truncated)) {
      rep.run("T.intersecting", [&](CheckResult& c) {
        c.certificate = with_target(intersecting_certificate(T), "T.rhg");
        c.status = c.certificate["value"].get<bool>() ? CheckStatus::Pass : CheckStatus::Fail;
      });
      rep.run("T.tau", [&](CheckResult& c) {
        const auto res = cover_number(T, false, cfg.solver);
        c.certificate = with_target(cover_certificate(res, stats), "T.rhg");
        c.certificate["expected"] = cfg.q;
        c.status = search_status(res.status, res.tau == cfg.q && T.uniform_size() == r);
      });
    }

    stage = "construct";
    ConstructionSpec spec;
    switch (cfg.f) {
      case FStrategy::Default: spec = default_spec(T, cfg.s_edge); break;
      case FStrategy::AllS: spec = all_s_spec(T, cfg.s_edge); break;
      case FStrategy::Explicit: spec = explicit_spec(T, cfg.s_edge, cfg.f_edges); break;
      case FStrategy::Profile:
        spec = select_F_by_profile(T, cfg.s_edge, DegreeProfile{r, cfg.profile},
                                   cfg.relaxed_profile ? ProfileRules::Relaxed : ProfileRules::Strict);
        break;
    }
    rep.set_note("spec", spec_json(spec));
    {
      json sj = spec_json(spec);
      sj["base_file"] = "T.rhg";
      emit("spec.json", sj.dump(2) + "\n");
    }

    if (wants(PipelineCheck::Hypotheses)) {
      rep.run("T.hypotheses", [&](CheckResult& c) {
        const auto v = validate_spec(spec, ValidationOptions{true, cfg.solver});
        c.certificate = validation_json(v);
        if (!stats) c.certificate.erase("base_minus_s");
        const bool timed_out = std::any_of(v.violations.begin(), v.violations.end(),
                                           [](const SpecViolation& x) { return x.condition == "covers_incomplete"; });
        c.status = timed_out ? CheckStatus::Timeout : v.ok() ? CheckStatus::Pass : CheckStatus::Fail;
      });
    }

    const auto H = build_H(spec);
    const auto h_text = format_rhg(H);
    rep.add_input("H.rhg", h_text);
    emit("H.rhg", h_text);

    stage = "verify";
    rep.run("H.intersecting", [&](CheckResult& c) {
      c.certificate = with_target(intersecting_certificate(H), "H.rhg");
      c.status = c.certificate["value"].get<bool>() ? CheckStatus::Pass : CheckStatus::Fail;
    });
    rep.run("H.tau", [&](CheckResult& c) {
      const auto res = cover_number(H, false, cfg.solver);
      c.certificate = with_target(cover_certificate(res, stats), "H.rhg");
      c.certificate["expected"] = r;
      c.status = search_status(res.status, res.tau == r);
      if (res.complete()) rep.set_note("tau_H", res.tau);
    });

    const bool need_u = wants(PipelineCheck::Uniform) || wants(PipelineCheck::Minimize);
    std::optional<PartiteHypergraph> U;
    if (need_u) {
      U = uniformize(H);
      const auto u_text = format_rhg(*U);
      rep.add_input("U.rhg", u_text);
      emit("U.rhg", u_text);
    }
    if (wants(PipelineCheck::Uniform)) {
      rep.run("U.intersecting", [&](CheckResult& c) {
        c.certificate = with_target(intersecting_certificate(*U), "U.rhg");
        c.status = c.certificate["value"].get<bool>() ? CheckStatus::Pass : CheckStatus::Fail;
      });
      rep.run("U.ratio", [&](CheckResult& c) {
        const auto rr = verify_ryser_ratio(*U, cfg.solver);
        c.certificate = with_target(ratio_certificate(rr, stats), "U.rhg");
        c.status = !rr.complete ? CheckStatus::Timeout
                   : (rr.is_ryser_extremal && rr.r == r + 1 && U->num_sides() == r + 1) ? CheckStatus::Pass
                                                                                          : CheckStatus::Fail;
      });
    }

    if (wants(PipelineCheck::Minimize)) {
      stage = "minimize";
      rep.run("U.minimize", [&](CheckResult& c) {
        const auto trace = minimize(*U, DeletionOrder::Ascending, cfg.solver);
        c.certificate = minimization_json(trace);
        auto kept = trace.kept;
        std::sort(kept.begin(), kept.end());
        std::size_t s_edges = 0, s_kept = 0;
        for (std::size_t e = 0; e < U->num_edges(); ++e) {
          const auto p = parse_provenance(U->edge_label(e));
          if (!p || p->family == EdgeFamily::E1) continue;
          ++s_edges;
          if (std::binary_search(kept.begin(), kept.end(), e)) ++s_kept;
        }
        c.certificate["s_edges"] = s_edges;
        c.certificate["s_edges_kept"] = s_kept;
        c.status = trace.complete ? CheckStatus::Pass : CheckStatus::Timeout;
        emit("M.rhg", format_rhg(trace.final_graph));
      });
    }

    if (wants(PipelineCheck::Maximal)) {
      stage = "maximal-check";
      rep.run("H.extensions", [&](CheckResult& c) {
        const auto cls = classify_extensions(H, spec, ExtensionOptions{true, cfg.solver});
        c.certificate = classification_json(cls, false);
        if (!stats) c.certificate.erase("transversals_tested");
        if (cls.confirmed()) {
          c.status = CheckStatus::Pass;
          c.certificate["closure"] = closure_json(maximal_closure_description(H, spec, cls));
        } else {
          c.status = cls.hypotheses_hold ? CheckStatus::Fail : CheckStatus::Skipped;
        }
      });
    }
    out.exit_code = rep.exit_code();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    CheckResult c;
    c.name = "error";
    c.status = CheckStatus::Fail;
    c.certificate = {{"kind", "error"}, {"stage", stage}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    rep.add(std::move(c));
    out.exit_code = input_error(e.kind()) ? 2 : 1;
  }
  if (cfg.out_dir) {
    const auto path = *cfg.out_dir / "report.json";
    write_file_atomic(path, rep.to_json(cfg.deterministic).dump(2) + "\n");
    out.artifacts.push_back(path);
  }
  return out;
}

}  // namespace ryser
