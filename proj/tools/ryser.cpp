#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ryser/analysis.hpp"
#include "ryser/construct.hpp"
#include "ryser/corpus.hpp"
#include "ryser/error.hpp"
#include "ryser/gf.hpp"
#include "ryser/pipeline.hpp"
#include "ryser/plane.hpp"
#include "ryser/report.hpp"
#include "ryser/rhg_io.hpp"
#include "ryser/solver.hpp"

namespace fs = std::filesystem;
using namespace ryser;

namespace {

constexpr int kExitUsage = 2;

// Human-readable output; silenced when the JSON report goes to stdout.
std::ostream* g_say = &std::cout;
std::ostream& say() { return *g_say; }

struct Common {
  std::string json_path;
  unsigned jobs = 0;
  double timeout = default_timeout_secs();
  bool deterministic = false;

  SolverOptions solver() const {
    SolverOptions o;
    o.jobs = jobs;
    o.timeout_secs = timeout;
    return o;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--json,--report", c.json_path, "Write a JSON report to PATH ('-' for stdout)");
  sub->add_option("--jobs", c.jobs, "Worker threads (0: OpenMP default, 1: serial)");
  sub->add_option("--timeout", c.timeout, "Solver budget per search, seconds")->check(CLI::PositiveNumber);
  sub->add_flag("--deterministic", c.deterministic, "Omit timings and search statistics from reports");
}

void emit_json(const Common& c, const json& j) {
  if (c.json_path.empty()) return;
  if (c.json_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    write_file_atomic(c.json_path, j.dump(2) + "\n");
  }
}

void emit_report(const Common& c, const Report& r) { emit_json(c, r.to_json(c.deterministic)); }

void print_checks(const Report& r) {
  for (const auto& c : r.checks()) say() << "  " << c.name << ": " << to_string(c.status) << "\n";
  say() << "status: " << to_string(r.overall()) << "\n";
}

std::string join(const std::vector<VertexId>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + to_string(v);
  return s;
}

// Spec files: {"base_file": ..., "s_edge": n, "f_edges": [...]}; base_file
// is relative to the spec file's directory.
void write_spec_file(const fs::path& path, const fs::path& base_file, const ConstructionSpec& spec) {
  json j;
  const auto dir = fs::absolute(path).parent_path();
  j["base_file"] = fs::relative(fs::absolute(base_file), dir).generic_string();
  j["s_edge"] = spec.s_edge;
  j["f_edges"] = spec.f_edges;
  write_file_atomic(path, j.dump(2) + "\n");
}

ConstructionSpec read_spec_file(const fs::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ConfigError, path.string() + ": " + e.what());
  }
  if (!j.contains("base_file") || !j.contains("s_edge") || !j.contains("f_edges"))
    throw Error(ErrorKind::ConfigError, path.string() + ": needs base_file, s_edge and f_edges");
  fs::path base = j["base_file"].get<std::string>();
  if (base.is_relative()) base = fs::absolute(path).parent_path() / base;
  return explicit_spec(read_rhg(base), j["s_edge"].get<std::size_t>(), j["f_edges"].get<std::vector<std::size_t>>());
}

// "--f-edges 1:4,2:7,..." (i from 1) or a plain list of edge indices by side.
std::vector<std::size_t> parse_f_edges(const std::vector<std::string>& items, std::size_t r) {
  auto number = [](const std::string& s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != s.size()) throw Error(ErrorKind::ConfigError, "bad --f-edges entry '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  const bool pairs = items.front().find(':') != std::string::npos;
  if (!pairs) {
    std::vector<std::size_t> out;
    for (const auto& s : items) out.push_back(number(s));
    return out;
  }
  std::vector<std::optional<std::size_t>> slots(r);
  for (const auto& s : items) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ConfigError, "mixed --f-edges forms");
    const auto i = number(s.substr(0, colon));
    if (i < 1 || i > r) throw Error(ErrorKind::ConfigError, "--f-edges index " + std::to_string(i) + " out of 1.." + std::to_string(r));
    if (slots[i - 1]) throw Error(ErrorKind::ConfigError, "F_" + std::to_string(i) + " given twice");
    slots[i - 1] = number(s.substr(colon + 1));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r; ++i) {
    if (!slots[i]) throw Error(ErrorKind::ConfigError, "F_" + std::to_string(i + 1) + " missing from --f-edges");
    out.push_back(*slots[i]);
  }
  return out;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotExtremal:
    case ErrorKind::ViolationsPresent:
    case ErrorKind::SpecInvalid:
      return 1;
    case ErrorKind::TooLarge:
      return 3;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ryser hypergraph toolkit: truncated planes, the H construction, exact covers and certificates"};
  app.set_version_flag("--version", std::string(RYSER_VERSION));
  app.require_subcommand(1);
  Common common;
  int rc = 0;

  // field
  auto* field_cmd = app.add_subcommand("field", "Show GF(q) parameters and tables");
  std::uint32_t field_q = 0;
  bool field_tables = false;
  field_cmd->add_option("--q", field_q, "Field order (prime power)")->required();
  field_cmd->add_flag("--tables", field_tables, "Print addition and multiplication tables");
  add_common(field_cmd, common);
  field_cmd->callback([&] {
    const auto pk = as_prime_power(field_q);
    if (!pk) throw Error(ErrorKind::NotPrime, std::to_string(field_q) + " is not a prime power");
    const auto f = FiniteField::build(pk->first, pk->second);
    std::string mod;
    for (std::size_t i = f.modulus().size(); i-- > 0;) mod += std::to_string(f.modulus()[i]) + (i ? " " : "");
    say() << "GF(" << f.order() << ") p=" << f.characteristic() << " k=" << f.degree() << "\n";
    say() << "modulus (high to low): " << mod << "\n";
    say() << "primitive: " << f.format(f.primitive()) << "\n";
    json j = {{"q", f.order()}, {"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()},
              {"primitive", f.primitive().index}};
    if (field_tables) {
      json add = json::array(), mul = json::array();
      for (std::uint32_t a = 0; a < f.order(); ++a) {
        json ra = json::array(), rm = json::array();
        for (std::uint32_t b = 0; b < f.order(); ++b) {
          ra.push_back(f.add(f.element(a), f.element(b)).index);
          rm.push_back(f.mul(f.element(a), f.element(b)).index);
        }
        say() << "  " << a << ":";
        for (const auto& x : rm) say() << " " << x.get<std::uint32_t>();
        say() << "\n";
        add.push_back(std::move(ra));
        mul.push_back(std::move(rm));
      }
      j["add"] = std::move(add);
      j["mul"] = std::move(mul);
    }
    emit_json(common, j);
  });

  // plane
  auto* plane_cmd = app.add_subcommand("plane", "Build PG(2,q) and check its axioms");
  std::uint32_t plane_q = 0;
  std::string plane_dump;
  plane_cmd->add_option("--q", plane_q, "Plane order")->required();
  plane_cmd->add_option("--dump", plane_dump, "Write every line with its points to FILE ('-' for stdout)");
  add_common(plane_cmd, common);
  plane_cmd->callback([&] {
    const auto p = build_plane(plane_q);
    const auto ax = check_plane_axioms(p);
    say() << "PG(2," << plane_q << "): " << p.num_points() << " points, " << p.num_lines() << " lines, axioms "
              << (ax.ok() ? "hold" : "FAIL: " + ax.counterexample) << "\n";
    if (plane_dump == "-") {
      say() << p.dump();
    } else if (!plane_dump.empty()) {
      write_file_atomic(plane_dump, p.dump());
    }
    emit_json(common, {{"q", plane_q},
                       {"points", p.num_points()},
                       {"lines", p.num_lines()},
                       {"axioms_ok", ax.ok()},
                       {"counterexample", ax.counterexample}});
    rc = ax.ok() ? 0 : 1;
  });

  // truncate
  auto* trunc_cmd = app.add_subcommand("truncate", "Write the truncated plane T_(q+1) as .rhg");
  std::uint32_t trunc_q = 0;
  std::size_t trunc_v = 0;
  std::string trunc_out;
  trunc_cmd->add_option("--q", trunc_q, "Plane order")->required();
  trunc_cmd->add_option("--vertex", trunc_v, "Index of the deleted point");
  trunc_cmd->add_option("-o,--out", trunc_out, "Output .rhg (stdout if omitted)");
  add_common(trunc_cmd, common);
  trunc_cmd->callback([&] {
    const auto t = truncate(build_plane(trunc_q), trunc_v);
    const auto text = format_rhg(t);
    if (trunc_out.empty()) {
      std::cout << text;
    } else {
      write_file_atomic(trunc_out, text);
    }
    emit_json(common, {{"q", trunc_q}, {"vertex", trunc_v}, {"sides", t.num_sides()}, {"edges", t.num_edges()},
                       {"sha256", sha256_hex(text)}});
  });

  // construct
  auto* cons_cmd = app.add_subcommand("construct", "Build H from a base hypergraph, S and F_1..F_r");
  std::string cons_in, cons_out, cons_spec_out;
  std::size_t cons_s = 0;
  bool cons_default = false, cons_all_s = false, cons_relaxed = false, cons_skip = false, cons_uniform = false;
  std::vector<std::size_t> cons_profile;
  std::vector<std::string> cons_f;
  cons_cmd->add_option("--base", cons_in, "Base .rhg")->required()->check(CLI::ExistingFile);
  cons_cmd->add_option("--s-edge", cons_s, "Index of S in the base");
  auto* o_def = cons_cmd->add_flag("--f-default", cons_default, "F_i: least-indexed edge through s_i other than S");
  auto* o_alls = cons_cmd->add_flag("--f-all-s", cons_all_s, "F_i = S for every i");
  auto* o_prof = cons_cmd->add_option("--profile,--f-profile", cons_profile, "Degree profile x_1,...,x_t")->delimiter(',');
  auto* o_fe = cons_cmd->add_option("--f-edges", cons_f, "F_i as i:e pairs (i from 1), or edge indices by side")->delimiter(',');
  o_def->excludes(o_alls)->excludes(o_prof)->excludes(o_fe);
  o_alls->excludes(o_prof)->excludes(o_fe);
  o_prof->excludes(o_fe);
  cons_cmd->add_flag("--relaxed-profile", cons_relaxed, "Only require positive profile blocks");
  cons_cmd->add_flag("--skip-validation", cons_skip, "Skip the minimum-cover hypothesis check");
  cons_cmd->add_flag("--uniformize", cons_uniform, "Pad the r-edges to size r+1");
  cons_cmd->add_option("-o,--out", cons_out, "Output .rhg")->required();
  cons_cmd->add_option("--spec-out", cons_spec_out, "Write the spec (base file, S, F) as JSON");
  add_common(cons_cmd, common);
  cons_cmd->callback([&] {
    auto base = read_rhg(cons_in);
    ConstructionSpec spec;
    if (cons_all_s) {
      spec = all_s_spec(std::move(base), cons_s);
    } else if (!cons_profile.empty()) {
      const auto r = base.num_sides();
      spec = select_F_by_profile(std::move(base), cons_s, DegreeProfile{r, cons_profile},
                                 cons_relaxed ? ProfileRules::Relaxed : ProfileRules::Strict);
    } else if (!cons_f.empty()) {
      const auto r = base.num_sides();
      spec = explicit_spec(std::move(base), cons_s, parse_f_edges(cons_f, r));
    } else {
      spec = default_spec(std::move(base), cons_s);
    }
    ValidationOptions vo;
    vo.check_covers = !cons_skip;
    vo.solver = common.solver();
    Report rep("construct", {{"s_edge", cons_s}, {"uniformize", cons_uniform}, {"skip_validation", cons_skip}});
    rep.add_input(fs::path(cons_in).filename().string(), read_file(cons_in));
    rep.set_note("spec", spec_json(spec));
    rep.run("spec.validation", [&](CheckResult& c) {
      const auto v = validate_spec(spec, vo);
      c.certificate = validation_json(v);
      c.certificate["validated"] = v.ok() && v.covers_checked;
      for (const auto& x : v.violations) std::cerr << "violation: " << x.condition << ": " << x.detail << "\n";
      c.status = !v.ok() ? CheckStatus::Fail : v.covers_checked ? CheckStatus::Pass : CheckStatus::Skipped;
      if (c.status == CheckStatus::Skipped) say() << "spec unvalidated: minimum-cover check skipped\n";
    });
    auto h = build_H(spec);
    if (cons_uniform) h = uniformize(h);
    const auto text = format_rhg(h);
    write_file_atomic(cons_out, text);
    if (!cons_spec_out.empty()) write_spec_file(cons_spec_out, cons_in, spec);
    rep.set_note("output", {{"path", fs::path(cons_out).filename().string()}, {"sha256", sha256_hex(text)}});
    say() << "wrote " << cons_out << ": " << h.num_sides() << " sides, " << h.num_edges() << " edges\n";
    emit_report(common, rep);
    rc = rep.exit_code();
  });

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Cover number, matching number and Ryser ratio with certificates");
  std::string ver_in;
  bool ver_all = false, ver_tau = false, ver_nu = false, ver_ratio = false;
  std::optional<std::size_t> ver_expect;
  ver_cmd->add_option("file", ver_in, ".rhg input")->required()->check(CLI::ExistingFile);
  ver_cmd->add_flag("--tau", ver_tau, "Cover number (default: tau, nu and ratio)");
  ver_cmd->add_flag("--nu", ver_nu, "Matching number");
  ver_cmd->add_flag("--ratio", ver_ratio, "tau/nu against the Ryser bound (uniform input)");
  ver_cmd->add_flag("--enumerate-min-covers,--all-covers", ver_all, "Enumerate every minimum cover");
  ver_cmd->add_option("--expect-tau", ver_expect, "Fail unless tau equals this");
  add_common(ver_cmd, common);
  ver_cmd->callback([&] {
    const auto text = read_file(ver_in);
    const auto h = parse_rhg(text);
    VerifyOptions vo;
    if (ver_tau || ver_nu || ver_ratio) {
      vo.tau = ver_tau || ver_all;
      vo.nu = ver_nu;
      vo.ratio = ver_ratio;
    }
    vo.enumerate_covers = ver_all;
    vo.expect_tau = ver_expect;
    vo.deterministic = common.deterministic;
    vo.solver = common.solver();
    const auto rep = verify_report(h, text, fs::path(ver_in).filename().string(), vo);
    for (const auto& c : rep.checks()) {
      say() << c.name << ": " << to_string(c.status);
      const auto& cert = c.certificate;
      if (c.name == "tau" && cert.contains("tau")) say() << " tau=" << cert["tau"];
      if (c.name == "nu" && cert.contains("nu")) say() << " nu=" << cert["nu"];
      if (c.name == "intersecting") say() << " " << cert["value"];
      if (c.name == "ratio" && cert.contains("ratio")) say() << " ratio=" << cert["ratio"] << " extremal=" << cert["is_ryser_extremal"];
      say() << "\n";
    }
    say() << "status: " << to_string(rep.overall()) << "\n";
    emit_report(common, rep);
    rc = rep.exit_code();
  });

  // minimize
  auto* min_cmd = app.add_subcommand("minimize", "Delete edges while tau stays at sides-1");
  std::string min_in, min_out, min_order = "asc";
  min_cmd->add_option("file", min_in, ".rhg input")->required()->check(CLI::ExistingFile);
  min_cmd->add_option("--order", min_order, "Deletion order")->check(CLI::IsMember({"asc", "desc"}));
  min_cmd->add_option("-o,--out", min_out, "Output .rhg for the minimal hypergraph");
  add_common(min_cmd, common);
  min_cmd->callback([&] {
    const auto text = read_file(min_in);
    const auto h = parse_rhg(text);
    const auto order = min_order == "desc" ? DeletionOrder::Descending : DeletionOrder::Ascending;
    Report rep("minimize", {{"order", min_order}});
    rep.add_input(fs::path(min_in).filename().string(), text);
    MinimizationTrace trace;
    rep.run("minimize", [&](CheckResult& c) {
      trace = minimize(h, order, common.solver());
      c.certificate = minimization_json(trace);
      c.status = trace.complete ? CheckStatus::Pass : CheckStatus::Timeout;
    });
    say() << "deleted " << trace.deleted.size() << ", kept " << trace.kept.size() << " edges (target tau "
              << trace.target_tau << ")\n";
    if (!min_out.empty()) write_file_atomic(min_out, format_rhg(trace.final_graph));
    emit_report(common, rep);
    rc = rep.exit_code();
  });

  // maximal-check
  auto* max_cmd = app.add_subcommand("maximal-check", "Classify every addable transversal edge of H");
  std::string max_in, max_spec;
  bool max_no_prune = false;
  max_cmd->add_option("file", max_in, "H as .rhg")->required()->check(CLI::ExistingFile);
  max_cmd->add_option("--spec", max_spec, "Spec JSON written by construct --spec-out")->required()->check(CLI::ExistingFile);
  max_cmd->add_flag("--no-prune", max_no_prune, "Test every transversal");
  add_common(max_cmd, common);
  max_cmd->callback([&] {
    const auto text = read_file(max_in);
    const auto h = parse_rhg(text);
    const auto spec = read_spec_file(max_spec);
    Report rep("maximal-check", {{"prune", !max_no_prune}});
    rep.add_input(fs::path(max_in).filename().string(), text);
    rep.run("extensions", [&](CheckResult& c) {
      const auto cls = classify_extensions(h, spec, ExtensionOptions{!max_no_prune, common.solver()});
      c.certificate = classification_json(cls);
      for (const auto& w : cls.warnings) std::cerr << "warning: " << w << "\n";
      say() << "TYPE1 " << cls.count(ExtensionClass::Type1) << ", TYPE2 " << cls.count(ExtensionClass::Type2)
                << ", ALREADY_PRESENT " << cls.count(ExtensionClass::AlreadyPresent) << ", VIOLATION "
                << cls.count(ExtensionClass::Violation) << "\n";
      for (const auto& x : cls.candidates)
        if (x.cls == ExtensionClass::Violation)
          say() << "  violation: " << join(x.transversal)
                    << (x.fresh_side ? " + fresh in side " + std::to_string(*x.fresh_side) : "") << "\n";
      if (cls.confirmed()) {
        c.status = CheckStatus::Pass;
        c.certificate["closure"] = closure_json(maximal_closure_description(h, spec, cls));
      } else {
        c.status = CheckStatus::Fail;
      }
    });
    emit_report(common, rep);
    rc = rep.exit_code();
  });

  // fingerprint
  auto* fp_cmd = app.add_subcommand("fingerprint", "Degree fingerprint (isomorphism invariant)");
  std::string fp_in;
  bool fp_non_isolated = false;
  fp_cmd->add_option("file", fp_in, ".rhg input")->required()->check(CLI::ExistingFile);
  fp_cmd->add_flag("--non-isolated", fp_non_isolated, "Drop degree-zero vertices first");
  add_common(fp_cmd, common);
  fp_cmd->callback([&] {
    auto h = read_rhg(fp_in);
    if (fp_non_isolated) h = restrict_to_non_isolated(h);
    const auto fp = degree_fingerprint(h).encode();
    const auto ds = degree_stats(h);
    say() << fp << "\n";
    json sides = json::array();
    for (std::size_t s = 0; s < h.num_sides(); ++s) sides.push_back(ds.side_nonzero_multiset(s));
    emit_json(common, {{"file", fp_in}, {"degree_fingerprint", fp}, {"side_nonzero_degrees", sides}});
  });

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "Exact partite isomorphism test (exit 0 iff isomorphic)");
  std::string iso_a, iso_b;
  bool iso_non_isolated = false;
  iso_cmd->add_option("a", iso_a, "First .rhg")->required()->check(CLI::ExistingFile);
  iso_cmd->add_option("b", iso_b, "Second .rhg")->required()->check(CLI::ExistingFile);
  iso_cmd->add_flag("--non-isolated", iso_non_isolated, "Compare after dropping degree-zero vertices");
  add_common(iso_cmd, common);
  iso_cmd->callback([&] {
    const auto ta = read_file(iso_a), tb = read_file(iso_b);
    auto a = parse_rhg(ta), b = parse_rhg(tb);
    if (iso_non_isolated) {
      a = restrict_to_non_isolated(a);
      b = restrict_to_non_isolated(b);
    }
    Report rep("iso", {{"non_isolated", iso_non_isolated}});
    rep.add_input(fs::path(iso_a).filename().string(), ta);
    rep.add_input(fs::path(iso_b).filename().string(), tb);
    IsomorphismResult res;
    rep.run("isomorphism", [&](CheckResult& c) {
      res = exact_isomorphic(a, b);
      c.certificate = {{"kind", "isomorphism"},
                       {"isomorphic", res.isomorphic},
                       {"decided_by_invariants", res.decided_by_invariants},
                       {"fingerprints", {degree_fingerprint(a).encode(), degree_fingerprint(b).encode()}}};
      if (res.isomorphic) {
        c.certificate["side_map"] = res.side_map;
        json m = json::array();
        for (const auto& [x, y] : res.mapping) m.push_back({to_string(x), to_string(y)});
        c.certificate["mapping"] = std::move(m);
        c.certificate["mapping_verified"] = verify_isomorphism(a, b, res.mapping);
      }
    });
    say() << (res.isomorphic ? "isomorphic" : "not isomorphic")
              << (res.decided_by_invariants ? " (invariants differ)" : "") << "\n";
    emit_report(common, rep);
    rc = res.isomorphic ? 0 : 1;
  });

  // profiles
  auto* prof_cmd = app.add_subcommand("profiles", "Count degree profiles for a given r");
  std::size_t prof_r = 0;
  std::optional<double> prof_delta;
  std::optional<std::size_t> prof_t;
  bool prof_list = false;
  prof_cmd->add_option("--r", prof_r, "Uniformity r")->required();
  auto* o_delta = prof_cmd->add_option("--delta", prof_delta, "t = floor(r^delta)");
  auto* o_t = prof_cmd->add_option("--t", prof_t, "Number of free blocks");
  o_delta->excludes(o_t);
  prof_cmd->add_flag("--list", prof_list, "List the profiles");
  add_common(prof_cmd, common);
  prof_cmd->callback([&] {
    if (!prof_delta && !prof_t) throw Error(ErrorKind::ConfigError, "give --delta or --t");
    const auto pc = prof_t ? profile_count_for_t(prof_r, *prof_t) : profile_count(prof_r, *prof_delta);
    say() << "r=" << pc.r << " t=" << pc.t << " x in [" << pc.lo << "," << pc.hi << "] count="
              << (pc.count ? std::to_string(*pc.count) : std::string("overflow")) << "\n";
    if (!pc.note.empty()) say() << pc.note << "\n";
    json j = {{"r", pc.r}, {"t", pc.t}, {"lo", pc.lo}, {"hi", pc.hi}, {"note", pc.note}};
    j["count"] = pc.count ? json(*pc.count) : json(nullptr);
    j["lower_bound"] = pc.lower_bound ? json(*pc.lower_bound) : json(nullptr);
    if (prof_list) {
      const auto all = enumerate_profiles(prof_r, pc.t);
      for (const auto& x : all) {
        for (std::size_t i = 0; i < x.size(); ++i) say() << (i ? "," : "  ") << x[i];
        say() << "\n";
      }
      j["profiles"] = all;
    }
    emit_json(common, j);
  });

  // pipeline
  auto* pipe_cmd = app.add_subcommand("pipeline", "plane -> truncate -> construct -> verify -> minimize/maximal");
  std::string pipe_config, pipe_out, pipe_f_profile_raw;
  std::optional<std::uint32_t> pipe_q;
  std::optional<std::size_t> pipe_v, pipe_s;
  bool pipe_fdef = false, pipe_falls = false, pipe_relaxed = false, pipe_all = false, pipe_max = false,
       pipe_min = false;
  std::vector<std::size_t> pipe_profile, pipe_fedges;
  std::vector<std::string> pipe_checks;
  pipe_cmd->add_option("--config", pipe_config, "Key-value config file")->check(CLI::ExistingFile);
  pipe_cmd->add_option("--q", pipe_q, "Plane order");
  pipe_cmd->add_option("--vertex", pipe_v, "Truncation point");
  pipe_cmd->add_option("--s-edge", pipe_s, "Index of S");
  auto* p_def = pipe_cmd->add_flag("--f-default", pipe_fdef, "Default F choice");
  auto* p_alls = pipe_cmd->add_flag("--f-all-s", pipe_falls, "F_i = S");
  auto* p_prof = pipe_cmd->add_option("--f-profile", pipe_profile, "Profile x_1,...,x_t")->delimiter(',');
  auto* p_fe = pipe_cmd->add_option("--f-edges", pipe_fedges, "Explicit F edges")->delimiter(',');
  p_def->excludes(p_alls)->excludes(p_prof)->excludes(p_fe);
  p_alls->excludes(p_prof)->excludes(p_fe);
  p_prof->excludes(p_fe);
  pipe_cmd->add_flag("--relaxed-profile", pipe_relaxed, "Only require positive profile blocks");
  pipe_cmd->add_flag("--all-checks", pipe_all, "Run every stage");
  pipe_cmd->add_option("--check", pipe_checks, "Add a stage (plane, truncated, hypotheses, construction, uniform, minimize, maximal)");
  pipe_cmd->add_flag("--maximal-check", pipe_max, "Add the maximality stage");
  pipe_cmd->add_flag("--minimize", pipe_min, "Add the minimization stage");
  pipe_cmd->add_option("--out", pipe_out, "Artifact directory");
  add_common(pipe_cmd, common);
  pipe_cmd->callback([&] {
    PipelineConfig cfg = pipe_config.empty() ? PipelineConfig{} : parse_pipeline_config(read_file(pipe_config));
    if (!pipe_config.empty()) {
      if (pipe_cmd->count("--jobs") == 0) common.jobs = cfg.solver.jobs;
      if (pipe_cmd->count("--timeout") == 0) common.timeout = cfg.solver.timeout_secs;
      common.deterministic = common.deterministic || cfg.deterministic;
    }
    if (pipe_q) cfg.q = *pipe_q;
    if (pipe_v) cfg.vertex = *pipe_v;
    if (pipe_s) cfg.s_edge = *pipe_s;
    if (pipe_fdef) cfg.f = FStrategy::Default;
    if (pipe_falls) cfg.f = FStrategy::AllS;
    if (!pipe_profile.empty()) {
      cfg.f = FStrategy::Profile;
      cfg.profile = pipe_profile;
    }
    if (pipe_relaxed) cfg.relaxed_profile = true;
    if (!pipe_fedges.empty()) {
      cfg.f = FStrategy::Explicit;
      cfg.f_edges = pipe_fedges;
    }
    if (pipe_all) enable_all_checks(cfg);
    for (const auto& name : pipe_checks) {
      const auto c = pipeline_check_from(name);
      if (!c) throw Error(ErrorKind::ConfigError, "unknown check '" + name + "'");
      cfg.checks.insert(*c);
    }
    if (pipe_max) cfg.checks.insert(PipelineCheck::Maximal);
    if (pipe_min) cfg.checks.insert(PipelineCheck::Minimize);
    if (!pipe_out.empty()) cfg.out_dir = pipe_out;
    cfg.solver = common.solver();
    cfg.deterministic = common.deterministic;
    const auto out = run_pipeline(cfg);
    print_checks(out.report);
    const auto j = out.report.to_json(cfg.deterministic);
    if (j.contains("notes") && j["notes"].contains("tau_H")) say() << "tau(H) = " << j["notes"]["tau_H"] << "\n";
    for (const auto& c : out.report.checks())
      if (c.name == "error") std::cerr << "error: " << c.certificate["message"].get<std::string>() << "\n";
    emit_json(common, j);
    rc = out.exit_code;
  });

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "Generate the regression corpus with expected reports");
  std::string corpus_dir;
  corpus_cmd->add_option("dir", corpus_dir, "Output directory")->required();
  add_common(corpus_cmd, common);
  corpus_cmd->callback([&] {
    const auto files = corpus_generate(corpus_dir, common.solver());
    say() << "wrote " << files.size() << " files to " << corpus_dir << "\n";
    json list = json::array();
    for (const auto& f : files) list.push_back(f.filename().string());
    emit_json(common, {{"dir", corpus_dir}, {"files", list}});
  });

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "Re-check the certificates of a report against its input");
  std::string audit_report_path, audit_input;
  audit_cmd->add_option("report_file", audit_report_path, "Report JSON")->required()->check(CLI::ExistingFile);
  audit_cmd->add_option("input", audit_input, "The .rhg the report refers to")->required()->check(CLI::ExistingFile);
  add_common(audit_cmd, common);
  audit_cmd->callback([&] {
    json rep;
    try {
      rep = json::parse(read_file(audit_report_path));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, audit_report_path + ": " + e.what());
    }
    const auto text = read_file(audit_input);
    const auto failures = audit_report(rep, parse_rhg(text), text);
    for (const auto& f : failures) say() << "FAIL " << f << "\n";
    say() << (failures.empty() ? "audit: ok" : "audit: failed") << "\n";
    emit_json(common, {{"ok", failures.empty()}, {"failures", failures}});
    rc = failures.empty() ? 0 : 1;
  });

  std::ostream null_stream(nullptr);
  app.parse_complete_callback([&] {
    if (common.json_path == "-") g_say = &null_stream;
  });
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
