#include "ryser/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <set>

#include "ryser/error.hpp"

namespace ryser {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::IoError, "sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Timeout: return "timeout";
  }
  return "fail";
}

CheckStatus check_status_from(std::string_view s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "skipped") return CheckStatus::Skipped;
  if (s == "timeout") return CheckStatus::Timeout;
  return CheckStatus::Fail;
}

Report::Report(std::string command, json parameters)
    : command_(std::move(command)), parameters_(std::move(parameters)) {}

void Report::add_input(std::string label, std::string_view bytes) {
  inputs_.push_back({{"path", std::move(label)}, {"sha256", sha256_hex(bytes)}, {"bytes", bytes.size()}});
}

CheckResult& Report::add(CheckResult check) {
  checks_.push_back(std::move(check));
  return checks_.back();
}

CheckStatus Report::overall() const {
  bool timeout = false;
  for (const auto& c : checks_) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Timeout) timeout = true;
  }
  return timeout ? CheckStatus::Timeout : CheckStatus::Pass;
}

int Report::exit_code() const {
  switch (overall()) {
    case CheckStatus::Fail: return 1;
    case CheckStatus::Timeout: return 3;
    default: return 0;
  }
}

namespace {

void strip_stats(json& j) {
  if (j.is_object()) {
    j.erase("nodes_explored");
    j.erase("transversals_tested");
    for (auto& [k, v] : j.items()) strip_stats(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_stats(v);
  }
}

}  // namespace

json Report::to_json(bool deterministic) const {
  json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", "ryser"}, {"version", RYSER_VERSION}};
  j["command"] = command_;
  j["parameters"] = parameters_;
  j["inputs"] = inputs_;
  json checks = json::array();
  for (const auto& c : checks_) {
    json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["certificate"] = c.certificate;
    if (deterministic) {
      strip_stats(cj["certificate"]);
    } else {
      cj["wall_ms"] = c.wall_ms;
    }
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (!extra_.empty()) j["notes"] = extra_;
  j["status"] = to_string(overall());
  return j;
}

json vertex_list(std::span<const VertexId> vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_string(v));
  return a;
}

std::vector<VertexId> parse_vertex_list(const json& j) {
  std::vector<VertexId> out;
  for (const auto& x : j) out.push_back(parse_vertex_ref(x.get<std::string>()));
  return out;
}

json status_json(SearchStatus s) {
  switch (s) {
    case SearchStatus::Complete: return "complete";
    case SearchStatus::Timeout: return "timeout";
    case SearchStatus::HintExceeded: return "hint_exceeded";
  }
  return "timeout";
}

json cover_certificate(const CoverResult& res, bool with_stats) {
  json j;
  j["kind"] = res.all_min_covers ? "min_covers" : "cover";
  j["search"] = status_json(res.status);
  j["tau"] = res.tau;
  j["witness"] = vertex_list(res.witness);
  if (res.all_min_covers) {
    json all = json::array();
    for (const auto& c : *res.all_min_covers) all.push_back(vertex_list(c));
    j["count"] = res.all_min_covers->size();
    j["all_min_covers"] = std::move(all);
  }
  if (with_stats) j["nodes_explored"] = res.nodes_explored;
  return j;
}

json matching_certificate(const MatchingResult& res, bool with_stats) {
  json j;
  j["kind"] = "matching";
  j["search"] = status_json(res.status);
  j["nu"] = res.nu;
  j["witness"] = res.witness;
  if (with_stats) j["nodes_explored"] = res.nodes_explored;
  return j;
}

json ratio_certificate(const RatioReport& rep, bool with_stats) {
  json j;
  j["kind"] = "ratio";
  j["r"] = rep.r;
  j["tau"] = rep.tau;
  j["nu"] = rep.nu;
  j["ratio"] = rep.ratio;
  j["is_ryser_extremal"] = rep.is_ryser_extremal;
  j["cover"] = cover_certificate(rep.cover, with_stats);
  j["matching"] = matching_certificate(rep.matching, with_stats);
  return j;
}

json validation_json(const ValidationResult& v) {
  json j;
  j["kind"] = "validation";
  j["ok"] = v.ok();
  j["covers_checked"] = v.covers_checked;
  json viol = json::array();
  for (const auto& x : v.violations) viol.push_back({{"condition", x.condition}, {"detail", x.detail}, {"witness", x.witness}});
  j["violations"] = std::move(viol);
  if (v.base_minus_s) j["base_minus_s"] = cover_certificate(*v.base_minus_s);
  return j;
}

json spec_json(const ConstructionSpec& spec) {
  json j;
  j["r"] = spec.r();
  j["s_edge"] = spec.s_edge;
  j["f_edges"] = spec.f_edges;
  json s = json::array();
  for (std::size_t i = 0; i < spec.r(); ++i) s.push_back(to_string(spec.s_vertex(i)));
  j["s_vertices"] = std::move(s);
  return j;
}

json minimization_json(const MinimizationTrace& t) {
  json j;
  j["kind"] = "minimization";
  j["target_tau"] = t.target_tau;
  j["complete"] = t.complete;
  j["deleted"] = t.deleted;
  j["kept"] = t.kept;
  auto certs = [](const std::vector<EdgeCertificate>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back({{"edge", c.edge}, {"tau", c.tau}, {"witness", vertex_list(c.witness)}});
    return a;
  };
  j["deletion_certificates"] = certs(t.deletion_certificates);
  j["kept_certificates"] = certs(t.kept_certificates);
  return j;
}

json classification_json(const ExtensionClassification& c, bool list_candidates) {
  json j;
  j["kind"] = "extensions";
  j["r"] = c.r;
  j["tau"] = c.tau;
  j["hypotheses_hold"] = c.hypotheses_hold;
  j["warnings"] = c.warnings;
  j["counts"] = {{"TYPE1", c.count(ExtensionClass::Type1)},
                 {"TYPE2", c.count(ExtensionClass::Type2)},
                 {"ALREADY_PRESENT", c.count(ExtensionClass::AlreadyPresent)},
                 {"VIOLATION", c.count(ExtensionClass::Violation)}};
  j["transversals_tested"] = c.transversals_tested;
  json viol = json::array();
  json all = json::array();
  for (const auto& x : c.candidates) {
    json cj;
    cj["fresh_side"] = x.fresh_side ? json(*x.fresh_side) : json(nullptr);
    cj["transversal"] = vertex_list(x.transversal);
    cj["class"] = to_string(x.cls);
    if (x.cls == ExtensionClass::Type1 || x.cls == ExtensionClass::Type2) cj["i"] = x.index;
    if (x.cls == ExtensionClass::Violation) viol.push_back(cj);
    if (list_candidates) all.push_back(std::move(cj));
  }
  j["violations"] = std::move(viol);
  if (list_candidates) j["candidates"] = std::move(all);
  return j;
}

json closure_json(const ClosureDescription& d) {
  json j;
  j["kind"] = "closure";
  j["r"] = d.r;
  json fams = json::array();
  for (const auto& f : d.families)
    fams.push_back({{"type", to_string(f.type)}, {"i", f.index}, {"core", vertex_list(f.core)}, {"fresh_side", f.fresh_side}});
  j["families"] = std::move(fams);
  return j;
}

json fingerprint_json(const PartiteHypergraph& h) {
  json j;
  j["kind"] = "fingerprint";
  j["degree_fingerprint"] = degree_fingerprint(h).encode();
  return j;
}

namespace {

void audit_cover(const json& c, const PartiteHypergraph& h, const std::string& where, std::vector<std::string>& out) {
  const auto tau = c.at("tau").get<std::size_t>();
  const auto w = parse_vertex_list(c.at("witness"));
  if (w.size() != tau) out.push_back(where + ": witness size differs from tau");
  if (!is_cover(h, w)) out.push_back(where + ": witness is not a cover");
  if (c.contains("all_min_covers")) {
    std::set<std::vector<VertexId>> seen;
    for (const auto& x : c.at("all_min_covers")) {
      auto cv = parse_vertex_list(x);
      std::sort(cv.begin(), cv.end());
      if (cv.size() != tau || !is_cover(h, cv)) out.push_back(where + ": enumerated set is not a minimum cover");
      if (!seen.insert(cv).second) out.push_back(where + ": duplicate enumerated cover");
    }
    if (c.contains("count") && c.at("count").get<std::size_t>() != seen.size())
      out.push_back(where + ": cover count mismatch");
  }
}

void audit_matching(const json& c, const PartiteHypergraph& h, const std::string& where, std::vector<std::string>& out) {
  const auto nu = c.at("nu").get<std::size_t>();
  const auto w = c.at("witness").get<std::vector<std::size_t>>();
  if (w.size() != nu) out.push_back(where + ": matching size differs from nu");
  if (!is_matching(h, w)) out.push_back(where + ": witness edges are not pairwise disjoint");
}

}  // namespace

std::vector<std::string> audit_report(const json& report, const PartiteHypergraph& h, std::string_view bytes) {
  std::vector<std::string> out;
  if (report.value("schema", "") != kReportSchema) out.push_back("unknown report schema");
  const auto digest = sha256_hex(bytes);
  std::optional<std::string> label;
  for (const auto& in : report.value("inputs", json::array()))
    if (in.value("sha256", "") == digest) label = in.value("path", "");
  if (!label) out.push_back("input digest does not match the report");

  for (const auto& c : report.value("checks", json::array())) {
    const std::string name = c.value("name", "?");
    if (c.value("status", "") != "pass") continue;
    const auto& cert = c.at("certificate");
    const std::string kind = cert.value("kind", "");
    if (cert.contains("target") && (!label || cert.at("target").get<std::string>() != *label)) continue;
    try {
      if (kind == "cover" || kind == "min_covers") {
        audit_cover(cert, h, name, out);
      } else if (kind == "matching") {
        audit_matching(cert, h, name, out);
      } else if (kind == "ratio") {
        audit_cover(cert.at("cover"), h, name, out);
        audit_matching(cert.at("matching"), h, name, out);
        const auto r = cert.at("r").get<std::size_t>();
        const auto tau = cert.at("tau").get<std::size_t>(), nu = cert.at("nu").get<std::size_t>();
        if (h.uniform_size() != r) out.push_back(name + ": r does not match the edge size");
        if (cert.at("cover").at("tau") != tau || cert.at("matching").at("nu") != nu)
          out.push_back(name + ": inconsistent ratio numbers");
        if (cert.at("is_ryser_extremal").get<bool>() != (tau == (r - 1) * nu))
          out.push_back(name + ": extremality flag inconsistent");
      } else if (kind == "intersecting") {
        if (cert.at("value").get<bool>() != is_intersecting(h).intersecting)
          out.push_back(name + ": intersecting flag does not hold");
      } else if (kind == "fingerprint") {
        if (cert.at("degree_fingerprint").get<std::string>() != degree_fingerprint(h).encode())
          out.push_back(name + ": fingerprint mismatch");
      }
    } catch (const std::exception& e) {
      out.push_back(name + ": malformed certificate (" + e.what() + ")");
    }
  }
  return out;
}

}  // namespace ryser
