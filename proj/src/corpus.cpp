#include "ryser/corpus.hpp"

#include "ryser/error.hpp"
#include "ryser/pipeline.hpp"
#include "ryser/plane.hpp"
#include "ryser/report.hpp"
#include "ryser/rhg_io.hpp"

namespace ryser {

DegreeProfile small_profile(std::size_t r) { return DegreeProfile{r, {(r - 1) / 2}}; }

std::vector<CorpusInstance> corpus_instances() {
  std::vector<CorpusInstance> out;
  std::vector<PartiteHypergraph> bases;
  for (std::uint32_t q = 2; q <= 5; ++q) {
    auto T = truncate(build_plane(q));
    out.push_back({"T_q" + std::to_string(q), T});
    bases.push_back(std::move(T));
  }
  for (std::uint32_t q = 3; q <= 5; ++q) {
    const auto& T = bases[q - 2];
    const std::string stem = "H_q" + std::to_string(q);
    const auto hd = build_H(default_spec(T, 0));
    const auto hp = build_H(select_F_by_profile(T, 0, small_profile(T.num_sides()), ProfileRules::Relaxed));
    out.push_back({stem + "_default", hd});
    out.push_back({stem + "_default_u", uniformize(hd)});
    out.push_back({stem + "_profile", hp});
    out.push_back({stem + "_profile_u", uniformize(hp)});
  }
  const auto T26 = truncate(build_plane(25));
  for (std::size_t x1 : {4u, 5u}) {
    auto s = extract_S_subhypergraph(build_H(select_F_by_profile(T26, 0, DegreeProfile{26, {x1}})));
    s.set_name("S_r26_x" + std::to_string(x1));
    out.push_back({"S_r26_x" + std::to_string(x1), std::move(s)});
  }
  return out;
}

std::vector<std::filesystem::path> corpus_generate(const std::filesystem::path& out_dir, const SolverOptions& opts) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + out_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> files;
  std::string manifest;
  auto put = [&](const std::string& file, const std::string& text) {
    write_file_atomic(out_dir / file, text);
    files.push_back(out_dir / file);
    manifest += sha256_hex(text) + "  " + file + "\n";
  };
  for (const auto& inst : corpus_instances()) {
    const auto text = format_rhg(inst.graph);
    put(inst.name + ".rhg", text);
    VerifyOptions vo;
    vo.deterministic = true;
    vo.solver = opts;
    const auto rep = verify_report(inst.graph, text, inst.name + ".rhg", vo);
    put(inst.name + ".report.json", rep.to_json(true).dump(2) + "\n");
  }
  put("MANIFEST", manifest);
  return files;
}

}  // namespace ryser
