#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ryser/construct.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/solver.hpp"

namespace ryser {

struct CorpusInstance {
  std::string name;  // file stem
  PartiteHypergraph graph;
};

/// Small-profile block for r <= 6 (relaxed rules): x = {(r-1)/2}.
DegreeProfile small_profile(std::size_t r);

/// The desk-scale corpus, in file order: T for q = 2..5; H and uniformized
/// H for q = 3, 4, 5 with default and profile F; the r = 26 S-hypergraphs
/// with x_1 = 4 and x_1 = 5.
std::vector<CorpusInstance> corpus_instances();

/// Writes `<name>.rhg` and `<name>.report.json` for every instance plus a
/// MANIFEST of digests. Output is byte-stable. Throws IoError.
std::vector<std::filesystem::path> corpus_generate(const std::filesystem::path& out_dir,
                                                   const SolverOptions& opts = {});

}  // namespace ryser
