#ifndef FINLOC_CORPUS_HPP
#define FINLOC_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "finloc/builders.hpp"
#include "finloc/report.hpp"

namespace finloc {

struct CorpusOptions {
  std::size_t points = 0;
  bool all = false;         // every topology on `points` points (points <= 4)
  std::size_t random = 0;   // otherwise this many seeded ones (points <= 6)
  std::uint64_t seed = 0;
  bool oracle = false;
  bool timing = false;
  std::size_t jobs = 1;
  std::optional<std::filesystem::path> cache;
};

struct CorpusEntry {
  std::string name;
  TopologySpec topology;
};

/// Frames of the sweep in frame-id order. Throws TooLarge / InputError.
std::vector<CorpusEntry> corpus_entries(const CorpusOptions &options);

/// Verifies every frame on a pool of `jobs` workers and writes one report
/// per line to `lines`, in frame-id order.
CorpusSummary run_corpus(const CorpusOptions &options, std::ostream &lines);

} // namespace finloc

#endif
