#include "finloc/corpus.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>

#include "finloc/cache.hpp"
#include "finloc/errors.hpp"
#include "finloc/frame_spec.hpp"

namespace finloc {

namespace {

std::string padded(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04zu", i);
  return buf;
}

} // namespace

std::vector<CorpusEntry> corpus_entries(const CorpusOptions &o) {
  std::vector<CorpusEntry> out;
  const auto prefix = "n" + std::to_string(o.points) + "-";
  if (o.all) {
    if (o.points > 4)
      throw TooLarge("--all enumerates topologies on at most 4 points");
    auto tops = enumerate_topologies(o.points);
    for (std::size_t i = 0; i < tops.size(); ++i)
      out.push_back({prefix + padded(i), std::move(tops[i])});
    return out;
  }
  if (o.points > 6)
    throw TooLarge("--random draws topologies on at most 6 points");
  if (o.points == 0)
    throw InputError("--random needs at least one point");
  for (std::size_t i = 0; i < o.random; ++i)
    out.push_back({prefix + "s" + std::to_string(o.seed) + "-" + padded(i),
                   random_topology(o.points, o.seed + i)});
  return out;
}

CorpusSummary run_corpus(const CorpusOptions &o, std::ostream &lines) {
  const auto entries = corpus_entries(o);
  std::optional<ResultCache> cache;
  if (o.cache)
    cache.emplace(*o.cache);
  const std::string flags = std::string("corpus verify") +
                            (o.oracle ? " oracle" : "") +
                            (o.timing ? " timing" : "") +
                            " seed=" + std::to_string(o.seed);

  AnalysisOptions ao;
  ao.verify = true;
  ao.oracle = o.oracle;
  ao.skip_oracle_if_too_large = true;
  ao.timing = o.timing;
  ao.seed = o.seed;

  std::vector<Report> reports(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const auto &e = entries[i];
      FrameSpec spec{e.topology, e.name};
      std::string key;
      if (cache) {
        key = ResultCache::key(serialize_frame_spec(spec), flags);
        if (auto hit = cache->get(key)) {
          try {
            reports[i] = report_from_json(*hit);
            continue;
          } catch (const InputError &) {
            // unreadable entry: recompute and overwrite
          }
        }
      }
      try {
        reports[i] = analyze_frame(build_frame(spec), e.name, ao);
      } catch (const std::exception &ex) {
        reports[i] = Report{};
        reports[i].frame_name = e.name;
        reports[i].law_failures.push_back({"error", ex.what(), {}});
      }
      if (cache)
        cache->put(key, report_to_json(reports[i]));
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(o.jobs, entries.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();

  CorpusSummary summary;
  for (const auto &r : reports) {
    lines << report_to_json(r) << '\n';
    summary.add(r);
  }
  return summary;
}

} // namespace finloc
