#include "finloc/report.hpp"

#include <chrono>
#include <cctype>
#include <cmath>

#include "finloc/demorgan.hpp"
#include "finloc/errors.hpp"
#include "finloc/heyting_laws.hpp"
#include "finloc/invariants.hpp"
#include "json.hpp"

namespace finloc {

using json = nlohmann::ordered_json;

namespace {

void run_oracles(const Frame &f, const Sublocale &b, const Sublocale &m,
                 const AnalysisOptions &options, Report &r) {
  if (f.size() > options.limits.max_elements) {
    if (options.skip_oracle_if_too_large)
      return;
    throw TooLarge("oracle mode enumerates S(L); frame has " +
                   std::to_string(f.size()) + " elements, cap is " +
                   std::to_string(options.limits.max_elements));
  }
  r.oracle.ran = true;
  try {
    const bool least = oracle_least_dense(f, options.limits) == b;
    const bool ed = oracle_largest_dense_ed(f, options.limits) == m;
    const bool unique = oracle_unique_boolean_dense(f, options.limits) == b;
    r.oracle.agree = least && ed && unique;
    if (!least)
      r.law_failures.push_back({"oracle", "least dense sublocale differs from B_L", {}});
    if (!ed)
      r.law_failures.push_back(
          {"oracle", "largest dense ED sublocale differs from M_L", {}});
    if (!unique)
      r.law_failures.push_back(
          {"oracle", "Boolean dense sublocale differs from B_L", {}});
  } catch (const IntegrityError &e) {
    r.oracle.agree = false;
    r.law_failures.push_back({"oracle", e.what(), {}});
  }
}

} // namespace

Report analyze_frame(const Frame &f, std::string name,
                     const AnalysisOptions &options) {
  const auto started = std::chrono::steady_clock::now();
  Report r;
  r.frame_name = std::move(name);
  r.frame_size = f.size();

  if (options.verify) {
    InvariantOptions io;
    io.seed = options.seed;
    io.limits = options.limits;
    r.law_failures = check_invariants(f, io);
  } else {
    for (const auto &law : verify_heyting_laws(f, options.seed).failures()) {
      LawFailure lf{law.law, law.statement + ": " + law.detail, {}};
      for (auto w : law.witness)
        lf.witness.push_back(f.label(w));
      r.law_failures.push_back(std::move(lf));
    }
  }

  bool lawful = true;
  for (const auto &lf : r.law_failures)
    if (lf.law.size() > 1 && lf.law[0] == 'H' && std::isdigit(lf.law[1]))
      lawful = false;

  if (lawful) {
    try {
      auto b = booleanization(f);
      auto m = demorganization(f);
      r.booleanization = b.labels();
      r.demorganization = m.labels();
      r.flags.dense_ok = is_dense(b) && is_dense(m);
      r.flags.fitted_B = is_fitted(b);
      r.flags.fitted_M = is_fitted(m);
      r.flags.ed = is_extremally_disconnected(f);
      r.flags.boolean = is_boolean(f);
      r.flags.B_equals_M = b == m;
      r.flags.M_equals_L = m.size() == f.size();
      if (options.oracle)
        run_oracles(f, b, m, options, r);
    } catch (const IntegrityError &e) {
      r.law_failures.push_back({"integrity", e.what(), {}});
    }
  } else if (options.oracle && f.size() > options.limits.max_elements &&
             !options.skip_oracle_if_too_large) {
    throw TooLarge("oracle mode enumerates S(L); frame is over the cap");
  }

  if (options.timing) {
    std::chrono::duration<double, std::milli> took =
        std::chrono::steady_clock::now() - started;
    r.runtime_ms = std::round(took.count() * 1000.0) / 1000.0;
  }
  return r;
}

namespace {

json to_json(const Report &r) {
  json j;
  j["frame_name"] = r.frame_name;
  j["frame_size"] = r.frame_size;
  j["booleanization"] = r.booleanization;
  j["demorganization"] = r.demorganization;
  j["flags"] = {{"dense_ok", r.flags.dense_ok},     {"fitted_B", r.flags.fitted_B},
                {"fitted_M", r.flags.fitted_M},     {"ed", r.flags.ed},
                {"boolean", r.flags.boolean},       {"B_equals_M", r.flags.B_equals_M},
                {"M_equals_L", r.flags.M_equals_L}};
  j["oracle"] = {{"ran", r.oracle.ran}};
  if (r.oracle.ran)
    j["oracle"]["agree"] = r.oracle.agree;
  json failures = json::array();
  for (const auto &lf : r.law_failures)
    failures.push_back(
        {{"law", lf.law}, {"detail", lf.detail}, {"witness", lf.witness}});
  j["law_failures"] = std::move(failures);
  if (r.runtime_ms)
    j["runtime_ms"] = *r.runtime_ms;
  return j;
}

} // namespace

std::string report_to_json(const Report &r) { return to_json(r).dump(); }

std::string report_to_pretty_json(const Report &r) { return to_json(r).dump(2); }

Report report_from_json(std::string_view text) {
  try {
    auto j = json::parse(text.begin(), text.end());
    Report r;
    r.frame_name = j.at("frame_name").get<std::string>();
    r.frame_size = j.at("frame_size").get<std::size_t>();
    r.booleanization = j.at("booleanization").get<std::vector<std::string>>();
    r.demorganization = j.at("demorganization").get<std::vector<std::string>>();
    const auto &fl = j.at("flags");
    r.flags.dense_ok = fl.at("dense_ok").get<bool>();
    r.flags.fitted_B = fl.at("fitted_B").get<bool>();
    r.flags.fitted_M = fl.at("fitted_M").get<bool>();
    r.flags.ed = fl.at("ed").get<bool>();
    r.flags.boolean = fl.at("boolean").get<bool>();
    r.flags.B_equals_M = fl.at("B_equals_M").get<bool>();
    r.flags.M_equals_L = fl.at("M_equals_L").get<bool>();
    r.oracle.ran = j.at("oracle").at("ran").get<bool>();
    if (r.oracle.ran)
      r.oracle.agree = j.at("oracle").at("agree").get<bool>();
    for (const auto &lf : j.at("law_failures"))
      r.law_failures.push_back({lf.at("law").get<std::string>(),
                                lf.at("detail").get<std::string>(),
                                lf.at("witness").get<std::vector<std::string>>()});
    if (auto it = j.find("runtime_ms"); it != j.end())
      r.runtime_ms = it->get<double>();
    return r;
  } catch (const json::exception &e) {
    throw MalformedJson(std::string("report: ") + e.what());
  }
}

void CorpusSummary::add(const Report &r) {
  ++frames;
  ed_count += r.flags.ed;
  boolean_count += r.flags.boolean;
  B_equals_M_count += r.flags.B_equals_M;
  failures += r.failed();
}

std::string summary_to_json(const CorpusSummary &s) {
  json j;
  j["summary"] = {{"frames", s.frames},
                  {"ed_count", s.ed_count},
                  {"boolean_count", s.boolean_count},
                  {"B_equals_M_count", s.B_equals_M_count},
                  {"failures", s.failures}};
  return j.dump();
}

} // namespace finloc
