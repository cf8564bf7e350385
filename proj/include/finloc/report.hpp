#ifndef FINLOC_REPORT_HPP
#define FINLOC_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finloc/frame.hpp"
#include "finloc/sublocale.hpp"

namespace finloc {

struct LawFailure {
  std::string law;
  std::string detail;
  std::vector<std::string> witness;

  bool operator==(const LawFailure &) const = default;
};

struct ReportFlags {
  bool dense_ok = false;  // B_L and M_L are both dense
  bool fitted_B = false;
  bool fitted_M = false;
  bool ed = false;
  bool boolean = false;
  bool B_equals_M = false;
  bool M_equals_L = false;

  bool operator==(const ReportFlags &) const = default;
};

struct OracleStatus {
  bool ran = false;
  bool agree = false; // meaningful only when ran

  bool operator==(const OracleStatus &) const = default;
};

struct Report {
  std::string frame_name;
  std::size_t frame_size = 0;
  std::vector<std::string> booleanization;
  std::vector<std::string> demorganization;
  ReportFlags flags;
  OracleStatus oracle;
  std::vector<LawFailure> law_failures;
  std::optional<double> runtime_ms;

  bool failed() const { return !law_failures.empty() || (oracle.ran && !oracle.agree); }
  bool operator==(const Report &) const = default;
};

struct AnalysisOptions {
  // Run the full invariant suite rather than only the Heyting laws.
  bool verify = false;
  bool oracle = false;
  // With `oracle`, frames over the enumeration cap get oracle.ran = false
  // instead of TooLarge.
  bool skip_oracle_if_too_large = false;
  bool timing = false;
  std::uint64_t seed = 0;
  EnumerationLimits limits;
};

/// Integrity failures (IntegrityError, OracleFailure) are recorded in
/// law_failures; input errors propagate.
Report analyze_frame(const Frame &frame, std::string name,
                     const AnalysisOptions &options = {});

/// Compact single-line JSON.
std::string report_to_json(const Report &report);
std::string report_to_pretty_json(const Report &report);
Report report_from_json(std::string_view text);

struct CorpusSummary {
  std::size_t frames = 0;
  std::size_t ed_count = 0;
  std::size_t boolean_count = 0;
  std::size_t B_equals_M_count = 0;
  std::size_t failures = 0;

  void add(const Report &r);
  bool operator==(const CorpusSummary &) const = default;
};

std::string summary_to_json(const CorpusSummary &summary);

} // namespace finloc

#endif
