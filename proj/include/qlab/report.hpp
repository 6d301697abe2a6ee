#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qlab {

inline constexpr const char* kToolName = "qlab";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

inline constexpr const char* kStatusPass = "pass";
inline constexpr const char* kStatusFail = "fail";
inline constexpr const char* kStatusSkipped = "skipped-with-reason";

// One verified identity instance: a stable machine id, the mathematical
// statement in plain text, the parameter values it was checked at, and
// the outcome. detail carries the mismatch or the skip reason.
struct CheckRecord {
  std::string id;
  std::string statement;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string status;
  std::string detail;
};

CheckRecord make_pass(std::string id, std::string statement, nlohmann::ordered_json params);
CheckRecord make_fail(std::string id, std::string statement, nlohmann::ordered_json params,
                      std::string detail);
CheckRecord make_skip(std::string id, std::string statement, nlohmann::ordered_json params,
                      std::string reason);
// pass or fail depending on ok.
CheckRecord make_result(bool ok, std::string id, std::string statement,
                        nlohmann::ordered_json params, std::string detail_on_fail);

// A named batch of check records with summary counts.
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite);

  void add(CheckRecord rec);
  void add_all(std::vector<CheckRecord> recs);

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  int total() const { return static_cast<int>(checks_.size()); }
  int passed() const { return passed_; }
  int failed() const { return failed_; }
  int skipped() const { return skipped_; }
  bool all_passed() const { return failed_ == 0; }

  // generated_at is injected so identical runs can produce byte-identical
  // documents; pass current_timestamp_utc() for wall-clock output.
  nlohmann::ordered_json to_json(const std::string& generated_at) const;
  std::string human_summary() const;

 private:
  std::string suite_;
  std::vector<CheckRecord> checks_;
  int passed_ = 0;
  int failed_ = 0;
  int skipped_ = 0;
};

std::string current_timestamp_utc();  // ISO 8601, second resolution

}  // namespace qlab
