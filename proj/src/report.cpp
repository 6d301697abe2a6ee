#include "qlab/report.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace qlab {

CheckRecord make_pass(std::string id, std::string statement, nlohmann::ordered_json params) {
  return {std::move(id), std::move(statement), std::move(params), kStatusPass, ""};
}

CheckRecord make_fail(std::string id, std::string statement, nlohmann::ordered_json params,
                      std::string detail) {
  return {std::move(id), std::move(statement), std::move(params), kStatusFail, std::move(detail)};
}

CheckRecord make_skip(std::string id, std::string statement, nlohmann::ordered_json params,
                      std::string reason) {
  return {std::move(id), std::move(statement), std::move(params), kStatusSkipped,
          std::move(reason)};
}

CheckRecord make_result(bool ok, std::string id, std::string statement,
                        nlohmann::ordered_json params, std::string detail_on_fail) {
  if (ok) return make_pass(std::move(id), std::move(statement), std::move(params));
  return make_fail(std::move(id), std::move(statement), std::move(params),
                   std::move(detail_on_fail));
}

VerificationReport::VerificationReport(std::string suite) : suite_(std::move(suite)) {}

void VerificationReport::add(CheckRecord rec) {
  if (rec.status == kStatusPass)
    ++passed_;
  else if (rec.status == kStatusFail)
    ++failed_;
  else if (rec.status == kStatusSkipped)
    ++skipped_;
  else
    throw std::invalid_argument("VerificationReport: unknown status " + rec.status);
  checks_.push_back(std::move(rec));
}

void VerificationReport::add_all(std::vector<CheckRecord> recs) {
  for (CheckRecord& r : recs) add(std::move(r));
}

nlohmann::ordered_json VerificationReport::to_json(const std::string& generated_at) const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["suite"] = suite_;
  j["generated_at"] = generated_at;
  j["summary"] = {{"total", total()}, {"passed", passed_}, {"failed", failed_}, {"skipped", skipped_}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : checks_) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["params"] = c.params;
    e["status"] = c.status;
    e["detail"] = c.detail;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

std::string VerificationReport::human_summary() const {
  std::string out = "suite " + suite_ + ": " + std::to_string(total()) + " checks, " +
                    std::to_string(passed_) + " passed, " + std::to_string(failed_) +
                    " failed, " + std::to_string(skipped_) + " skipped\n";
  for (const CheckRecord& c : checks_) {
    if (c.status == kStatusFail)
      out += "  FAIL " + c.id + ": " + c.detail + "\n";
    else if (c.status == kStatusSkipped)
      out += "  SKIP " + c.id + ": " + c.detail + "\n";
  }
  return out;
}

std::string current_timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qlab
