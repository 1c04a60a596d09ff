// report.cpp

#include "fock/report.hpp"

#include "fock/operators.hpp"
#include "fock/version.hpp"

namespace fock {

std::string fnv1a64_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

Json report_skeleton(const std::string& command, const std::string& input_text,
                     const ReportOptions& options) {
  Json report;
  report["schema"] = kReportSchema;
  report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  report["command"] = command;
  report["input_digest"] = "fnv1a64:" + fnv1a64_hex(input_text);
  report["parameters"] = {{"max_length", options.max_length},
                          {"truncation", options.truncation},
                          {"tolerance", options.tolerance},
                          {"seed", options.seed}};
  report["findings"] = Json::array();
  report["verdicts"] = Json::array();
  return report;
}

Json verdict_entry(const std::string& predicate, const std::string& verdict,
                   const Json& witnesses, const Json& bound_used, const std::string& criterion) {
  Json entry;
  entry["predicate"] = predicate;
  entry["verdict"] = verdict;
  entry["witnesses"] = witnesses;
  entry["bound_used"] = bound_used;
  entry["criterion"] = criterion;
  return entry;
}

Json relation_report_json(const RelationReport& report) {
  Json out;
  out["all_passed"] = report.all_passed;
  out["safe_level_bound"] = report.safe_level_bound;
  out["tolerance"] = report.tolerance;
  Json checks = Json::array();
  for (const auto& check : report.checks) {
    Json c;
    c["relation"] = check.relation;
    c["passed"] = check.passed;
    c["defect"] = check.defect;
    if (!check.detail.empty()) c["detail"] = check.detail;
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json sparse_operator_json(const SparseMatrix& a) {
  Json out;
  out["dim"] = static_cast<int>(a.rows());
  Json entries = Json::array();
  for (const auto& [row, col, value] : sorted_triplets(a))
    entries.push_back(Json::array({row, col, value.real(), value.imag()}));
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace fock
