// report.hpp -- deterministic JSON reports.  Identical input and parameters
// must produce byte-identical output; nothing time- or address-dependent
// goes in.
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "fock/types.hpp"
#include "fock/verify.hpp"

namespace fock {

using Json = nlohmann::ordered_json;

// FNV-1a.  Stable across platforms; identifies the input text in reports.
std::string fnv1a64_hex(const std::string& data);

struct ReportOptions {
  int max_length = 6;
  int truncation = 8;
  double tolerance = kRelationTol;
  uint64_t seed = 0;
};

Json report_skeleton(const std::string& command, const std::string& input_text,
                     const ReportOptions& options);

// {predicate, verdict, witnesses, bound_used, criterion}
Json verdict_entry(const std::string& predicate, const std::string& verdict,
                   const Json& witnesses, const Json& bound_used, const std::string& criterion);

Json relation_report_json(const RelationReport& report);

// {dim, entries: [[row, col, re, im], ...]} sorted by (row, col).
Json sparse_operator_json(const SparseMatrix& a);

}  // namespace fock
