#pragma once

#include <string>

#include "blockscope/verify.hpp"

namespace blockscope {

inline constexpr const char* kToolName = "blockscope";
inline constexpr const char* kToolVersion = "0.1.0";

struct ReportMeta {
  std::string corpus_path;
  std::string corpus_digest;
  long group_count = 0;
  uint64_t seed = 0;
  int jobs = 1;
  std::string prime_filter;      // empty = all
  std::string statement_filter;  // empty = all
};

// Deterministic JSON rendering (stable key and record order); wall-clock
// timing is deliberately excluded so identical runs are byte-identical.
std::string report_to_json(const VerificationReport& report, const ReportMeta& meta);

// Human-readable rendering of the same data.
std::string report_to_text(const VerificationReport& report, const ReportMeta& meta);

}  // namespace blockscope
