#include "blockscope/report.hpp"

#include <sstream>

namespace blockscope {

using nlohmann::ordered_json;

std::string report_to_json(const VerificationReport& report, const ReportMeta& meta) {
  ordered_json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["corpus"] = {{"path", meta.corpus_path},
                 {"digest", meta.corpus_digest},
                 {"groups", meta.group_count}};
  j["options"] = {{"seed", meta.seed},
                  {"jobs", meta.jobs},
                  {"prime", meta.prime_filter.empty() ? "all" : meta.prime_filter},
                  {"statement", meta.statement_filter.empty() ? "all" : meta.statement_filter}};
  ordered_json outs = ordered_json::array();
  for (const auto& o : report.outcomes) {
    ordered_json oj;
    oj["group"] = o.group;
    oj["prime"] = o.prime;
    oj["statement"] = o.statement;
    oj["verdict"] = verdict_name(o.verdict);
    oj["details"] = o.details;
    outs.push_back(std::move(oj));
  }
  j["outcomes"] = std::move(outs);
  j["groups"] = report.group_tables;
  j["summary"] = {{"pass", report.pass},
                  {"fail", report.failed},
                  {"finding", report.findings},
                  {"not_applicable", report.inapplicable},
                  {"exit_code", report.exit_code()}};
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report, const ReportMeta& meta) {
  std::ostringstream out;
  out << kToolName << " " << kToolVersion << " verify: " << meta.corpus_path << " ("
      << meta.group_count << " groups, digest " << meta.corpus_digest << ")\n";
  std::string last_group;
  for (const auto& o : report.outcomes) {
    if (o.group != last_group) {
      out << "\n== " << o.group << " ==\n";
      last_group = o.group;
    }
    out << "  p=" << o.prime << "  " << o.statement << ": " << verdict_name(o.verdict) << "\n";
    for (const auto& d : o.details) out << "      " << d << "\n";
  }
  out << "\nsummary: pass=" << report.pass << " fail=" << report.failed
      << " finding=" << report.findings << " not_applicable=" << report.inapplicable
      << " exit=" << report.exit_code() << "\n";
  return out.str();
}

}  // namespace blockscope
