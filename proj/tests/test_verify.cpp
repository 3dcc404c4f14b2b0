#include "blockscope/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "blockscope/common.hpp"
#include "blockscope/numth.hpp"
#include "blockscope/parallel.hpp"
#include "blockscope/report.hpp"
#include "doctest.h"

using namespace blockscope;

#ifndef BSC_DATA_DIR
#define BSC_DATA_DIR "data"
#endif

namespace {

std::string data_path(const std::string& name) { return std::string(BSC_DATA_DIR) + "/" + name; }

std::vector<CorpusEntry> smoke() { return ingest(data_path("smoke.json")); }

}  // namespace

TEST_CASE("ingest validates the corpus format") {
  auto entries = smoke();
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "C1");
  CHECK(entries[0].degree == 1);
  CHECK_THROWS_AS(ingest_text("{", "t"), Error);
  CHECK_THROWS_AS(ingest_text("{\"groups\": 3}", "t"), Error);
  CHECK_THROWS_AS(
      ingest_text(R"({"groups":[{"name":"a","degree":2,"generators":[[0,0]]}]})", "t"), Error);
  CHECK_THROWS_AS(
      ingest_text(
          R"({"groups":[{"name":"a","degree":1,"generators":[]},{"name":"a","degree":1,"generators":[]}]})",
          "t"),
      Error);
  // error kinds
  try {
    ingest_text(R"({"groups":[{"name":"a","degree":2,"generators":[[0,0]]}]})", "t");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_permutation);
  }
}

TEST_CASE("emit round-trips through ingest") {
  auto entries = ingest(data_path("paper_7_3.json"));
  auto text = emit(entries).dump(1);
  auto again = ingest_text(text, "roundtrip");
  REQUIRE(again.size() == entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    CHECK(again[i].name == entries[i].name);
    CHECK(again[i].degree == entries[i].degree);
    CHECK(again[i].generators == entries[i].generators);
    CHECK(again[i].expected == entries[i].expected);
  }
}

TEST_CASE("empty corpus verifies to an empty passing report") {
  auto entries = ingest_text(R"({"groups": []})", "t");
  RunOptions opts;
  auto R = run_corpus(entries, opts);
  CHECK(R.outcomes.empty());
  CHECK(R.exit_code() == 0);
}

TEST_CASE("smoke corpus passes every statement") {
  RunOptions opts;
  auto R = run_corpus(smoke(), opts);
  CHECK(R.exit_code() == 0);
  CHECK(R.failed == 0);
  CHECK(R.findings == 0);
  CHECK(!R.proven_violation);
  // each (group, prime, statement) appears exactly once
  std::set<std::string> keys;
  for (auto& o : R.outcomes) {
    std::string k = o.group + "|" + std::to_string(o.prime) + "|" + o.statement;
    CHECK(!keys.count(k));
    keys.insert(k);
  }
}

TEST_CASE("statement and prime filters") {
  RunOptions opts;
  opts.prime = 2;
  opts.statement = "thm_A";
  auto R = run_corpus(smoke(), opts);
  for (auto& o : R.outcomes) {
    CHECK(o.prime == 2);
    CHECK(o.statement == "thm_A");
  }
  CHECK(!R.outcomes.empty());
}

TEST_CASE("fixture groups reproduce the exported level data") {
  auto entries = ingest(data_path("paper_7_3.json"));
  RunOptions opts;
  auto R = run_corpus(entries, opts);
  CHECK(R.exit_code() == 0);
  int fixture_passes = 0;
  for (auto& o : R.outcomes)
    if (o.statement == "fixture") {
      CHECK(o.verdict == Verdict::pass);
      ++fixture_passes;
    }
  CHECK(fixture_passes == 3);
}

TEST_CASE("level witnesses: the maximum per-class level equals the character level") {
  auto entries = smoke();
  for (auto& e : entries) {
    GroupContext gc = build_group_context(e, 0);
    for (long p : prime_divisors(gc.G->order())) {
      for (int c = 0; c < gc.T->size(); ++c) {
        auto [cls, lv] = level_witness(gc.T->irr[c], p);
        CHECK(lv == gc.T->levels(p)[c]);
      }
    }
  }
}

TEST_CASE("report JSON is byte-stable and job-count independent") {
  auto entries = ingest(data_path("paper_7_3.json"));
  ReportMeta meta;
  meta.corpus_path = "paper_7_3.json";
  meta.corpus_digest = file_digest(data_path("paper_7_3.json"));
  meta.group_count = (long)entries.size();
  RunOptions opts;
  auto a = report_to_json(run_corpus(entries, opts), meta);
  auto b = report_to_json(run_corpus(entries, opts), meta);
  CHECK(a == b);
  opts.jobs = 3;
  auto c = report_to_json(run_corpus(entries, opts), meta);
  set_thread_budget(1);
  CHECK(a == c);
}

TEST_CASE("report schema golden file") {
  auto entries = smoke();
  ReportMeta meta;
  meta.corpus_path = "data/smoke.json";
  meta.corpus_digest = file_digest(data_path("smoke.json"));
  meta.group_count = (long)entries.size();
  RunOptions opts;
  auto R = run_corpus(entries, opts);
  std::string json = report_to_json(R, meta);
  std::string golden_path = data_path("golden_smoke_report.json");
  if (std::getenv("BSC_REGEN_GOLDEN")) {
    std::ofstream f(golden_path, std::ios::binary);
    f << json;
  }
  std::ifstream f(golden_path, std::ios::binary);
  REQUIRE_MESSAGE(f.good(), "golden file missing; regenerate with BSC_REGEN_GOLDEN=1");
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == json);
}

TEST_CASE("exit codes distinguish findings from violations") {
  VerificationReport R;
  CHECK(R.exit_code() == 0);
  R.findings = 1;
  CHECK(R.exit_code() == 2);
  R.proven_violation = true;
  CHECK(R.exit_code() == 1);
}

TEST_CASE("a corrupted fixture expectation fails the run") {
  std::string text = R"({"groups":[{"name":"S3","degree":3,
    "generators":[[1,2,0],[1,0,2]],
    "expected":{"3":{"defect_restriction_levels":[
      {"degree":2,"lev":5,"lev_D":0,"lev_N":5}]}}}]})";
  auto entries = ingest_text(text, "t");
  RunOptions opts;
  auto R = run_corpus(entries, opts);
  CHECK(R.exit_code() == 1);
  bool saw_fail = false;
  for (auto& o : R.outcomes)
    if (o.statement == "fixture") saw_fail = o.verdict == Verdict::fail;
  CHECK(saw_fail);
}

TEST_CASE("expected character degrees are validated") {
  std::string text = R"({"groups":[{"name":"S3","degree":3,
    "generators":[[1,2,0],[1,0,2]],
    "expected":{"3":{"character_degrees":[1,1,2]}}}]})";
  auto R = run_corpus(ingest_text(text, "t"), RunOptions{});
  CHECK(R.exit_code() == 0);
  std::string bad = R"({"groups":[{"name":"S3","degree":3,
    "generators":[[1,2,0],[1,0,2]],
    "expected":{"3":{"character_degrees":[1,2,2]}}}]})";
  auto Rb = run_corpus(ingest_text(bad, "t"), RunOptions{});
  CHECK(Rb.exit_code() == 1);
}
