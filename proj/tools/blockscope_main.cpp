// blockscope: exact character tables, p-blocks, p-rationality levels, and a
// statement-verification harness for small permutation groups.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "blockscope/common.hpp"
#include "blockscope/corpus.hpp"
#include "blockscope/numth.hpp"
#include "blockscope/parallel.hpp"
#include "blockscope/report.hpp"
#include "blockscope/verify.hpp"
#include "blockscope/weil.hpp"

using namespace blockscope;

namespace {

void apply_env_bound() {
  if (const char* s = std::getenv("BLOCKSCOPE_MAX_ORDER")) {
    long v = std::atol(s);
    if (v > 0) max_group_order().store(v);
  }
}

int cmd_table(const std::string& corpus_path, const std::string& group_name, uint64_t seed) {
  auto entries = ingest(corpus_path);
  for (const auto& e : entries) {
    if (!group_name.empty() && e.name != group_name) continue;
    GroupContext gc = build_group_context(e, seed);
    const Group& G = *gc.G;
    const CharacterTable& T = *gc.T;
    std::cout << e.name << ": order " << G.order() << ", " << G.class_count()
              << " classes, exponent " << G.exponent() << "\n";
    std::cout << "  class order: ";
    for (auto& c : G.classes()) std::cout << c.element_order << " ";
    std::cout << "\n  class size:  ";
    for (auto& c : G.classes()) std::cout << c.size << " ";
    std::cout << "\n";
    for (int i = 0; i < T.size(); ++i) {
      std::cout << "  chi" << i << ":";
      for (auto& v : T.irr[i].values) std::cout << " " << v.str();
      std::cout << "\n";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_blocks(const std::string& corpus_path, long p, uint64_t seed) {
  auto entries = ingest(corpus_path);
  for (const auto& e : entries) {
    GroupContext gc = build_group_context(e, seed);
    if (gc.G->order() % p != 0) {
      std::cout << e.name << ": order " << gc.G->order() << " not divisible by " << p << "\n";
      continue;
    }
    auto j = group_table_json(gc, p);
    std::cout << e.name << ": order " << gc.G->order() << ", p=" << p << "\n";
    const auto& pj = j["primes"][std::to_string(p)];
    for (size_t bi = 0; bi < pj["blocks"].size(); ++bi) {
      const auto& b = pj["blocks"][bi];
      std::cout << "  block " << bi << (b["principal"].get<bool>() ? " (principal)" : "")
                << ": defect " << b["defect"] << ", |D|=" << b["defect_group_order"]
                << (b["defect_group_cyclic"].get<bool>() ? " cyclic" : "") << ", |N_G(D)|="
                << b["normalizer_order"] << "\n";
      std::cout << "    chars " << b["characters"].dump() << " heights " << b["heights"].dump()
                << "\n";
      std::cout << "    lev " << b["levels"].dump() << " lev_D "
                << b["levels_on_defect_group"].dump() << " lev_N "
                << b["levels_on_defect_normalizer"].dump() << "\n";
      if (b.contains("cyclic_defect"))
        std::cout << "    cyclic defect: " << b["cyclic_defect"].dump() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& corpus_path, std::optional<long> prime,
               std::optional<std::string> statement, uint64_t seed, int jobs, bool json_stdout,
               const std::string& out_path) {
  auto entries = ingest(corpus_path);
  RunOptions opts;
  opts.prime = prime;
  opts.statement = statement;
  opts.seed = seed;
  opts.jobs = jobs;
  VerificationReport R = run_corpus(entries, opts);
  ReportMeta meta;
  meta.corpus_path = corpus_path;
  meta.corpus_digest = file_digest(corpus_path);
  meta.group_count = (long)entries.size();
  meta.seed = seed;
  meta.jobs = jobs;
  if (prime) meta.prime_filter = std::to_string(*prime);
  if (statement) meta.statement_filter = *statement;
  std::string json = report_to_json(R, meta);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    f << json;
  }
  if (json_stdout)
    std::cout << json;
  else
    std::cout << report_to_text(R, meta);
  std::cerr << "verify: " << R.seconds << " s\n";
  return R.exit_code();
}

int cmd_weil(int n, long q, long p) {
  WeilConsistencyResult R = weil_consistency(n, q, p);
  std::cout << "weil consistency n=" << n << " q=" << q << " p=" << p << "\n";
  if (!R.applicable) {
    std::cout << "  not applicable\n";
    for (auto& s : R.notes) std::cout << "  note: " << s << "\n";
    return 0;
  }
  std::cout << "  group order " << R.group_order << "\n";
  std::cout << "  class function: " << (R.class_function_ok ? "ok" : "FAIL") << "\n";
  std::cout << "  degrees:        " << (R.degree_ok ? "ok" : "FAIL") << "\n";
  std::cout << "  norms:          " << (R.norms_ok ? "ok" : "FAIL") << "\n";
  std::cout << "  levels:         " << (R.levels_ok ? "ok" : "FAIL") << "\n";
  if (R.dixon_checked)
    std::cout << "  table match:    " << (R.dixon_match_ok ? "ok" : "FAIL") << "\n";
  for (auto& s : R.notes) std::cout << "  note: " << s << "\n";
  return R.ok() ? 0 : 1;
}

int cmd_sl2(long q, int eps, long p) {
  Sl2OracleResult R = sl2_oracle_check(q, eps, p);
  std::cout << "sl2 oracle q=" << q << " eps=" << eps << " p=" << p << "\n";
  std::cout << "  matched " << R.matched_count << " characters of degree " << (q + eps)
            << " with sign " << R.sign << (R.matched_all ? "" : " INCOMPLETE") << "\n";
  std::cout << "  levels: " << (R.levels_ok ? "ok" : "FAIL") << "\n";
  for (auto& s : R.notes) std::cout << "  " << s << "\n";
  return R.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  apply_env_bound();
  CLI::App app{"exact character tables, p-blocks and p-rationality checks"};
  app.require_subcommand(1);
  uint64_t seed = 0;
  int jobs = 1;
  app.add_option("--seed", seed, "seed for randomized internals (default 0)");
  app.add_option("--jobs", jobs, "parallel verification fan-out (default 1)");

  std::string corpus_path, group_name, out_path, statement;
  long prime = 0;
  bool json_stdout = false;

  auto* t = app.add_subcommand("table", "print character tables");
  t->add_option("corpus", corpus_path)->required();
  t->add_option("--group", group_name, "only this group");

  auto* b = app.add_subcommand("blocks", "print p-block data");
  b->add_option("corpus", corpus_path)->required();
  b->add_option("--prime", prime, "the prime p")->required();

  auto* v = app.add_subcommand("verify", "run the statement harness");
  v->add_option("corpus", corpus_path)->required();
  v->add_option("--prime", prime, "restrict to one prime");
  v->add_option("--statement", statement, "restrict to one statement id");
  v->add_option("--out", out_path, "write the JSON report here");
  v->add_flag("--json", json_stdout, "print JSON instead of text");

  int wn = 3;
  long wq = 2, wp = 3;
  auto* w = app.add_subcommand("weil", "unitary-group value oracle");
  w->add_option("--n", wn, "dimension (odd prime)")->required();
  w->add_option("--q", wq, "field parameter")->required();
  w->add_option("--p", wp, "odd prime dividing q+1");

  long sq = 8, sp = 3;
  int seps = -1;
  auto* s = app.add_subcommand("sl2", "SL(2,q) semisimple value oracle");
  s->add_option("--q", sq, "q, a power of 2")->required();
  s->add_option("--eps", seps, "epsilon in {-1,+1} (default -1)");
  s->add_option("--p", sp, "prime for the level checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 1;
  }

  set_thread_budget(jobs);
  try {
    if (t->parsed()) return cmd_table(corpus_path, group_name, seed);
    if (b->parsed()) return cmd_blocks(corpus_path, prime, seed);
    if (v->parsed())
      return cmd_verify(corpus_path, prime ? std::optional<long>(prime) : std::nullopt,
                        statement.empty() ? std::nullopt : std::optional<std::string>(statement),
                        seed, jobs, json_stdout, out_path);
    if (w->parsed()) return cmd_weil(wn, wq, wp);
    if (s->parsed()) return cmd_sl2(sq, seps, sp);
    fail(Errc::unknown_command, "no subcommand");
  } catch (const Error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
