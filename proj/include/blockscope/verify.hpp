#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "blockscope/blocks.hpp"
#include "blockscope/chartab.hpp"
#include "blockscope/corpus.hpp"
#include "blockscope/perm.hpp"

namespace blockscope {

enum class Verdict { pass, fail, not_applicable, finding };

const char* verdict_name(Verdict v);

struct CheckOutcome {
  std::string statement;
  std::string group;
  long prime = 0;
  Verdict verdict = Verdict::not_applicable;
  std::vector<std::string> details;
};

// The statements the harness knows, in report order. The *_oracle and
// structural entries accompany the named conjecture/lemma checks.
const std::vector<std::string>& statement_ids();

// Per-group computed state shared by the statement checks.
struct SubgroupCtx {
  std::shared_ptr<Group> grp;
  std::shared_ptr<CharacterTable> table;  // built on demand
};

struct BlockLocal {
  std::shared_ptr<Group> N;   // N_G(D) materialized
  std::shared_ptr<CharacterTable> TN;
  std::vector<Block> nblocks;
  std::vector<int> n_to_g;    // N-class -> G-class
  std::vector<int> n_elems;   // N's elements as G-indices
  int correspondent = -1;     // index into nblocks of the Brauer correspondent
  std::optional<CyclicDefectData> cyclic;
};

struct PrimeContext {
  long p = 2;
  PrimeIdealData ideal;
  std::vector<Block> blocks;
  Subgroup sylow;
  std::vector<BlockLocal> locals;  // parallel to blocks
};

struct GroupContext {
  const CorpusEntry* entry = nullptr;
  std::shared_ptr<Group> G;
  std::shared_ptr<CharacterTable> T;
  uint64_t seed = 0;
  std::map<long, PrimeContext> primes;
  std::map<std::vector<int>, SubgroupCtx> subgroup_cache;

  PrimeContext& prime(long p);
  SubgroupCtx& materialize(const std::vector<int>& elems);
};

GroupContext build_group_context(const CorpusEntry& entry, uint64_t seed);

// Individual statement checks (spec operation granularity).
CheckOutcome check_conjecture_main(GroupContext& gc, long p);
CheckOutcome check_conjecture_ntC(GroupContext& gc, long p);
CheckOutcome check_theorem_A(GroupContext& gc, long p);
std::vector<CheckOutcome> check_lemma_suite(GroupContext& gc, long p);
CheckOutcome check_amn_consequence(GroupContext& gc, long p);
std::vector<CheckOutcome> check_consequences(GroupContext& gc, long p);
// Brauer's first main theorem as a structural bijection check per defect-group
// class (proven statement; failure is a bug signal).
CheckOutcome check_brauer_bijection(GroupContext& gc, long p);
// Validation of the corpus entry's "expected" block, when present.
std::optional<CheckOutcome> check_fixture_expected(GroupContext& gc, long p);

struct RunOptions {
  std::optional<long> prime;          // filter
  std::optional<std::string> statement;  // filter
  uint64_t seed = 0;
  int jobs = 1;
};

struct VerificationReport {
  std::vector<CheckOutcome> outcomes;
  nlohmann::ordered_json group_tables = nlohmann::ordered_json::array();
  long pass = 0, failed = 0, findings = 0, inapplicable = 0;
  bool proven_violation = false;
  double seconds = 0;  // wall clock; reported on stderr only, never serialized
  int exit_code() const { return proven_violation || failed ? 1 : findings ? 2 : 0; }
};

VerificationReport run_corpus(const std::vector<CorpusEntry>& entries, const RunOptions& opts);

// Structured per-group data (character degrees, levels, block tables); used
// by run_corpus and by the table/blocks CLI commands.
nlohmann::ordered_json group_table_json(GroupContext& gc, std::optional<long> prime_filter);

}  // namespace blockscope
