#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "blockscope/perm.hpp"

namespace blockscope {

struct CorpusEntry {
  std::string name;
  int degree = 1;
  std::vector<std::vector<Point>> generators;
  nlohmann::ordered_json expected;  // optional per-prime expectations
};

// Parse and validate a corpus file:
//   { "groups": [ { "name": ..., "degree": n, "generators": [[...]], "expected": {...} } ] }
// with 0-based image arrays. Duplicate names and malformed permutations are
// rejected.
std::vector<CorpusEntry> ingest(const std::string& path);
std::vector<CorpusEntry> ingest_text(const std::string& text, const std::string& origin);

// Serialization that round-trips through ingest_text.
nlohmann::ordered_json emit(const std::vector<CorpusEntry>& entries);

// FNV-1a digest of the raw corpus bytes, as "fnv1a:<hex>".
std::string file_digest(const std::string& path);

}  // namespace blockscope
