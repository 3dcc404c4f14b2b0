#include "blockscope/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "blockscope/common.hpp"

namespace blockscope {

using nlohmann::ordered_json;

std::vector<CorpusEntry> ingest_text(const std::string& text, const std::string& origin) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error, origin + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array())
    fail(Errc::parse_error, origin + ": expected an object with a \"groups\" array");
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  for (const auto& g : doc["groups"]) {
    CorpusEntry e;
    if (!g.contains("name") || !g["name"].is_string())
      fail(Errc::parse_error, origin + ": group entry without a name");
    e.name = g["name"].get<std::string>();
    if (!names.insert(e.name).second)
      fail(Errc::duplicate_name, origin + ": duplicate group name " + e.name);
    if (!g.contains("degree") || !g["degree"].is_number_integer() || g["degree"].get<long>() < 1)
      fail(Errc::parse_error, origin + ": group " + e.name + " needs a positive degree");
    e.degree = (int)g["degree"].get<long>();
    if (!g.contains("generators") || !g["generators"].is_array())
      fail(Errc::parse_error, origin + ": group " + e.name + " needs a generators array");
    for (const auto& arr : g["generators"]) {
      if (!arr.is_array())
        fail(Errc::parse_error, origin + ": generator of " + e.name + " is not an array");
      std::vector<Point> img;
      for (const auto& v : arr) {
        if (!v.is_number_integer())
          fail(Errc::parse_error, origin + ": non-integer point in " + e.name);
        img.push_back((Point)v.get<long>());
      }
      if ((int)img.size() != e.degree)
        fail(Errc::malformed_permutation,
             origin + ": generator length mismatch in " + e.name);
      std::vector<char> seen(e.degree, 0);
      for (Point x : img) {
        if (x < 0 || x >= e.degree || seen[x])
          fail(Errc::malformed_permutation,
               origin + ": generator of " + e.name + " is not a bijection");
        seen[x] = 1;
      }
      e.generators.push_back(std::move(img));
    }
    if (g.contains("expected")) e.expected = g["expected"];
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open corpus file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ingest_text(ss.str(), path);
}

ordered_json emit(const std::vector<CorpusEntry>& entries) {
  ordered_json doc;
  doc["groups"] = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json g;
    g["name"] = e.name;
    g["degree"] = e.degree;
    g["generators"] = e.generators;
    if (!e.expected.is_null()) g["expected"] = e.expected;
    doc["groups"].push_back(std::move(g));
  }
  return doc;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open file for digest: " + path);
  uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= (uint64_t)(unsigned char)c;
    h *= 1099511628211ull;
  }
  char buf[32];
  snprintf(buf, sizeof buf, "fnv1a:%016llx", (unsigned long long)h);
  return buf;
}

}  // namespace blockscope
