#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "probeblock/graph.hpp"
#include "probeblock/io.hpp"
#include "probeblock/probe.hpp"

namespace probeblock {

/// Reads {"N1": [...], "N2": [...]}. A missing "N2" is the empty set. The
/// lower-case keys of a CLI report ("n1", "n2") are accepted too, so a report
/// can be fed back as a partition.
inline ProbePartition parse_partition(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("partition JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "partition JSON must be an object");
  const bool upper = j.contains("N1");
  if (!upper && !j.contains("n1")) throw ParseError(0, "partition JSON needs key \"N1\"");
  auto read = [&](const char* key) {
    VertexSet s;
    if (!j.contains(key)) return s;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw ParseError(0, std::string("partition key ") + key + " must be an array");
    for (const auto& v : arr) {
      if (!v.is_number_integer()) throw ParseError(0, std::string("partition key ") + key + " holds a non-integer");
      s.push_back(v.get<Vertex>());
    }
    return normalized(std::move(s));
  };
  return upper ? ProbePartition{read("N1"), read("N2")} : ProbePartition{read("n1"), read("n2")};
}

inline std::string to_json(const ProbePartition& p) {
  nlohmann::json j;
  j["N1"] = p.n1;
  j["N2"] = p.n2;
  return j.dump();
}

inline ProbePartition read_partition_file(const std::string& path) { return parse_partition(read_text_file(path)); }

}  // namespace probeblock
