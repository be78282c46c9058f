#pragma once

// Built-in coupling-pair dataset (the table rows with their section-3 ray
// lists and basis certificates), embedded as JSON and parsed through the same
// loader as external pair files.

#include <vector>

#include "toricdual/io.hpp"

namespace toricdual {

namespace detail {
const char* builtin_pairs_json();
}  // namespace detail

inline std::vector<CouplingPair> parse_pairs(const json& doc) {
  const json& arr = doc.is_array() ? doc : doc.at("pairs");
  std::vector<CouplingPair> out;
  out.reserve(arr.size());
  for (const auto& j : arr) out.push_back(pair_from_json(j));
  return out;
}

inline std::vector<CouplingPair> builtin_pairs() {
  static const std::vector<CouplingPair> pairs = [] {
    json doc = json::parse(detail::builtin_pairs_json());
    return parse_pairs(doc);
  }();
  return pairs;
}

inline std::vector<CouplingPair> load_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_pairs(doc);
}

}  // namespace toricdual

#include "toricdual/builtin_data.inc"
