#pragma once

// Machine-readable run reports emitted by `rfg --format structured`.
// Serialization is JSON with sorted keys, so identical inputs give identical
// bytes.

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

namespace rfg {

struct RunReport {
  std::string command;
  std::map<std::string, std::string> inputs;
  nlohmann::json results = nlohmann::json::object();
  // Exact-arithmetic text renderings (series, polynomials, words).
  std::map<std::string, std::string> renderings;
  int exit_code = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::string serialize_report(const RunReport& report);
// Throws ParseError on malformed input.
RunReport parse_report(std::string_view text);

}  // namespace rfg
