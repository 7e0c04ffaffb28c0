#include "rfg/report.hpp"

#include "rfg/error.hpp"

namespace rfg {

std::string serialize_report(const RunReport& report) {
  nlohmann::json j;
  j["command"] = report.command;
  j["inputs"] = report.inputs;
  j["results"] = report.results;
  j["renderings"] = report.renderings;
  j["exit_code"] = report.exit_code;
  return j.dump(2) + "\n";
}

RunReport parse_report(std::string_view text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    r.results = j.at("results");
    r.renderings = j.at("renderings").get<std::map<std::string, std::string>>();
    r.exit_code = j.at("exit_code").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed run report: ") + e.what());
  }
}

}  // namespace rfg
