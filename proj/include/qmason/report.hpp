#ifndef QMASON_REPORT_HPP
#define QMASON_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qmason/field.hpp"
#include "qmason/theorems.hpp"

namespace qmason {

// Machine-readable result document shared by every subcommand. All numeric
// values are carried as canonical exact strings; nothing is ever rounded.
struct ReportDocument {
  static constexpr const char* schema_version = "1";

  std::string command;
  std::vector<std::string> argv;  // invocation echo
  std::optional<GaussianRational> q;
  std::vector<Premise> premises;
  std::vector<std::pair<std::string, std::string>> quantities;  // name -> exact string
  std::vector<std::pair<std::string, bool>> verdicts;
  nlohmann::json payload;  // optional witness / certificate / chains block

  void quantity(std::string name, std::string value) {
    quantities.emplace_back(std::move(name), std::move(value));
  }
  void quantity(std::string name, long value) {
    quantities.emplace_back(std::move(name), std::to_string(value));
  }
  void verdict(std::string name, bool value) {
    verdicts.emplace_back(std::move(name), value);
  }
};

nlohmann::json to_json(const ReportDocument& doc);
std::string to_text(const ReportDocument& doc);

// Structural check against the shipped schema: required members, member
// types, and the canonical number syntax of quantity values.
bool validate_report_json(const nlohmann::json& doc, std::string* why = nullptr);

}  // namespace qmason

#endif  // QMASON_REPORT_HPP
