#include "qmason/report.hpp"

#include <cctype>
#include <sstream>

namespace qmason {

nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json j;
  j["schema_version"] = ReportDocument::schema_version;
  j["command"] = doc.command;
  j["argv"] = doc.argv;
  j["q"] = doc.q ? doc.q->str() : "";
  nlohmann::json premises = nlohmann::json::array();
  for (const auto& p : doc.premises) {
    nlohmann::json row;
    row["name"] = p.name;
    row["holds"] = p.holds;
    row["witness"] = p.witness;
    premises.push_back(std::move(row));
  }
  j["premises"] = std::move(premises);
  nlohmann::json quantities = nlohmann::json::object();
  for (const auto& [name, value] : doc.quantities) quantities[name] = value;
  j["quantities"] = std::move(quantities);
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& [name, value] : doc.verdicts) verdicts[name] = value;
  j["verdicts"] = std::move(verdicts);
  if (!doc.payload.is_null()) j["payload"] = doc.payload;
  return j;
}

std::string to_text(const ReportDocument& doc) {
  std::ostringstream out;
  if (doc.q) out << "q: " << doc.q->str() << '\n';
  for (const auto& p : doc.premises) {
    out << "premise " << p.name << ": " << (p.holds ? "holds" : "fails");
    if (!p.witness.empty()) out << " (" << p.witness << ")";
    out << '\n';
  }
  for (const auto& [name, value] : doc.quantities) out << name << ": " << value << '\n';
  if (doc.payload.is_object())
    for (const auto& [name, value] : doc.payload.items()) {
      if (value.is_string())
        out << name << ": " << value.get<std::string>() << '\n';
      else
        out << name << ": " << value.dump() << '\n';
    }
  for (const auto& [name, value] : doc.verdicts)
    out << name << ": " << (value ? "yes" : "no") << '\n';
  return out.str();
}

namespace {

bool canonical_number(const std::string& s) {
  std::size_t pos = 0;
  if (pos < s.size() && s[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
  if (digits == 0) return false;
  if (pos == s.size()) return true;
  if (s[pos] != '/') return false;
  ++pos;
  digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
  return digits > 0 && pos == s.size();
}

bool fail(std::string* why, const std::string& message) {
  if (why) *why = message;
  return false;
}

}  // namespace

bool validate_report_json(const nlohmann::json& doc, std::string* why) {
  if (!doc.is_object()) return fail(why, "document is not an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "schema_version" && key != "command" && key != "argv" && key != "q" &&
        key != "premises" && key != "quantities" && key != "verdicts" && key != "payload")
      return fail(why, "unknown member '" + key + "'");
  }
  for (const char* key : {"schema_version", "command", "q"})
    if (!doc.contains(key) || !doc[key].is_string())
      return fail(why, std::string("missing or non-string member '") + key + "'");
  if (doc["schema_version"] != ReportDocument::schema_version)
    return fail(why, "unsupported schema_version");
  if (!doc.contains("argv") || !doc["argv"].is_array())
    return fail(why, "missing or non-array member 'argv'");
  for (const auto& a : doc["argv"])
    if (!a.is_string()) return fail(why, "argv entries must be strings");
  if (!doc.contains("premises") || !doc["premises"].is_array())
    return fail(why, "missing or non-array member 'premises'");
  for (const auto& p : doc["premises"]) {
    if (!p.is_object() || !p.contains("name") || !p["name"].is_string() ||
        !p.contains("holds") || !p["holds"].is_boolean() || !p.contains("witness") ||
        !p["witness"].is_string())
      return fail(why, "malformed premise row");
  }
  if (!doc.contains("quantities") || !doc["quantities"].is_object())
    return fail(why, "missing or non-object member 'quantities'");
  for (const auto& [name, value] : doc["quantities"].items()) {
    if (!value.is_string()) return fail(why, "quantity '" + name + "' is not a string");
    if (!canonical_number(value.get<std::string>()))
      return fail(why, "quantity '" + name + "' is not a canonical integer/rational");
  }
  if (!doc.contains("verdicts") || !doc["verdicts"].is_object())
    return fail(why, "missing or non-object member 'verdicts'");
  for (const auto& [name, value] : doc["verdicts"].items())
    if (!value.is_boolean()) return fail(why, "verdict '" + name + "' is not a boolean");
  // No number-typed JSON values anywhere: floats cannot sneak in.
  return true;
}

}  // namespace qmason
