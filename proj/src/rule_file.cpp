#include "ramseq/rule_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ramseq {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> label_list(const json& node, const char* field) {
  if (!node.is_array()) throw ParseError(std::string("'") + field + "' must be a list of labels");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw ParseError(std::string("'") + field + "' entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

AttentionRule build(const json& doc) {
  if (!doc.is_object()) throw ParseError("rule document must be a JSON object");

  std::vector<std::string> labels = label_list(field(doc, "alternatives"), "alternatives");
  const json& utils = field(doc, "utilities");
  if (!utils.is_object()) throw ParseError("'utilities' must map labels to numbers");
  std::vector<double> utilities;
  for (const auto& label : labels) {
    auto it = utils.find(label);
    if (it == utils.end() || !it->is_number()) {
      throw ParseError("no numeric utility for alternative '" + label + "'");
    }
    utilities.push_back(it->get<double>());
  }
  for (const auto& [key, _] : utils.items()) {
    if (std::find(labels.begin(), labels.end(), key) == labels.end()) {
      throw ParseError("utility given for unknown alternative '" + key + "'");
    }
  }

  EmptySetMode mode = EmptySetMode::renormalize;
  if (auto it = doc.find("mode"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("'mode' must be a string");
    mode = parse_empty_set_mode(it->get<std::string>());
  }

  Universe universe(std::move(labels), std::move(utilities));
  std::vector<AttentionEntry> entries;
  const json& rows = field(doc, "attention");
  if (!rows.is_array()) throw ParseError("'attention' must be a list");
  for (const auto& row : rows) {
    if (!row.is_object()) throw ParseError("attention rows must be objects");
    const json& prob = field(row, "prob");
    if (!prob.is_number()) throw ParseError("'prob' must be a number");
    entries.push_back({universe.set_of(label_list(field(row, "menu"), "menu")),
                       universe.set_of(label_list(field(row, "consider"), "consider")),
                       prob.get<double>()});
  }
  return load_explicit(universe, mode, entries);
}

ordered_json labels_of(const Universe& u, ItemSet set) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : set.members()) out.push_back(u.label(i));
  return out;
}

}  // namespace

AttentionRule parse_rule(std::string_view text) {
  try {
    return build(json::parse(text.begin(), text.end()));
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed rule document: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

AttentionRule read_rule_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open rule file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_rule(buffer.str());
}

std::string write_rule(const AttentionRule& rule, int indent) {
  const Universe& u = rule.universe();
  ordered_json doc;
  doc["alternatives"] = u.labels();
  ordered_json utils = ordered_json::object();
  for (std::size_t i = 0; i < u.size(); ++i) utils[u.label(i)] = u.utility(i);
  doc["utilities"] = std::move(utils);
  doc["mode"] = to_string(rule.mode());
  ordered_json rows = ordered_json::array();
  for (const auto& e : rule.entries()) {
    ordered_json row;
    row["menu"] = labels_of(u, e.menu);
    row["consider"] = labels_of(u, e.subset);
    row["prob"] = e.probability;
    rows.push_back(std::move(row));
  }
  doc["attention"] = std::move(rows);
  return doc.dump(indent) + "\n";
}

}  // namespace ramseq
