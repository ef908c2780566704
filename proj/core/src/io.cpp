#include "clhs/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "clhs/errors.hpp"

namespace clhs {
namespace {

using nlohmann::json;

double number_at(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SpecError(path + "." + key + ": missing field");
  if (!it->is_number()) throw SpecError(path + "." + key + ": expected a number");
  return it->get<double>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw SpecError(path + "." + key + ": unknown field");
  }
}

Distribution parse_variable(const json& v, const std::string& path) {
  if (!v.is_object()) throw SpecError(path + ": expected an object");
  const auto name_it = v.find("name");
  if (name_it == v.end() || !name_it->is_string()) {
    throw SpecError(path + ".name: expected a string");
  }
  const auto dist_it = v.find("dist");
  if (dist_it == v.end() || !dist_it->is_string()) {
    throw SpecError(path + ".dist: expected a string");
  }
  const auto name = name_it->get<std::string>();
  const auto kind = dist_it->get<std::string>();
  try {
    if (kind == "uniform") {
      reject_unknown(v, {"name", "dist", "min", "max"}, path);
      return Distribution::uniform(number_at(v, "min", path), number_at(v, "max", path), name);
    }
    if (kind == "normal") {
      reject_unknown(v, {"name", "dist", "mean", "sd"}, path);
      return Distribution::normal(number_at(v, "mean", path), number_at(v, "sd", path), name);
    }
    if (kind == "truncnorm" || kind == "truncated-normal") {
      reject_unknown(v, {"name", "dist", "mean", "sd", "min", "max"}, path);
      return Distribution::truncated_normal(number_at(v, "mean", path), number_at(v, "sd", path),
                                            number_at(v, "min", path), number_at(v, "max", path),
                                            name);
    }
  } catch (const DomainError& e) {
    throw SpecError(path + ": " + e.what());
  }
  throw SpecError(path + ".dist: unknown distribution kind '" + kind + "'");
}

std::size_t link_end(const json& link, const char* key, const std::vector<Distribution>& vars,
                     const std::string& path) {
  const auto it = link.find(key);
  const std::string field = path + "." + key;
  if (it == link.end()) throw SpecError(field + ": missing field");
  if (it->is_string()) {
    const auto name = it->get<std::string>();
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j].name() == name) return j;
    }
    throw SpecError(field + ": no variable named '" + name + "'");
  }
  if (!it->is_number_integer()) throw SpecError(field + ": expected a 1-based index or a name");
  const auto index = it->get<long long>();
  if (index < 1 || static_cast<std::size_t>(index) > vars.size()) {
    throw SpecError(field + ": index " + std::to_string(index) + " out of range 1.." +
                    std::to_string(vars.size()));
  }
  return static_cast<std::size_t>(index - 1);
}

Relation parse_relation(const json& link, const std::string& path) {
  const auto it = link.find("relation");
  if (it == link.end() || !it->is_string()) {
    throw SpecError(path + ".relation: expected \"less\" or \"greater\"");
  }
  const auto s = it->get<std::string>();
  if (s == "less" || s == "<") return Relation::less;
  if (s == "greater" || s == ">") return Relation::greater;
  throw SpecError(path + ".relation: unknown relation '" + s + "'");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view token, std::size_t line, std::size_t col) {
  double v = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw SpecError("samples line " + std::to_string(line) + ", field " + std::to_string(col) +
                    ": not a number '" + std::string(token) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

SampleMatrix parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw SpecError("samples: missing CSV header");

  std::vector<std::string> names;
  for (auto field : split(lines.front(), ',')) names.emplace_back(field);
  const std::size_t p = names.size();
  const std::size_t n = lines.size() - 1;

  SampleMatrix m(names, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto fields = split(lines[i + 1], ',');
    if (fields.size() != p) {
      throw SpecError("samples line " + std::to_string(i + 2) + ": expected " +
                      std::to_string(p) + " fields, got " + std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j < p; ++j) {
      try {
        m.set(i, j, parse_double(fields[j], i + 2, j + 1));
      } catch (const DomainError& e) {
        throw SpecError("samples line " + std::to_string(i + 2) + ": " + e.what());
      }
    }
  }
  return m;
}

SampleMatrix parse_json_samples(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("samples: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("names") || !doc.contains("rows")) {
    throw SpecError("samples: expected an object with \"names\" and \"rows\"");
  }
  if (!doc["names"].is_array() || !doc["rows"].is_array()) {
    throw SpecError("samples: \"names\" and \"rows\" must be arrays");
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < doc["names"].size(); ++j) {
    const auto& v = doc["names"][j];
    if (!v.is_string()) throw SpecError("samples.names[" + std::to_string(j) + "]: not a string");
    names.push_back(v.get<std::string>());
  }
  const auto& rows = doc["rows"];
  SampleMatrix m(names, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string path = "samples.rows[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != names.size()) {
      throw SpecError(path + ": expected " + std::to_string(names.size()) + " numbers");
    }
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (!rows[i][j].is_number()) {
        throw SpecError(path + "[" + std::to_string(j) + "]: not a number");
      }
      try {
        m.set(i, j, rows[i][j].get<double>());
      } catch (const DomainError& e) {
        throw SpecError(path + ": " + e.what());
      }
    }
  }
  if (const auto it = doc.find("seed"); it != doc.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) throw SpecError("samples.seed: expected an unsigned integer");
    m.set_seed(it->get<std::uint64_t>());
  }
  return m;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

DesignSpec parse_design_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("spec: expected a JSON object");
  reject_unknown(doc, {"variables", "links", "metadata"}, "spec");

  const auto vars_it = doc.find("variables");
  if (vars_it == doc.end() || !vars_it->is_array()) {
    throw SpecError("variables: expected an array");
  }
  std::vector<Distribution> variables;
  for (std::size_t j = 0; j < vars_it->size(); ++j) {
    variables.push_back(parse_variable((*vars_it)[j], "variables[" + std::to_string(j) + "]"));
  }

  std::vector<ConstraintLink> links;
  if (const auto it = doc.find("links"); it != doc.end()) {
    if (!it->is_array()) throw SpecError("links: expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const auto& l = (*it)[k];
      const std::string path = "links[" + std::to_string(k) + "]";
      if (!l.is_object()) throw SpecError(path + ": expected an object");
      reject_unknown(l, {"left", "right", "relation"}, path);
      const auto left = link_end(l, "left", variables, path);
      const auto right = link_end(l, "right", variables, path);
      if (right != left + 1) {
        throw SpecError(path + ": links must join consecutive variables (got " +
                        std::to_string(left + 1) + " -> " + std::to_string(right + 1) + ")");
      }
      links.push_back({left, parse_relation(l, path)});
    }
  }

  json metadata = json::object();
  if (const auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) throw SpecError("metadata: expected an object");
    metadata = *it;
  }
  return DesignSpec(std::move(variables), std::move(links), std::move(metadata));
}

json design_spec_to_json(const DesignSpec& spec) {
  json vars = json::array();
  for (const auto& v : spec.variables()) {
    json o{{"name", v.name()}, {"dist", std::string(to_string(v.kind()))}};
    switch (v.kind()) {
      case DistributionKind::uniform:
        o["min"] = v.lower();
        o["max"] = v.upper();
        break;
      case DistributionKind::normal:
        o["mean"] = v.mean();
        o["sd"] = v.sd();
        break;
      case DistributionKind::truncated_normal:
        o["mean"] = v.mean();
        o["sd"] = v.sd();
        o["min"] = v.lower();
        o["max"] = v.upper();
        break;
    }
    vars.push_back(std::move(o));
  }
  json links = json::array();
  for (const auto& l : spec.links()) {
    links.push_back({{"left", l.left + 1},
                     {"right", l.right() + 1},
                     {"relation", std::string(to_string(l.relation))}});
  }
  return json{{"metadata", spec.metadata()}, {"variables", vars}, {"links", links}};
}

std::string serialize_design_spec(const DesignSpec& spec) {
  return design_spec_to_json(spec).dump(2) + "\n";
}

std::string write_samples(const SampleMatrix& m, SampleFormat format) {
  if (format == SampleFormat::json) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    json doc{{"names", m.names()}, {"rows", rows}};
    doc["seed"] = m.seed() ? json(*m.seed()) : json(nullptr);
    return doc.dump() + "\n";
  }
  std::string out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j) out += ',';
    out += m.names()[j];
  }
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

SampleMatrix parse_samples(std::string_view text, SampleFormat format) {
  return format == SampleFormat::json ? parse_json_samples(text) : parse_csv(text);
}

SampleFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? SampleFormat::json : SampleFormat::csv;
}

json report_to_json(const DiagnosticsReport& r) {
  json columns = json::array();
  for (const auto& c : r.columns) {
    columns.push_back({{"name", c.name}, {"stratified", c.stratified}, {"ks", c.ks}});
  }
  json links = json::array();
  for (const auto& l : r.links) {
    links.push_back({{"left", l.left + 1},
                     {"right", l.right + 1},
                     {"relation", std::string(to_string(l.relation))},
                     {"gamma", optional_number(l.gamma)},
                     {"predicted_rho", optional_number(l.predicted_rho)},
                     {"prediction_extrapolated", l.prediction_extrapolated},
                     {"empirical_rho", optional_number(l.empirical_rho)},
                     {"violations", l.violations},
                     {"notes", l.notes}});
  }
  return json{{"rows", r.rows},
              {"all_stratified", r.all_stratified()},
              {"all_links_hold", r.all_links_hold()},
              {"columns", columns},
              {"links", links}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

}  // namespace clhs
