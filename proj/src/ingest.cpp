#include "ontokg/ingest.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "ontokg/errors.hpp"
#include "ontokg/util.hpp"

namespace ontokg {

namespace {

using nlohmann::json;

std::optional<double> parse_number(std::string_view cell) {
  std::string_view s = trim(cell);
  if (s.empty()) return std::nullopt;
  double out = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) return std::nullopt;
  return out;
}

std::string cmp_name(RowFilter::Cmp cmp) {
  switch (cmp) {
    case RowFilter::Cmp::Lt: return "lt";
    case RowFilter::Cmp::Le: return "le";
    case RowFilter::Cmp::Gt: return "gt";
    case RowFilter::Cmp::Ge: return "ge";
    case RowFilter::Cmp::Eq: return "eq";
    case RowFilter::Cmp::Ne: return "ne";
    case RowFilter::Cmp::InSet: return "in_set";
    case RowFilter::Cmp::NonEmpty: return "nonempty";
  }
  return "?";
}

RowFilter::Cmp parse_cmp(const std::string& name, const std::string& where) {
  if (name == "lt") return RowFilter::Cmp::Lt;
  if (name == "le") return RowFilter::Cmp::Le;
  if (name == "gt") return RowFilter::Cmp::Gt;
  if (name == "ge") return RowFilter::Cmp::Ge;
  if (name == "eq") return RowFilter::Cmp::Eq;
  if (name == "ne") return RowFilter::Cmp::Ne;
  if (name == "in_set") return RowFilter::Cmp::InSet;
  if (name == "nonempty") return RowFilter::Cmp::NonEmpty;
  throw ManifestSyntaxError(where, "unknown comparator: " + name);
}

RowFilter parse_filter(const json& spec, const std::string& where) {
  if (!spec.is_object()) throw ManifestSyntaxError(where, "filter must be an object");
  RowFilter filter;
  filter.column = spec.value("column", 0);
  if (filter.column < 0) throw BadColumnSpecError(where + ": negative filter column");
  filter.cmp = parse_cmp(spec.value("comparator", std::string("nonempty")), where);
  const bool needs_value = filter.cmp != RowFilter::Cmp::NonEmpty;
  if (needs_value && !spec.contains("value"))
    throw ManifestSyntaxError(where, "comparator requires a value");
  if (filter.cmp == RowFilter::Cmp::InSet) {
    if (!spec["value"].is_array()) throw ManifestSyntaxError(where, "in_set value must be a list");
    for (const auto& v : spec["value"]) filter.values.insert(v.get<std::string>());
  } else if (needs_value) {
    const json& v = spec["value"];
    if (v.is_number()) {
      filter.numeric = true;
      filter.number = v.get<double>();
    } else if (v.is_string() &&
               (filter.cmp == RowFilter::Cmp::Eq || filter.cmp == RowFilter::Cmp::Ne)) {
      filter.text = v.get<std::string>();
    } else {
      throw ManifestSyntaxError(where, "filter value must be a number (or text for eq/ne)");
    }
    if (filter.cmp != RowFilter::Cmp::Eq && filter.cmp != RowFilter::Cmp::Ne && !filter.numeric)
      throw ManifestSyntaxError(where, "ordering comparators require a numeric value");
  }
  return filter;
}

TransformStep parse_step(const json& spec, const std::string& where) {
  if (!spec.is_object() || !spec.contains("op"))
    throw ManifestSyntaxError(where, "transform step must be an object with an \"op\"");
  const std::string op = spec["op"].get<std::string>();
  TransformStep step;
  if (op == "normalize") {
    step.kind = TransformStep::Kind::Normalize;
    step.trim = spec.value("trim", true);
    step.casefold = spec.value("casefold", false);
  } else if (op == "lookup") {
    step.kind = TransformStep::Kind::Lookup;
    step.table = spec.value("table", std::string());
  } else if (op == "template") {
    step.kind = TransformStep::Kind::Template;
    step.pattern = spec.value("pattern", std::string());
  } else if (op == "suffix") {
    step.kind = TransformStep::Kind::Suffix;
    step.text = spec.value("text", std::string());
  } else {
    throw ManifestSyntaxError(where, "unknown transform op: " + op);
  }
  return step;
}

TransformSpec parse_transform(const json& spec, const std::string& where) {
  TransformSpec transform;
  if (spec.is_null()) return transform;
  if (!spec.is_array()) throw ManifestSyntaxError(where, "transform must be a list of steps");
  for (const auto& step : spec) transform.steps.push_back(parse_step(step, where));
  transform.validate();
  return transform;
}

}  // namespace

std::string RowFilter::describe() const {
  std::ostringstream out;
  out << "column " << column << " " << cmp_name(cmp);
  if (cmp == Cmp::InSet) {
    out << " {" << values.size() << " values}";
  } else if (cmp != Cmp::NonEmpty) {
    if (numeric)
      out << " " << number;
    else
      out << " \"" << text << "\"";
  }
  return out.str();
}

FilterOutcome apply_filters(const std::vector<std::string>& row,
                            const std::vector<RowFilter>& filters) {
  for (const RowFilter& f : filters) {
    const std::string cell =
        f.column < static_cast<int>(row.size()) ? row[f.column] : std::string();
    bool pass = false;
    bool unparsable = false;
    switch (f.cmp) {
      case RowFilter::Cmp::NonEmpty:
        pass = !trim(cell).empty();
        break;
      case RowFilter::Cmp::InSet:
        pass = f.values.count(std::string(trim(cell))) > 0;
        break;
      case RowFilter::Cmp::Eq:
      case RowFilter::Cmp::Ne: {
        if (f.numeric) {
          auto value = parse_number(cell);
          if (!value) {
            unparsable = true;
            break;
          }
          pass = (f.cmp == RowFilter::Cmp::Eq) == (*value == f.number);
        } else {
          pass = (f.cmp == RowFilter::Cmp::Eq) == (std::string(trim(cell)) == f.text);
        }
        break;
      }
      default: {
        auto value = parse_number(cell);
        if (!value) {
          unparsable = true;
          break;
        }
        switch (f.cmp) {
          case RowFilter::Cmp::Lt: pass = *value < f.number; break;
          case RowFilter::Cmp::Le: pass = *value <= f.number; break;
          case RowFilter::Cmp::Gt: pass = *value > f.number; break;
          case RowFilter::Cmp::Ge: pass = *value >= f.number; break;
          default: break;
        }
        break;
      }
    }
    if (unparsable)
      return {false, "column " + std::to_string(f.column) + " unparsable numeric"};
    if (!pass) return {false, "failed " + f.describe()};
  }
  return {true, {}};
}

int SourceManifest::max_column() const {
  int max_col = std::max(subject_column, object_column);
  for (const RowFilter& f : filters) max_col = std::max(max_col, f.column);
  return max_col;
}

std::vector<SourceManifest> load_manifests(const std::string& path, Interner& interner,
                                           const RelationRegistry& registry) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ManifestSyntaxError(path + " byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_array()) throw ManifestSyntaxError(path, "top level must be an array of sources");

  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<SourceManifest> manifests;
  std::set<std::string> names;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& src = doc[i];
    const std::string where = path + " source[" + std::to_string(i) + "]";
    if (!src.is_object()) throw ManifestSyntaxError(where, "source must be an object");
    SourceManifest m;
    m.name = src.value("name", std::string());
    if (m.name.empty()) throw ManifestSyntaxError(where, "missing \"name\"");
    if (!names.insert(m.name).second)
      throw ManifestSyntaxError(where, "duplicate source name: " + m.name);
    if (!src.contains("path")) throw ManifestSyntaxError(where, "missing \"path\"");
    m.path = (base / src["path"].get<std::string>()).string();
    const std::string delim = src.value("delimiter", std::string("\t"));
    if (delim.size() != 1) throw ManifestSyntaxError(where, "delimiter must be one character");
    m.delimiter = delim[0];
    m.has_header = src.value("has_header", true);
    m.subject_column = src.value("subject_column", -1);
    m.object_column = src.value("object_column", -1);
    if (m.subject_column < 0 || m.object_column < 0)
      throw BadColumnSpecError(where + ": subject_column and object_column required");
    if (m.subject_column == m.object_column)
      throw BadColumnSpecError(where + ": subject_column equals object_column");
    auto subject_label = parse_node_type(src.value("subject_label", std::string()));
    auto object_label = parse_node_type(src.value("object_label", std::string()));
    if (!subject_label || !object_label)
      throw ManifestSyntaxError(where, "unknown subject_label/object_label node type");
    m.subject_label = *subject_label;
    m.object_label = *object_label;
    m.relation_iri = src.value("relation", std::string());
    if (m.relation_iri.empty()) throw ManifestSyntaxError(where, "missing \"relation\"");
    m.relation = interner.intern(m.relation_iri);
    if (!registry.contains(m.relation)) throw UnknownRelationError(m.relation_iri);
    if (src.contains("filters"))
      for (const auto& f : src["filters"]) m.filters.push_back(parse_filter(f, where));
    m.subject_transform = parse_transform(src.value("subject_transform", json()), where);
    m.object_transform = parse_transform(src.value("object_transform", json()), where);
    manifests.push_back(std::move(m));
  }
  return manifests;
}

void read_rows(const SourceManifest& manifest, const std::function<void(Row&&)>& on_row,
               const std::function<void(std::size_t, std::size_t)>& on_ragged) {
  const int needed = manifest.max_column();
  std::size_t line_no = 0;
  bool header_pending = manifest.has_header;
  for (const std::string& raw : read_lines(manifest.path)) {
    ++line_no;
    if (trim(raw).empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    std::vector<std::string> cells = split(raw, manifest.delimiter);
    for (std::string& cell : cells) cell = std::string(trim(cell));
    if (static_cast<int>(cells.size()) <= needed) {
      on_ragged(line_no, cells.size());
      continue;
    }
    on_row(Row{line_no, std::move(cells)});
  }
}

std::vector<Row> read_rows(const SourceManifest& manifest) {
  std::vector<Row> rows;
  read_rows(
      manifest, [&](Row&& row) { rows.push_back(std::move(row)); },
      [&](std::size_t line, std::size_t cells) {
        throw RaggedRowError(manifest.name, line, cells,
                             static_cast<std::size_t>(manifest.max_column()));
      });
  return rows;
}

}  // namespace ontokg
