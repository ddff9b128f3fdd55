#include "postwitt/serialize.hpp"

#include <algorithm>
#include <cstdio>

namespace postwitt {

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

Json window_to_json(const Window& w) {
  return Json{{"lo", w.lo}, {"hi", w.hi}};
}

Json report_to_json(const VerifyReport& report) {
  Json j;
  j["identity"] = report.identity;
  j["window"] = window_to_json(report.window);
  j["total_checked"] = report.total_checked;
  j["failure_count"] = report.failure_count;
  j["passed"] = report.passed;
  Json residuals = Json::array();
  for (const auto& r : report.residuals) {
    Json item;
    item["identity"] = r.identity;
    item["indices"] = r.indices;
    item["value"] = r.value_render();
    residuals.push_back(std::move(item));
  }
  j["residuals"] = std::move(residuals);
  if (!report.notes.empty()) {
    Json notes;
    for (const auto& [k, v] : report.notes) notes[k] = v;
    j["notes"] = std::move(notes);
  }
  return j;
}

namespace {

std::string f0_render(const F0Constraint& f0) {
  return f0.kind == F0Constraint::Kind::free ? "free"
                                             : rational_to_string(f0.value);
}

}  // namespace

Json classification_to_json(const ClassificationReport& report) {
  Json j;
  j["mode"] = report.mode;
  j["window"] = window_to_json(report.window);
  j["needs_review"] = report.needs_review;
  Json solutions = Json::array();
  for (const auto& s : report.solutions) {
    Json item;
    item["matched"] = s.matched;
    if (const auto* graded = std::get_if<GradedSolution>(&s.data)) {
      Json values;
      for (const auto& [m, v] : graded->f_values)
        values[std::to_string(m)] = v;
      item["f_values"] = std::move(values);
      item["f0"] = f0_render(graded->f0);
    } else {
      const auto& ray = std::get<ShiftingRay>(s.data);
      item["family"] = family_name(ray.family);
      if (ray.f0) item["f0"] = rational_to_string(*ray.f0);
      item["nu"] = ray.nu;
      Json gamma;
      for (const auto& [m, v] : ray.gamma)
        gamma[std::to_string(m)] = rational_to_string(v);
      item["gamma"] = std::move(gamma);
      item["nullspace_dim"] = ray.nullspace_dim;
    }
    solutions.push_back(std::move(item));
  }
  j["solutions"] = std::move(solutions);
  if (report.oracle_digest) j["oracle_digest"] = *report.oracle_digest;
  if (!report.notes.empty()) {
    Json notes;
    for (const auto& [k, v] : report.notes) notes[k] = v;
    j["notes"] = std::move(notes);
  }
  return j;
}

Json index_function_to_json(const IndexFunction& f) {
  Json pieces = Json::array();
  for (const auto& iv : f.canonical_intervals()) {
    Json piece;
    piece["lo"] = iv.lo ? Json(*iv.lo) : Json(nullptr);
    piece["hi"] = iv.hi ? Json(*iv.hi) : Json(nullptr);
    piece["value"] = iv.value.render();
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

Json spec_to_json(const PostLieSpec& spec) {
  Json j;
  if (const auto* graded = std::get_if<GradedSpec>(&spec)) {
    j["variant"] = "graded";
    j["f"] = index_function_to_json(graded->f);
  } else if (const auto* shifting = std::get_if<ShiftingSpec>(&spec)) {
    j["variant"] = "shifting";
    j["f"] = index_function_to_json(shifting->f);
    j["g"] = index_function_to_json(shifting->g);
    j["nu"] = shifting->nu;
  } else {
    const auto& table = std::get<TableSpec>(spec);
    j["variant"] = "table";
    j["m_range"] = window_to_json(table.m_range);
    j["n_range"] = window_to_json(table.n_range);
    Json entries = Json::array();
    for (const auto& [key, terms] : table.entries) {
      Json entry;
      entry["m"] = key.first;
      entry["n"] = key.second;
      Json list = Json::array();
      for (const auto& [index, coeff] : terms) {
        list.push_back(Json{{"index", index}, {"coeff", coeff.render()}});
      }
      entry["terms"] = std::move(list);
      entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
  }
  return j;
}

Json rb_operator_to_json(const RBOperator& op) {
  Json j;
  j["f"] = index_function_to_json(op.f);
  j["g"] = index_function_to_json(op.g);
  j["nu"] = op.nu;
  return j;
}

std::string file_kind_name(FileKind kind) {
  switch (kind) {
    case FileKind::postlie: return "postlie";
    case FileKind::rotabaxter: return "rotabaxter";
    case FileKind::liealgebra: return "liealgebra";
  }
  return "?";
}

FileKind file_kind_from_name(const std::string& name) {
  if (name == "postlie") return FileKind::postlie;
  if (name == "rotabaxter") return FileKind::rotabaxter;
  if (name == "liealgebra") return FileKind::liealgebra;
  raise(Errc::schema_mismatch, "unknown kind '" + name + "'");
}

std::string structure_file_to_string(const StructureFile& file) {
  Json j;
  j["schema_version"] = "1";
  j["kind"] = file_kind_name(file.kind);
  j["name"] = file.name;
  Json params = Json::object();
  for (const auto& [name, value] : file.params)
    params[name] = value ? Json(*value) : Json(nullptr);
  j["params"] = std::move(params);
  j["nu"] = file.nu ? Json(*file.nu) : Json(nullptr);
  j["window"] = window_to_json(file.window);
  Json entries = Json::array();
  for (const auto& entry : file.entries) {
    Json e;
    e["m"] = entry.m;
    e["n"] = entry.n;
    Json terms = Json::array();
    for (const auto& term : entry.terms)
      terms.push_back(Json{{"index", term.index}, {"coeff", term.coeff}});
    e["terms"] = std::move(terms);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return dump_canonical(j);
}

StructureFile structure_file_parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    // nlohmann reports the byte offset; recover line/column for diagnostics.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < err.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    raise(Errc::parse_error, "invalid JSON at line " + std::to_string(line) +
                                 ", column " + std::to_string(col));
  }

  auto require = [&](const char* key) -> const Json& {
    if (!j.contains(key))
      raise(Errc::schema_mismatch, std::string("missing field '") + key + "'");
    return j.at(key);
  };

  try {
  if (!require("schema_version").is_string() ||
      j.at("schema_version").get<std::string>() != "1")
    raise(Errc::schema_mismatch, "unsupported schema_version");

  StructureFile file;
  file.kind = file_kind_from_name(require("kind").get<std::string>());
  file.name = require("name").get<std::string>();
  for (const auto& [key, value] : require("params").items()) {
    param_from_name(key);  // must be a declared parameter
    if (value.is_null()) {
      file.params[key] = std::nullopt;
    } else {
      const std::string text_value = value.get<std::string>();
      if (rational_to_string(rational_from_string(text_value)) != text_value)
        raise(Errc::schema_mismatch,
              "parameter value '" + text_value + "' is not canonical");
      file.params[key] = text_value;
    }
  }
  const Json& nu = require("nu");
  if (!nu.is_null()) file.nu = nu.get<std::int64_t>();
  const Json& win = require("window");
  if (!win.contains("lo") || !win.contains("hi"))
    raise(Errc::schema_mismatch, "window needs lo and hi");
  file.window = Window(win.at("lo").get<std::int64_t>(),
                       win.at("hi").get<std::int64_t>());

  const Json& entries = require("entries");
  if (!entries.is_array()) raise(Errc::schema_mismatch, "entries must be an array");
  std::optional<std::pair<std::int64_t, std::int64_t>> prev;
  for (const auto& e : entries) {
    StructureFile::Entry entry;
    if (!e.contains("m") || !e.contains("n") || !e.contains("terms"))
      raise(Errc::schema_mismatch, "entry needs m, n and terms");
    entry.m = e.at("m").get<std::int64_t>();
    entry.n = e.at("n").get<std::int64_t>();
    if (prev && !(*prev < std::make_pair(entry.m, entry.n)))
      raise(Errc::parse_error,
            "entries out of canonical (m, n) order at (" +
                std::to_string(entry.m) + ", " + std::to_string(entry.n) + ")");
    prev = {entry.m, entry.n};
    if (!file.window.contains(entry.m) || !file.window.contains(entry.n))
      raise(Errc::schema_mismatch,
            "entry (" + std::to_string(entry.m) + ", " +
                std::to_string(entry.n) + ") escapes the declared window");
    std::optional<std::int64_t> prev_index;
    for (const auto& t : e.at("terms")) {
      if (!t.contains("index") || !t.contains("coeff"))
        raise(Errc::schema_mismatch, "term needs index and coeff");
      StructureFile::Term term;
      term.index = t.at("index").get<std::int64_t>();
      term.coeff = t.at("coeff").get<std::string>();
      if (prev_index && term.index <= *prev_index)
        raise(Errc::parse_error, "term indices out of canonical order");
      prev_index = term.index;
      const PolyScalar parsed = PolyScalar::parse(term.coeff);
      if (parsed.is_zero())
        raise(Errc::schema_mismatch, "zero coefficients must be omitted");
      if (parsed.render() != term.coeff)
        raise(Errc::parse_error,
              "coefficient '" + term.coeff + "' is not in canonical form");
      entry.terms.push_back(std::move(term));
    }
    if (entry.terms.empty())
      raise(Errc::schema_mismatch, "entries with no terms must be omitted");
    file.entries.push_back(std::move(entry));
  }
  return file;
  } catch (const nlohmann::json::exception& err) {
    // Wrong JSON types in otherwise well-formed documents.
    raise(Errc::schema_mismatch, std::string("malformed field: ") + err.what());
  }
}

namespace {

StructureFile::Entry entry_from_element(std::int64_t m, std::int64_t n,
                                        const WittElement& value) {
  StructureFile::Entry entry;
  entry.m = m;
  entry.n = n;
  for (const auto& [index, coeff] : value.support())
    entry.terms.push_back({index, coeff.render()});
  return entry;
}

}  // namespace

StructureFile export_spec(
    const PostLieSpec& spec, FileKind kind, const std::string& name,
    const std::map<std::string, std::optional<std::string>>& params,
    std::optional<std::int64_t> nu, const Window& w) {
  StructureFile file;
  file.kind = kind;
  file.name = name;
  file.params = params;
  file.nu = nu;
  file.window = w;
  // The bracket transform applies to formula-backed products only; a
  // materialized table already holds whatever its kind says, so its rows
  // are dumped verbatim (this keeps re-export of an import byte-stable).
  const bool derive_bracket = kind == FileKind::liealgebra &&
                              !std::holds_alternative<TableSpec>(spec);
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
      const WittElement x = WittElement::basis(m);
      const WittElement y = WittElement::basis(n);
      const WittElement value =
          derive_bracket ? induced_bracket(spec, x, y) : circ(spec, x, y);
      if (value.is_zero()) continue;
      file.entries.push_back(entry_from_element(m, n, value));
    }
  }
  return file;
}

StructureFile export_postlie(const CatalogEntry& entry, const Window& w,
                             bool induced_bracket_entries) {
  std::map<std::string, std::optional<std::string>> params;
  for (Param p : entry.params) params[std::string(param_name(p))] = std::nullopt;
  return export_spec(entry.spec,
                     induced_bracket_entries ? FileKind::liealgebra
                                             : FileKind::postlie,
                     entry.name, params, entry.nu, w);
}

StructureFile export_rb(const RBCatalogEntry& entry, const Window& w) {
  StructureFile file;
  file.kind = FileKind::rotabaxter;
  file.name = entry.name;
  for (Param p : entry.params)
    file.params[std::string(param_name(p))] = std::nullopt;
  file.nu = entry.nu;
  file.window = w;
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    const WittElement value = rb_apply(entry.op, WittElement::basis(m));
    if (value.is_zero()) continue;
    // Operator rows carry a single index; n mirrors m to keep the schema.
    file.entries.push_back(entry_from_element(m, m, value));
  }
  return file;
}

TableSpec table_from_file(const StructureFile& file) {
  if (file.kind == FileKind::rotabaxter)
    raise(Errc::schema_mismatch,
          "rotabaxter files describe an operator, not a product table");
  TableSpec table;
  table.m_range = file.window;
  table.n_range = file.window;
  for (const auto& entry : file.entries) {
    std::map<std::int64_t, PolyScalar> terms;
    for (const auto& term : entry.terms)
      terms[term.index] = PolyScalar::parse(term.coeff);
    table.entries[{entry.m, entry.n}] = std::move(terms);
  }
  return table;
}

}  // namespace postwitt
