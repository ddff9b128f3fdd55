#pragma once

#include <optional>
#include <string>
#include <vector>

#include "postwitt/classify.hpp"
#include "postwitt/rota_baxter.hpp"
#include "postwitt/verify.hpp"

#if __has_include(<json.hpp>)
#include <json.hpp>  // vendored single header
#else
#include <nlohmann/json.hpp>
#endif

namespace postwitt {

using Json = nlohmann::ordered_json;

/// dump(2) plus trailing newline; the single serialization path keeps
/// byte-for-byte determinism across runs.
std::string dump_canonical(const Json& j);

std::string fnv1a_hex(const std::string& text);

Json window_to_json(const Window& w);
Json report_to_json(const VerifyReport& report);
Json classification_to_json(const ClassificationReport& report);
Json index_function_to_json(const IndexFunction& f);
Json spec_to_json(const PostLieSpec& spec);
Json rb_operator_to_json(const RBOperator& op);

enum class FileKind { postlie, rotabaxter, liealgebra };
std::string file_kind_name(FileKind kind);
FileKind file_kind_from_name(const std::string& name);

/// Windowed structure-constants interchange file, schema_version "1".
/// Entries are sorted by (m, n) and all coefficient strings are canonical;
/// parsing enforces both.
struct StructureFile {
  FileKind kind = FileKind::postlie;
  std::string name;
  /// Parameter name -> exact rational value, or nullopt when left formal.
  std::map<std::string, std::optional<std::string>> params;
  std::optional<std::int64_t> nu;
  Window window;

  struct Term {
    std::int64_t index;
    std::string coeff;
  };
  struct Entry {
    std::int64_t m;
    std::int64_t n;
    std::vector<Term> terms;
  };
  std::vector<Entry> entries;
};

std::string structure_file_to_string(const StructureFile& file);
StructureFile structure_file_parse(const std::string& text);

/// Builds the interchange file for a named product over window x window:
/// kind postlie writes L_m o L_n, kind liealgebra writes {L_m, L_n}.
StructureFile export_postlie(const CatalogEntry& entry, const Window& w,
                             bool induced_bracket_entries = false);

/// Entries of any product spec over window x window (used to re-export an
/// imported table).
StructureFile export_spec(const PostLieSpec& spec, FileKind kind,
                          const std::string& name,
                          const std::map<std::string, std::optional<std::string>>& params,
                          std::optional<std::int64_t> nu, const Window& w);

/// Operator graph R(L_m); rows mirror m into the n slot.
StructureFile export_rb(const RBCatalogEntry& entry, const Window& w);

/// Reconstructs an explicit product table from a postlie or liealgebra
/// file; rotabaxter files are rejected with schema-mismatch.
TableSpec table_from_file(const StructureFile& file);

}  // namespace postwitt
