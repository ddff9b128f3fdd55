// Command-line front end: verification, classification, transport,
// operator checks, and structure-constant import/export over exact
// rationals. Exit codes: 0 pass, 1 verification failure, 2 usage or
// contract error.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "postwitt/examples.hpp"
#include "postwitt/serialize.hpp"

using namespace postwitt;

namespace {

Window parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    raise(Errc::invalid_argument,
          "window must be written lo..hi, got '" + text + "'");
  const auto lo = std::stoll(text.substr(0, dots));
  const auto hi = std::stoll(text.substr(dots + 2));
  return Window(lo, hi);
}

std::map<Param, Rational> parse_params(
    const std::vector<std::string>& assignments) {
  std::map<Param, Rational> out;
  for (const auto& text : assignments) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      raise(Errc::invalid_argument,
            "parameter must be written name=rational, got '" + text + "'");
    out[param_from_name(text.substr(0, eq))] =
        rational_from_string(text.substr(eq + 1));
  }
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file)
    raise(Errc::invalid_argument, "cannot open '" + out_path + "' for writing");
  file << text;
}

/// Coefficient of L_k o L_n read as a function of n: (k - n) v.
std::string affine_in_n(std::int64_t k, const PolyScalar& v) {
  const PolyScalar constant = Rational(k) * v;
  const PolyScalar slope = -v;
  auto atom = [](const PolyScalar& p) {
    const std::string text = p.render();
    return text.find(' ') == std::string::npos ? text : "(" + text + ")";
  };
  if (slope.is_zero()) return constant.render();
  std::string slope_text;
  if (slope == PolyScalar(1)) {
    slope_text = "n";
  } else if (slope == PolyScalar(-1)) {
    slope_text = "-n";
  } else {
    slope_text = atom(slope) + "*n";
  }
  if (constant.is_zero()) return slope_text;
  return atom(constant) + " + " + slope_text;
}

std::string basis_symbol(std::int64_t offset) {
  if (offset == 0) return "L_{n}";
  return "L_{n" + std::string(offset > 0 ? "+" : "") + std::to_string(offset) +
         "}";
}

std::string range_text(const IndexFunction::Interval& iv) {
  if (!iv.lo && !iv.hi) return "all m";
  if (!iv.lo) return "m <= " + std::to_string(*iv.hi);
  if (!iv.hi) return "m >= " + std::to_string(*iv.lo);
  if (*iv.lo == *iv.hi) return "m = " + std::to_string(*iv.lo);
  return std::to_string(*iv.lo) + " <= m <= " + std::to_string(*iv.hi);
}

/// One product term over an interval of first indices, theorem-style.
std::string interval_term(const IndexFunction::Interval& iv,
                          const PolyScalar& value, std::int64_t shift) {
  if (value.is_zero()) return "";
  if (iv.lo && iv.hi && *iv.lo == *iv.hi) {
    // Pinned first index: the coefficient is affine in n.
    return "(" + affine_in_n(*iv.lo + shift, value) + ") " +
           basis_symbol(*iv.lo + shift);
  }
  const std::string land =
      shift == 0 ? "L_{m+n}"
                 : "L_{m+n" + std::string(shift > 0 ? "+" : "") +
                       std::to_string(shift) + "}";
  if (shift == 0 && value == PolyScalar(-1)) return "(n - m) " + land;
  if (shift == 0 && value == PolyScalar(1)) return "(m - n) " + land;
  const std::string factor =
      shift == 0 ? "(m - n)"
                 : "(m - n " + std::string(shift > 0 ? "+ " : "- ") +
                       std::to_string(std::llabs(shift)) + ")";
  return factor + "*(" + value.render() + ") " + land;
}

/// Theorem-style case lines for a graded or shifting product.
std::string render_case_lines(const PostLieSpec& spec) {
  std::ostringstream out;
  if (const auto* graded = std::get_if<GradedSpec>(&spec)) {
    out << "  L_m o L_n by case:\n";
    for (const auto& iv : graded->f.canonical_intervals()) {
      const std::string term = interval_term(iv, iv.value, 0);
      out << "    " << (term.empty() ? "0" : term) << "   for "
          << range_text(iv) << "\n";
    }
    return out.str();
  }
  const auto* shifting = std::get_if<ShiftingSpec>(&spec);
  if (!shifting) return "  (explicit table)\n";

  // Merge the breakpoints of f and g into common intervals.
  std::set<std::int64_t> starts;
  auto add_cuts = [&](const IndexFunction& fn) {
    for (const auto& iv : fn.canonical_intervals()) {
      if (iv.lo) starts.insert(*iv.lo);
      if (iv.hi) starts.insert(*iv.hi + 1);
    }
  };
  add_cuts(shifting->f);
  add_cuts(shifting->g);
  std::vector<std::int64_t> grid(starts.begin(), starts.end());
  std::vector<IndexFunction::Interval> merged;
  for (std::size_t i = 0; i <= grid.size(); ++i) {
    IndexFunction::Interval iv;
    if (i > 0) iv.lo = grid[i - 1];
    if (i < grid.size()) iv.hi = grid[i] - 1;
    if (iv.lo && iv.hi && *iv.lo > *iv.hi) continue;
    merged.push_back(iv);
  }
  out << "  L_m o L_n by case (nu = " << shifting->nu << "):\n";
  for (const auto& iv : merged) {
    const std::int64_t sample = iv.lo ? *iv.lo : (iv.hi ? *iv.hi : 0);
    const std::string head = interval_term(iv, shifting->f.eval(sample), 0);
    const std::string tail =
        interval_term(iv, shifting->g.eval(sample), shifting->nu);
    std::string line;
    if (head.empty() && tail.empty()) line = "0";
    else if (head.empty()) line = tail;
    else if (tail.empty()) line = head;
    else line = head + " + " + tail;
    out << "    " << line << "   for " << range_text(iv) << "\n";
  }
  return out.str();
}

std::string render_reports_text(const std::vector<VerifyReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.identity << "  window "
        << r.window.render() << "  checked " << r.total_checked
        << "  failures " << r.failure_count << "\n";
    for (const auto& note : r.notes)
      out << "       " << note.first << " = " << note.second << "\n";
    std::size_t shown = 0;
    for (const auto& res : r.residuals) {
      if (shown++ >= 4) {
        out << "       ... (" << r.residuals.size() - 4
            << " more witnesses)\n";
        break;
      }
      out << "       witness " << res.identity << " at (";
      for (std::size_t i = 0; i < res.indices.size(); ++i) {
        if (i) out << ", ";
        out << res.indices[i];
      }
      out << "): " << res.value_render() << "\n";
    }
  }
  return out.str();
}

struct VerifyOptions {
  std::string structure;
  std::string file;
  std::optional<std::int64_t> nu;
  std::string window_text = "-6..6";
  std::vector<std::string> params;
  std::string format = "text";
  std::string out_path;
  unsigned threads = 0;
};

bool is_catalog_name(const std::string& name) {
  const auto& graded = catalog_graded_names();
  const auto& shifting = catalog_shifting_names();
  return std::find(graded.begin(), graded.end(), name) != graded.end() ||
         std::find(shifting.begin(), shifting.end(), name) != shifting.end();
}

int run_verify(VerifyOptions opt) {
  // The two parametrized families answer to both spellings.
  if (opt.structure == "P3") opt.structure = "P3a";
  if (opt.structure == "P4") opt.structure = "P4a";
  const Window w = parse_window(opt.window_text);
  std::vector<VerifyReport> reports;

  if (!opt.file.empty()) {
    std::ifstream in(opt.file, std::ios::binary);
    if (!in)
      raise(Errc::invalid_argument, "cannot read '" + opt.file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const StructureFile parsed = structure_file_parse(buffer.str());
    const TableSpec table = table_from_file(parsed);
    reports.push_back(check_postlie_def11(table, w, opt.threads));
    reports.push_back(check_jacobi(table, w, opt.threads));
  } else if (is_catalog_name(opt.structure)) {
    const CatalogEntry entry = catalog_lookup(opt.structure, opt.nu);
    reports.push_back(check_postlie_def11(entry.spec, w, opt.threads));
    reports.push_back(
        check_postlie_def43(entry.spec, w, BracketSlot::induced, opt.threads));
    reports.push_back(check_jacobi(entry.spec, w, opt.threads));
    reports.push_back(check_equivalence(entry.spec, w, opt.threads));
    if (const auto* graded = std::get_if<GradedSpec>(&entry.spec)) {
      reports.push_back(check_graded_feq(graded->f, w));
    } else {
      const auto& shifting = std::get<ShiftingSpec>(entry.spec);
      reports.push_back(
          check_shifting_feqs(shifting.f, shifting.g, shifting.nu, w));
    }
  } else if (opt.structure == "example46") {
    const auto assignment = parse_params(opt.params);
    if (!assignment.count(Param::alpha) || !assignment.count(Param::epsilon))
      raise(Errc::invalid_argument,
            "example46 needs --param alpha=... and --param epsilon=...");
    const Window table_window(2 * w.lo, 2 * w.hi);
    const PostLieSpec table = rational_graded_table(
        assignment.at(Param::alpha), assignment.at(Param::epsilon),
        table_window);
    reports.push_back(
        check_postlie_def43(table, w, BracketSlot::witt, opt.threads));
  } else if (opt.structure == "example47") {
    if (!opt.nu) raise(Errc::invalid_argument, "example47 needs --nu");
    const auto assignment = parse_params(opt.params);
    auto value_or_param = [&](Param p) {
      return assignment.count(p) ? PolyScalar(assignment.at(p))
                                 : PolyScalar::param(p);
    };
    const std::int64_t pad = std::llabs(*opt.nu);
    const Window table_window(2 * w.lo - pad, 2 * w.hi + pad);
    const PostLieSpec table =
        constant_shift_table(value_or_param(Param::alpha),
                             value_or_param(Param::mu), *opt.nu, table_window);
    reports.push_back(
        check_postlie_def43(table, w, BracketSlot::witt, opt.threads));
  } else {
    raise(Errc::unknown_name, "unknown structure '" + opt.structure + "'");
  }

  std::string text;
  if (opt.format == "json") {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    text = dump_canonical(j);
  } else {
    if (is_catalog_name(opt.structure)) {
      const CatalogEntry entry = catalog_lookup(opt.structure, opt.nu);
      text += "structure " + entry.name;
      if (entry.nu) text += " (nu = " + std::to_string(*entry.nu) + ")";
      if (!entry.params.empty()) {
        text += ", parameters:";
        for (Param p : entry.params) text += " " + std::string(param_name(p));
      }
      text += "\n";
      if (const auto* graded = std::get_if<GradedSpec>(&entry.spec)) {
        text += "  f: " + graded->f.render() + "\n";
      } else if (const auto* shifting =
                     std::get_if<ShiftingSpec>(&entry.spec)) {
        text += "  f: " + shifting->f.render() + "\n";
        text += "  g: " + shifting->g.render() + "\n";
      }
      text += render_case_lines(entry.spec);
    }
    text += render_reports_text(reports);
  }
  write_output(text, opt.out_path);

  for (const auto& r : reports)
    if (!r.passed) return 1;
  return 0;
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
  if (const char* env = std::getenv("POSTWITT_BUDGET")) {
    return std::stoull(env);
  }
  return fallback;
}

int run_classify_graded(const std::string& window_text, std::uint64_t budget,
                        const std::string& out_path) {
  const ClassificationReport report =
      classify_graded(parse_window(window_text), budget);
  write_output(dump_canonical(classification_to_json(report)), out_path);
  return 0;
}

int run_classify_shifting(const std::string& family_name,
                          const std::vector<std::int64_t>& nus,
                          const std::string& nu_range,
                          const std::string& window_text,
                          const std::string& out_path) {
  const Window w = parse_window(window_text);
  const GradedFamily family = family_from_name(family_name);
  std::vector<std::int64_t> shifts = nus;
  if (!nu_range.empty()) {
    const Window range = parse_window(nu_range);
    for (std::int64_t nu = range.lo; nu <= range.hi; ++nu)
      if (nu != 0) shifts.push_back(nu);
  }
  if (shifts.empty())
    raise(Errc::invalid_argument, "shifting mode needs --nu or --nu-range");
  Json j = Json::array();
  for (std::int64_t nu : shifts)
    j.push_back(classification_to_json(classify_shifting(family, nu, w)));
  write_output(dump_canonical(j.size() == 1 ? j[0] : j), out_path);
  return 0;
}

int run_transport(const std::string& structure,
                  std::optional<std::int64_t> nu, bool scaling, int eps,
                  const std::string& c_text, const std::string& out_path) {
  const CatalogEntry entry = catalog_lookup(structure, nu);
  const PostLieSpec transported =
      scaling
          ? transport_scaling(entry.spec, eps, rational_from_string(c_text))
          : transport_tau(entry.spec);

  // Name the image by matching descriptors over the catalog.
  std::string matched = "unmatched";
  for (const auto& name : catalog_graded_names()) {
    if (spec_equal(catalog_lookup(name).spec, transported)) matched = name;
  }
  for (const auto& name : catalog_shifting_names()) {
    for (std::int64_t candidate_nu : catalog_admissible_nu(name)) {
      if (spec_equal(catalog_lookup(name, candidate_nu).spec, transported))
        matched = name + " (nu = " + std::to_string(candidate_nu) + ")";
    }
  }

  Json j;
  j["source"] = entry.name;
  if (entry.nu) j["source_nu"] = *entry.nu;
  j["automorphism"] = scaling ? "scaling" : "tau";
  j["matched"] = matched;
  j["spec"] = spec_to_json(transported);
  write_output(dump_canonical(j), out_path);
  return 0;
}

int run_rb_check(const std::string& op_name, std::optional<std::int64_t> nu,
                 const std::string& window_text, const std::string& format,
                 const std::string& out_path) {
  const RBCatalogEntry entry = rb_catalog_lookup(op_name, nu);
  const VerifyReport report =
      check_weight1(entry.op, parse_window(window_text));
  if (format == "json") {
    write_output(dump_canonical(report_to_json(report)), out_path);
  } else {
    write_output(render_reports_text({report}), out_path);
  }
  return report.passed ? 0 : 1;
}

int run_rb_derive(const std::string& op_name, std::optional<std::int64_t> nu,
                  const std::string& out_path) {
  const RBCatalogEntry entry = rb_catalog_lookup(op_name, nu);
  const PostLieSpec derived = derive_postlie(entry.op);
  std::string matched = "unmatched";
  for (const auto& name : catalog_graded_names()) {
    if (spec_equal(catalog_lookup(name).spec, derived)) matched = name;
  }
  for (const auto& name : catalog_shifting_names()) {
    for (std::int64_t candidate_nu : catalog_admissible_nu(name)) {
      if (spec_equal(catalog_lookup(name, candidate_nu).spec, derived))
        matched = name;
    }
  }
  std::cout << matched << "\n";
  if (!out_path.empty()) {
    Json j;
    j["operator"] = entry.name;
    if (entry.nu) j["nu"] = *entry.nu;
    j["operator_spec"] = rb_operator_to_json(entry.op);
    j["matched"] = matched;
    j["spec"] = spec_to_json(derived);
    write_output(dump_canonical(j), out_path);
  }
  return 0;
}

int run_export(const std::string& structure, const std::string& op_name,
               std::optional<std::int64_t> nu, const std::string& window_text,
               bool induced, const std::string& out_path) {
  const Window w = parse_window(window_text);
  std::string text;
  if (!op_name.empty()) {
    text =
        structure_file_to_string(export_rb(rb_catalog_lookup(op_name, nu), w));
  } else {
    text = structure_file_to_string(
        export_postlie(catalog_lookup(structure, nu), w, induced));
  }
  write_output(text, out_path);
  return 0;
}

int run_import(const std::string& path, const std::string& reexport,
               bool verify, const std::string& window_text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::invalid_argument, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const StructureFile parsed = structure_file_parse(buffer.str());
  const TableSpec table = table_from_file(parsed);
  std::cout << "kind=" << file_kind_name(parsed.kind)
            << " name=" << parsed.name
            << " window=" << parsed.window.render()
            << " entries=" << parsed.entries.size() << "\n";
  if (!reexport.empty()) {
    const StructureFile again = export_spec(
        table, parsed.kind, parsed.name, parsed.params, parsed.nu,
        parsed.window);
    write_output(structure_file_to_string(again), reexport);
  }
  if (verify) {
    const VerifyReport report =
        check_postlie_def11(table, parse_window(window_text));
    std::cout << render_reports_text({report});
    return report.passed ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification and classification of the bilinear products and "
      "weight-one operators on the Witt algebra"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Run the axiom checks for a named structure");
  VerifyOptions vopt;
  verify->add_option("--structure", vopt.structure,
                     "Catalog name (P1..P8 with P3a/P4a, NP1..NP8, "
                     "MP1..MP8), example46, or example47");
  verify->add_option("--file", vopt.file,
                     "Verify an imported structure-constants file");
  std::int64_t verify_nu = 0;
  auto* verify_nu_opt = verify->add_option("--nu", verify_nu, "Shift value");
  verify->add_option("--window", vopt.window_text, "Check window lo..hi");
  verify->add_option("--param", vopt.params,
                     "Parameter assignment name=rational (repeatable)");
  verify->add_option("--format", vopt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vopt.out_path, "Write the report here");
  verify->add_option("--threads", vopt.threads, "Sweep worker count");

  // classify
  auto* classify = app.add_subcommand("classify", "Rediscover the catalog");
  auto* graded = classify->add_subcommand(
      "graded", "Enumerate window-consistent graded products");
  std::string graded_window = "-3..3";
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string graded_out;
  graded->add_option("--window", graded_window, "Window lo..hi");
  auto* budget_opt =
      graded->add_option("--budget", budget, "Assignment budget");
  graded->add_option("--out", graded_out, "Write the report here");

  auto* shifting = classify->add_subcommand(
      "shifting", "Solve the tail system for one family");
  std::string family;
  std::vector<std::int64_t> shifting_nus;
  std::string nu_range, shifting_window = "-8..8", shifting_out;
  shifting->add_option("--family", family, "P1..P8")->required();
  shifting->add_option("--nu", shifting_nus, "Shift value (repeatable)");
  shifting->add_option("--nu-range", nu_range,
                       "Iterate shifts lo..hi, skipping 0");
  shifting->add_option("--window", shifting_window, "Window lo..hi");
  shifting->add_option("--out", shifting_out, "Write the report here");

  // transport
  auto* transport = app.add_subcommand(
      "transport", "Rewrite a structure through a Witt automorphism");
  std::string transport_structure;
  std::int64_t transport_nu = 0;
  bool scaling = false;
  int eps = 1;
  std::string c_text = "1", transport_out;
  transport->add_option("--structure", transport_structure)->required();
  auto* transport_nu_opt = transport->add_option("--nu", transport_nu);
  transport->add_flag("--scaling", scaling,
                      "Use L_m -> eps c^m L_{eps m} instead of tau");
  transport->add_option("--epsilon", eps, "+1 or -1 (scaling only)");
  transport->add_option("--c", c_text, "Nonzero rational (scaling only)");
  transport->add_option("--out", transport_out, "Write the descriptor here");

  // rb
  auto* rb = app.add_subcommand("rb", "Weight-one operator commands");
  auto* rb_check =
      rb->add_subcommand("check", "Check the weight-one identity");
  std::string rb_op, rb_window = "-8..8", rb_format = "text", rb_out;
  std::int64_t rb_nu = 0;
  rb_check->add_option("--operator", rb_op)->required();
  auto* rb_nu_opt = rb_check->add_option("--nu", rb_nu);
  rb_check->add_option("--window", rb_window);
  rb_check->add_option("--format", rb_format)
      ->check(CLI::IsMember({"text", "json"}));
  rb_check->add_option("--out", rb_out);

  auto* rb_derive = rb->add_subcommand(
      "derive", "Print the product x o y = [R(x), y] and its catalog name");
  std::string rb_derive_op, rb_derive_out;
  std::int64_t rb_derive_nu = 0;
  rb_derive->add_option("--operator", rb_derive_op)->required();
  auto* rb_derive_nu_opt = rb_derive->add_option("--nu", rb_derive_nu);
  rb_derive->add_option("--out", rb_derive_out);

  // export / import
  auto* export_cmd = app.add_subcommand(
      "export", "Write windowed structure constants as JSON");
  std::string export_structure, export_operator, export_window = "-4..4",
                                                 export_out;
  std::int64_t export_nu = 0;
  bool induced = false;
  export_cmd->add_option("--structure", export_structure);
  export_cmd->add_option("--operator", export_operator);
  auto* export_nu_opt = export_cmd->add_option("--nu", export_nu);
  export_cmd->add_option("--window", export_window);
  export_cmd->add_flag("--induced", induced,
                       "Export the induced bracket instead of the product");
  export_cmd->add_option("--out", export_out);

  auto* import_cmd =
      app.add_subcommand("import", "Read back a structure-constants file");
  std::string import_path, import_reexport, import_window = "-1..1";
  bool import_verify = false;
  import_cmd->add_option("--file", import_path)->required();
  import_cmd->add_option("--reexport", import_reexport,
                         "Write the canonical re-export here");
  import_cmd->add_flag("--verify", import_verify,
                       "Run the first axiom system on the imported table");
  import_cmd->add_option("--window", import_window,
                         "Window for --verify (must fit the table)");

  try {
    app.parse(argc, argv);

    if (verify->parsed()) {
      if (vopt.structure.empty() == vopt.file.empty())
        raise(Errc::invalid_argument,
              "verify needs exactly one of --structure or --file");
      if (verify_nu_opt->count()) vopt.nu = verify_nu;
      return run_verify(vopt);
    }
    if (graded->parsed()) {
      if (!budget_opt->count()) budget = budget_from_env(budget);
      return run_classify_graded(graded_window, budget, graded_out);
    }
    if (shifting->parsed()) {
      return run_classify_shifting(family, shifting_nus, nu_range,
                                   shifting_window, shifting_out);
    }
    if (transport->parsed()) {
      std::optional<std::int64_t> nu;
      if (transport_nu_opt->count()) nu = transport_nu;
      return run_transport(transport_structure, nu, scaling, eps, c_text,
                           transport_out);
    }
    if (rb_check->parsed()) {
      std::optional<std::int64_t> nu;
      if (rb_nu_opt->count()) nu = rb_nu;
      return run_rb_check(rb_op, nu, rb_window, rb_format, rb_out);
    }
    if (rb_derive->parsed()) {
      std::optional<std::int64_t> nu;
      if (rb_derive_nu_opt->count()) nu = rb_derive_nu;
      return run_rb_derive(rb_derive_op, nu, rb_derive_out);
    }
    if (export_cmd->parsed()) {
      if (export_structure.empty() == export_operator.empty())
        raise(Errc::invalid_argument,
              "export needs exactly one of --structure or --operator");
      std::optional<std::int64_t> nu;
      if (export_nu_opt->count()) nu = export_nu;
      return run_export(export_structure, export_operator, nu, export_window,
                        induced, export_out);
    }
    if (import_cmd->parsed()) {
      return run_import(import_path, import_reexport, import_verify,
                        import_window);
    }
    if (classify->parsed())
      raise(Errc::invalid_argument, "classify needs graded or shifting");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
