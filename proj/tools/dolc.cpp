// dolc: parse, check and export DOL documents; query the logic registry.
//
// Exit status: 0 success, 1 diagnostics with errors, 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dolc/analyzer.hpp"
#include "dolc/error.hpp"
#include "dolc/names.hpp"
#include "dolc/parser.hpp"
#include "dolc/registry.hpp"
#include "dolc/serializer.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_diagnostics = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct IoError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError{"cannot write " + path};
}

void print_diagnostics(const std::vector<dolc::Diagnostic>& ds, const std::string& file) {
  for (const auto& d : ds) std::cerr << dolc::format_diagnostic(d, file) << '\n';
}

// --registry, then $DOLC_REGISTRY, then the built-in seed.
dolc::RegistryGraph load_registry_option(const std::string& flag) {
  std::string path = flag;
  if (path.empty())
    if (const char* env = std::getenv("DOLC_REGISTRY")) path = env;
  if (path.empty()) return dolc::builtin_registry();
  return dolc::load_registry(read_file(path));
}

dolc::Iri registry_name(const std::string& text) {
  try {
    return dolc::resolve_name(text, dolc::registry_prefixes());
  } catch (const dolc::DolError&) {
    return dolc::Iri::parse(text);
  }
}

dolc::ParseResult parse_file(const std::string& path) { return dolc::parse_document(read_file(path)); }

std::optional<std::filesystem::path> include_root(const std::string& flag, const std::string& file) {
  if (!flag.empty()) return std::filesystem::path(flag);
  auto parent = std::filesystem::path(file).parent_path();
  return parent.empty() ? std::filesystem::path(".") : parent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DOL document processor"};
  app.require_subcommand(1);

  std::string file, registry_path, include_path, report_json, output, base_iri, format = "text";
  bool dump = false, lossy = false;

  auto* parse = app.add_subcommand("parse", "Parse a DOL Text document and report syntax diagnostics");
  parse->add_option("file", file, "DOL Text document")->required();
  parse->add_flag("--dump-ast", dump, "Print the abstract syntax tree");

  auto* check = app.add_subcommand("check", "Parse, flatten and check every link");
  check->add_option("file", file, "DOL Text document")->required();
  check->add_option("--registry", registry_path, "Registry JSON (default: $DOLC_REGISTRY, then built-in)");
  check->add_option("--include-path", include_path, "Directory holding referenced ontologies (default: the file's)");
  check->add_option("--report-json", report_json, "Write a JSON report to this path");
  check->add_flag("--lossy", lossy, "Let projections drop untranslatable assertions with a report");

  auto* reg = app.add_subcommand("registry", "Query the logic registry");
  reg->add_option("--registry", registry_path, "Registry JSON (default: $DOLC_REGISTRY, then built-in)");
  reg->require_subcommand(1);
  std::string from, to, language, logic, serialization, kind;
  auto* translate = reg->add_subcommand("translate", "Print the default translation path between two logics");
  translate->add_option("source", from)->required();
  translate->add_option("target", to)->required();
  auto* complete = reg->add_subcommand("complete", "Complete a partial logic declaration");
  complete->add_option("--language", language);
  complete->add_option("--logic", logic);
  complete->add_option("--serialization", serialization);
  auto* list = reg->add_subcommand("list", "List registry entries of one kind");
  list->add_option("kind", kind)->required()->check(
      CLI::IsMember({"logics", "languages", "serializations", "mappings"}));
  auto* reg_export = reg->add_subcommand("export", "Print the registry as Turtle");

  auto* exp = app.add_subcommand("export", "Emit a document as DOL Text, XML, DOL RDF or linked data");
  exp->add_option("file", file, "DOL Text document")->required();
  exp->add_option("--format", format, "text, xml, rdf or ld")->check(CLI::IsMember({"text", "xml", "rdf", "ld"}));
  exp->add_option("--base-iri", base_iri, "Base IRI for relative subjects in RDF output");
  exp->add_option("-o,--output", output, "Output path (default: standard output)");
  exp->add_option("--registry", registry_path, "Registry JSON (default: $DOLC_REGISTRY, then built-in)");
  exp->add_option("--include-path", include_path, "Directory holding referenced ontologies (default: the file's)");
  exp->add_flag("--lossy", lossy, "Let projections drop untranslatable assertions with a report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (parse->parsed()) {
      auto result = parse_file(file);
      print_diagnostics(result.diagnostics, file);
      if (dump) std::cout << dolc::dump_ast(result.document);
      return dolc::has_errors(result.diagnostics) ? exit_diagnostics : exit_ok;
    }

    if (check->parsed() || exp->parsed()) {
      auto registry = load_registry_option(registry_path);
      auto result = parse_file(file);
      std::vector<dolc::Diagnostic> diagnostics = result.diagnostics;
      dolc::DistributedOntology doc = std::move(result.document);
      std::vector<dolc::CheckReport> reports;
      bool analyze = check->parsed() || format == "ld";
      if (analyze && !dolc::has_errors(diagnostics)) {
        dolc::AnalyzerOptions options;
        options.registry = &registry;
        options.include_path = include_root(include_path, file);
        options.lossy = lossy;
        auto analysis = dolc::analyze(std::move(doc), options);
        doc = std::move(analysis.document);
        reports = std::move(analysis.reports);
        diagnostics.insert(diagnostics.end(), analysis.diagnostics.begin(), analysis.diagnostics.end());
      }
      print_diagnostics(diagnostics, file);
      if (check->parsed()) {
        auto names = dolc::curie_names(dolc::registry_prefixes().overlay(doc.prefixes), true);
        for (const auto& r : reports)
          std::cout << dolc::to_string(r.kind) << ' ' << names(r.link.str()) << ": " << dolc::to_string(r.verdict)
                    << (r.evidence.empty() ? "" : " (" + r.evidence + ")") << '\n';
        if (!report_json.empty()) write_output(report_json, dolc::reports_to_json(reports, diagnostics, file));
        return dolc::has_errors(diagnostics) ? exit_diagnostics : exit_ok;
      }
      if (dolc::has_errors(diagnostics)) return exit_diagnostics;
      dolc::EmissionOptions options;
      options.format = *dolc::format_from_string(format);
      if (!base_iri.empty()) {
        auto iri = dolc::Iri::try_parse(base_iri);
        if (!iri) {
          std::cerr << "dolc: --base-iri must be an absolute IRI\n";
          return exit_usage;
        }
        options.base_iri = *iri;
      }
      write_output(output, dolc::emit(doc, options));
      return exit_ok;
    }

    if (reg->parsed()) {
      auto registry = load_registry_option(registry_path);
      auto names = dolc::curie_names(dolc::registry_prefixes());
      if (translate->parsed()) {
        auto path = dolc::default_translation(registry_name(from), registry_name(to), registry);
        if (path.empty()) std::cout << "(identity)\n";
        for (const auto& m : path) std::cout << names(m.iri.str()) << '\n';
      } else if (complete->parsed()) {
        dolc::LogicDeclaration given;
        if (!language.empty()) given.language = registry_name(language);
        if (!logic.empty()) given.logic = registry_name(logic);
        if (!serialization.empty()) given.serialization = registry_name(serialization);
        auto c = dolc::infer_triple(given, registry);
        std::cout << "language " << names(c.language->str()) << '\n'
                  << "logic " << names(c.logic->str()) << '\n'
                  << "syntax " << names(c.serialization->str()) << '\n';
      } else if (list->parsed()) {
        if (kind == "logics")
          for (const auto& l : registry.logics()) std::cout << names(l.iri.str()) << '\n';
        if (kind == "languages")
          for (const auto& l : registry.languages()) std::cout << names(l.iri.str()) << '\n';
        if (kind == "serializations")
          for (const auto& s : registry.serializations()) std::cout << names(s.iri.str()) << '\n';
        if (kind == "mappings")
          for (const auto& m : registry.mappings())
            std::cout << names(m.iri.str()) << ' ' << dolc::to_string(m.kind) << ' ' << names(m.source.str()) << ' '
                      << names(m.target.str()) << '\n';
      } else if (reg_export->parsed()) {
        std::cout << dolc::export_registry_rdf(registry);
      }
      return exit_ok;
    }
  } catch (const IoError& e) {
    std::cerr << "dolc: " << e.message << '\n';
    return exit_io;
  } catch (const dolc::DolError& e) {
    std::cerr << "dolc: error[" << e.code() << "]: " << e.what() << '\n';
    return exit_diagnostics;
  }
  return exit_ok;
}
