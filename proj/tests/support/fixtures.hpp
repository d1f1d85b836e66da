#pragma once

// File access and lookup helpers shared by the test binaries.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dolc/analyzer.hpp"
#include "dolc/model.hpp"
#include "dolc/parser.hpp"

namespace fixture {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string golden_path(const std::string& name) { return std::string(DOLC_GOLDEN_DIR) + "/" + name; }
inline std::string golden(const std::string& name) { return read_text(golden_path(name)); }
inline std::string data(const std::string& name) { return read_text(std::string(DOLC_DATA_DIR) + "/" + name); }

inline const std::vector<std::string>& listings() {
  static const std::vector<std::string> names{"listing1", "listing2", "listing3", "listing4"};
  return names;
}

inline const std::vector<std::string>& all_golden() {
  static const std::vector<std::string> names{"listing1", "listing2", "listing3",  "listing4",
                                              "undeclared", "cyclic",   "sniffed"};
  return names;
}

inline dolc::AnalyzerOptions options() {
  dolc::AnalyzerOptions o;
  o.include_path = golden_path("include");
  return o;
}

inline dolc::Analysis analyze_text(const std::string& text, dolc::AnalyzerOptions o = options()) {
  auto parsed = dolc::parse_document(text);
  if (dolc::has_errors(parsed.diagnostics)) throw std::runtime_error("golden text has parse errors");
  return dolc::analyze(std::move(parsed.document), o);
}

inline dolc::Analysis analyze_golden(const std::string& name) { return analyze_text(golden(name + ".dol")); }

inline dolc::Iri iri(const std::string& s) { return dolc::Iri::parse(s); }

inline const dolc::OntologyDefinition& definition(const dolc::DistributedOntology& d, const std::string& i) {
  auto* def = d.find_definition(iri(i));
  if (!def) throw std::runtime_error("no definition " + i);
  return *def;
}

template <typename T>
std::vector<T> forms(const dolc::SignatureAndSentences& s) {
  std::vector<T> out;
  for (const auto& sentence : s.sentences)
    if (auto* f = std::get_if<T>(&sentence.form)) out.push_back(*f);
  return out;
}

inline bool has_diagnostic(const std::vector<dolc::Diagnostic>& ds, const std::string& code) {
  for (const auto& d : ds)
    if (d.code == code) return true;
  return false;
}

inline constexpr const char* mereology = "http://www.example.org/mereology#";

}  // namespace fixture
