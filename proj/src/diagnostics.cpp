#include "dolc/diagnostics.hpp"

#include <algorithm>

namespace dolc {

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
  }
  return "error";
}

std::string format_diagnostic(const Diagnostic& d, std::string_view file) {
  std::string out(file);
  out += ':' + std::to_string(d.span.line) + ':' + std::to_string(d.span.column) + ": ";
  out += to_string(d.severity);
  out += '[' + d.code + "]: " + d.message;
  return out;
}

bool has_errors(const std::vector<Diagnostic>& ds) {
  return std::any_of(ds.begin(), ds.end(), [](const Diagnostic& d) { return d.severity == Severity::error; });
}

LineIndex::LineIndex(std::string_view text) : text_(text) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '\n') line_starts_.push_back(i + 1);
}

SourceSpan LineIndex::span(std::size_t begin, std::size_t end) const {
  begin = std::min(begin, text_.size());
  end = std::clamp(end, begin, text_.size());
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), begin);
  std::size_t line = std::size_t(it - line_starts_.begin());
  std::size_t start = line_starts_[line - 1];
  unsigned column = 1;
  for (std::size_t i = start; i < begin; ++i)
    if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++column;
  return SourceSpan{begin, end, unsigned(line), column};
}

}  // namespace dolc
