#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dolc {

struct SourceSpan {
  std::size_t begin = 0;  // byte offsets, half-open
  std::size_t end = 0;
  unsigned line = 0;      // 1-based; 0 when unknown
  unsigned column = 0;    // 1-based, in code points
};

enum class Severity { error, warning, info };

std::string_view to_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::error;
  SourceSpan span;
  std::string code;
  std::string message;
};

// `file:line:col: severity[code]: message`
std::string format_diagnostic(const Diagnostic& d, std::string_view file);

bool has_errors(const std::vector<Diagnostic>& ds);

// Maps byte offsets of one source text to line/column positions.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text);

  SourceSpan span(std::size_t begin, std::size_t end) const;

 private:
  std::string_view text_;
  std::vector<std::size_t> line_starts_;
};

}  // namespace dolc
