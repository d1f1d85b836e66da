#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace dolc {

// Raised by every library operation that can fail. `code` is a stable
// kebab-case identifier (it is what diagnostics print in brackets); `offset`
// is a byte offset into whatever text was being processed, when known.
class DolError : public std::runtime_error {
 public:
  static constexpr std::size_t no_offset = std::numeric_limits<std::size_t>::max();

  DolError(std::string code, const std::string& message,
           std::size_t offset = no_offset)
      : std::runtime_error(message), code_(std::move(code)), offset_(offset) {}

  const std::string& code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }
  bool has_offset() const noexcept { return offset_ != no_offset; }

 private:
  std::string code_;
  std::size_t offset_;
};

}  // namespace dolc
