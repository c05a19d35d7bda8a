#pragma once

// The `.mg` text format:
//
//   mg <n>
//   <n space-separated non-negative integers>   (n rows, full matrix)
//
// Serialization is canonical: single spaces, LF line endings, a final LF and
// no trailing whitespace. Parsing accepts any run of spaces/tabs, CRLF line
// endings and blank lines.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "regcert/multigraph.hpp"

namespace regcert {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { malformed_header, malformed_row, non_symmetric, nonzero_diagonal, negative_entry };

  ParseError(Kind kind, int line, const std::string& what);

  Kind kind() const { return kind_; }
  /// 1-based line number of the offending line (0 when not line specific).
  int line() const { return line_; }

  /// Same error with `prefix` (e.g. a file name) prepended to the message.
  ParseError with_context(const std::string& prefix) const;

 private:
  ParseError(Kind kind, int line, std::string message, bool /*raw*/);

  Kind kind_;
  int line_;
};

Multigraph parse_mg(std::string_view text);
std::string serialize_mg(const Multigraph& g);

Multigraph read_mg_file(const std::filesystem::path& path);
void write_mg_file(const std::filesystem::path& path, const Multigraph& g);

}  // namespace regcert
