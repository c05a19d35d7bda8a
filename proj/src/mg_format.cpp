#include "regcert/mg_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace regcert {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long& value) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::string describe(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::malformed_header: return "malformed header";
    case ParseError::Kind::malformed_row: return "malformed row";
    case ParseError::Kind::non_symmetric: return "non-symmetric matrix";
    case ParseError::Kind::nonzero_diagonal: return "nonzero diagonal";
    case ParseError::Kind::negative_entry: return "negative entry";
  }
  return "parse error";
}

}  // namespace

ParseError::ParseError(Kind kind, int line, const std::string& what)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         describe(kind) + ": " + what),
      kind_(kind),
      line_(line) {}

ParseError::ParseError(Kind kind, int line, std::string message, bool)
    : std::runtime_error(std::move(message)), kind_(kind), line_(line) {}

ParseError ParseError::with_context(const std::string& prefix) const {
  return ParseError(kind_, line_, prefix + ": " + what(), true);
}

Multigraph parse_mg(std::string_view text) {
  // Collect non-blank lines with their 1-based numbers.
  std::vector<std::pair<int, std::vector<std::string_view>>> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++lineno;
    auto toks = split_ws(line);
    if (!toks.empty()) lines.emplace_back(lineno, std::move(toks));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(ParseError::Kind::malformed_header, 1, "empty input");

  const auto& [hline, header] = lines.front();
  long long n = 0;
  if (header.size() != 2 || header[0] != "mg" || !parse_int(header[1], n) || n < 1 || n > 4096)
    throw ParseError(ParseError::Kind::malformed_header, hline, "expected 'mg <n>' with n >= 1");
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw ParseError(ParseError::Kind::malformed_row, lines.back().first,
                     "expected " + std::to_string(n) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));

  const int nn = static_cast<int>(n);
  std::vector<std::int32_t> m(static_cast<std::size_t>(nn) * nn);
  std::vector<int> row_line(static_cast<std::size_t>(nn));
  for (int r = 0; r < nn; ++r) {
    const auto& [ln, toks] = lines[static_cast<std::size_t>(r) + 1];
    row_line[static_cast<std::size_t>(r)] = ln;
    if (static_cast<int>(toks.size()) != nn)
      throw ParseError(ParseError::Kind::malformed_row, ln,
                       "expected " + std::to_string(nn) + " entries, found " + std::to_string(toks.size()));
    for (int c = 0; c < nn; ++c) {
      long long v = 0;
      if (!parse_int(toks[static_cast<std::size_t>(c)], v) || v > 1'000'000'000LL)
        throw ParseError(ParseError::Kind::malformed_row, ln,
                         "entry '" + std::string(toks[static_cast<std::size_t>(c)]) + "' is not an integer");
      if (v < 0)
        throw ParseError(ParseError::Kind::negative_entry, ln,
                         "entry (" + std::to_string(r) + "," + std::to_string(c) + ") is negative");
      m[static_cast<std::size_t>(r) * nn + c] = static_cast<std::int32_t>(v);
    }
  }
  for (int r = 0; r < nn; ++r) {
    if (m[static_cast<std::size_t>(r) * nn + r] != 0)
      throw ParseError(ParseError::Kind::nonzero_diagonal, row_line[static_cast<std::size_t>(r)],
                       "vertex " + std::to_string(r) + " has a loop");
    for (int c = r + 1; c < nn; ++c)
      if (m[static_cast<std::size_t>(r) * nn + c] != m[static_cast<std::size_t>(c) * nn + r])
        throw ParseError(ParseError::Kind::non_symmetric, row_line[static_cast<std::size_t>(c)],
                         "entry (" + std::to_string(r) + "," + std::to_string(c) + ") differs from (" +
                             std::to_string(c) + "," + std::to_string(r) + ")");
  }
  return Multigraph::from_matrix(nn, std::move(m));
}

std::string serialize_mg(const Multigraph& g) {
  std::string out = "mg " + std::to_string(g.order()) + "\n";
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (v) out += ' ';
      out += std::to_string(g.mult(u, v));
    }
    out += '\n';
  }
  return out;
}

Multigraph read_mg_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_mg(ss.str());
  } catch (const ParseError& e) {
    throw e.with_context(path.string());
  }
}

void write_mg_file(const std::filesystem::path& path, const Multigraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_mg(g);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace regcert
