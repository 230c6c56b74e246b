#include "pluq/tools/matrix_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "pluq/errors.hpp"

namespace pluq::tools {
namespace {

// Splits into lines, keeping their 1-based numbers implicit in the index.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "not a non-negative integer: '" + std::string(tok) + "'");
  return v;
}

bool blank(std::string_view line) { return tokens(line).empty(); }

void require_tail_blank(const std::vector<std::string_view>& lines, std::size_t from) {
  for (std::size_t l = from; l < lines.size(); ++l)
    if (!blank(lines[l])) throw ParseError(l + 1, "unexpected content after the last row");
}

}  // namespace

DenseMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'm n p'");
  const auto head = tokens(lines[0]);
  if (head.size() != 3) throw ParseError(1, "header must be 'm n p'");
  const std::uint64_t m = parse_uint(head[0], 1), n = parse_uint(head[1], 1), p = parse_uint(head[2], 1);
  std::optional<PrimeField> field;
  try {
    field.emplace(p);
  } catch (const InvalidArgument& e) {
    throw ParseError(1, e.what());
  }

  DenseMatrix a(*field, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t lineno = i + 2;
    if (lineno > lines.size()) {
      if (n == 0) continue;  // rows of an m x 0 matrix carry no data
      throw ParseError(lineno, "expected " + std::to_string(m) + " rows, found " + std::to_string(i));
    }
    const auto toks = tokens(lines[lineno - 1]);
    if (toks.size() != n)
      throw ParseError(lineno, "expected " + std::to_string(n) + " values, found " + std::to_string(toks.size()));
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t v = parse_uint(toks[j], lineno);
      if (v >= p) throw ParseError(lineno, "value out of range: " + std::to_string(v) + " >= " + std::to_string(p));
      a(i, j) = field->canonical(v);
    }
  }
  require_tail_blank(lines, m + 1);
  return a;
}

std::string write_matrix(const DenseMatrix& a) {
  std::ostringstream os;
  os << a.rows() << ' ' << a.cols() << ' ' << a.field().characteristic() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j).value;
    os << '\n';
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || tokens(lines[0]).size() != 1) throw ParseError(1, "missing permutation size");
  const std::uint64_t n = parse_uint(tokens(lines[0])[0], 1);
  std::vector<std::size_t> images;
  const auto toks = lines.size() > 1 ? tokens(lines[1]) : std::vector<std::string_view>{};
  if (toks.size() != n)
    throw ParseError(2, "expected " + std::to_string(n) + " images, found " + std::to_string(toks.size()));
  for (auto tok : toks) {
    const std::uint64_t v = parse_uint(tok, 2);
    if (v < 1 || v > n) throw ParseError(2, "image out of range: " + std::to_string(v));
    images.push_back(v - 1);
  }
  require_tail_blank(lines, 2);
  try {
    return Permutation(std::move(images));
  } catch (const InvalidArgument& e) {
    throw ParseError(2, e.what());
  }
}

std::string write_permutation(const Permutation& p) {
  return std::to_string(p.size()) + '\n' + p.to_string() + '\n';
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  if (std::filesystem::is_directory(path)) throw Error("cannot read " + path + ": is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("read failed: " + path);
  return std::move(buf).str();
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace pluq::tools
