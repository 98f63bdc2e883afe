#include "sts/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sts::io {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    tokens.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return tokens;
}

std::uint64_t parse_index(const Token& tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line, tok.column, "expected a non-negative integer, got '" +
                                           std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

Parsed parse(std::istream& in) {
  Parsed result;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::vector<Triple> triples;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens[0].text == "sts") {
        result.partial = false;
      } else if (tokens[0].text == "pstss") {
        result.partial = true;
      } else {
        throw ParseError(line_no, tokens[0].column, "expected header 'sts <n>' or 'pstss <n>'");
      }
      if (tokens.size() != 2) {
        throw ParseError(line_no, tokens[0].column, "header takes exactly one size");
      }
      n = parse_index(tokens[1], line_no);
      if (n >= kNoPoint) throw ParseError(line_no, tokens[1].column, "size too large");
      have_header = true;
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError(line_no, tokens.empty() ? 1 : tokens[0].column,
                       "expected three point indices, got " + std::to_string(tokens.size()));
    }
    Triple t{};
    for (int k = 0; k < 3; ++k) {
      std::uint64_t v = parse_index(tokens[k], line_no);
      if (v >= n) {
        throw ParseError(line_no, tokens[k].column,
                         "point " + std::to_string(v) + " out of range for " + std::to_string(n) +
                             " points");
      }
      t[k] = static_cast<Point>(v);
    }
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
      throw ParseError(line_no, tokens[0].column, "triple repeats a point");
    }
    triples.push_back(t);
  }
  if (!have_header) throw ParseError(line_no + 1, 1, "missing header");
  result.system = PartialTripleSystem(n, std::move(triples));
  return result;
}

Parsed parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

Parsed read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

void write(std::ostream& out, const PartialTripleSystem& ts, bool partial) {
  out << (partial ? "pstss " : "sts ") << ts.size() << '\n';
  std::string buf;
  for (const Triple& t : ts.triples()) {
    buf.clear();
    buf += std::to_string(t[0]);
    buf += ' ';
    buf += std::to_string(t[1]);
    buf += ' ';
    buf += std::to_string(t[2]);
    buf += '\n';
    out << buf;
  }
}

std::string to_string(const PartialTripleSystem& ts, bool partial) {
  std::ostringstream os;
  write(os, ts, partial);
  return os.str();
}

void write_file(const std::string& path, const PartialTripleSystem& ts, bool partial) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write(out, ts, partial);
}

void write_names(std::ostream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) out << "point " << i << " = " << names[i] << '\n';
}

std::vector<std::string> parse_names(std::istream& in) {
  std::vector<std::string> names;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (raw.empty()) continue;
    const std::string prefix = "point ";
    auto eq = raw.find(" = ");
    if (raw.rfind(prefix, 0) != 0 || eq == std::string::npos) {
      throw ParseError(line_no, 1, "expected 'point <index> = <name>'");
    }
    std::size_t index = std::stoul(raw.substr(prefix.size(), eq - prefix.size()));
    if (index != names.size()) throw ParseError(line_no, prefix.size() + 1, "indices must be consecutive");
    names.push_back(raw.substr(eq + 3));
  }
  return names;
}

}  // namespace sts::io
