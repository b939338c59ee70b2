#include "posetope/poset_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "posetope/error.hpp"

namespace posetope {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

void check_label(const Token& t, std::size_t line_no) {
  if (t.text.find('<') != std::string::npos) {
    throw ParseError(line_no, t.column, "unexpected '<' in label '" + t.text + "' (separate relations with spaces)");
  }
  if (t.text == "elements:") throw ParseError(line_no, t.column, "'elements:' must start its line");
}

}  // namespace

Poset parse_poset(std::string_view text) {
  std::vector<std::string> declared;
  bool have_declaration = false;
  std::size_t declaration_line = 0;
  struct Relation {
    Token lo;
    Token hi;
    std::size_t line;
  };
  std::vector<Relation> relations;

  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  std::string raw;
  while (std::getline(lines, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0].text == "elements:") {
      if (have_declaration) {
        throw ParseError(line_no, tokens[0].column,
                         "second 'elements:' line (first on line " + std::to_string(declaration_line) + ")");
      }
      have_declaration = true;
      declaration_line = line_no;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        check_label(tokens[k], line_no);
        for (const auto& d : declared) {
          if (d == tokens[k].text) throw ParseError(line_no, tokens[k].column, "duplicate label '" + d + "'");
        }
        declared.push_back(tokens[k].text);
      }
    } else if (tokens.size() == 3 && tokens[1].text == "<") {
      check_label(tokens[0], line_no);
      check_label(tokens[2], line_no);
      relations.push_back({tokens[0], tokens[2], line_no});
    } else {
      const Token& bad = tokens.size() >= 2 && tokens[1].text != "<" ? tokens[1]
                         : tokens.size() > 3                          ? tokens[3]
                                                                      : tokens[0];
      throw ParseError(line_no, bad.column, "expected '<label> < <label>' or 'elements: ...', got '" + bad.text + "'");
    }
  }

  std::vector<std::string> names = declared;
  std::unordered_map<std::string, Index> index;
  for (Index i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& r : relations) {
    for (const Token* t : {&r.lo, &r.hi}) {
      if (index.count(t->text)) continue;
      if (have_declaration) throw ParseError(r.line, t->column, "unknown label '" + t->text + "'");
      index.emplace(t->text, names.size());
      names.push_back(t->text);
    }
    if (r.lo.text == r.hi.text) throw ParseError(r.line, r.hi.column, "element related to itself");
    pairs.emplace_back(r.lo.text, r.hi.text);
  }
  if (names.empty()) throw ParseError(line_no == 0 ? 1 : line_no, 1, "poset has no elements");
  if (names.size() > kMaxElements) {
    throw Error(ErrorCode::TooLarge, "posets are limited to " + std::to_string(kMaxElements) + " elements");
  }
  return poset_from_covers(std::move(names), pairs);
}

Poset read_poset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_poset(buffer.str());
}

std::string format_poset(const Poset& p) {
  std::string out = "elements:";
  for (const auto& name : p.names()) out += " " + name;
  out += "\n";
  for (const auto& [lo, hi] : p.covers()) out += p.name(lo) + " < " + p.name(hi) + "\n";
  return out;
}

}  // namespace posetope
