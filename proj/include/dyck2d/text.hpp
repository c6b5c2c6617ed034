#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dyck2d/error.hpp"
#include "dyck2d/picture.hpp"
#include "dyck2d/symbol.hpp"

namespace dyck2d {

// Picture text format.
//
// One line per row. In character mode (k = 1 with no digits in the text) each
// cell is one of a b c d N *, or a glyph alias ⌜ ⌝ ⌞ ⌟ •; blanks inside a line
// are ignored. In token mode (k > 1, or any digit present) cells are
// whitespace-separated tokens: a corner letter or glyph followed by a decimal
// index ("a2", "⌟1"), or N, *, •. Leading and trailing blank lines are dropped;
// text without cells is the empty picture.

namespace detail {

struct Glyph {
  std::string_view text;
  Role role;
};

inline constexpr Glyph kGlyphs[] = {
    {"a", Role::A},  {"b", Role::B},          {"c", Role::C},      {"d", Role::D},
    {"N", Role::Neutral}, {"*", Role::Bullet}, {"⌜", Role::A},     {"⌝", Role::B},
    {"⌞", Role::C},  {"⌟", Role::D},          {"•", Role::Bullet},
};

// Matches a role glyph at the front of `text`; returns its byte length or 0.
inline std::size_t match_glyph(std::string_view text, Role& role) {
  for (const Glyph& g : kGlyphs) {
    if (text.substr(0, g.text.size()) == g.text) {
      role = g.role;
      return g.text.size();
    }
  }
  return 0;
}

inline std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xe) return 3;
  if ((lead >> 3) == 0x1e) return 4;
  return 1;
}

inline bool is_blank(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline bool blank_line(std::string_view line) {
  for (char ch : line) {
    if (!is_blank(ch)) return false;
  }
  return true;
}

inline Symbol make_symbol(Role role, long index, int k, std::size_t line, std::size_t col,
                          std::string_view token) {
  if (role == Role::Neutral || role == Role::Bullet) {
    if (index >= 0) {
      throw ParseError(Errc::unknown_token, line, col,
                       "symbol '" + std::string(token) + "' takes no index");
    }
    return Symbol{role, 0};
  }
  if (index < 0) {
    throw ParseError(Errc::unknown_token, line, col,
                     "corner token '" + std::string(token) + "' needs an index");
  }
  if (index < 1 || index > k) {
    throw ParseError(Errc::index_out_of_range, line, col,
                     "index in '" + std::string(token) + "' outside 1.." + std::to_string(k));
  }
  return Symbol{role, static_cast<std::uint16_t>(index)};
}

inline std::vector<Symbol> parse_line_chars(std::string_view line, std::size_t lineno, int k) {
  std::vector<Symbol> cells;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (is_blank(line[pos])) {
      ++pos;
      continue;
    }
    Role role{};
    const std::size_t len = match_glyph(line.substr(pos), role);
    if (len == 0) {
      const std::size_t bad = utf8_length(static_cast<unsigned char>(line[pos]));
      throw ParseError(Errc::unknown_token, lineno, cells.size() + 1,
                       "unknown symbol '" + std::string(line.substr(pos, bad)) + "'");
    }
    cells.push_back(role <= Role::D ? Symbol{role, 1} : Symbol{role, 0});
    (void)k;
    pos += len;
  }
  return cells;
}

inline std::vector<Symbol> parse_line_tokens(std::string_view line, std::size_t lineno, int k) {
  std::vector<Symbol> cells;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (is_blank(line[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && !is_blank(line[end])) ++end;
    std::string_view token = line.substr(pos, end - pos);
    const std::size_t col = cells.size() + 1;
    Role role{};
    const std::size_t len = match_glyph(token, role);
    if (len == 0) {
      throw ParseError(Errc::unknown_token, lineno, col,
                       "unknown token '" + std::string(token) + "'");
    }
    std::string_view digits = token.substr(len);
    long index = -1;
    if (!digits.empty()) {
      index = 0;
      for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          throw ParseError(Errc::unknown_token, lineno, col,
                           "unknown token '" + std::string(token) + "'");
        }
        index = index * 10 + (ch - '0');
        if (index > 65535) index = 65536;
      }
    }
    cells.push_back(make_symbol(role, index, k, lineno, col, token));
    pos = end;
  }
  return cells;
}

}  // namespace detail

inline Picture parse_picture(std::string_view text, int k = 1) {
  if (k < 1) throw Error(Errc::index_out_of_range, "alphabet bound k must be at least 1");
  const bool token_mode =
      k > 1 || text.find_first_of("0123456789") != std::string_view::npos;
  auto lines = detail::split_lines(text);
  std::size_t first = 0;
  std::size_t last = lines.size();
  while (first < last && detail::blank_line(lines[first])) ++first;
  while (last > first && detail::blank_line(lines[last - 1])) --last;
  if (first == last) return Picture{};

  std::vector<Symbol> cells;
  std::size_t cols = 0;
  for (std::size_t i = first; i < last; ++i) {
    const std::size_t lineno = i + 1;
    auto row = token_mode ? detail::parse_line_tokens(lines[i], lineno, k)
                          : detail::parse_line_chars(lines[i], lineno, k);
    if (i == first) {
      cols = row.size();
    } else if (row.size() != cols) {
      throw ParseError(Errc::ragged_rows, lineno, std::min(row.size(), cols) + 1,
                       "row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(cols));
    }
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return Picture(last - first, cols, k, std::move(cells));
}

enum class RenderStyle { ascii, glyph, json };

inline nlohmann::ordered_json picture_to_json(const Picture& p) {
  nlohmann::ordered_json out;
  out["rows"] = p.rows();
  out["cols"] = p.cols();
  out["k"] = p.k();
  auto cells = nlohmann::ordered_json::array();
  for (Symbol s : p.cells()) {
    cells.push_back(nlohmann::ordered_json::array({std::string(1, role_letter(s.role)), s.index}));
  }
  out["cells"] = std::move(cells);
  return out;
}

inline Picture picture_from_json(const nlohmann::ordered_json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const int k = j.at("k").get<int>();
  std::vector<Symbol> cells;
  for (const auto& cell : j.at("cells")) {
    const auto letter = cell.at(0).get<std::string>();
    Role role{};
    if (detail::match_glyph(letter, role) != letter.size() || letter.empty()) {
      throw Error(Errc::unknown_token, "unknown JSON cell '" + letter + "'");
    }
    const auto index = cell.at(1).get<int>();
    cells.push_back(Symbol{role, static_cast<std::uint16_t>(role <= Role::D ? index : 0)});
  }
  return Picture(rows, cols, k, std::move(cells));
}

/// Renders a word with the same token syntax as a picture row.
inline std::string render_word(std::span<const Symbol> word, int k = 1, bool glyph = false) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (k > 1 && i > 0) out += ' ';
    out += symbol_token(word[i], k > 1, glyph);
  }
  return out;
}

inline std::string render_picture(const Picture& p, RenderStyle style = RenderStyle::ascii) {
  if (style == RenderStyle::json) return picture_to_json(p).dump();
  std::string out;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    if (r > 0) out += '\n';
    out += render_word(p.row(r), p.k(), style == RenderStyle::glyph);
  }
  return out;
}

/// Parses a single word (one line of picture text).
inline std::vector<Symbol> parse_word(std::string_view text, int k = 1) {
  Picture p = parse_picture(text, k);
  if (p.rows() > 1) throw Error(Errc::ragged_rows, "a word must fit on one line");
  return std::vector<Symbol>(p.cells().begin(), p.cells().end());
}

}  // namespace dyck2d
