#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wrep/groups.hpp"

namespace wrep {

// Group file format (line oriented; '#' starts a comment):
//
//   group <label>             optional
//   size <m>
//   mul                       followed by m lines of m 0-based indices
//   <row 0>
//   ...
//   element_names <m names>   optional
//   characters <k>            optional; followed by k lines of k scalars,
//                             columns ordered like the computed classes
//                             (by smallest element index)
//
// Scalar literals: rationals like 2, -1, 5/3, or cyclotomic values written as
// (N: c0, c1, ...) giving the coefficients of 1, zeta_N, ..., zeta_N^{j}.
// A shipped character table is mandatory for groups meant to drive the
// character-basis machinery; validate_character_table is the gatekeeper.

namespace detail {

struct FileCursor {
  std::vector<std::string> lines;
  size_t row = 0;

  bool next_content_line(std::string* out, int* line_no) {
    while (row < lines.size()) {
      std::string s = lines[row];
      size_t hash = s.find('#');
      if (hash != std::string::npos) s = s.substr(0, hash);
      size_t a = s.find_first_not_of(" \t\r\n");
      ++row;
      if (a == std::string::npos) continue;
      size_t b = s.find_last_not_of(" \t\r\n");
      *out = s.substr(a, b - a + 1);
      *line_no = static_cast<int>(row);
      return true;
    }
    return false;
  }
};

inline Scalar parse_scalar_token(const std::string& tok, int line, int col) {
  if (tok.empty()) throw ParseError("empty scalar literal", line, col);
  if (tok[0] == '(') {
    if (tok.back() != ')') throw ParseError("unterminated cyclotomic literal", line, col);
    std::string body = tok.substr(1, tok.size() - 2);
    size_t colon = body.find(':');
    if (colon == std::string::npos)
      throw ParseError("cyclotomic literal needs '(order: coeffs)'", line, col);
    unsigned order = 0;
    try {
      order = static_cast<unsigned>(std::stoul(body.substr(0, colon)));
    } catch (const std::exception&) {
      throw ParseError("bad cyclotomic order", line, col);
    }
    if (order == 0) throw ParseError("cyclotomic order must be positive", line, col);
    Scalar acc = Scalar::zero(order);
    std::string coeffs = body.substr(colon + 1);
    std::stringstream ss(coeffs);
    std::string piece;
    int power = 0;
    while (std::getline(ss, piece, ',')) {
      size_t a = piece.find_first_not_of(" \t");
      if (a == std::string::npos) throw ParseError("empty coefficient", line, col);
      size_t b = piece.find_last_not_of(" \t");
      Scalar coeff = parse_scalar_token(piece.substr(a, b - a + 1), line, col);
      acc += coeff * cyclo_root(order, power);
      ++power;
    }
    return acc;
  }
  // rational: [-]digits[/digits]
  size_t slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Scalar(Rational(Integer(tok), Integer(1)));
    return Scalar(Rational(Integer(tok.substr(0, slash)), Integer(tok.substr(slash + 1))));
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + tok + "'", line, col);
  }
}

/// Splits a line into whitespace-separated tokens, keeping parenthesized
/// cyclotomic literals together; records 1-based column positions.
inline std::vector<std::pair<std::string, int>> tokenize(const std::string& line, int line_no) {
  std::vector<std::pair<std::string, int>> toks;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (line[i] == '(') {
      int depth = 0;
      while (i < line.size()) {
        if (line[i] == '(') ++depth;
        if (line[i] == ')') {
          --depth;
          if (depth == 0) {
            ++i;
            break;
          }
        }
        ++i;
      }
      if (depth != 0)
        throw ParseError("unbalanced parentheses", line_no, static_cast<int>(start + 1));
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    }
    toks.emplace_back(line.substr(start, i - start), static_cast<int>(start + 1));
  }
  return toks;
}

}  // namespace detail

inline std::shared_ptr<GroupTable> parse_group_text(const std::string& text,
                                                    const std::string& default_label) {
  detail::FileCursor cur;
  std::stringstream ss(text);
  std::string raw;
  while (std::getline(ss, raw)) cur.lines.push_back(raw);

  std::string label = default_label;
  int size = -1;
  std::vector<std::vector<int>> mul;
  std::vector<std::string> names;
  std::vector<std::vector<Scalar>> char_rows;
  bool have_chars = false;

  std::string line;
  int ln = 0;
  while (cur.next_content_line(&line, &ln)) {
    auto toks = detail::tokenize(line, ln);
    const std::string& kw = toks[0].first;
    if (kw == "group") {
      if (toks.size() < 2) throw ParseError("'group' needs a label", ln, 1);
      label = toks[1].first;
    } else if (kw == "size") {
      if (toks.size() != 2) throw ParseError("'size' needs one integer", ln, 1);
      try {
        size = std::stoi(toks[1].first);
      } catch (const std::exception&) {
        throw ParseError("bad size", ln, toks[1].second);
      }
      if (size < 1) throw ParseError("size must be positive", ln, toks[1].second);
    } else if (kw == "mul") {
      if (size < 0) throw ParseError("'mul' before 'size'", ln, 1);
      for (int r = 0; r < size; ++r) {
        if (!cur.next_content_line(&line, &ln))
          throw ParseError("multiplication table truncated", ln, 1);
        auto row_toks = detail::tokenize(line, ln);
        if (static_cast<int>(row_toks.size()) != size)
          throw ParseError("expected " + std::to_string(size) + " entries in table row", ln, 1);
        std::vector<int> row;
        for (auto& [t, c] : row_toks) {
          try {
            row.push_back(std::stoi(t));
          } catch (const std::exception&) {
            throw ParseError("bad table entry '" + t + "'", ln, c);
          }
        }
        mul.push_back(std::move(row));
      }
    } else if (kw == "element_names") {
      if (size < 0) throw ParseError("'element_names' before 'size'", ln, 1);
      if (static_cast<int>(toks.size()) != size + 1)
        throw ParseError("expected " + std::to_string(size) + " element names", ln, 1);
      for (size_t i = 1; i < toks.size(); ++i) names.push_back(toks[i].first);
    } else if (kw == "characters") {
      if (toks.size() != 2) throw ParseError("'characters' needs a row count", ln, 1);
      int k = 0;
      try {
        k = std::stoi(toks[1].first);
      } catch (const std::exception&) {
        throw ParseError("bad character row count", ln, toks[1].second);
      }
      for (int r = 0; r < k; ++r) {
        if (!cur.next_content_line(&line, &ln))
          throw ParseError("character table truncated", ln, 1);
        auto row_toks = detail::tokenize(line, ln);
        if (static_cast<int>(row_toks.size()) != k)
          throw ParseError("expected " + std::to_string(k) + " scalars in character row", ln, 1);
        std::vector<Scalar> row;
        for (auto& [t, c] : row_toks) row.push_back(detail::parse_scalar_token(t, ln, c));
        char_rows.push_back(std::move(row));
      }
      have_chars = true;
    } else {
      throw ParseError("unknown keyword '" + kw + "'", ln, toks[0].second);
    }
  }
  if (size < 0) throw ParseError("missing 'size'", static_cast<int>(cur.lines.size()), 1);
  if (static_cast<int>(mul.size()) != size)
    throw ParseError("missing or incomplete 'mul' table", static_cast<int>(cur.lines.size()), 1);

  auto g = GroupTable::from_table(label, mul, names);
  if (have_chars) {
    if (static_cast<int>(char_rows.size()) != g->num_classes())
      throw Error(label + ": character table has " + std::to_string(char_rows.size()) +
                  " rows but the group has " + std::to_string(g->num_classes()) + " classes");
    CharacterTable t;
    t.rows = std::move(char_rows);
    for (const auto& row : t.rows) {
      const Scalar& d = row[g->identity_class()];
      bool integral = d.is_rational() && d.as_rational().is_integer();
      t.degrees.push_back(integral ? d.as_rational().num() : Integer(0));
    }
    auto rep = validate_character_table(*g, t);
    if (!rep.ok()) {
      std::string msg = label + ": character table failed validation:";
      for (const auto& v : rep.violations) msg += "\n  " + v;
      throw Error(msg);
    }
    g->set_characters(std::move(t));
  }
  return g;
}

inline std::shared_ptr<GroupTable> load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string label = path;
  size_t slash = label.find_last_of('/');
  if (slash != std::string::npos) label = label.substr(slash + 1);
  return parse_group_text(ss.str(), label);
}

/// Builtin name or a path to a group file.
inline std::shared_ptr<GroupTable> load_group(const std::string& spec) {
  try {
    return build_group(spec);
  } catch (const NotAGroup&) {
    if (spec.find('/') != std::string::npos || spec.find(".grp") != std::string::npos ||
        spec.find(".txt") != std::string::npos)
      return load_group_file(spec);
    throw;
  }
}

}  // namespace wrep
