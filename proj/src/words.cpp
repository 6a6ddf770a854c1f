//
// squier - homotopy bases for semigroup presentations
// Copyright (C) 2026 The squier authors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

#include "squier/words.hpp"

#include <algorithm>  // for equal
#include <deque>      // for deque
#include <mutex>      // for mutex, lock_guard
#include <sstream>    // for ostringstream

#include "squier/exception.hpp"

namespace squier {

  namespace {
    struct LetterTable {
      std::mutex                                mtx;
      std::deque<std::pair<std::string, LetterTag>> letters;
      std::unordered_map<std::string, uint32_t> ids;
    };

    LetterTable& letter_table() {
      static LetterTable table;
      return table;
    }

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  Letter letter(std::string_view name, LetterTag t) {
    if (!is_valid_letter_name(name)) {
      throw InputError("invalid letter name \"" + std::string(name) + "\"");
    }
    std::string key(1, static_cast<char>('0' + static_cast<int>(t)));
    key += name;
    auto&                       table = letter_table();
    std::lock_guard<std::mutex> lock(table.mtx);
    auto                        it = table.ids.find(key);
    if (it != table.ids.end()) {
      return Letter{it->second};
    }
    auto id = static_cast<uint32_t>(table.letters.size());
    table.letters.emplace_back(std::string(name), t);
    table.ids.emplace(std::move(key), id);
    return Letter{id};
  }

  std::string const& name(Letter x) {
    auto&                       table = letter_table();
    std::lock_guard<std::mutex> lock(table.mtx);
    return table.letters.at(x.id).first;
  }

  LetterTag tag(Letter x) {
    auto&                       table = letter_table();
    std::lock_guard<std::mutex> lock(table.mtx);
    return table.letters.at(x.id).second;
  }

  bool is_valid_letter_name(std::string_view name) {
    if (name.empty() || name == "_") {
      return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
      return is_space(c) || c == '=' || c == '#' || c == '|' || c == ';'
             || c == '(' || c == ')' || c == '~' || c == '.';
    });
  }

  Word operator+(Word const& u, Word const& v) {
    Word result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  Word subword(Word const& w, size_t pos, size_t len) {
    return Word(w.begin() + pos, w.begin() + pos + len);
  }

  bool occurs_at(Word const& w, size_t pos, Word const& u) {
    return pos + u.size() <= w.size()
           && std::equal(u.begin(), u.end(), w.begin() + pos);
  }

  std::string to_string(Word const&      w,
                        std::string_view sep,
                        std::string_view empty) {
    if (w.empty()) {
      return std::string(empty);
    }
    std::string result;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        result += sep;
      }
      result += name(w[i]);
    }
    return result;
  }

  size_t WordHash::operator()(Word const& w) const noexcept {
    size_t h = w.size();
    for (auto x : w) {
      h ^= x.id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  void Presentation::add_letter(Letter x) {
    if (contains(x)) {
      throw InputError("duplicate letter \"" + name(x) + "\"");
    }
    _index.emplace(x.id, _alphabet.size());
    _alphabet.push_back(x);
  }

  size_t Presentation::add_rule(Word lhs, Word rhs) {
    if (lhs.empty() || rhs.empty()) {
      throw InputError("empty rule side");
    }
    for (auto const* side : {&lhs, &rhs}) {
      for (auto x : *side) {
        if (!contains(x)) {
          throw InputError("letter \"" + name(x) + "\" is not in the alphabet");
        }
      }
    }
    size_t id = _rules.size();
    _rules.push_back(Rule{std::move(lhs), std::move(rhs), id});
    return id;
  }

  Rule const& Presentation::rule(size_t id) const {
    if (id >= _rules.size()) {
      throw InputError("no rule with id " + std::to_string(id));
    }
    return _rules[id];
  }

  size_t Presentation::index(Letter x) const {
    auto it = _index.find(x.id);
    if (it == _index.end()) {
      throw InputError("letter \"" + name(x) + "\" is not in the alphabet");
    }
    return it->second;
  }

  std::optional<Letter> Presentation::find(std::string_view nm) const {
    for (auto x : _alphabet) {
      if (name(x) == nm) {
        return x;
      }
    }
    return std::nullopt;
  }

  bool Presentation::is_word(Word const& w) const {
    return std::all_of(
        w.begin(), w.end(), [this](Letter x) { return contains(x); });
  }

  bool Presentation::shortlex_less(Word const& u, Word const& v) const {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] != v[i]) {
        return index(u[i]) < index(v[i]);
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Splits on runs of white space, recording the column of each token.
    std::vector<std::pair<std::string_view, size_t>>
    tokens(std::string_view line, size_t offset) {
      std::vector<std::pair<std::string_view, size_t>> result;
      size_t                                           i = 0;
      while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) {
          ++i;
        }
        size_t j = i;
        while (j < line.size() && !is_space(line[j])) {
          ++j;
        }
        if (j > i) {
          result.emplace_back(line.substr(i, j - i), offset + i + 1);
        }
        i = j;
      }
      return result;
    }
  }  // namespace

  Presentation parse_presentation(std::string_view text, LetterTag t) {
    Presentation p;
    bool         seen_alphabet = false;
    size_t       line_no       = 0;
    while (!text.empty()) {
      ++line_no;
      size_t           nl   = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (trim(line).empty()) {
        continue;
      }
      size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected \"alphabet:\" or \"rule:\"", line_no, 1);
      }
      auto directive = trim(line.substr(0, colon));
      auto body      = line.substr(colon + 1);
      auto toks      = tokens(body, colon + 1);
      if (directive == "alphabet") {
        if (seen_alphabet) {
          throw ParseError("second alphabet declaration", line_no, 1);
        }
        seen_alphabet = true;
        for (auto [tok, col] : toks) {
          if (!is_valid_letter_name(tok)) {
            throw ParseError("invalid letter name \"" + std::string(tok) + "\"",
                             line_no,
                             col);
          }
          auto x = letter(tok, t);
          if (p.contains(x)) {
            throw ParseError(
                "duplicate letter \"" + std::string(tok) + "\"", line_no, col);
          }
          p.add_letter(x);
        }
      } else if (directive == "rule") {
        if (!seen_alphabet) {
          throw ParseError("rule before alphabet", line_no, 1);
        }
        Word   sides[2];
        int    side   = 0;
        size_t eq_col = 0;
        for (auto [tok, col] : toks) {
          if (tok == "=") {
            if (side == 1) {
              throw ParseError("more than one \"=\"", line_no, col);
            }
            side   = 1;
            eq_col = col;
            continue;
          }
          auto x = p.find(tok);
          if (!x) {
            throw ParseError(
                "undeclared letter \"" + std::string(tok) + "\"", line_no, col);
          }
          sides[side].push_back(*x);
        }
        if (side == 0) {
          throw ParseError("missing \"=\"", line_no, colon + 2);
        }
        if (sides[0].empty() || sides[1].empty()) {
          throw ParseError("empty rule side", line_no, eq_col);
        }
        p.add_rule(std::move(sides[0]), std::move(sides[1]));
      } else {
        throw ParseError(
            "unknown directive \"" + std::string(directive) + "\"", line_no, 1);
      }
    }
    if (!seen_alphabet) {
      throw ParseError("missing alphabet declaration", line_no + 1, 1);
    }
    return p;
  }

  std::string to_string(Presentation const& p) {
    std::string result = "alphabet:";
    for (auto x : p.alphabet()) {
      result += ' ';
      result += name(x);
    }
    result += '\n';
    for (auto const& r : p.rules()) {
      result += "rule: " + to_string(r.lhs) + " = " + to_string(r.rhs) + "\n";
    }
    return result;
  }

  Word parse_word(std::string_view text, Presentation const& p, char sep) {
    Word             result;
    std::string_view rest = trim(text);
    if (rest.empty() || rest == "_") {
      return result;
    }
    while (true) {
      size_t           pos;
      std::string_view tok;
      if (sep == ' ') {
        pos = 0;
        while (pos < rest.size() && !is_space(rest[pos])) {
          ++pos;
        }
      } else {
        pos = rest.find(sep);
        if (pos == std::string_view::npos) {
          pos = rest.size();
        }
      }
      tok    = trim(rest.substr(0, pos));
      auto x = p.find(tok);
      if (!x) {
        throw InputError("unknown letter \"" + std::string(tok) + "\"");
      }
      result.push_back(*x);
      if (pos >= rest.size()) {
        break;
      }
      rest = trim(rest.substr(pos + 1));
      if (rest.empty()) {
        throw InputError("trailing separator in word \"" + std::string(text)
                         + "\"");
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  std::vector<Occurrence> rewrite_occurrences(Word const&         w,
                                              Presentation const& p) {
    std::vector<Occurrence> result;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (auto const& r : p.rules()) {
        for (int sign : {+1, -1}) {
          auto const& side = r.side(sign);
          if (occurs_at(w, pos, side)) {
            result.push_back(
                Occurrence{subword(w, 0, pos),
                           r.id,
                           sign,
                           subword(w, pos + side.size(),
                                   w.size() - pos - side.size())});
          }
        }
      }
    }
    return result;
  }

  Word apply(Occurrence const& o, Presentation const& p) {
    return o.prefix + p.rule(o.rule).side(-o.sign) + o.suffix;
  }

  std::vector<Word> words_up_to(std::vector<Letter> const& alphabet, size_t n) {
    std::vector<Word> result;
    std::vector<Word> layer = {Word()};
    for (size_t len = 1; len <= n; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (auto a : alphabet) {
          next.push_back(w + Word({a}));
        }
      }
      result.insert(result.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return result;
  }

}  // namespace squier
