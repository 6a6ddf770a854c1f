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

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "test-main.hpp"  // for SQUIER_TEST_CASE

#include "squier/exception.hpp"  // for ParseError
#include "squier/words.hpp"      // for Presentation

namespace squier {

  using testing::fixture;

  SQUIER_TEST_CASE("Words", "000", "letters are interned", "[quick]") {
    Letter x = letter("x");
    REQUIRE(letter("x") == x);
    REQUIRE(name(x) == "x");
    REQUIRE(tag(x) == LetterTag::plain);
    Letter y = letter("x", LetterTag::B);
    REQUIRE(y != x);
    REQUIRE(tag(y) == LetterTag::B);
    REQUIRE(name(y) == "x");
  }

  SQUIER_TEST_CASE("Words", "001", "letter names", "[quick]") {
    REQUIRE(is_valid_letter_name("a"));
    REQUIRE(is_valid_letter_name("[1,a]"));
    REQUIRE(is_valid_letter_name("0'"));
    REQUIRE(!is_valid_letter_name(""));
    REQUIRE(!is_valid_letter_name("_"));
    REQUIRE(!is_valid_letter_name("a b"));
    REQUIRE(!is_valid_letter_name("a.b"));
    REQUIRE(!is_valid_letter_name("a=b"));
    REQUIRE(!is_valid_letter_name("a#"));
    REQUIRE_THROWS_AS(letter("a|b"), InputError);
  }

  SQUIER_TEST_CASE("Words", "002", "parse and print .sgp", "[quick]") {
    auto p = fixture("fix1.sgp");
    REQUIRE(p.alphabet().size() == 1);
    REQUIRE(p.rules().size() == 1);
    REQUIRE(to_string(p.rule(0).lhs) == "a a a");
    REQUIRE(to_string(p.rule(0).rhs) == "a");
    REQUIRE(to_string(p) == "alphabet: a\nrule: a a a = a\n");
    REQUIRE(parse_presentation(to_string(p)) == p);

    auto q = parse_presentation("# comment\nalphabet: a b  # two\n\n"
                                "rule: a b = b a\nrule: a a = a\n");
    REQUIRE(q.alphabet().size() == 2);
    REQUIRE(q.rules().size() == 2);
    REQUIRE(q.rule(1).id == 1);
    REQUIRE(to_string(q) == "alphabet: a b\nrule: a b = b a\nrule: a a = a\n");
  }

  SQUIER_TEST_CASE("Words", "003", "parse errors carry positions", "[quick]") {
    auto check = [](std::string const& text, size_t line, size_t col) {
      try {
        parse_presentation(text);
        FAIL("no exception for " << text);
      } catch (ParseError const& e) {
        REQUIRE(e.line() == line);
        REQUIRE(e.column() == col);
      }
    };
    check("alphabet: a\nrule: a a = b\n", 2, 13);
    check("rule: a = a\n", 1, 1);
    check("alphabet: a\nrule: a a a\n", 2, 6);
    check("alphabet: a\nrule: = a\n", 2, 7);
    check("alphabet: a a\n", 1, 13);
    check("alphabet: a\nfoo: a\n", 2, 1);
    check("alphabet: a\nrule: a = a = a\n", 2, 13);
    check("", 1, 1);
    REQUIRE_THROWS_AS(parse_presentation("alphabet: a\nalphabet: b\n"),
                      ParseError);
  }

  SQUIER_TEST_CASE("Words", "004", "presentation checks", "[quick]") {
    Presentation p;
    Letter       a = letter("a"), b = letter("b");
    p.add_letter(a);
    REQUIRE_THROWS_AS(p.add_letter(a), InputError);
    REQUIRE_THROWS_AS(p.add_rule({}, {a}), InputError);
    REQUIRE_THROWS_AS(p.add_rule({a}, {b}), InputError);
    REQUIRE(p.add_rule({a, a}, {a}) == 0);
    REQUIRE_THROWS_AS(p.rule(1), InputError);
    REQUIRE(p.is_word({a, a, a}));
    REQUIRE(!p.is_word({a, b}));
    REQUIRE(p.find("a") == a);
    REQUIRE(!p.find("b"));
  }

  SQUIER_TEST_CASE("Words", "005", "shortlex order", "[quick]") {
    auto   p = parse_presentation("alphabet: b a\n");
    Letter a = letter("a"), b = letter("b");
    // the alphabet order is b < a
    REQUIRE(p.shortlex_less({b}, {a}));
    REQUIRE(p.shortlex_less({a}, {b, b}));
    REQUIRE(p.shortlex_less({b, a}, {a, b}));
    REQUIRE(!p.shortlex_less({a, b}, {a, b}));
    REQUIRE(p.shortlex_less({}, {b}));
  }

  SQUIER_TEST_CASE("Words", "006", "words_up_to", "[quick]") {
    auto p = parse_presentation("alphabet: a b\n");
    auto w = words_up_to(p.alphabet(), 3);
    REQUIRE(w.size() == 2 + 4 + 8);
    for (size_t i = 1; i < w.size(); ++i) {
      REQUIRE(p.shortlex_less(w[i - 1], w[i]));
    }
    REQUIRE(words_up_to(p.alphabet(), 0).empty());
  }

  SQUIER_TEST_CASE("Words", "007", "parse_word", "[quick]") {
    auto p = parse_presentation("alphabet: a [1,a]\n");
    REQUIRE(parse_word("a [1,a] a", p).size() == 3);
    REQUIRE(parse_word("_", p).empty());
    REQUIRE(parse_word("", p).empty());
    REQUIRE(parse_word("a.[1,a]", p, '.').size() == 2);
    REQUIRE_THROWS_AS(parse_word("a b", p), InputError);
    REQUIRE_THROWS_AS(parse_word("a.", p, '.'), InputError);
    REQUIRE(to_string(parse_word("a a", p), ".") == "a.a");
    REQUIRE(to_string(Word(), ".", "_") == "_");
  }

  SQUIER_TEST_CASE("Words", "008", "rewrite_occurrences", "[quick]") {
    auto p  = fixture("fix1.sgp");
    auto a5 = parse_word("a a a a a", p);
    auto o  = rewrite_occurrences(a5, p);
    // 3 matches of a a a, 5 of a
    REQUIRE(o.size() == 8);
    REQUIRE(o[0].prefix.empty());
    REQUIRE(o[0].sign == 1);
    REQUIRE(o[1].prefix.empty());
    REQUIRE(o[1].sign == -1);
    for (size_t i = 1; i < o.size(); ++i) {
      REQUIRE(o[i - 1].prefix.size() <= o[i].prefix.size());
    }
    REQUIRE(apply(o[0], p).size() == 3);
    REQUIRE(apply(o[1], p).size() == 7);
    for (auto const& x : o) {
      auto const& r = p.rule(x.rule);
      REQUIRE(x.prefix + r.side(x.sign) + x.suffix == a5);
      REQUIRE(apply(x, p) == x.prefix + r.side(-x.sign) + x.suffix);
    }
  }

  SQUIER_TEST_CASE("Words", "009", "subword and occurs_at", "[quick]") {
    auto p = parse_presentation("alphabet: a b\n");
    auto w = parse_word("a b b a", p);
    REQUIRE(subword(w, 1, 2) == parse_word("b b", p));
    REQUIRE(occurs_at(w, 2, parse_word("b a", p)));
    REQUIRE(!occurs_at(w, 3, parse_word("a b", p)));
    REQUIRE(occurs_at(w, 4, Word()));
  }

}  // namespace squier
