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

// Letters, words, rules and semigroup presentations.

#ifndef SQUIER_WORDS_HPP_
#define SQUIER_WORDS_HPP_

#include <cstddef>      // for size_t
#include <compare>      // for operator<=>
#include <cstdint>      // for uint32_t
#include <functional>   // for hash
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <unordered_map>
#include <vector>  // for vector

namespace squier {

  //! The namespaces a letter can live in. The tags \c A, \c B, \c C and \c Z
  //! are used by the ideal extension machinery, everything else is \c plain.
  enum class LetterTag : uint8_t { plain, A, B, C, Z };

  //! \brief An interned letter.
  //!
  //! Letters are interned once per process by (name, tag); two letters are
  //! equal if and only if they have the same name and the same tag.
  struct Letter {
    uint32_t id = 0;

    bool operator==(Letter const&) const = default;
    auto operator<=>(Letter const&) const = default;
  };

  //! Returns the letter with the given name and tag, interning it if needed.
  //! Throws InputError if \p name is not a valid letter name.
  Letter letter(std::string_view name, LetterTag tag = LetterTag::plain);

  //! The name of \p x.
  std::string const& name(Letter x);

  //! The tag of \p x.
  LetterTag tag(Letter x);

  //! Letter names are non-empty, contain no white space and none of the
  //! characters <tt>= # | ; ( ) ~ .</tt>, and are not exactly \c _.
  bool is_valid_letter_name(std::string_view name);

  using Word = std::vector<Letter>;

  //! Concatenation.
  Word operator+(Word const& u, Word const& v);

  //! The subword of \p w of length \p len starting at \p pos.
  Word subword(Word const& w, size_t pos, size_t len);

  //! Whether \p u occurs in \p w starting at \p pos.
  bool occurs_at(Word const& w, size_t pos, Word const& u);

  //! Letter names joined by \p sep; the empty word is \p empty.
  std::string to_string(Word const& w,
                        std::string_view sep   = " ",
                        std::string_view empty = "");

  struct WordHash {
    size_t operator()(Word const& w) const noexcept;
  };

  //! A defining relation; both sides are non-empty.
  struct Rule {
    Word   lhs;
    Word   rhs;
    size_t id = 0;

    //! \c lhs for \p sign = +1 and \c rhs for \p sign = -1.
    [[nodiscard]] Word const& side(int sign) const {
      return sign > 0 ? lhs : rhs;
    }

    bool operator==(Rule const&) const = default;
  };

  //! \brief A semigroup presentation.
  //!
  //! Rule ids are always 0, ..., n - 1 in list order.
  class Presentation {
   public:
    Presentation() = default;

    //! Appends \p x to the alphabet; throws InputError on duplicates.
    void add_letter(Letter x);

    //! Appends a rule and returns its id. Throws InputError if a side is
    //! empty or uses a letter outside the alphabet.
    size_t add_rule(Word lhs, Word rhs);

    [[nodiscard]] std::vector<Letter> const& alphabet() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    [[nodiscard]] Rule const& rule(size_t id) const;

    [[nodiscard]] bool contains(Letter x) const {
      return _index.count(x.id) != 0;
    }

    //! Position of \p x in the alphabet; throws InputError if absent.
    [[nodiscard]] size_t index(Letter x) const;

    //! The letter called \p name, if any.
    [[nodiscard]] std::optional<Letter> find(std::string_view name) const;

    //! Whether every letter of \p w is in the alphabet.
    [[nodiscard]] bool is_word(Word const& w) const;

    //! Shortlex order with letters ordered as in the alphabet.
    [[nodiscard]] bool shortlex_less(Word const& u, Word const& v) const;

    bool operator==(Presentation const& that) const {
      return _alphabet == that._alphabet && _rules == that._rules;
    }

   private:
    std::vector<Letter>                  _alphabet;
    std::vector<Rule>                    _rules;
    std::unordered_map<uint32_t, size_t> _index;
  };

  //! Parses the <tt>.sgp</tt> format. Letters are created with \p tag.
  Presentation parse_presentation(std::string_view text,
                                  LetterTag        tag = LetterTag::plain);

  //! Canonical <tt>.sgp</tt> text of \p p.
  std::string to_string(Presentation const& p);

  //! Parses a word of letter names separated by \p sep (runs of white space
  //! when \p sep is a space). The empty word is written \c _ or as nothing.
  Word parse_word(std::string_view text, Presentation const& p, char sep = ' ');

  //! Every word over \p alphabet of length between 1 and \p n, in shortlex
  //! order.
  std::vector<Word> words_up_to(std::vector<Letter> const& alphabet, size_t n);

  //! A factorisation w = prefix r_sign suffix.
  struct Occurrence {
    Word   prefix;
    size_t rule;
    int    sign;
    Word   suffix;

    bool operator==(Occurrence const&) const = default;
  };

  //! Every factorisation of \p w through a side of a rule, ordered by
  //! position, then rule id, then sign (+1 first).
  std::vector<Occurrence> rewrite_occurrences(Word const&         w,
                                              Presentation const& p);

  //! The word obtained by replacing the matched side by the other one.
  Word apply(Occurrence const& o, Presentation const& p);

}  // namespace squier

template <>
struct std::hash<squier::Letter> {
  size_t operator()(squier::Letter x) const noexcept {
    return std::hash<uint32_t>()(x.id);
  }
};

#endif  // SQUIER_WORDS_HPP_
