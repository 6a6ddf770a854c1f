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

// A brute force engine for finite semigroups: enumeration from a
// presentation or a table, Green's relations, maximal subgroups and the
// strong orbit of a subgroup.

#ifndef SQUIER_ORACLE_HPP_
#define SQUIER_ORACLE_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <unordered_map>
#include <vector>  // for vector

#include "words.hpp"

namespace squier {

  //! \brief A finite semigroup given by its multiplication table.
  //!
  //! Every element has a name and a canonical word over the generator
  //! letters; the generator map sends letters to elements. The table is
  //! checked to be associative on construction.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    //! Throws VerificationError, with a witness triple, if \p table is not
    //! associative, and InputError if the data is inconsistent.
    FiniteSemigroup(std::vector<std::string>         names,
                    std::vector<std::vector<size_t>> table,
                    std::vector<Letter>              generators,
                    std::vector<size_t>              generator_values,
                    std::vector<Word>                words);

    [[nodiscard]] size_t size() const noexcept {
      return _names.size();
    }

    [[nodiscard]] size_t product(size_t x, size_t y) const {
      return _table[x][y];
    }

    [[nodiscard]] std::string const& name(size_t x) const {
      return _names.at(x);
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    //! The canonical word of \p x.
    [[nodiscard]] Word const& word(size_t x) const {
      return _words.at(x);
    }

    [[nodiscard]] std::vector<Letter> const& generators() const noexcept {
      return _generators;
    }

    [[nodiscard]] bool has_generator(Letter x) const {
      return _gen_index.count(x.id) != 0;
    }

    //! The element represented by the letter \p x.
    [[nodiscard]] size_t generator(Letter x) const;

    //! The element represented by the non-empty word \p w.
    [[nodiscard]] size_t evaluate(Word const& w) const;

    //! The index of the element called \p nm, if any.
    [[nodiscard]] std::optional<size_t> find(std::string_view nm) const;

    [[nodiscard]] bool is_idempotent(size_t x) const {
      return product(x, x) == x;
    }

    //! The sub-table on a subset closed under multiplication. Names are kept;
    //! each element becomes its own generator letter.
    [[nodiscard]] FiniteSemigroup
    restriction(std::vector<size_t> const& elements) const;

    //! A copy with one extra generator letter per element, named after it.
    [[nodiscard]] FiniteSemigroup with_element_generators() const;

   private:
    std::vector<std::string>             _names;
    std::vector<std::vector<size_t>>     _table;
    std::vector<Letter>                  _generators;
    std::vector<size_t>                  _generator_values;
    std::unordered_map<uint32_t, size_t> _gen_index;
    std::vector<Word>                    _words;
  };

  //! \brief Enumerates the semigroup defined by \p p.
  //!
  //! Uses Todd-Coxeter coset enumeration on the monoid S^1 with at most
  //! \p coset_budget cosets defined. The result is checked as a model of
  //! \p p. Elements are ordered by the shortlex order of their canonical
  //! words, and named \c s1, \c s2, and so on.
  //!
  //! Throws InputError if there are more than \p limit elements and
  //! InconclusiveError if the coset budget runs out.
  FiniteSemigroup enumerate(Presentation const& p,
                            size_t              limit,
                            size_t              coset_budget = 100'000);

  //! Parses the <tt>.tbl</tt> format.
  FiniteSemigroup from_table(std::string_view text);

  //! The <tt>.tbl</tt> text of \p s.
  std::string to_table_string(FiniteSemigroup const& s);

  //! Whether the element represented by \p w lies in \p target.
  bool lang_membership(Word const&                w,
                       std::vector<size_t> const& target,
                       FiniteSemigroup const&     s);

  //! A partition of the elements into classes.
  struct Partition {
    std::vector<std::vector<size_t>> classes;   // each sorted, ordered by min
    std::vector<size_t>              class_of;  // element -> class index

    [[nodiscard]] bool same(size_t x, size_t y) const {
      return class_of[x] == class_of[y];
    }
  };

  struct GreenStructure {
    Partition           R, L, H, D, J;
    std::vector<size_t> idempotents;
    //! leq_J[x][y] is true if and only if S^1 x S^1 is contained in
    //! S^1 y S^1.
    std::vector<std::vector<bool>> leq_J;
  };

  GreenStructure green(FiniteSemigroup const& s);

  //! The H-classes containing an idempotent, in order of their least element.
  std::vector<std::vector<size_t>> maximal_subgroups(FiniteSemigroup const& s);

  //! Throws VerificationError, with a witness, unless \p g is a subgroup.
  //! Returns the identity of \p g.
  size_t check_subgroup(FiniteSemigroup const& s, std::vector<size_t> const& g);

  //! \brief The right cosets of a subgroup.
  //!
  //! Cosets are numbered 1, ..., k with coset 1 the subgroup itself; index 0
  //! is the absorbing failure state.
  struct CosetFamily {
    std::vector<std::vector<size_t>> cosets;  // cosets[i - 1] is C_i
    std::vector<Letter>              letters;
    //! action[i][j] is the coset i times letters[j]; row 0 is all zero.
    std::vector<std::vector<size_t>> action;
    //! to[i - 1] is a word w with G w = C_i, back[i - 1] a word w' with
    //! g w w' = g for all g in G.
    std::vector<Word> to;
    std::vector<Word> back;

    [[nodiscard]] size_t size() const noexcept {
      return cosets.size();
    }

    //! The coset i * x; zero if x is not one of the letters.
    [[nodiscard]] size_t act(size_t i, Letter x) const;

    //! The coset i * w.
    [[nodiscard]] size_t act(size_t i, Word const& w) const;
  };

  //! The strong orbit of \p g under right multiplication by the letters of
  //! \p p. Throws VerificationError if \p g is not a subgroup.
  CosetFamily right_cosets(FiniteSemigroup const&     s,
                           std::vector<size_t> const& g,
                           Presentation const&        p);

  //! \brief Evidence that a rewriting system is complete.
  struct CompletenessCertificate {
    bool   terminating       = false;  // every rule is shortlex decreasing
    bool   locally_confluent = false;  // every critical pair is joinable
    size_t critical_pairs    = 0;

    [[nodiscard]] bool complete() const noexcept {
      return terminating && locally_confluent;
    }
  };

  //! Checks the rules of \p p, oriented left to right, for termination (by
  //! the shortlex order) and local confluence (by resolving every critical
  //! pair).
  CompletenessCertificate check_complete(Presentation const& p);

  //! One generator per element, named after it, and rules xy = z.
  std::pair<Presentation, CompletenessCertificate>
  table_presentation(FiniteSemigroup const& s);

  //! Brute force isomorphism test of multiplication tables.
  bool isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t);

}  // namespace squier

#endif  // SQUIER_ORACLE_HPP_
