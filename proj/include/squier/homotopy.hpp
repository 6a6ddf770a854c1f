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

// Homotopy relations on paths of the derivation graph: elementary moves,
// homotopy bases, bounded certificate search and the critical pair base of
// a complete rewriting system.

#ifndef SQUIER_HOMOTOPY_HPP_
#define SQUIER_HOMOTOPY_HPP_

#include <cstddef>  // for size_t
#include <optional>
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "graph.hpp"
#include "oracle.hpp"
#include "words.hpp"

namespace squier {

  struct ParallelPair {
    Path left;
    Path right;

    bool operator==(ParallelPair const&) const = default;
  };

  //! \brief A list of pairs of paths.
  //!
  //! A closed path C is stored as the pair (C, 1_w) where w is its base.
  struct HomotopyBase {
    std::vector<ParallelPair> pairs;

    void add(Path left, Path right) {
      pairs.push_back(ParallelPair{std::move(left), std::move(right)});
    }

    void add_closed(Path c) {
      Word w = c.source();
      pairs.push_back(ParallelPair{std::move(c), Path(std::move(w))});
    }

    void append(HomotopyBase const& that) {
      pairs.insert(pairs.end(), that.pairs.begin(), that.pairs.end());
    }

    [[nodiscard]] size_t size() const noexcept {
      return pairs.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return pairs.empty();
    }

    //! The closed path left * right^-1 of the \p k-th pair.
    [[nodiscard]] Path cycle(size_t k) const;

    bool operator==(HomotopyBase const&) const = default;
  };

  //! The two sides of the interchange of \p e1 and \p e2.
  ParallelPair h1_pair(Edge const& e1, Edge const& e2);

  //! \brief An elementary move on a path.
  //!
  //! For base replacement let D be the cycle of pair \c pair (inverted if
  //! \c inverted), rotated to start at edge \c offset, and split as D = S T
  //! with |S| = \c split. A forward move replaces the subpath x S y starting
  //! at edge \c position by x T^-1 y; a backward move does the opposite.
  //! With \c offset 0 and \c split the length of the left side this is the
  //! plain replacement of x left y by x right y.
  struct Move {
    enum class Kind { h1_interchange, base_replace, h4_cancel, h4_insert };

    Kind                kind     = Kind::h4_cancel;
    size_t              position = 0;
    size_t              pair     = 0;
    bool                inverted = false;
    size_t              offset   = 0;
    size_t              split    = 0;
    bool                forward  = true;
    Word                left;
    Word                right;
    std::optional<Edge> edge;

    bool operator==(Move const&) const = default;
  };

  //! Throws InputError if the move does not apply.
  Path apply_move(Path const& p, Move const& m, HomotopyBase const& base);

  struct HomotopyResult {
    enum class Verdict { equivalent, inconclusive };
    Verdict           verdict = Verdict::inconclusive;
    std::vector<Move> certificate;
    size_t            visited = 0;

    [[nodiscard]] bool equivalent() const noexcept {
      return verdict == Verdict::equivalent;
    }
  };

  //! \brief Searches for a sequence of moves turning \p p into \p q.
  //!
  //! The search runs best first (shorter paths first) from both ends and
  //! visits at most \p budget distinct paths. An \c equivalent verdict
  //! always comes with a certificate that has been replayed. Throws
  //! InputError if \p p and \p q are not parallel.
  HomotopyResult homotopic_bounded(Path const&         p,
                                   Path const&         q,
                                   HomotopyBase const& base,
                                   size_t              budget = 10'000);

  //! The closed paths E1 N1 N2^-1 E2^-1 for every critical pair (E1, E2) of
  //! \p p, where N1, N2 are leftmost reductions to normal form. Throws
  //! VerificationError unless \p cert certifies completeness, or if a
  //! critical pair is not joinable.
  HomotopyBase critical_pair_base(Presentation const&            p,
                                  CompletenessCertificate const& cert);

  //! The leftmost reduction of \p w to normal form, as a positive path.
  Path leftmost_reduction(Word const& w, Presentation const& p);

  struct BaseReport {
    //! One entry per pair; empty if the pair passed.
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] size_t num_failures() const;
  };

  BaseReport validate_base(HomotopyBase const& base, Presentation const& p);

  //! The <tt>.hb</tt> text of \p base.
  std::string to_string(HomotopyBase const& base);

  HomotopyBase parse_base(std::string_view text, Presentation const& p);

}  // namespace squier

#endif  // SQUIER_HOMOTOPY_HPP_
