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

// The derivation graph of a presentation: edges, paths and path search.

#ifndef SQUIER_GRAPH_HPP_
#define SQUIER_GRAPH_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <memory>   // for shared_ptr
#include <mutex>    // for mutex
#include <optional>
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "words.hpp"

namespace squier {

  //! \brief An edge (w1, r, sign, w2) of the derivation graph.
  //!
  //! The initial vertex is w1 r_sign w2 and the terminal vertex is
  //! w1 r_{-sign} w2.
  struct Edge {
    Word prefix;
    Rule rule;
    int  sign = 1;
    Word suffix;

    [[nodiscard]] Word source() const {
      return prefix + rule.side(sign) + suffix;
    }

    [[nodiscard]] Word target() const {
      return prefix + rule.side(-sign) + suffix;
    }

    [[nodiscard]] Edge inverse() const {
      return Edge{prefix, rule, -sign, suffix};
    }

    bool operator==(Edge const&) const = default;
  };

  Edge make_edge(Word prefix, Rule const& rule, int sign, Word suffix);

  //! x E y
  Edge act(Word const& x, Edge const& e, Word const& y);

  //! \brief A path in the derivation graph.
  //!
  //! The base vertex is stored so that the empty path 1_w knows w.
  class Path {
   public:
    Path() = default;

    //! The empty path at \p w.
    explicit Path(Word w) : _base(std::move(w)) {}

    //! The path with the single edge \p e.
    explicit Path(Edge e);

    //! Throws InputError if consecutive endpoints do not match.
    Path(Word base, std::vector<Edge> edges);

    [[nodiscard]] Word const& source() const noexcept {
      return _base;
    }

    [[nodiscard]] Word target() const;

    [[nodiscard]] std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

    [[nodiscard]] size_t size() const noexcept {
      return _edges.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _edges.empty();
    }

    [[nodiscard]] Edge const& operator[](size_t i) const {
      return _edges[i];
    }

    //! The vertex after the first \p i edges.
    [[nodiscard]] Word vertex(size_t i) const;

    bool operator==(Path const&) const = default;

   private:
    Word              _base;
    std::vector<Edge> _edges;
  };

  //! p followed by q; throws InputError if the endpoints do not match.
  Path compose(Path const& p, Path const& q);

  //! Composition of a list of paths (the first one fixes the base).
  Path compose(std::vector<Path> const& ps);

  //! x p y
  Path act(Word const& x, Path const& p, Word const& y);

  Path invert(Path const& p);

  bool is_parallel(Path const& p, Path const& q);

  bool is_positive(Path const& p);

  bool is_closed(Path const& p);

  //! \brief A set of rule ids that edges may use.
  class SubgraphFilter {
   public:
    //! The filter allowing every rule of \p p.
    static SubgraphFilter all(Presentation const& p);

    SubgraphFilter() = default;
    SubgraphFilter(std::string name, std::vector<size_t> const& ids);

    [[nodiscard]] bool allows(size_t id) const {
      return id < _allowed.size() && _allowed[id];
    }

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }

    [[nodiscard]] SubgraphFilter intersect(SubgraphFilter const& that) const;

    //! A filter allowing a rule if either filter does.
    [[nodiscard]] SubgraphFilter unite(SubgraphFilter const& that) const;

    bool operator==(SubgraphFilter const& that) const {
      return _allowed == that._allowed;
    }

    bool operator<(SubgraphFilter const& that) const {
      return _allowed < that._allowed;
    }

   private:
    std::string       _name;
    std::vector<bool> _allowed;
  };

  //! Every edge with initial vertex \p w allowed by \p filter, in occurrence
  //! order.
  std::vector<Edge> edges_from(Word const&           w,
                               Presentation const&   p,
                               SubgraphFilter const& filter);

  struct PathSearch {
    enum class Status { found, no_path, inconclusive };
    Status status = Status::inconclusive;
    Path   path;
    size_t visited = 0;
  };

  //! \brief Breadth first search for a shortest path from \p w1 to \p w2.
  //!
  //! At most \p budget vertices are discovered. Ties are broken by the order
  //! of edges_from, so the result is a function of the input.
  PathSearch find_path(Word const&           w1,
                       Word const&           w2,
                       Presentation const&   p,
                       SubgraphFilter const& filter,
                       size_t                budget = 100'000);

  //! \brief Memoised fixed choices of paths.
  //!
  //! Each unordered pair of vertices is searched once, in a canonical
  //! direction; the opposite query returns the inverse. Safe to use from
  //! several threads.
  class FixedPaths {
   public:
    FixedPaths(Presentation const& p, size_t budget = 100'000)
        : _presentation(p), _budget(budget) {}

    //! Throws InconclusiveError or VerificationError if no path is found.
    Path get(Word const& w1, Word const& w2, SubgraphFilter const& filter);

    [[nodiscard]] Presentation const& presentation() const noexcept {
      return _presentation;
    }

   private:
    using Key = std::tuple<SubgraphFilter, Word, Word>;
    Presentation          _presentation;
    size_t                _budget;
    std::mutex            _mtx;
    std::map<Key, Path>   _cache;
  };

  //! <tt>(prefix|r3|+1|suffix)</tt> with words written as letter names
  //! joined by \c . and \c _ for the empty word.
  std::string to_string(Edge const& e);

  //! Edges joined by \c ; or <tt>1_w</tt> for the empty path.
  std::string to_string(Path const& p);

  //! Parses a word written with \c . separators.
  Word parse_dotted_word(std::string_view text, Presentation const& p);

  Edge parse_edge(std::string_view text, Presentation const& p);

  Path parse_path(std::string_view text, Presentation const& p);

}  // namespace squier

#endif  // SQUIER_GRAPH_HPP_
