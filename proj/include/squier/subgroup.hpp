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

// Presentations and homotopy bases for subgroups of semigroups, built from
// the right cosets of the subgroup.

#ifndef SQUIER_SUBGROUP_HPP_
#define SQUIER_SUBGROUP_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <memory>      // for unique_ptr
#include <vector>      // for vector

#include "graph.hpp"
#include "homotopy.hpp"
#include "oracle.hpp"
#include "words.hpp"

namespace squier {

  //! Where a relation of the subgroup presentation comes from: either the
  //! image of relation \c source under phi(i, -), or the definition of the
  //! generator [i, a].
  struct Provenance {
    enum class Kind { relation, generator };
    Kind   kind;
    size_t coset;
    size_t source;  // relation id, or alphabet position of a
  };

  struct SubgroupPresentation {
    Presentation            presentation;
    std::vector<Provenance> provenance;  // indexed by rule id
  };

  //! \brief The data attached to a subgroup G of a semigroup S = <A | R>.
  //!
  //! Cosets are numbered from 1 with 0 the failure state. The words r_i,
  //! r'_i and e are the shortlex least words with the required properties.
  class CosetContext {
   public:
    //! Throws VerificationError if \p g is not a subgroup.
    CosetContext(Presentation const&        p,
                 FiniteSemigroup const&     s,
                 std::vector<size_t> const& g,
                 size_t                     node_budget = 100'000);

    [[nodiscard]] Presentation const& presentation() const noexcept {
      return _p;
    }

    [[nodiscard]] FiniteSemigroup const& oracle() const noexcept {
      return _s;
    }

    [[nodiscard]] std::vector<size_t> const& subgroup() const noexcept {
      return _g;
    }

    [[nodiscard]] CosetFamily const& cosets() const noexcept {
      return _cosets;
    }

    //! The number of cosets.
    [[nodiscard]] size_t index() const noexcept {
      return _cosets.size();
    }

    [[nodiscard]] Word const& r(size_t i) const {
      return _cosets.to.at(i - 1);
    }

    [[nodiscard]] Word const& r_prime(size_t i) const {
      return _cosets.back.at(i - 1);
    }

    [[nodiscard]] Word const& e() const noexcept {
      return _e;
    }

    //! The coset i w, or 0.
    [[nodiscard]] size_t act(size_t i, Word const& w) const {
      return _cosets.act(i, w);
    }

    [[nodiscard]] std::vector<Letter> const& b_alphabet() const noexcept {
      return _q.presentation.alphabet();
    }

    //! The letter [i, a]; throws InputError if i a = 0.
    [[nodiscard]] Letter b(size_t i, Letter a) const;

    //! The coset and generator behind a letter of B.
    [[nodiscard]] std::pair<size_t, Letter> unpack(Letter b) const;

    [[nodiscard]] SubgroupPresentation const& subgroup_presentation() const {
      return _q;
    }

    //! The id of the relation phi(i, u) = phi(i, v) for relation \p rule.
    [[nodiscard]] size_t relation_rule(size_t i, size_t rule) const;

    //! The id of the relation defining the letter \p b.
    [[nodiscard]] size_t generator_rule(Letter b) const;

    //! The fixed path psi(E_u) in the derivation graph of S.
    [[nodiscard]] Path psi_edge_path(size_t u) const;

   private:
    Presentation                           _p;
    FiniteSemigroup                        _s;
    std::vector<size_t>                    _g;
    CosetFamily                            _cosets;
    Word                                   _e;
    std::vector<std::vector<Letter>>       _b;  // [i][alphabet pos]
    std::unordered_map<uint32_t, std::pair<size_t, Letter>> _unpack;
    SubgroupPresentation                   _q;
    std::vector<std::vector<size_t>>       _relation_rule;  // [i][rule]
    std::unordered_map<uint32_t, size_t>   _generator_rule;
    std::unique_ptr<FixedPaths>            _fixed;
  };

  //! phi(i, w); throws InputError if i w = 0.
  Word phi_word(CosetContext const& ctx, size_t i, Word const& w);

  //! The homomorphism [i, a] -> e r_i a r'_{ia}.
  Word psi_word(CosetContext const& ctx, Word const& w);

  Path phi_path(CosetContext const& ctx, size_t i, Path const& p);

  Path psi_path(CosetContext const& ctx, Path const& p);

  //! The path Lambda_w from w to phi(psi(w)); \p w must be non-empty.
  Path lambda_path(CosetContext const& ctx, Word const& w);

  //! The bases K (images of \p x) and W (one closed path per relation).
  struct KW {
    HomotopyBase K;
    HomotopyBase W;

    [[nodiscard]] HomotopyBase both() const {
      HomotopyBase result = K;
      result.append(W);
      return result;
    }
  };

  //! Throws VerificationError if some output path fails validation.
  KW base_KW(CosetContext const& ctx, HomotopyBase const& x);

  enum class ZKind { z1, z2, z3 };

  //! \brief Streams closed paths of the three kinds spanning all closed
  //! paths over the subgroup presentation.
  //!
  //! Words (edge sources for the first kind, contexts for the other two) have
  //! length at most \p bound. Stops early if \p emit returns false.
  void base_Z(CosetContext const&                             ctx,
              HomotopyBase const&                             x,
              size_t                                          bound,
              std::function<bool(ZKind, Path const&)> const& emit);

}  // namespace squier

#endif  // SQUIER_SUBGROUP_HPP_
