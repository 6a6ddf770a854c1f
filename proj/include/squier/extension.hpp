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

// Presentations and homotopy bases for ideal extensions by completely
// 0-simple semigroups, and a driver for finite regular semigroups.

#ifndef SQUIER_EXTENSION_HPP_
#define SQUIER_EXTENSION_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <memory>      // for unique_ptr
#include <mutex>       // for mutex
#include <optional>    // for optional
#include <string>      // for string
#include <string_view> // for string_view
#include <tuple>       // for tuple
#include <unordered_map>
#include <vector>      // for vector

#include "graph.hpp"
#include "homotopy.hpp"
#include "oracle.hpp"
#include "words.hpp"

namespace squier {

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  //! \brief The data of M^0[G; I, Lambda; P], or M[G; I, Lambda; P] if
  //! \c with_zero is false.
  //!
  //! Indices are 1-based; an entry of P is either absent (zero) or a word
  //! over the generators of the group.
  struct ReesMatrix {
    FiniteSemigroup                            group;
    Presentation                               group_presentation;
    size_t                                     i_size = 1;
    size_t                                     l_size = 1;
    std::vector<std::vector<std::optional<Word>>> p;  // p[lambda - 1][i - 1]
    bool                                       with_zero = true;

    //! The group element p_{lambda i}, if non-zero.
    [[nodiscard]] std::optional<size_t> entry(size_t lambda, size_t i) const;
  };

  struct ReesElement {
    bool   zero   = true;
    size_t i      = 0;
    size_t g      = 0;  // element of the group
    size_t lambda = 0;

    bool operator==(ReesElement const&) const = default;
  };

  ReesElement rees_mult(ReesMatrix const& r, ReesElement x, ReesElement y);

  //! Throws InputError unless P is regular and p_11 is the identity.
  void check_rees(ReesMatrix const& r);

  //! The multiplication table of the Rees matrix semigroup with a zero
  //! (adjoined if \c with_zero is false). Elements are ordered by i, then
  //! g, then lambda, with the zero last.
  FiniteSemigroup rees_semigroup(ReesMatrix const& r);

  //! Parses the <tt>.rees</tt> format; \p load returns the contents of the
  //! group file named in it.
  ReesMatrix parse_rees(std::string_view                                   text,
                        std::function<std::string(std::string const&)> const& load);

  ////////////////////////////////////////////////////////////////////////
  // Extension data
  ////////////////////////////////////////////////////////////////////////

  //! \brief The input of the construction: a finite semigroup S with an
  //! ideal T such that S \ T is a single regular J-class.
  struct ExtensionData {
    FiniteSemigroup     s;
    std::vector<bool>   in_t;
    Presentation        t_presentation;
    std::vector<size_t> z_values;  // per letter of t_presentation
    HomotopyBase        t_base;
    Presentation        g_presentation;
    std::vector<size_t> a_values;  // per letter of g_presentation
    HomotopyBase        g_base;
    std::vector<size_t> r;  // r[0] is the identity of the group
    std::vector<size_t> q;  // q[0] is the identity of the group
    std::vector<std::string> b_names;  // one per i > 1
    std::vector<std::string> c_names;  // one per lambda > 1
  };

  //! The data for M^0[G; I, Lambda; P] (or M plus an adjoined zero) as an
  //! extension of T = {0}, presented by <z | zz = z>.
  ExtensionData extension_data(ReesMatrix const& r);

  enum class Family { R, Q, Re, R0, RU, RT };

  //! The position of a letter in the construction.
  struct Classification {
    bool   in_t    = false;
    size_t element = 0;  // element of S
    size_t i       = 0;
    size_t g       = 0;  // element of S in the group H_11
    size_t lambda  = 0;

    bool operator==(Classification const&) const = default;
  };

  struct FMeasure {
    size_t n = 0;  // letters from B and C
    size_t m = 0;  // letters from A

    auto operator<=>(FMeasure const&) const = default;

    FMeasure operator+(FMeasure const& that) const {
      return FMeasure{n + that.n, m + that.m};
    }
  };

  struct QuasiNormal {
    Path path;
    Word word;
  };

  class ExtensionContext;

  struct PushThrough {
    Path              q1;
    Word              u_prime;
    Path              p_prime;
    Word              v_prime;
    Path              q2;
    std::vector<Move> certificate;  // relative to ExtensionContext::push_base
  };

  //! \brief The presentation of S built from presentations of T and of a
  //! maximal subgroup of S \ T, and the homotopy base built from theirs.
  class ExtensionContext {
   public:
    //! Throws VerificationError if the data is inconsistent or a relation
    //! fails in S.
    explicit ExtensionContext(ExtensionData data, size_t node_budget = 100'000);

    ExtensionContext(ExtensionContext const&)            = delete;
    ExtensionContext& operator=(ExtensionContext const&) = delete;

    [[nodiscard]] Presentation const& presentation() const noexcept {
      return _ps;
    }

    [[nodiscard]] FiniteSemigroup const& oracle() const noexcept {
      return _data.s;
    }

    [[nodiscard]] ExtensionData const& data() const noexcept {
      return _data;
    }

    [[nodiscard]] Family family(size_t rule) const {
      return _family.at(rule);
    }

    [[nodiscard]] std::vector<Family> const& families() const noexcept {
      return _family;
    }

    [[nodiscard]] std::vector<Letter> const& a_letters() const noexcept {
      return _a;
    }
    [[nodiscard]] std::vector<Letter> const& b_letters() const noexcept {
      return _b;
    }
    [[nodiscard]] std::vector<Letter> const& c_letters() const noexcept {
      return _c;
    }
    [[nodiscard]] std::vector<Letter> const& z_letters() const noexcept {
      return _z;
    }

    [[nodiscard]] bool is_z(Letter x) const {
      return tag(x) == LetterTag::Z;
    }

    [[nodiscard]] Word const& e() const noexcept {
      return _e;
    }

    //! The word p_{lambda i}, if non-zero.
    [[nodiscard]] std::optional<Word> const& p(size_t lambda, size_t i) const {
      return _p.at(lambda - 1).at(i - 1);
    }

    [[nodiscard]] size_t i_size() const noexcept {
      return _data.r.size();
    }

    [[nodiscard]] size_t l_size() const noexcept {
      return _data.q.size();
    }

    //! The element of S represented by \p w.
    [[nodiscard]] size_t evaluate(Word const& w) const;

    //! The shortlex least word over Z representing \p x in T.
    [[nodiscard]] Word const& rho(size_t x) const;

    //! The id of the relation z x = sigma(z, x) if \p z_left, or of
    //! x z = tau(x, z) otherwise.
    [[nodiscard]] size_t r0_rule(Letter z, Letter x, bool z_left) const;

    [[nodiscard]] SubgraphFilter const& gamma() const noexcept {
      return _gamma;
    }
    [[nodiscard]] SubgraphFilter const& gamma0() const noexcept {
      return _gamma0;
    }
    [[nodiscard]] SubgraphFilter const& gamma_u() const noexcept {
      return _gamma_u;
    }
    [[nodiscard]] SubgraphFilter const& gamma_t() const noexcept {
      return _gamma_t;
    }
    [[nodiscard]] SubgraphFilter const& gamma_g() const noexcept {
      return _gamma_g;
    }
    //! Relations of the group together with b_i e = b_i and e c_l = c_l.
    [[nodiscard]] SubgraphFilter const& gamma_ge() const noexcept {
      return _gamma_ge;
    }
    [[nodiscard]] SubgraphFilter const& gamma_s() const noexcept {
      return _gamma_s;
    }

    //! The oracle's verdict on \p w.
    [[nodiscard]] Classification classify(Word const& w) const;

    //! The fixed positive path to quasi-normal form (memoised).
    [[nodiscard]] QuasiNormal const& quasi_normal(Word const& w) const;

    //! The fixed path between two words in the given subgraph (memoised).
    [[nodiscard]] Path fixed_path(Word const&           w1,
                                  Word const&           w2,
                                  SubgraphFilter const& filter) const;

    //! The fixed path between two quasi-normal forms of the same element.
    [[nodiscard]] Path connecting_path(Word const& w1, Word const& w2) const;

    [[nodiscard]] HomotopyBase const& base_X1() const;
    [[nodiscard]] HomotopyBase const& base_X1prime() const;

    //! X1 followed by X1'; the base of push_through certificates.
    [[nodiscard]] HomotopyBase const& push_base() const;

    //! Position of the letter \p x of A, B or C in the order used by X1.
    [[nodiscard]] size_t x_index(Letter x) const;

    //! The number of relations in Q.
    [[nodiscard]] size_t q_count() const noexcept {
      return _q_count;
    }

    //! Position of the relation \p rule within Q.
    [[nodiscard]] size_t q_index(size_t rule) const;

    //! \p path embedded from the presentation of T or of the group.
    [[nodiscard]] Path embed_t(Path const& path) const;
    [[nodiscard]] Path embed_g(Path const& path) const;

   private:
    Word translate(Word const& w, std::unordered_map<uint32_t, Letter> const& m) const;

    ExtensionData                        _data;
    Presentation                         _ps;
    std::vector<Family>                  _family;
    std::vector<Letter>                  _a, _b, _c, _z;
    std::unordered_map<uint32_t, size_t> _value;  // letter -> element of S
    std::unordered_map<uint32_t, Letter> _from_g, _from_t;
    size_t                               _q_first = 0;
    size_t                               _q_count = 0;
    Word                                 _e;
    std::vector<std::vector<std::optional<Word>>> _p;
    std::vector<std::optional<Word>>     _rho;
    std::vector<std::optional<Classification>> _coords;  // for S \ T
    std::map<std::tuple<uint32_t, uint32_t, bool>, size_t> _r0;
    SubgraphFilter _gamma, _gamma0, _gamma_u, _gamma_t, _gamma_g, _gamma_ge,
        _gamma_s;

    std::unique_ptr<FixedPaths> _fixed;
    mutable std::mutex          _mtx;
    mutable std::mutex          _bmtx;
    mutable std::unordered_map<Word, std::unique_ptr<QuasiNormal>, WordHash>
                                                  _qn;
    mutable std::unique_ptr<HomotopyBase>         _x1, _x1p, _push;
  };

  //! The presentation, with each relation's family.
  struct GroupedPresentation {
    Presentation        presentation;
    std::vector<Family> family;
  };

  GroupedPresentation build_PS(ExtensionContext const& ctx);

  //! The oracle's verdict for arbitrary words, and the direct read-off for
  //! quasi-normal words without letters from Z.
  Classification classify_word(ExtensionContext const& ctx, Word const& w);

  //! Reads the element off a quasi-normal word b_i w c_l without using the
  //! multiplication of S beyond the group part.
  Classification dagger_readout(ExtensionContext const& ctx, Word const& w);

  bool is_quasi_normal(ExtensionContext const& ctx, Word const& w);

  FMeasure f_measure(Word const& w);

  //! An upper bound for the number of steps of to_quasi_normal from \p w.
  size_t f_bound(ExtensionContext const& ctx, Word const& w);

  //! Repeatedly applies the first positive edge of the relevant subgraph
  //! until the word is quasi-normal.
  QuasiNormal to_quasi_normal(ExtensionContext const& ctx, Word const& w);

  //! Moves the path \p p in the subgraph of T past the last letter of \p u
  //! (or the first letter of \p v if \p u is empty). The certificate turns
  //! u p v into q1 (u' p' v') q2^-1.
  PushThrough push_through(ExtensionContext const& ctx,
                           Word const&             u,
                           Path const&             p,
                           Word const&             v);

  HomotopyBase base_X1(ExtensionContext const& ctx);
  HomotopyBase base_X1prime(ExtensionContext const& ctx);
  HomotopyBase base_X2(ExtensionContext const& ctx);

  //! Throws InconclusiveError if more than \p word_budget words would be scanned.
  HomotopyBase base_X3(ExtensionContext const& ctx,
                       size_t                  word_budget = 1'000'000);
  HomotopyBase base_Xe(ExtensionContext const& ctx);

  struct AssembledBase {
    HomotopyBase x1, x1prime, x2, x3, xe, xg, xt;

    [[nodiscard]] HomotopyBase all() const;
  };

  //! Every family, each validated; throws VerificationError on failure.
  AssembledBase assemble_X(ExtensionContext const& ctx,
                           size_t                  word_budget = 1'000'000);

  //! Adds a letter called \p zero and the relations a 0 = 0, 0 a = 0 and
  //! 0 0 = 0.
  Presentation adjoin_zero(Presentation const& p, Letter zero);

  struct Restricted {
    Presentation presentation;
    HomotopyBase base;
  };

  //! Removes \p zero and every relation mentioning it from \p p, and keeps
  //! the pairs of \p x whose initial vertex avoids \p zero.
  Restricted restrict_base(HomotopyBase const& x,
                           Presentation const& p,
                           Letter              zero);

  struct FdtResult {
    Presentation        presentation;
    HomotopyBase        base;
    std::vector<size_t> values;  // element of S per letter
  };

  struct FdtOptions {
    size_t node_budget = 100'000;
    size_t word_budget = 1'000'000;
  };

  //! A finite presentation and a finite homotopy base for a finite regular
  //! semigroup, by induction on its J-classes.
  FdtResult fdt_base_finite_regular(FiniteSemigroup const& s,
                                    FdtOptions const&      opts = {});

  //! Throws VerificationError, with a witness, unless \p s is regular.
  void check_regular(FiniteSemigroup const& s);

}  // namespace squier

#endif  // SQUIER_EXTENSION_HPP_
