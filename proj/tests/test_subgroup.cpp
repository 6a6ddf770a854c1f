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

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <string>     // for string
#include <vector>     // for vector

#include "test-main.hpp"  // for SQUIER_TEST_CASE

#include "squier/exception.hpp"  // for InputError
#include "squier/subgroup.hpp"   // for CosetContext

namespace squier {

  using testing::fixture;

  namespace {
    struct Fix2 {
      Presentation        p;
      FiniteSemigroup     s;
      Letter              a;
      std::vector<size_t> g;

      Fix2() : p(fixture("fix2.sgp")), s(enumerate(p, 10)), a(p.alphabet()[0]) {
        g = {s.evaluate(Word(2, a)), s.evaluate(Word(4, a))};
        std::sort(g.begin(), g.end());
      }
    };

    // phi(i, a^n) in <a | a^5 = a> with G = {a^2, a^4}: the cosets are G and
    // G a, and a swaps them, so the letters alternate.
    Word expected_phi(CosetContext const& ctx, size_t i, size_t n) {
      Letter x = ctx.b(1, letter("a")), y = ctx.b(2, letter("a"));
      Word   result;
      for (size_t k = 0; k < n; ++k) {
        result.push_back((i + k) % 2 == 1 ? x : y);
      }
      return result;
    }

    Word power(Word const& w, size_t n) {
      Word result;
      for (size_t k = 0; k < n; ++k) {
        result = result + w;
      }
      return result;
    }
  }  // namespace

  SQUIER_TEST_CASE("Subgroup", "000", "coset data", "[quick]") {
    Fix2         f;
    CosetContext ctx(f.p, f.s, f.g);
    REQUIRE(ctx.index() == 2);
    REQUIRE(ctx.r(1).empty());
    REQUIRE(ctx.r(2) == Word(1, f.a));
    REQUIRE(ctx.r_prime(1).empty());
    REQUIRE(ctx.r_prime(2) == Word(3, f.a));
    // a^4 is the identity of Z/4 written multiplicatively
    REQUIRE(ctx.e() == Word(4, f.a));
    REQUIRE(ctx.act(1, Word(3, f.a)) == 2);
    REQUIRE(ctx.b_alphabet().size() == 2);
    REQUIRE(name(ctx.b(1, f.a)) == "[1,a]");
    REQUIRE(ctx.unpack(ctx.b(2, f.a)) == std::make_pair(size_t(2), f.a));

    std::vector<size_t> not_a_group{f.s.evaluate(Word(1, f.a))};
    REQUIRE_THROWS_AS(CosetContext(f.p, f.s, not_a_group), VerificationError);
  }

  SQUIER_TEST_CASE("Subgroup", "001", "phi and psi on words", "[quick]") {
    Fix2         f;
    CosetContext ctx(f.p, f.s, f.g);
    for (size_t i = 1; i <= 2; ++i) {
      for (size_t n = 0; n <= 9; ++n) {
        REQUIRE(phi_word(ctx, i, Word(n, f.a)) == expected_phi(ctx, i, n));
      }
    }
    Letter x = ctx.b(1, f.a), y = ctx.b(2, f.a);
    REQUIRE(psi_word(ctx, {x}) == Word(8, f.a));
    REQUIRE(psi_word(ctx, {y}) == Word(6, f.a));
    REQUIRE(psi_word(ctx, {}).empty());
    REQUIRE(psi_word(ctx, {x, y, x}) == Word(22, f.a));
  }

  SQUIER_TEST_CASE("Subgroup", "002", "subgroup presentation", "[quick]") {
    Fix2         f;
    CosetContext ctx(f.p, f.s, f.g);
    auto const&  q = ctx.subgroup_presentation();
    Letter       x = ctx.b(1, f.a), y = ctx.b(2, f.a);
    REQUIRE(q.presentation.rules().size() == 4);
    REQUIRE(q.provenance.size() == 4);
    std::vector<std::pair<Word, Word>> rules;
    for (auto const& r : q.presentation.rules()) {
      rules.emplace_back(r.lhs, r.rhs);
    }
    auto has = [&](Word const& u, Word const& v) {
      return std::find(rules.begin(), rules.end(), std::make_pair(u, v))
             != rules.end();
    };
    REQUIRE(has({x, y, x, y, x}, {x}));
    REQUIRE(has({y, x, y, x, y}, {y}));
    REQUIRE(has({x}, power({x, y}, 4)));
    REQUIRE(has({y}, power({x, y}, 3)));
    REQUIRE(q.provenance[ctx.generator_rule(x)].kind
            == Provenance::Kind::generator);
    REQUIRE(q.provenance[ctx.relation_rule(2, 0)].coset == 2);

    // Z/2 as a table: the sum of exponents of x and y modulo 2
    auto t = enumerate(q.presentation, 10);
    REQUIRE(t.size() == 2);
    REQUIRE(isomorphic(t, f.s.restriction(f.g)));
    for (auto const& r : q.presentation.rules()) {
      REQUIRE(f.s.evaluate(psi_word(ctx, r.lhs))
              == f.s.evaluate(psi_word(ctx, r.rhs)));
    }
  }

  SQUIER_TEST_CASE("Subgroup", "003", "the units of T2", "[quick]") {
    auto s = from_table(testing::data("t2.tbl"));
    auto p = table_presentation(s).first;
    std::vector<size_t> g{*s.find("id"), *s.find("swap")};
    std::sort(g.begin(), g.end());
    CosetContext ctx(p, s, g);
    REQUIRE(ctx.index() == 1);
    REQUIRE(ctx.b_alphabet().size() == 2);
    REQUIRE_THROWS_AS(ctx.b(1, *p.find("c1")), InputError);
    auto const& q = ctx.subgroup_presentation().presentation;
    // id id, id swap, swap id, swap swap and one per generator
    REQUIRE(q.rules().size() == 6);
    REQUIRE(isomorphic(enumerate(q, 10), s.restriction(g)));
  }

  SQUIER_TEST_CASE("Subgroup", "004", "phi and psi on paths", "[quick]") {
    Fix2         f;
    CosetContext ctx(f.p, f.s, f.g);
    Letter       x = ctx.b(1, f.a), y = ctx.b(2, f.a);
    Edge         e = make_edge({}, f.p.rule(0), 1, {});
    Path         q = phi_path(ctx, 1, Path(e));
    REQUIRE(q.size() == 1);
    REQUIRE(q.source() == Word({x, y, x, y, x}));
    REQUIRE(q.target() == Word({x}));
    REQUIRE(q[0].rule.id == ctx.relation_rule(1, 0));
    REQUIRE(phi_path(ctx, 2, Path(Word(3, f.a))) == Path(Word({y, x, y})));
    REQUIRE(invert(phi_path(ctx, 1, Path(e))) == phi_path(ctx, 1, invert(Path(e))));

    REQUIRE(psi_path(ctx, Path(Word({x}))) == Path(Word(8, f.a)));
    for (auto const& r : ctx.subgroup_presentation().presentation.rules()) {
      Path pe = psi_path(ctx, Path(make_edge({}, r, 1, {})));
      REQUIRE(pe.source() == psi_word(ctx, r.lhs));
      REQUIRE(pe.target() == psi_word(ctx, r.rhs));
      REQUIRE(pe == ctx.psi_edge_path(r.id));
      Path pc = psi_path(ctx, Path(make_edge({y}, r, -1, {x})));
      REQUIRE(pc.source() == psi_word(ctx, Word{y} + r.rhs + Word{x}));
      REQUIRE(pc.target() == psi_word(ctx, Word{y} + r.lhs + Word{x}));
    }
  }

  SQUIER_TEST_CASE("Subgroup", "005", "Lambda", "[quick]") {
    Fix2         f;
    CosetContext ctx(f.p, f.s, f.g);
    Letter       x = ctx.b(1, f.a), y = ctx.b(2, f.a);
    Path         l = lambda_path(ctx, {y});
    REQUIRE(l.size() == 1);
    REQUIRE(l.target() == power({x, y}, 3));
    REQUIRE_THROWS_AS(lambda_path(ctx, {}), InputError);
    for (auto const& w : words_up_to({x, y}, 3)) {
      Path lw = lambda_path(ctx, w);
      REQUIRE(lw.source() == w);
      REQUIRE(lw.target() == phi_word(ctx, 1, psi_word(ctx, w)));
      REQUIRE(lw.size() == w.size());
    }
  }

  SQUIER_TEST_CASE("Subgroup", "006", "the base K and W", "[quick]") {
    Fix2         f;
    CosetContext ctx(f.p, f.s, f.g);
    auto         x  = critical_pair_base(f.p, check_complete(f.p));
    auto         kw = base_KW(ctx, x);
    // every coset is defined on every word here
    REQUIRE(kw.K.size() == 2 * x.size());
    REQUIRE(kw.W.size() == 4);
    auto const& q = ctx.subgroup_presentation().presentation;
    REQUIRE(validate_base(kw.both(), q).ok());
    for (auto const& pr : kw.both().pairs) {
      REQUIRE(is_closed(pr.left));
    }
    auto none = base_KW(ctx, HomotopyBase());
    REQUIRE(none.K.empty());
    REQUIRE(none.W.size() == 4);
  }

  SQUIER_TEST_CASE("Subgroup", "007", "the family Z", "[quick]") {
    Fix2         f;
    CosetContext ctx(f.p, f.s, f.g);
    auto         x    = critical_pair_base(f.p, check_complete(f.p));
    auto const&  q    = ctx.subgroup_presentation().presentation;
    size_t       n[3] = {0, 0, 0};
    base_Z(ctx, x, 2, [&](ZKind k, Path const& c) {
      REQUIRE(is_closed(c));
      HomotopyBase one;
      one.add_closed(c);
      REQUIRE(validate_base(one, q).ok());
      ++n[static_cast<size_t>(k)];
      return true;
    });
    REQUIRE(n[0] > 0);
    REQUIRE(n[1] > 0);
    REQUIRE(n[2] > 0);
    size_t count = 0;
    base_Z(ctx, x, 2, [&](ZKind, Path const&) { return ++count < 5; });
    REQUIRE(count == 5);
    REQUIRE_THROWS_AS(
        base_Z(ctx, x, 0, [](ZKind, Path const&) { return true; }), InputError);
  }

}  // namespace squier
