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
#include <vector>   // for vector

#include "test-main.hpp"  // for SQUIER_TEST_CASE

#include "squier/exception.hpp"  // for InputError
#include "squier/graph.hpp"      // for Path

namespace squier {

  using testing::fixture;

  SQUIER_TEST_CASE("Graph", "000", "edges and their endpoints", "[quick]") {
    auto   p = fixture("fix2.sgp");
    Letter a = p.alphabet()[0];
    Edge   e = make_edge({a}, p.rule(0), 1, {});
    REQUIRE(e.source() == Word(6, a));
    REQUIRE(e.target() == Word(2, a));
    Edge f = e.inverse();
    REQUIRE(f.sign == -1);
    REQUIRE(f.source() == Word(2, a));
    REQUIRE(f.target() == Word(6, a));
    REQUIRE(f.inverse() == e);

    auto q = fixture("fix1.sgp");
    Edge g = make_edge({}, q.rule(0), -1, {});
    REQUIRE(g.source() == Word(1, a));
    REQUIRE(g.target() == Word(3, a));

    Edge h = act({a, a}, e, {a});
    REQUIRE(h.prefix == Word(3, a));
    REQUIRE(h.suffix == Word(1, a));
    REQUIRE(h.source() == Word(9, a));
  }

  SQUIER_TEST_CASE("Graph", "001", "paths", "[quick]") {
    auto   p  = fixture("fix1.sgp");
    Letter a  = p.alphabet()[0];
    Edge   e1 = make_edge({}, p.rule(0), 1, {a, a});
    Edge   e2 = make_edge({}, p.rule(0), 1, {});
    Path   q(Word(5, a), {e1, e2});
    REQUIRE(q.size() == 2);
    REQUIRE(q.target() == Word(1, a));
    REQUIRE(q.vertex(1) == Word(3, a));
    REQUIRE(is_positive(q));
    REQUIRE(!is_closed(q));
    REQUIRE_THROWS_AS(Path(Word(4, a), {e2}), InputError);

    Path r = invert(q);
    REQUIRE(r.source() == Word(1, a));
    REQUIRE(r.target() == Word(5, a));
    REQUIRE(!is_positive(r));
    REQUIRE(invert(r) == q);
    Path c = compose(q, r);
    REQUIRE(is_closed(c));
    REQUIRE(c.size() == 4);
    REQUIRE_THROWS_AS(compose(q, q), InputError);
    REQUIRE(is_parallel(q, compose({Path(e1), Path(e2), Path(Word(1, a))})));

    Path empty(Word(2, a));
    REQUIRE(empty.empty());
    REQUIRE(empty.target() == Word(2, a));
    REQUIRE(is_closed(empty));
    REQUIRE(invert(empty) == empty);

    Path s = act({a}, q, {a, a});
    REQUIRE(s.source() == Word(8, a));
    REQUIRE(s.target() == Word(4, a));
  }

  SQUIER_TEST_CASE("Graph", "002", "edges_from and filters", "[quick]") {
    auto p = parse_presentation(
        "alphabet: a b\nrule: a a = a\nrule: b b = b\nrule: a b = b\n");
    auto w   = parse_word("a a b", p);
    auto all = SubgraphFilter::all(p);
    auto es  = edges_from(w, p, all);
    for (auto const& e : es) {
      REQUIRE(e.source() == w);
    }
    // a a -> a, a -> a a (twice), b -> b b, a b -> b, b -> a b
    REQUIRE(es.size() == 6);
    SubgraphFilter only_b("only b", {1});
    auto           fs = edges_from(w, p, only_b);
    REQUIRE(fs.size() == 1);
    REQUIRE(fs[0].rule.id == 1);
    REQUIRE(fs[0].sign == -1);
    REQUIRE(only_b.intersect(SubgraphFilter("ab", {2})) == SubgraphFilter("", {}));
    REQUIRE(only_b.unite(SubgraphFilter("ab", {2})).allows(2));
    REQUIRE(!only_b.allows(0));
    REQUIRE(!only_b.allows(17));
  }

  SQUIER_TEST_CASE("Graph", "003", "find_path", "[quick]") {
    auto   p = fixture("fix2.sgp");
    Letter a = p.alphabet()[0];
    auto   r = find_path(Word(9, a), Word(1, a), p, SubgraphFilter::all(p));
    REQUIRE(r.status == PathSearch::Status::found);
    REQUIRE(r.path.size() == 2);
    REQUIRE(r.path.source() == Word(9, a));
    REQUIRE(r.path.target() == Word(1, a));
    // a and a a are different elements
    auto s = find_path(Word(1, a), Word(2, a), p, SubgraphFilter::all(p), 200);
    REQUIRE(s.status == PathSearch::Status::inconclusive);
    auto t = find_path(Word(3, a), Word(3, a), p, SubgraphFilter::all(p));
    REQUIRE(t.status == PathSearch::Status::found);
    REQUIRE(t.path.empty());
    // with no edges allowed the component of a a is a single vertex
    auto u = find_path(Word(2, a), Word(6, a), p, SubgraphFilter("none", {}));
    REQUIRE(u.status == PathSearch::Status::no_path);
  }

  SQUIER_TEST_CASE("Graph", "004", "fixed paths", "[quick]") {
    auto       p = fixture("fix2.sgp");
    Letter     a = p.alphabet()[0];
    FixedPaths f(p);
    auto       all = SubgraphFilter::all(p);
    Path       x   = f.get(Word(5, a), Word(1, a), all);
    Path       y   = f.get(Word(1, a), Word(5, a), all);
    REQUIRE(y == invert(x));
    REQUIRE(f.get(Word(5, a), Word(1, a), all) == x);
    REQUIRE_THROWS_AS(f.get(Word(2, a), Word(3, a), SubgraphFilter("none", {})),
                      VerificationError);
  }

  SQUIER_TEST_CASE("Graph", "005", "text round trip", "[quick]") {
    auto   p = fixture("fix2.sgp");
    Letter a = p.alphabet()[0];
    Edge   e = make_edge({a}, p.rule(0), -1, {});
    REQUIRE(to_string(e) == "(a|r0|-1|_)");
    REQUIRE(parse_edge(to_string(e), p) == e);
    Path q(Word(2, a), {e, make_edge({}, p.rule(0), 1, {a})});
    REQUIRE(to_string(q) == "(a|r0|-1|_);(_|r0|+1|a)");
    REQUIRE(parse_path(to_string(q), p) == q);
    Path empty(Word(2, a));
    REQUIRE(to_string(empty) == "1_a.a");
    REQUIRE(parse_path("1_a.a", p) == empty);
    REQUIRE(parse_dotted_word("a.a.a", p) == Word(3, a));
    REQUIRE_THROWS_AS(parse_edge("(a|r1|+1|_)", p), InputError);
    REQUIRE_THROWS_AS(parse_edge("(a|r0|+2|_)", p), InputError);
    REQUIRE_THROWS_AS(parse_edge("a|r0|+1|_", p), InputError);
    REQUIRE_THROWS_AS(parse_path("(a|r0|+1|_);(a|r0|+1|_)", p), InputError);
  }

}  // namespace squier
