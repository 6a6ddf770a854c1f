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

#include "squier/subgroup.hpp"

#include <algorithm>  // for sort
#include <deque>      // for deque

#include "squier/exception.hpp"

namespace squier {

  namespace {
    // Shortlex least word over the alphabet of p for every element reachable
    // by a non-empty word.
    std::vector<std::optional<Word>> shortlex_words(FiniteSemigroup const& s,
                                                    Presentation const&    p) {
      std::vector<std::optional<Word>> result(s.size());
      std::deque<size_t>               queue;
      for (auto a : p.alphabet()) {
        size_t x = s.generator(a);
        if (!result[x]) {
          result[x] = Word({a});
          queue.push_back(x);
        }
      }
      while (!queue.empty()) {
        size_t x = queue.front();
        queue.pop_front();
        for (auto a : p.alphabet()) {
          size_t y = s.product(x, s.generator(a));
          if (!result[y]) {
            result[y] = *result[x] + Word({a});
            queue.push_back(y);
          }
        }
      }
      return result;
    }
  }  // namespace

  CosetContext::CosetContext(Presentation const&        p,
                             FiniteSemigroup const&     s,
                             std::vector<size_t> const& g,
                             size_t                     node_budget)
      : _p(p), _s(s), _g(g) {
    std::sort(_g.begin(), _g.end());
    size_t identity = check_subgroup(_s, _g);
    for (auto a : _p.alphabet()) {
      static_cast<void>(_s.generator(a));  // throws if a is unknown
    }
    for (auto const& rl : _p.rules()) {
      if (_s.evaluate(rl.lhs) != _s.evaluate(rl.rhs)) {
        throw VerificationError("the oracle does not satisfy the relation "
                                + to_string(rl.lhs) + " = " + to_string(rl.rhs));
      }
    }
    _cosets = right_cosets(_s, _g, _p);
    auto sw = shortlex_words(_s, _p);
    if (!sw[identity]) {
      throw VerificationError("the identity of the subgroup is not a product "
                              "of generators");
    }
    _e = *sw[identity];

    // Oracle checks of the choices.
    for (size_t i = 1; i <= index(); ++i) {
      for (auto x : _g) {
        size_t y = r(i).empty() ? x : _s.product(x, _s.evaluate(r(i)));
        if (std::find(_cosets.cosets[i - 1].begin(),
                      _cosets.cosets[i - 1].end(),
                      y)
            == _cosets.cosets[i - 1].end()) {
          throw VerificationError("r_" + std::to_string(i)
                                  + " does not lead to its coset");
        }
        if (!r_prime(i).empty()) {
          y = _s.product(y, _s.evaluate(r_prime(i)));
        }
        if (y != x) {
          throw VerificationError("r'_" + std::to_string(i)
                                  + " does not return to the subgroup");
        }
      }
    }

    // The alphabet B.
    Presentation q;
    _b.assign(index() + 1, std::vector<Letter>(_p.alphabet().size()));
    for (size_t i = 1; i <= index(); ++i) {
      for (size_t k = 0; k < _p.alphabet().size(); ++k) {
        Letter a = _p.alphabet()[k];
        if (_cosets.act(i, a) != 0) {
          Letter bb = letter("[" + std::to_string(i) + "," + name(a) + "]");
          _b[i][k]  = bb;
          _unpack.emplace(bb.id, std::make_pair(i, a));
          q.add_letter(bb);
        }
      }
    }
    _q.presentation = std::move(q);
    // Relations phi(i, u) = phi(i, v).
    _relation_rule.assign(index() + 1,
                          std::vector<size_t>(_p.rules().size(), SIZE_MAX));
    for (size_t i = 1; i <= index(); ++i) {
      for (auto const& rl : _p.rules()) {
        if (act(i, rl.lhs) == 0) {
          continue;
        }
        size_t id = _q.presentation.add_rule(phi_word(*this, i, rl.lhs),
                                             phi_word(*this, i, rl.rhs));
        _q.provenance.push_back(
            Provenance{Provenance::Kind::relation, i, rl.id});
        _relation_rule[i][rl.id] = id;
      }
    }
    // Relations [i, a] = phi(e r_i a r'_{ia}).
    for (size_t i = 1; i <= index(); ++i) {
      for (size_t k = 0; k < _p.alphabet().size(); ++k) {
        Letter a = _p.alphabet()[k];
        size_t j = act(i, Word({a}));
        if (j == 0) {
          continue;
        }
        Word w  = _e + r(i) + Word({a}) + r_prime(j);
        size_t id = _q.presentation.add_rule(Word({_b[i][k]}), phi_word(*this, 1, w));
        _q.provenance.push_back(Provenance{Provenance::Kind::generator, i, k});
        _generator_rule.emplace(_b[i][k].id, id);
      }
    }
    // Every relation holds in G.
    for (auto const& rl : _q.presentation.rules()) {
      if (_s.evaluate(psi_word(*this, rl.lhs))
          != _s.evaluate(psi_word(*this, rl.rhs))) {
        throw VerificationError("subgroup relation " + to_string(rl.lhs) + " = "
                                + to_string(rl.rhs) + " fails in the oracle");
      }
    }
    _fixed = std::make_unique<FixedPaths>(_p, node_budget);
  }

  Letter CosetContext::b(size_t i, Letter a) const {
    size_t k = _p.index(a);
    if (i == 0 || i > index() || _cosets.act(i, a) == 0) {
      throw InputError("no letter [" + std::to_string(i) + "," + name(a) + "]");
    }
    return _b[i][k];
  }

  std::pair<size_t, Letter> CosetContext::unpack(Letter bb) const {
    auto it = _unpack.find(bb.id);
    if (it == _unpack.end()) {
      throw InputError("\"" + name(bb) + "\" is not a letter of B");
    }
    return it->second;
  }

  size_t CosetContext::relation_rule(size_t i, size_t rule) const {
    if (i == 0 || i > index() || rule >= _p.rules().size()
        || _relation_rule[i][rule] == SIZE_MAX) {
      throw VerificationError("no subgroup relation for coset "
                              + std::to_string(i) + " and relation "
                              + std::to_string(rule));
    }
    return _relation_rule[i][rule];
  }

  size_t CosetContext::generator_rule(Letter bb) const {
    auto it = _generator_rule.find(bb.id);
    if (it == _generator_rule.end()) {
      throw InputError("\"" + name(bb) + "\" is not a letter of B");
    }
    return it->second;
  }

  Path CosetContext::psi_edge_path(size_t u) const {
    auto const& rl = _q.presentation.rule(u);
    return _fixed->get(psi_word(*this, rl.lhs),
                       psi_word(*this, rl.rhs),
                       SubgraphFilter::all(_p));
  }

  ////////////////////////////////////////////////////////////////////////
  // phi and psi
  ////////////////////////////////////////////////////////////////////////

  Word phi_word(CosetContext const& ctx, size_t i, Word const& w) {
    Word result;
    for (size_t k = 0; k < w.size(); ++k) {
      if (i == 0) {
        throw InputError("phi undefined: the prefix "
                         + to_string(subword(w, 0, k)) + " leads to coset 0");
      }
      result.push_back(ctx.b(i, w[k]));
      i = ctx.act(i, Word({w[k]}));
    }
    if (i == 0) {
      throw InputError("phi undefined: " + to_string(w) + " leads to coset 0");
    }
    return result;
  }

  Word psi_word(CosetContext const& ctx, Word const& w) {
    Word result;
    for (auto bb : w) {
      auto [i, a] = ctx.unpack(bb);
      size_t j    = ctx.act(i, Word({a}));
      result = result + ctx.e() + ctx.r(i) + Word({a}) + ctx.r_prime(j);
    }
    return result;
  }

  Path phi_path(CosetContext const& ctx, size_t i, Path const& p) {
    auto const&       q = ctx.subgroup_presentation().presentation;
    std::vector<Edge> edges;
    for (auto const& e : p.edges()) {
      size_t j = ctx.act(i, e.prefix);
      if (j == 0) {
        throw InputError("phi undefined on an edge leading to coset 0");
      }
      size_t k = ctx.act(j, e.rule.lhs);
      edges.push_back(Edge{phi_word(ctx, i, e.prefix),
                           q.rule(ctx.relation_rule(j, e.rule.id)),
                           e.sign,
                           phi_word(ctx, k, e.suffix)});
    }
    return Path(phi_word(ctx, i, p.source()), std::move(edges));
  }

  Path psi_path(CosetContext const& ctx, Path const& p) {
    Path result(psi_word(ctx, p.source()));
    for (auto const& e : p.edges()) {
      Path image = ctx.psi_edge_path(e.rule.id);
      if (e.sign < 0) {
        image = invert(image);
      }
      result = compose(
          result, act(psi_word(ctx, e.prefix), image, psi_word(ctx, e.suffix)));
    }
    return result;
  }

  Path lambda_path(CosetContext const& ctx, Word const& w) {
    if (w.empty()) {
      throw InputError("Lambda is only defined on non-empty words");
    }
    auto const& q = ctx.subgroup_presentation().presentation;
    Path        first(Edge{{}, q.rule(ctx.generator_rule(w[0])), 1, {}});
    if (w.size() == 1) {
      return first;
    }
    Word rest = subword(w, 1, w.size() - 1);
    Word head = phi_word(ctx, 1, psi_word(ctx, Word({w[0]})));
    return compose(act({}, first, rest), act(head, lambda_path(ctx, rest), {}));
  }

  ////////////////////////////////////////////////////////////////////////
  // Bases
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Path phi_psi(CosetContext const& ctx, Path const& p) {
      return phi_path(ctx, 1, psi_path(ctx, p));
    }

    // E Lambda_{tau E} phi(psi(E))^-1 Lambda_{iota E}^-1
    Path z1_path(CosetContext const& ctx, Edge const& e) {
      return compose({Path(e),
                      lambda_path(ctx, e.target()),
                      invert(phi_psi(ctx, Path(e))),
                      invert(lambda_path(ctx, e.source()))});
    }
  }  // namespace

  KW base_KW(CosetContext const& ctx, HomotopyBase const& x) {
    KW          result;
    auto const& q = ctx.subgroup_presentation().presentation;
    for (size_t k = 0; k < x.size(); ++k) {
      Path c = x.cycle(k);
      for (size_t j = 1; j <= ctx.index(); ++j) {
        if (ctx.act(j, c.source()) != 0) {
          result.K.add_closed(phi_path(ctx, j, c));
        }
      }
    }
    for (auto const& rl : q.rules()) {
      result.W.add_closed(z1_path(ctx, Edge{{}, rl, 1, {}}));
    }
    for (auto const* part : {&result.K, &result.W}) {
      auto report = validate_base(*part, q);
      if (!report.ok()) {
        for (auto const& f : report.failures) {
          if (!f.empty()) {
            throw VerificationError("subgroup base: " + f);
          }
        }
      }
      for (auto const& pr : part->pairs) {
        if (!is_closed(pr.left)) {
          throw VerificationError("subgroup base path is not closed");
        }
      }
    }
    return result;
  }

  void base_Z(CosetContext const&                             ctx,
              HomotopyBase const&                             x,
              size_t                                          bound,
              std::function<bool(ZKind, Path const&)> const& emit) {
    if (bound == 0) {
      throw InputError("the word length bound must be at least 1");
    }
    auto const& p   = ctx.presentation();
    auto const& q   = ctx.subgroup_presentation().presentation;
    auto const& s   = ctx.oracle();
    auto const& g   = ctx.subgroup();
    auto        all = SubgraphFilter::all(q);
    for (auto const& w : words_up_to(q.alphabet(), bound)) {
      for (auto const& e : edges_from(w, q, all)) {
        if (!emit(ZKind::z1, z1_path(ctx, e))) {
          return;
        }
      }
    }
    auto a_words = words_up_to(p.alphabet(), bound);
    auto all_p   = SubgraphFilter::all(p);
    for (auto const& u : a_words) {
      auto eu = edges_from(u, p, all_p);
      if (eu.empty()) {
        continue;
      }
      for (auto const& v : a_words) {
        if (u.size() + v.size() > bound || !lang_membership(u + v, g, s)) {
          continue;
        }
        for (auto const& e1 : eu) {
          for (auto const& e2 : edges_from(v, p, all_p)) {
            Path commutator
                = compose({Path(act({}, e1, e2.source())),
                           Path(act(e1.target(), e2, {})),
                           invert(Path(act({}, e1, e2.target()))),
                           invert(Path(act(e1.source(), e2, {})))});
            if (!emit(ZKind::z2, phi_path(ctx, 1, commutator))) {
              return;
            }
          }
        }
      }
    }
    std::vector<Word> contexts = {Word()};
    for (auto const& w : a_words) {
      contexts.push_back(w);
    }
    for (size_t k = 0; k < x.size(); ++k) {
      Path c = x.cycle(k);
      for (auto const& w1 : contexts) {
        for (auto const& w2 : contexts) {
          if (w1.size() + w2.size() > bound
              || !lang_membership(w1 + c.source() + w2, g, s)) {
            continue;
          }
          if (!emit(ZKind::z3, phi_path(ctx, 1, act(w1, c, w2)))) {
            return;
          }
        }
      }
    }
  }

}  // namespace squier
