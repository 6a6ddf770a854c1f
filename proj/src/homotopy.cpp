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

#include "squier/homotopy.hpp"

#include <algorithm>  // for reverse
#include <cstring>    // for memcpy
#include <map>        // for map
#include <queue>      // for priority_queue
#include <sstream>    // for istringstream
#include <unordered_map>

#include "squier/exception.hpp"

namespace squier {

  Path HomotopyBase::cycle(size_t k) const {
    auto const& pr = pairs.at(k);
    return compose(pr.left, invert(pr.right));
  }

  ParallelPair h1_pair(Edge const& e1, Edge const& e2) {
    Word i1 = e1.source(), t1 = e1.target();
    Word i2 = e2.source(), t2 = e2.target();
    Path left(i1 + i2, {act({}, e1, i2), act(t1, e2, {})});
    Path right(i1 + i2, {act(i1, e2, {}), act({}, e1, t2)});
    return ParallelPair{std::move(left), std::move(right)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Moves
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // The interchange of two consecutive edges acting on disjoint factors.
    std::optional<std::pair<Edge, Edge>> interchange(Edge const& e1,
                                                     Edge const& e2) {
      Word const&  r1i = e1.rule.side(e1.sign);
      Word const&  r1t = e1.rule.side(-e1.sign);
      Word const&  r2i = e2.rule.side(e2.sign);
      Word const&  r2t = e2.rule.side(-e2.sign);
      size_t const a1  = e1.prefix.size(), b1 = a1 + r1t.size();
      size_t const a2  = e2.prefix.size(), b2 = a2 + r2i.size();
      Word const   u   = e1.source();
      Edge         f1, f2;
      if (b1 <= a2) {
        size_t k = a2 - r1t.size() + r1i.size();
        f1       = Edge{subword(u, 0, k), e2.rule, e2.sign, e2.suffix};
        Word v   = f1.target();
        size_t j = a1 + r1i.size();
        f2 = Edge{e1.prefix, e1.rule, e1.sign, subword(v, j, v.size() - j)};
      } else if (b2 <= a1) {
        size_t j = a2 + r2i.size();
        f1 = Edge{e2.prefix, e2.rule, e2.sign, subword(u, j, u.size() - j)};
        Word   v = f1.target();
        size_t k = a1 - r2i.size() + r2t.size();
        f2       = Edge{subword(v, 0, k), e1.rule, e1.sign, e1.suffix};
      } else {
        return std::nullopt;
      }
      if (f1.source() != u || f2.source() != f1.target()
          || f2.target() != e2.target()) {
        return std::nullopt;
      }
      return std::make_pair(std::move(f1), std::move(f2));
    }

    struct Rotated {
      Word              base;
      std::vector<Edge> edges;
    };

    Rotated rotate(Path const& cyc, size_t offset) {
      Rotated      result;
      size_t const n = cyc.size();
      result.base    = cyc.vertex(offset % std::max<size_t>(n, 1));
      for (size_t k = 0; k < n; ++k) {
        result.edges.push_back(cyc[(offset + k) % n]);
      }
      return result;
    }

    std::vector<Edge> inverse_edges(std::vector<Edge> const& edges,
                                    size_t                   from) {
      std::vector<Edge> result;
      for (size_t k = edges.size(); k > from; --k) {
        result.push_back(edges[k - 1].inverse());
      }
      return result;
    }
  }  // namespace

  Path apply_move(Path const& p, Move const& m, HomotopyBase const& base) {
    auto const&  edges = p.edges();
    size_t const n     = edges.size();
    auto         fail  = [](std::string const& why) {
      return InputError("move does not apply: " + why);
    };
    switch (m.kind) {
      case Move::Kind::h4_cancel: {
        if (m.position + 1 >= n) {
          throw fail("cancellation position out of range");
        }
        if (edges[m.position + 1] != edges[m.position].inverse()) {
          throw fail("edges are not mutually inverse");
        }
        std::vector<Edge> result(edges.begin(), edges.begin() + m.position);
        result.insert(result.end(), edges.begin() + m.position + 2, edges.end());
        return Path(p.source(), std::move(result));
      }
      case Move::Kind::h4_insert: {
        if (!m.edge) {
          throw fail("insertion without an edge");
        }
        if (m.position > n) {
          throw fail("insertion position out of range");
        }
        if (p.vertex(m.position) != m.edge->source()) {
          throw fail("edge does not start at the insertion vertex");
        }
        std::vector<Edge> result(edges.begin(), edges.begin() + m.position);
        result.push_back(*m.edge);
        result.push_back(m.edge->inverse());
        result.insert(result.end(), edges.begin() + m.position, edges.end());
        return Path(p.source(), std::move(result));
      }
      case Move::Kind::h1_interchange: {
        if (m.position + 1 >= n) {
          throw fail("interchange position out of range");
        }
        auto swapped = interchange(edges[m.position], edges[m.position + 1]);
        if (!swapped) {
          throw fail("edges do not act on disjoint factors");
        }
        std::vector<Edge> result = edges;
        result[m.position]       = swapped->first;
        result[m.position + 1]   = swapped->second;
        return Path(p.source(), std::move(result));
      }
      case Move::Kind::base_replace: {
        if (m.pair >= base.size()) {
          throw fail("no base pair " + std::to_string(m.pair));
        }
        Path cyc = base.cycle(m.pair);
        if (m.inverted) {
          cyc = invert(cyc);
        }
        size_t const len = cyc.size();
        if ((len == 0 && m.offset != 0) || (len > 0 && m.offset >= len)
            || m.split > len) {
          throw fail("rotation or split out of range");
        }
        Rotated           rot = rotate(cyc, m.offset);
        std::vector<Edge> s(rot.edges.begin(), rot.edges.begin() + m.split);
        std::vector<Edge> t = inverse_edges(rot.edges, m.split);
        auto const&       from = m.forward ? s : t;
        auto const&       to   = m.forward ? t : s;
        if (m.position + from.size() > n) {
          throw fail("replacement runs past the end of the path");
        }
        if (p.vertex(m.position) != m.left + rot.base + m.right) {
          throw fail("context does not match at the replacement vertex");
        }
        for (size_t k = 0; k < from.size(); ++k) {
          if (edges[m.position + k] != act(m.left, from[k], m.right)) {
            throw fail("subpath does not match the base segment");
          }
        }
        std::vector<Edge> result(edges.begin(), edges.begin() + m.position);
        for (auto const& e : to) {
          result.push_back(act(m.left, e, m.right));
        }
        result.insert(
            result.end(), edges.begin() + m.position + from.size(), edges.end());
        return Path(p.source(), std::move(result));
      }
    }
    throw fail("unknown move kind");
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void put(std::string& s, uint32_t x) {
      char buf[4];
      std::memcpy(buf, &x, 4);
      s.append(buf, 4);
    }

    uint32_t get(std::string const& s, size_t& pos) {
      uint32_t x;
      std::memcpy(&x, s.data() + pos, 4);
      pos += 4;
      return x;
    }

    // An edge is determined by its initial vertex, the length of its prefix,
    // its rule and its sign.
    std::string encode(Path const& p) {
      std::string s;
      put(s, static_cast<uint32_t>(p.source().size()));
      for (auto x : p.source()) {
        put(s, x.id);
      }
      for (auto const& e : p.edges()) {
        put(s, static_cast<uint32_t>(e.prefix.size()));
        put(s, static_cast<uint32_t>(e.rule.id));
        put(s, e.sign > 0 ? 1 : 0);
      }
      return s;
    }

    class Searcher {
     public:
      Searcher(Path const& p, Path const& q, HomotopyBase const& base)
          : _base(base) {
        collect(p);
        collect(q);
        for (size_t k = 0; k < base.size(); ++k) {
          Path cyc = base.cycle(k);
          collect(cyc);
          for (bool inv : {false, true}) {
            Path c = inv ? invert(cyc) : cyc;
            for (size_t j = 0; j < c.size(); ++j) {
              _index[key(c[j])].push_back(Entry{k, inv, j});
            }
            _cycles.emplace(std::make_pair(k, inv), std::move(c));
          }
        }
      }

      Path decode(std::string const& s) const {
        size_t pos = 0;
        size_t n   = get(s, pos);
        Word   w;
        for (size_t i = 0; i < n; ++i) {
          w.push_back(Letter{get(s, pos)});
        }
        Word              v = w;
        std::vector<Edge> edges;
        while (pos < s.size()) {
          size_t      k    = get(s, pos);
          Rule const& r    = _rules.at(get(s, pos));
          int         sign = get(s, pos) ? 1 : -1;
          size_t      len  = r.side(sign).size();
          edges.push_back(
              Edge{subword(v, 0, k), r, sign, subword(v, k + len, v.size() - k - len)});
          v = edges.back().target();
        }
        return Path(std::move(w), std::move(edges));
      }

      // Every move considered from p, with the resulting path.
      std::vector<std::pair<Move, Path>> moves(Path const& p) const {
        std::vector<std::pair<Move, Path>> result;
        auto const&                        edges = p.edges();
        size_t const                       n     = edges.size();
        for (size_t i = 0; i + 1 < n; ++i) {
          if (edges[i + 1] == edges[i].inverse()) {
            Move m;
            m.kind     = Move::Kind::h4_cancel;
            m.position = i;
            result.emplace_back(m, apply_move(p, m, _base));
          }
        }
        for (size_t i = 0; i + 1 < n; ++i) {
          if (edges[i + 1] != edges[i].inverse()
              && interchange(edges[i], edges[i + 1])) {
            Move m;
            m.kind     = Move::Kind::h1_interchange;
            m.position = i;
            result.emplace_back(m, apply_move(p, m, _base));
          }
        }
        for (size_t i = 0; i < n; ++i) {
          auto it = _index.find(key(edges[i]));
          if (it == _index.end()) {
            continue;
          }
          for (auto const& entry : it->second) {
            Path const& c   = _cycles.at({entry.pair, entry.inverted});
            size_t      len = c.size();
            Edge const& e0  = c[entry.offset];
            Edge const& ei  = edges[i];
            if (ei.prefix.size() < e0.prefix.size()
                || ei.suffix.size() < e0.suffix.size()
                || !std::equal(e0.prefix.begin(),
                               e0.prefix.end(),
                               ei.prefix.end() - e0.prefix.size())
                || !std::equal(e0.suffix.begin(), e0.suffix.end(), ei.suffix.begin())) {
              continue;
            }
            Word x = subword(ei.prefix, 0, ei.prefix.size() - e0.prefix.size());
            Word y = subword(
                ei.suffix, e0.suffix.size(), ei.suffix.size() - e0.suffix.size());
            size_t matched = 1;
            while (matched < len && i + matched < n
                   && edges[i + matched]
                          == act(x, c[(entry.offset + matched) % len], y)) {
              ++matched;
            }
            for (size_t s = 1; s <= matched; ++s) {
              Move m;
              m.kind     = Move::Kind::base_replace;
              m.position = i;
              m.pair     = entry.pair;
              m.inverted = entry.inverted;
              m.offset   = entry.offset;
              m.split    = s;
              m.left     = x;
              m.right    = y;
              result.emplace_back(m, apply_move(p, m, _base));
            }
          }
        }
        // Backtracking insertions of edges already on the path.
        for (size_t i = 0; i <= n; ++i) {
          Word v = p.vertex(i);
          for (size_t k = 0; k < n; ++k) {
            for (Edge const& e : {edges[k], edges[k].inverse()}) {
              if (e.source() != v) {
                continue;
              }
              if ((i < n && edges[i] == e) || (i > 0 && edges[i - 1] == e.inverse())) {
                continue;
              }
              Move m;
              m.kind     = Move::Kind::h4_insert;
              m.position = i;
              m.edge     = e;
              result.emplace_back(m, apply_move(p, m, _base));
            }
          }
        }
        return result;
      }

     private:
      struct Entry {
        size_t pair;
        bool   inverted;
        size_t offset;
      };

      static uint64_t key(Edge const& e) {
        return (static_cast<uint64_t>(e.rule.id) << 1) | (e.sign > 0 ? 1 : 0);
      }

      void collect(Path const& p) {
        for (auto const& e : p.edges()) {
          auto [it, fresh] = _rules.emplace(e.rule.id, e.rule);
          if (!fresh && it->second != e.rule) {
            throw InputError("two different rules with id "
                             + std::to_string(e.rule.id));
          }
        }
      }

      HomotopyBase const&                          _base;
      std::unordered_map<size_t, Rule>             _rules;
      std::unordered_map<uint64_t, std::vector<Entry>> _index;
      std::map<std::pair<size_t, bool>, Path>      _cycles;
    };

    Move inverse_move(Move const& m, Path const& before) {
      Move inv = m;
      switch (m.kind) {
        case Move::Kind::h1_interchange:
          break;
        case Move::Kind::h4_cancel:
          inv.kind = Move::Kind::h4_insert;
          inv.edge = before[m.position];
          break;
        case Move::Kind::h4_insert:
          inv.kind = Move::Kind::h4_cancel;
          inv.edge.reset();
          break;
        case Move::Kind::base_replace:
          inv.forward = !m.forward;
          break;
      }
      return inv;
    }
  }  // namespace

  HomotopyResult homotopic_bounded(Path const&         p,
                                   Path const&         q,
                                   HomotopyBase const& base,
                                   size_t              budget) {
    if (!is_parallel(p, q)) {
      throw InputError("paths are not parallel");
    }
    HomotopyResult result;
    if (p == q) {
      result.verdict = HomotopyResult::Verdict::equivalent;
      result.visited = 1;
      return result;
    }
    Searcher searcher(p, q, base);

    struct Node {
      std::string key;
      size_t      parent;
      Move        move;
      size_t      length;
    };
    using Item = std::pair<size_t, size_t>;  // (length, node)
    std::vector<Node> nodes[2];
    std::unordered_map<std::string, size_t> seen[2];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue[2];
    Path const* roots[2] = {&p, &q};
    for (int side : {0, 1}) {
      std::string k = encode(*roots[side]);
      nodes[side].push_back(Node{k, 0, Move(), roots[side]->size()});
      seen[side].emplace(k, 0);
      queue[side].emplace(roots[side]->size(), 0);
    }
    size_t visited = 2;
    int    side    = 1;
    std::optional<std::pair<size_t, size_t>> meet;  // node on side 0, side 1
    while (!meet && visited < budget && (!queue[0].empty() || !queue[1].empty())) {
      side = 1 - side;
      if (queue[side].empty()) {
        side = 1 - side;
      }
      size_t id = queue[side].top().second;
      queue[side].pop();
      Path cur = searcher.decode(nodes[side][id].key);
      for (auto& [m, child] : searcher.moves(cur)) {
        std::string k = encode(child);
        if (seen[side].count(k)) {
          continue;
        }
        size_t cid = nodes[side].size();
        nodes[side].push_back(Node{k, id, m, child.size()});
        seen[side].emplace(k, cid);
        ++visited;
        auto other = seen[1 - side].find(k);
        if (other != seen[1 - side].end()) {
          meet = side == 0 ? std::make_pair(cid, other->second)
                           : std::make_pair(other->second, cid);
          break;
        }
        queue[side].emplace(child.size(), cid);
        if (visited >= budget) {
          break;
        }
      }
    }
    result.visited = visited;
    if (!meet) {
      return result;
    }
    std::vector<Move> forward;
    for (size_t j = meet->first; j != 0; j = nodes[0][j].parent) {
      forward.push_back(nodes[0][j].move);
    }
    std::reverse(forward.begin(), forward.end());
    for (size_t j = meet->second; j != 0; j = nodes[1][j].parent) {
      Path before = searcher.decode(nodes[1][nodes[1][j].parent].key);
      forward.push_back(inverse_move(nodes[1][j].move, before));
    }
    // Replay the certificate.
    Path cur = p;
    for (auto const& m : forward) {
      cur = apply_move(cur, m, base);
    }
    if (cur != q) {
      throw VerificationError("internal error: certificate does not replay");
    }
    result.verdict     = HomotopyResult::Verdict::equivalent;
    result.certificate = std::move(forward);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Critical pairs
  ////////////////////////////////////////////////////////////////////////

  Path leftmost_reduction(Word const& w, Presentation const& p) {
    std::vector<Edge> edges;
    Word              v = w;
    while (true) {
      bool found = false;
      for (size_t pos = 0; pos < v.size() && !found; ++pos) {
        for (auto const& r : p.rules()) {
          if (occurs_at(v, pos, r.lhs)) {
            edges.push_back(Edge{subword(v, 0, pos),
                                 r,
                                 1,
                                 subword(v,
                                         pos + r.lhs.size(),
                                         v.size() - pos - r.lhs.size())});
            v     = edges.back().target();
            found = true;
            break;
          }
        }
      }
      if (!found) {
        break;
      }
      if (edges.size() > 1'000'000) {
        throw VerificationError("reduction does not terminate");
      }
    }
    return Path(w, std::move(edges));
  }

  HomotopyBase critical_pair_base(Presentation const&            p,
                                  CompletenessCertificate const& cert) {
    if (!cert.complete()) {
      throw VerificationError("the rewriting system is not certified complete");
    }
    HomotopyBase result;
    auto         emit = [&](Edge const& e1, Edge const& e2) {
      Path n1 = leftmost_reduction(e1.target(), p);
      Path n2 = leftmost_reduction(e2.target(), p);
      if (n1.target() != n2.target()) {
        throw VerificationError("critical pair at "
                                + to_string(e1.source(), ".", "_")
                                + " is not joinable");
      }
      result.add_closed(compose(
          {Path(e1), n1, invert(n2), Path(e2.inverse())}));
    };
    for (auto const& r1 : p.rules()) {
      for (auto const& r2 : p.rules()) {
        auto const& u = r1.lhs;
        auto const& v = r2.lhs;
        for (size_t k = 1; k < u.size() && k < v.size(); ++k) {
          if (!std::equal(u.end() - k, u.end(), v.begin())) {
            continue;
          }
          Word rest = subword(v, k, v.size() - k);
          Word head = subword(u, 0, u.size() - k);
          emit(Edge{{}, r1, 1, rest}, Edge{head, r2, 1, {}});
        }
        for (size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
          if ((r1.id == r2.id && pos == 0) || !occurs_at(u, pos, v)) {
            continue;
          }
          emit(Edge{{}, r1, 1, {}},
               Edge{subword(u, 0, pos),
                    r2,
                    1,
                    subword(u, pos + v.size(), u.size() - pos - v.size())});
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation and text
  ////////////////////////////////////////////////////////////////////////

  bool BaseReport::ok() const {
    return num_failures() == 0;
  }

  size_t BaseReport::num_failures() const {
    return std::count_if(failures.begin(),
                         failures.end(),
                         [](std::string const& s) { return !s.empty(); });
  }

  namespace {
    std::string check_path(Path const& path, Presentation const& p) {
      if (!p.is_word(path.source())) {
        return "base vertex is not a word over the alphabet";
      }
      if (path.source().empty()) {
        return "empty base vertex";
      }
      Word v = path.source();
      for (size_t i = 0; i < path.size(); ++i) {
        auto const& e = path[i];
        if (e.rule.id >= p.rules().size() || p.rule(e.rule.id) != e.rule) {
          return "edge " + std::to_string(i) + " uses a rule not in the presentation";
        }
        if (e.source() != v) {
          return "edge " + std::to_string(i) + " does not continue the path";
        }
        v = e.target();
      }
      return "";
    }
  }  // namespace

  BaseReport validate_base(HomotopyBase const& base, Presentation const& p) {
    BaseReport report;
    for (size_t k = 0; k < base.size(); ++k) {
      auto const& pr  = base.pairs[k];
      std::string why = check_path(pr.left, p);
      if (why.empty()) {
        why = check_path(pr.right, p);
      }
      if (why.empty() && !is_parallel(pr.left, pr.right)) {
        why = "paths are not parallel";
      }
      report.failures.push_back(why.empty() ? ""
                                            : "pair " + std::to_string(k) + ": "
                                                  + why);
    }
    return report;
  }

  std::string to_string(HomotopyBase const& base) {
    std::string result;
    for (auto const& pr : base.pairs) {
      if (pr.right.empty() && pr.right.source() == pr.left.source()) {
        result += "CLOSED " + to_string(pr.left) + "\n";
      } else {
        result += "PAIR " + to_string(pr.left) + " ~ " + to_string(pr.right)
                  + "\n";
      }
    }
    return result;
  }

  HomotopyBase parse_base(std::string_view text, Presentation const& p) {
    HomotopyBase result;
    size_t       line_no = 0;
    while (!text.empty()) {
      ++line_no;
      size_t           nl   = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) {
        line.remove_suffix(1);
      }
      while (!line.empty() && line.front() == ' ') {
        line.remove_prefix(1);
      }
      if (line.empty()) {
        continue;
      }
      try {
        if (line.substr(0, 7) == "CLOSED ") {
          result.add_closed(parse_path(line.substr(7), p));
        } else if (line.substr(0, 5) == "PAIR ") {
          auto body  = line.substr(5);
          auto tilde = body.find(" ~ ");
          if (tilde == std::string_view::npos) {
            throw ParseError("expected \" ~ \"", line_no, 6);
          }
          result.add(parse_path(body.substr(0, tilde), p),
                     parse_path(body.substr(tilde + 3), p));
        } else {
          throw ParseError("expected PAIR or CLOSED", line_no, 1);
        }
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what(), line_no, 1);
      }
    }
    return result;
  }

}  // namespace squier
