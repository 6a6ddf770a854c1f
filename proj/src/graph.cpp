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

#include "squier/graph.hpp"

#include <deque>          // for deque
#include <unordered_map>  // for unordered_map

#include "squier/exception.hpp"

namespace squier {

  Edge make_edge(Word prefix, Rule const& rule, int sign, Word suffix) {
    if (sign != 1 && sign != -1) {
      throw InputError("edge sign must be +1 or -1");
    }
    return Edge{std::move(prefix), rule, sign, std::move(suffix)};
  }

  Edge act(Word const& x, Edge const& e, Word const& y) {
    return Edge{x + e.prefix, e.rule, e.sign, e.suffix + y};
  }

  ////////////////////////////////////////////////////////////////////////
  // Path
  ////////////////////////////////////////////////////////////////////////

  Path::Path(Edge e) : _base(e.source()), _edges({std::move(e)}) {}

  Path::Path(Word base, std::vector<Edge> edges)
      : _base(std::move(base)), _edges(std::move(edges)) {
    Word v = _base;
    for (size_t i = 0; i < _edges.size(); ++i) {
      if (_edges[i].source() != v) {
        throw InputError("edge " + std::to_string(i) + " " + to_string(_edges[i])
                         + " does not start at " + to_string(v, ".", "_"));
      }
      v = _edges[i].target();
    }
  }

  Word Path::target() const {
    return _edges.empty() ? _base : _edges.back().target();
  }

  Word Path::vertex(size_t i) const {
    return i == 0 ? _base : _edges[i - 1].target();
  }

  Path compose(Path const& p, Path const& q) {
    Word t = p.target();
    if (t != q.source()) {
      throw InputError("cannot compose: " + to_string(t, ".", "_")
                       + " != " + to_string(q.source(), ".", "_"));
    }
    std::vector<Edge> edges = p.edges();
    edges.insert(edges.end(), q.edges().begin(), q.edges().end());
    return Path(p.source(), std::move(edges));
  }

  Path compose(std::vector<Path> const& ps) {
    if (ps.empty()) {
      throw InputError("cannot compose an empty list of paths");
    }
    Path result = ps[0];
    for (size_t i = 1; i < ps.size(); ++i) {
      result = compose(result, ps[i]);
    }
    return result;
  }

  Path act(Word const& x, Path const& p, Word const& y) {
    std::vector<Edge> edges;
    edges.reserve(p.size());
    for (auto const& e : p.edges()) {
      edges.push_back(act(x, e, y));
    }
    return Path(x + p.source() + y, std::move(edges));
  }

  Path invert(Path const& p) {
    std::vector<Edge> edges;
    edges.reserve(p.size());
    for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) {
      edges.push_back(it->inverse());
    }
    return Path(p.target(), std::move(edges));
  }

  bool is_parallel(Path const& p, Path const& q) {
    return p.source() == q.source() && p.target() == q.target();
  }

  bool is_positive(Path const& p) {
    return std::all_of(p.edges().begin(), p.edges().end(), [](Edge const& e) {
      return e.sign == 1;
    });
  }

  bool is_closed(Path const& p) {
    return p.source() == p.target();
  }

  ////////////////////////////////////////////////////////////////////////
  // SubgraphFilter
  ////////////////////////////////////////////////////////////////////////

  SubgraphFilter SubgraphFilter::all(Presentation const& p) {
    std::vector<size_t> ids;
    for (auto const& r : p.rules()) {
      ids.push_back(r.id);
    }
    return SubgraphFilter("all", ids);
  }

  SubgraphFilter::SubgraphFilter(std::string name, std::vector<size_t> const& ids)
      : _name(std::move(name)), _allowed() {
    for (auto id : ids) {
      if (id >= _allowed.size()) {
        _allowed.resize(id + 1, false);
      }
      _allowed[id] = true;
    }
  }

  SubgraphFilter SubgraphFilter::intersect(SubgraphFilter const& that) const {
    std::vector<size_t> ids;
    for (size_t i = 0; i < _allowed.size(); ++i) {
      if (allows(i) && that.allows(i)) {
        ids.push_back(i);
      }
    }
    return SubgraphFilter(_name + "&" + that._name, ids);
  }

  SubgraphFilter SubgraphFilter::unite(SubgraphFilter const& that) const {
    std::vector<size_t> ids;
    for (size_t i = 0; i < std::max(_allowed.size(), that._allowed.size()); ++i) {
      if (allows(i) || that.allows(i)) {
        ids.push_back(i);
      }
    }
    return SubgraphFilter(_name + "|" + that._name, ids);
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  std::vector<Edge> edges_from(Word const&           w,
                               Presentation const&   p,
                               SubgraphFilter const& filter) {
    std::vector<Edge> result;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (auto const& r : p.rules()) {
        if (!filter.allows(r.id)) {
          continue;
        }
        for (int sign : {+1, -1}) {
          auto const& side = r.side(sign);
          if (occurs_at(w, pos, side)) {
            result.push_back(Edge{subword(w, 0, pos),
                                  r,
                                  sign,
                                  subword(w,
                                          pos + side.size(),
                                          w.size() - pos - side.size())});
          }
        }
      }
    }
    return result;
  }

  PathSearch find_path(Word const&           w1,
                       Word const&           w2,
                       Presentation const&   p,
                       SubgraphFilter const& filter,
                       size_t                budget) {
    PathSearch result;
    if (w1 == w2) {
      result.status  = PathSearch::Status::found;
      result.path    = Path(w1);
      result.visited = 1;
      return result;
    }
    struct Node {
      size_t parent;
      size_t pos;
      size_t rule;
      int    sign;
    };
    std::unordered_map<Word, size_t, WordHash> index;
    std::vector<Word>                          words;
    std::vector<Node>                          nodes;
    index.emplace(w1, 0);
    words.push_back(w1);
    nodes.push_back(Node{0, 0, 0, 0});
    for (size_t k = 0; k < words.size(); ++k) {
      Word const w = words[k];
      for (size_t pos = 0; pos < w.size(); ++pos) {
        for (auto const& r : p.rules()) {
          if (!filter.allows(r.id)) {
            continue;
          }
          for (int sign : {+1, -1}) {
            auto const& side = r.side(sign);
            if (!occurs_at(w, pos, side)) {
              continue;
            }
            Word next = subword(w, 0, pos) + r.side(-sign)
                        + subword(w,
                                  pos + side.size(),
                                  w.size() - pos - side.size());
            if (index.count(next)) {
              continue;
            }
            if (words.size() >= budget) {
              result.visited = words.size();
              return result;
            }
            index.emplace(next, words.size());
            words.push_back(next);
            nodes.push_back(Node{k, pos, r.id, sign});
            if (next == w2) {
              std::vector<Edge> edges;
              size_t            j = words.size() - 1;
              while (j != 0) {
                auto const& nd   = nodes[j];
                auto const& from = words[nd.parent];
                auto const& rl   = p.rule(nd.rule);
                size_t      len  = rl.side(nd.sign).size();
                edges.push_back(Edge{subword(from, 0, nd.pos),
                                     rl,
                                     nd.sign,
                                     subword(from,
                                             nd.pos + len,
                                             from.size() - nd.pos - len)});
                j = nd.parent;
              }
              std::reverse(edges.begin(), edges.end());
              result.status  = PathSearch::Status::found;
              result.path    = Path(w1, std::move(edges));
              result.visited = words.size();
              return result;
            }
          }
        }
      }
    }
    result.status  = PathSearch::Status::no_path;
    result.visited = words.size();
    return result;
  }

  Path FixedPaths::get(Word const& w1, Word const& w2, SubgraphFilter const& filter) {
    bool forward = !_presentation.shortlex_less(w2, w1);
    Key  key     = forward ? Key(filter, w1, w2) : Key(filter, w2, w1);
    {
      std::lock_guard<std::mutex> lock(_mtx);
      auto                        it = _cache.find(key);
      if (it != _cache.end()) {
        return forward ? it->second : invert(it->second);
      }
    }
    auto const& [f, u, v] = key;
    auto found            = find_path(u, v, _presentation, f, _budget);
    if (found.status == PathSearch::Status::inconclusive) {
      throw InconclusiveError("path search from " + to_string(u, ".", "_")
                              + " to " + to_string(v, ".", "_")
                              + " exceeded the node budget of "
                              + std::to_string(_budget));
    }
    if (found.status == PathSearch::Status::no_path) {
      throw VerificationError("no path from " + to_string(u, ".", "_") + " to "
                              + to_string(v, ".", "_") + " in "
                              + filter.name());
    }
    std::lock_guard<std::mutex> lock(_mtx);
    // Another thread may have raced us; the first stored value wins.
    auto it = _cache.emplace(key, std::move(found.path)).first;
    return forward ? it->second : invert(it->second);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Edge const& e) {
    return "(" + to_string(e.prefix, ".", "_") + "|r" + std::to_string(e.rule.id)
           + "|" + (e.sign > 0 ? "+1" : "-1") + "|"
           + to_string(e.suffix, ".", "_") + ")";
  }

  std::string to_string(Path const& p) {
    if (p.empty()) {
      return "1_" + to_string(p.source(), ".", "_");
    }
    std::string result;
    for (size_t i = 0; i < p.size(); ++i) {
      if (i != 0) {
        result += ";";
      }
      result += to_string(p[i]);
    }
    return result;
  }

  Word parse_dotted_word(std::string_view text, Presentation const& p) {
    return parse_word(text, p, '.');
  }

  Edge parse_edge(std::string_view text, Presentation const& p) {
    auto bad = [&text](std::string const& why) {
      return InputError("bad edge \"" + std::string(text) + "\": " + why);
    };
    while (!text.empty() && text.front() == ' ') {
      text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
      text.remove_suffix(1);
    }
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
      throw bad("missing parentheses");
    }
    auto                          body = text.substr(1, text.size() - 2);
    std::vector<std::string_view> fields;
    size_t                        start = 0;
    for (size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || body[i] == '|') {
        fields.push_back(body.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 4) {
      throw bad("expected four fields");
    }
    if (fields[1].size() < 2 || fields[1][0] != 'r') {
      throw bad("rule must be written r<id>");
    }
    size_t id = 0;
    for (auto c : fields[1].substr(1)) {
      if (c < '0' || c > '9') {
        throw bad("rule must be written r<id>");
      }
      id = 10 * id + (c - '0');
    }
    int sign;
    if (fields[2] == "+1") {
      sign = 1;
    } else if (fields[2] == "-1") {
      sign = -1;
    } else {
      throw bad("sign must be +1 or -1");
    }
    return Edge{parse_dotted_word(fields[0], p),
                p.rule(id),
                sign,
                parse_dotted_word(fields[3], p)};
  }

  Path parse_path(std::string_view text, Presentation const& p) {
    while (!text.empty() && text.front() == ' ') {
      text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
      text.remove_suffix(1);
    }
    if (text.substr(0, 2) == "1_") {
      return Path(parse_dotted_word(text.substr(2), p));
    }
    std::vector<Edge> edges;
    size_t            start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ';') {
        edges.push_back(parse_edge(text.substr(start, i - start), p));
        start = i + 1;
      }
    }
    if (edges.empty()) {
      throw InputError("empty path text");
    }
    Word base = edges[0].source();
    return Path(std::move(base), std::move(edges));
  }

}  // namespace squier
