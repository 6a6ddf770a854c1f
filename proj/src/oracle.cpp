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

#include "squier/oracle.hpp"

#include <algorithm>  // for sort, find
#include <deque>      // for deque
#include <map>        // for map
#include <numeric>    // for iota
#include <queue>      // for queue
#include <sstream>    // for istringstream

#include "squier/exception.hpp"

namespace squier {

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup(std::vector<std::string>         names,
                                   std::vector<std::vector<size_t>> table,
                                   std::vector<Letter>              generators,
                                   std::vector<size_t> generator_values,
                                   std::vector<Word>   words)
      : _names(std::move(names)),
        _table(std::move(table)),
        _generators(std::move(generators)),
        _generator_values(std::move(generator_values)),
        _gen_index(),
        _words(std::move(words)) {
    size_t n = _names.size();
    if (_table.size() != n || _words.size() != n
        || _generators.size() != _generator_values.size()) {
      throw InputError("inconsistent semigroup data");
    }
    for (auto const& row : _table) {
      if (row.size() != n) {
        throw InputError("multiplication table is not square");
      }
      for (auto z : row) {
        if (z >= n) {
          throw InputError("multiplication table entry out of range");
        }
      }
    }
    for (size_t i = 0; i < _generators.size(); ++i) {
      if (_generator_values[i] >= n) {
        throw InputError("generator value out of range");
      }
      if (!_gen_index.emplace(_generators[i].id, i).second) {
        throw InputError("duplicate generator \"" + squier::name(_generators[i])
                         + "\"");
      }
    }
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        for (size_t z = 0; z < n; ++z) {
          if (_table[_table[x][y]][z] != _table[x][_table[y][z]]) {
            throw VerificationError("not associative: (" + _names[x] + " "
                                    + _names[y] + ") " + _names[z] + " != "
                                    + _names[x] + " (" + _names[y] + " "
                                    + _names[z] + ")");
          }
        }
      }
    }
    for (size_t x = 0; x < n; ++x) {
      if (!_words[x].empty() && evaluate(_words[x]) != x) {
        throw VerificationError("canonical word of " + _names[x]
                                + " does not evaluate to it");
      }
    }
  }

  size_t FiniteSemigroup::generator(Letter x) const {
    auto it = _gen_index.find(x.id);
    if (it == _gen_index.end()) {
      throw InputError("letter \"" + squier::name(x)
                       + "\" is not a generator of the semigroup");
    }
    return _generator_values[it->second];
  }

  size_t FiniteSemigroup::evaluate(Word const& w) const {
    if (w.empty()) {
      throw InputError("cannot evaluate the empty word");
    }
    size_t result = generator(w[0]);
    for (size_t i = 1; i < w.size(); ++i) {
      result = _table[result][generator(w[i])];
    }
    return result;
  }

  std::optional<size_t> FiniteSemigroup::find(std::string_view nm) const {
    for (size_t x = 0; x < _names.size(); ++x) {
      if (_names[x] == nm) {
        return x;
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup
  FiniteSemigroup::restriction(std::vector<size_t> const& elements) const {
    std::vector<size_t> pos(size(), size());
    for (size_t i = 0; i < elements.size(); ++i) {
      pos[elements[i]] = i;
    }
    std::vector<std::string>         names;
    std::vector<std::vector<size_t>> table;
    std::vector<Letter>              gens;
    std::vector<size_t>              values;
    std::vector<Word>                words;
    for (size_t i = 0; i < elements.size(); ++i) {
      names.push_back(_names[elements[i]]);
      std::vector<size_t> row;
      for (auto y : elements) {
        size_t z = pos[product(elements[i], y)];
        if (z == size()) {
          throw InputError("subset is not closed under multiplication");
        }
        row.push_back(z);
      }
      table.push_back(std::move(row));
      gens.push_back(letter(_names[elements[i]]));
      values.push_back(i);
      words.push_back({gens.back()});
    }
    return FiniteSemigroup(std::move(names),
                           std::move(table),
                           std::move(gens),
                           std::move(values),
                           std::move(words));
  }

  FiniteSemigroup FiniteSemigroup::with_element_generators() const {
    auto gens   = _generators;
    auto values = _generator_values;
    for (size_t x = 0; x < size(); ++x) {
      auto a = letter(_names[x]);
      if (!has_generator(a)) {
        gens.push_back(a);
        values.push_back(x);
      }
    }
    return FiniteSemigroup(_names, _table, gens, values, _words);
  }

  ////////////////////////////////////////////////////////////////////////
  // Todd-Coxeter
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr uint32_t UNDEF = static_cast<uint32_t>(-1);

    class CosetTable {
     public:
      CosetTable(size_t ngens, size_t budget) : _ngens(ngens), _budget(budget) {
        add_coset();
      }

      size_t num_cosets() const {
        return _parent.size();
      }

      uint32_t find(uint32_t c) {
        while (_parent[c] != c) {
          _parent[c] = _parent[_parent[c]];
          c          = _parent[c];
        }
        return c;
      }

      bool alive(uint32_t c) {
        return find(c) == c;
      }

      uint32_t get(uint32_t c, size_t a) {
        uint32_t t = _table[c * _ngens + a];
        return t == UNDEF ? UNDEF : find(t);
      }

      uint32_t define(uint32_t c, size_t a) {
        uint32_t d = add_coset();
        _table[c * _ngens + a] = d;
        return d;
      }

      // The coset c w, defining new cosets as needed.
      uint32_t trace(uint32_t c, Word const& w, size_t len, Presentation const& p) {
        for (size_t i = 0; i < len; ++i) {
          size_t   a = p.index(w[i]);
          uint32_t t = get(c, a);
          if (t == UNDEF) {
            t = define(c, a);
          }
          c = find(t);
        }
        return c;
      }

      void scan_and_fill(uint32_t c, Rule const& r, Presentation const& p) {
        uint32_t t1 = trace(c, r.lhs, r.lhs.size(), p);
        uint32_t c2 = trace(find(c), r.rhs, r.rhs.size() - 1, p);
        size_t   a  = p.index(r.rhs.back());
        t1          = find(t1);
        uint32_t t2 = get(c2, a);
        if (t2 == UNDEF) {
          _table[c2 * _ngens + a] = t1;
        } else if (t2 != t1) {
          coincidence(t1, t2);
        }
      }

      void coincidence(uint32_t a, uint32_t b) {
        std::deque<std::pair<uint32_t, uint32_t>> queue;
        queue.emplace_back(a, b);
        while (!queue.empty()) {
          auto [x, y] = queue.front();
          queue.pop_front();
          x = find(x);
          y = find(y);
          if (x == y) {
            continue;
          }
          if (x > y) {
            std::swap(x, y);
          }
          _parent[y] = x;
          for (size_t g = 0; g < _ngens; ++g) {
            uint32_t t = _table[y * _ngens + g];
            if (t == UNDEF) {
              continue;
            }
            uint32_t u = _table[x * _ngens + g];
            if (u == UNDEF) {
              _table[x * _ngens + g] = t;
            } else {
              queue.emplace_back(u, t);
            }
          }
        }
      }

     private:
      uint32_t add_coset() {
        if (_parent.size() >= _budget) {
          throw InconclusiveError("coset enumeration exceeded the budget of "
                                  + std::to_string(_budget) + " cosets");
        }
        auto c = static_cast<uint32_t>(_parent.size());
        _parent.push_back(c);
        _table.resize(_table.size() + _ngens, UNDEF);
        return c;
      }

      size_t                _ngens;
      size_t                _budget;
      std::vector<uint32_t> _table;
      std::vector<uint32_t> _parent;
    };
  }  // namespace

  FiniteSemigroup enumerate(Presentation const& p, size_t limit, size_t budget) {
    if (limit == 0) {
      throw InputError("the element limit must be at least 1");
    }
    if (p.alphabet().empty()) {
      throw InputError("the presentation has no generators");
    }
    size_t     ngens = p.alphabet().size();
    CosetTable tc(ngens, budget);
    // HLT with a final consistency sweep; repeated until nothing changes.
    bool changed = true;
    while (changed) {
      changed     = false;
      size_t seen = tc.num_cosets();
      for (uint32_t c = 0; c < tc.num_cosets(); ++c) {
        if (!tc.alive(c)) {
          continue;
        }
        for (auto const& r : p.rules()) {
          tc.scan_and_fill(c, r, p);
          if (!tc.alive(c)) {
            break;
          }
        }
        if (!tc.alive(c)) {
          continue;
        }
        for (size_t a = 0; a < ngens; ++a) {
          if (tc.get(c, a) == UNDEF) {
            tc.define(c, a);
          }
        }
      }
      // Verify every relation at every live coset.
      for (uint32_t c = 0; c < tc.num_cosets(); ++c) {
        if (!tc.alive(c)) {
          continue;
        }
        for (auto const& r : p.rules()) {
          uint32_t x = tc.trace(c, r.lhs, r.lhs.size(), p);
          uint32_t y = tc.trace(tc.find(c), r.rhs, r.rhs.size(), p);
          if (tc.find(x) != tc.find(y)) {
            tc.coincidence(x, y);
            changed = true;
          }
        }
      }
      if (tc.num_cosets() != seen) {
        changed = true;
      }
    }

    // Shortlex breadth first search from the identity coset.
    std::vector<size_t> number(tc.num_cosets(), SIZE_MAX);
    std::vector<uint32_t> order;
    std::vector<Word>     words;
    number[0] = 0;
    order.push_back(0);
    words.emplace_back();
    for (size_t k = 0; k < order.size(); ++k) {
      for (size_t a = 0; a < ngens; ++a) {
        uint32_t t = tc.get(order[k], a);
        if (number[t] == SIZE_MAX) {
          number[t] = order.size();
          order.push_back(t);
          words.push_back(words[k] + Word({p.alphabet()[a]}));
          if (order.size() - 1 > limit) {
            throw InputError("the semigroup has more than "
                             + std::to_string(limit) + " elements");
          }
        }
      }
    }
    size_t n = order.size() - 1;  // without the adjoined identity
    std::vector<std::vector<size_t>> right(n, std::vector<size_t>(ngens));
    for (size_t k = 1; k <= n; ++k) {
      for (size_t a = 0; a < ngens; ++a) {
        right[k - 1][a] = number[tc.get(order[k], a)] - 1;
      }
    }
    std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        size_t z = x;
        for (auto b : words[y + 1]) {
          z = right[z][p.index(b)];
        }
        table[x][y] = z;
      }
    }
    std::vector<std::string> names;
    for (size_t x = 0; x < n; ++x) {
      names.push_back("s" + std::to_string(x + 1));
    }
    std::vector<size_t> values;
    for (size_t a = 0; a < ngens; ++a) {
      values.push_back(number[tc.get(0, a)] - 1);
    }
    words.erase(words.begin());
    FiniteSemigroup s(std::move(names),
                      std::move(table),
                      p.alphabet(),
                      std::move(values),
                      std::move(words));
    // The table must be a model of the presentation.
    for (auto const& r : p.rules()) {
      if (s.evaluate(r.lhs) != s.evaluate(r.rhs)) {
        throw VerificationError("enumerated table violates the relation "
                                + to_string(r.lhs) + " = " + to_string(r.rhs));
      }
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup from_table(std::string_view text) {
    std::istringstream                    in{std::string(text)};
    std::string                           line;
    std::vector<std::string>              names;
    std::vector<std::vector<std::string>> rows;
    bool                                  seen = false;
    size_t                                line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.resize(hash);
      }
      std::istringstream       ls(line);
      std::vector<std::string> toks;
      std::string              tok;
      while (ls >> tok) {
        toks.push_back(tok);
      }
      if (toks.empty()) {
        continue;
      }
      if (!seen) {
        if (toks[0] != "elements:") {
          throw ParseError("expected \"elements:\"", line_no, 1);
        }
        seen = true;
        names.assign(toks.begin() + 1, toks.end());
        if (names.empty()) {
          throw ParseError("no elements declared", line_no, 1);
        }
        for (auto const& nm : names) {
          if (!is_valid_letter_name(nm)) {
            throw ParseError("invalid element name \"" + nm + "\"", line_no, 1);
          }
          if (std::count(names.begin(), names.end(), nm) > 1) {
            throw ParseError("duplicate element \"" + nm + "\"", line_no, 1);
          }
        }
        continue;
      }
      if (toks.size() != names.size()) {
        throw ParseError("row has " + std::to_string(toks.size())
                             + " entries, expected "
                             + std::to_string(names.size()),
                         line_no,
                         1);
      }
      rows.push_back(std::move(toks));
    }
    if (!seen) {
      throw ParseError("missing \"elements:\" line", line_no + 1, 1);
    }
    if (rows.size() != names.size()) {
      throw InputError("table has " + std::to_string(rows.size())
                       + " rows, expected " + std::to_string(names.size()));
    }
    size_t                           n = names.size();
    std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        auto it = std::find(names.begin(), names.end(), rows[x][y]);
        if (it == names.end()) {
          throw InputError("unknown element name \"" + rows[x][y] + "\"");
        }
        table[x][y] = it - names.begin();
      }
    }
    std::vector<Letter> gens;
    std::vector<size_t> values;
    std::vector<Word>   words;
    for (size_t x = 0; x < n; ++x) {
      gens.push_back(letter(names[x]));
      values.push_back(x);
      words.push_back({gens.back()});
    }
    return FiniteSemigroup(std::move(names),
                           std::move(table),
                           std::move(gens),
                           std::move(values),
                           std::move(words));
  }

  std::string to_table_string(FiniteSemigroup const& s) {
    std::string result = "elements:";
    for (auto const& nm : s.names()) {
      result += " " + nm;
    }
    result += "\n";
    for (size_t x = 0; x < s.size(); ++x) {
      for (size_t y = 0; y < s.size(); ++y) {
        result += (y == 0 ? "" : " ") + s.name(s.product(x, y));
      }
      result += "\n";
    }
    return result;
  }

  bool lang_membership(Word const&                w,
                       std::vector<size_t> const& target,
                       FiniteSemigroup const&     s) {
    size_t x = s.evaluate(w);
    return std::find(target.begin(), target.end(), x) != target.end();
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Partition partition_by(std::vector<std::vector<bool>> const& keys) {
      Partition                                result;
      std::map<std::vector<bool>, size_t>      index;
      for (size_t x = 0; x < keys.size(); ++x) {
        auto [it, inserted] = index.emplace(keys[x], result.classes.size());
        if (inserted) {
          result.classes.emplace_back();
        }
        result.classes[it->second].push_back(x);
        result.class_of.push_back(it->second);
      }
      return result;
    }
  }  // namespace

  GreenStructure green(FiniteSemigroup const& s) {
    size_t                         n = s.size();
    std::vector<std::vector<bool>> right(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> left(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> two(n, std::vector<bool>(n, false));
    for (size_t x = 0; x < n; ++x) {
      right[x][x] = left[x][x] = two[x][x] = true;
      for (size_t y = 0; y < n; ++y) {
        right[x][s.product(x, y)] = true;
        left[x][s.product(y, x)]  = true;
        two[x][s.product(x, y)]   = true;
        two[x][s.product(y, x)]   = true;
        for (size_t z = 0; z < n; ++z) {
          two[x][s.product(s.product(y, x), z)] = true;
        }
      }
    }
    GreenStructure result;
    result.R = partition_by(right);
    result.L = partition_by(left);
    result.J = partition_by(two);
    std::vector<std::vector<bool>> hkey(n), dkey(n);
    for (size_t x = 0; x < n; ++x) {
      hkey[x] = right[x];
      hkey[x].insert(hkey[x].end(), left[x].begin(), left[x].end());
    }
    result.H = partition_by(hkey);
    // D is the join of R and L.
    std::vector<size_t> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&uf](size_t x) {
      while (uf[x] != x) {
        x = uf[x] = uf[uf[x]];
      }
      return x;
    };
    for (auto const* part : {&result.R, &result.L}) {
      for (auto const& cls : part->classes) {
        for (auto x : cls) {
          size_t a = find(cls[0]), b = find(x);
          if (a != b) {
            uf[std::max(a, b)] = std::min(a, b);
          }
        }
      }
    }
    for (size_t x = 0; x < n; ++x) {
      dkey[x]          = std::vector<bool>(n, false);
      dkey[x][find(x)] = true;
    }
    result.D = partition_by(dkey);
    for (size_t x = 0; x < n; ++x) {
      if (s.is_idempotent(x)) {
        result.idempotents.push_back(x);
      }
    }
    result.leq_J.assign(n, std::vector<bool>(n, false));
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        bool sub = true;
        for (size_t z = 0; z < n && sub; ++z) {
          sub = !two[x][z] || two[y][z];
        }
        result.leq_J[x][y] = sub;
      }
    }
    return result;
  }

  std::vector<std::vector<size_t>> maximal_subgroups(FiniteSemigroup const& s) {
    auto                             g = green(s);
    std::vector<std::vector<size_t>> result;
    for (auto const& cls : g.H.classes) {
      if (std::any_of(cls.begin(), cls.end(), [&s](size_t x) {
            return s.is_idempotent(x);
          })) {
        result.push_back(cls);
      }
    }
    return result;
  }

  size_t check_subgroup(FiniteSemigroup const& s, std::vector<size_t> const& g) {
    if (g.empty()) {
      throw VerificationError("the subgroup is empty");
    }
    std::vector<bool> in(s.size(), false);
    for (auto x : g) {
      if (x >= s.size()) {
        throw InputError("subgroup element out of range");
      }
      in[x] = true;
    }
    for (auto x : g) {
      for (auto y : g) {
        if (!in[s.product(x, y)]) {
          throw VerificationError("not closed: " + s.name(x) + " "
                                  + s.name(y) + " = "
                                  + s.name(s.product(x, y)));
        }
      }
    }
    std::optional<size_t> e;
    for (auto x : g) {
      if (s.is_idempotent(x)) {
        if (e && *e != x) {
          throw VerificationError("two idempotents: " + s.name(*e) + " and "
                                  + s.name(x));
        }
        e = x;
      }
    }
    if (!e) {
      throw VerificationError("no idempotent in the subgroup");
    }
    for (auto x : g) {
      if (s.product(*e, x) != x || s.product(x, *e) != x) {
        throw VerificationError(s.name(*e) + " is not an identity for "
                                + s.name(x));
      }
      if (std::none_of(g.begin(), g.end(), [&](size_t y) {
            return s.product(x, y) == *e && s.product(y, x) == *e;
          })) {
        throw VerificationError("no inverse for " + s.name(x));
      }
    }
    return *e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cosets
  ////////////////////////////////////////////////////////////////////////

  size_t CosetFamily::act(size_t i, Letter x) const {
    auto it = std::find(letters.begin(), letters.end(), x);
    if (it == letters.end()) {
      return 0;
    }
    return action[i][it - letters.begin()];
  }

  size_t CosetFamily::act(size_t i, Word const& w) const {
    for (auto x : w) {
      i = act(i, x);
    }
    return i;
  }

  CosetFamily right_cosets(FiniteSemigroup const&     s,
                           std::vector<size_t> const& g,
                           Presentation const&        p) {
    check_subgroup(s, g);
    auto const&         letters = p.alphabet();
    std::vector<size_t> gen;
    for (auto x : letters) {
      gen.push_back(s.generator(x));
    }
    using Set = std::vector<size_t>;
    auto mult = [&](Set const& X, size_t y) {
      Set result;
      for (auto x : X) {
        result.push_back(s.product(x, y));
      }
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
      return result;
    };
    Set start(g.begin(), g.end());
    std::sort(start.begin(), start.end());

    // Orbit of G, breadth first in letter order.
    std::map<Set, size_t>            index;
    std::vector<Set>                 orbit;
    std::vector<Word>                words;
    std::vector<std::vector<size_t>> edges;
    index.emplace(start, 0);
    orbit.push_back(start);
    words.emplace_back();
    for (size_t k = 0; k < orbit.size(); ++k) {
      edges.emplace_back();
      for (size_t a = 0; a < letters.size(); ++a) {
        Set  next       = mult(orbit[k], gen[a]);
        auto [it, fresh] = index.emplace(next, orbit.size());
        if (fresh) {
          orbit.push_back(next);
          words.push_back(words[k] + Word({letters[a]}));
        }
        edges[k].push_back(it->second);
      }
    }
    // Nodes that can get back to G.
    std::vector<bool> back(orbit.size(), false);
    back[0]     = true;
    bool change = true;
    while (change) {
      change = false;
      for (size_t k = 0; k < orbit.size(); ++k) {
        if (back[k]) {
          continue;
        }
        for (auto t : edges[k]) {
          if (back[t]) {
            back[k] = change = true;
            break;
          }
        }
      }
    }
    CosetFamily result;
    result.letters = letters;
    std::vector<size_t> number(orbit.size(), 0);
    for (size_t k = 0; k < orbit.size(); ++k) {
      if (back[k]) {
        result.cosets.push_back(orbit[k]);
        result.to.push_back(words[k]);
        number[k] = result.cosets.size();
      }
    }
    result.action.assign(result.size() + 1,
                         std::vector<size_t>(letters.size(), 0));
    for (size_t k = 0; k < orbit.size(); ++k) {
      if (back[k]) {
        for (size_t a = 0; a < letters.size(); ++a) {
          result.action[number[k]][a] = number[edges[k][a]];
        }
      }
    }
    // Pointwise return words: the shortest w' with g r w' = g for all g.
    for (size_t i = 0; i < result.size(); ++i) {
      using Tuple = std::vector<size_t>;
      Tuple from;
      for (auto x : g) {
        from.push_back(result.to[i].empty()
                           ? x
                           : s.product(x, s.evaluate(result.to[i])));
      }
      Tuple target(g.begin(), g.end());
      std::map<Tuple, Word> seen;
      std::deque<Tuple>     queue;
      seen.emplace(from, Word());
      queue.push_back(from);
      bool found = false;
      while (!queue.empty()) {
        Tuple t = queue.front();
        queue.pop_front();
        if (t == target) {
          result.back.push_back(seen[t]);
          found = true;
          break;
        }
        for (size_t a = 0; a < letters.size(); ++a) {
          Tuple u;
          for (auto x : t) {
            u.push_back(s.product(x, gen[a]));
          }
          if (!seen.count(u)) {
            seen.emplace(u, seen[t] + Word({letters[a]}));
            queue.push_back(u);
          }
        }
      }
      if (!found) {
        throw VerificationError("no return word for coset "
                                + std::to_string(i + 1));
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting systems
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Word reduce(Word w, Presentation const& p) {
      while (true) {
        bool done = true;
        for (size_t pos = 0; pos < w.size() && done; ++pos) {
          for (auto const& r : p.rules()) {
            if (occurs_at(w, pos, r.lhs)) {
              w = subword(w, 0, pos) + r.rhs
                  + subword(w, pos + r.lhs.size(),
                            w.size() - pos - r.lhs.size());
              done = false;
              break;
            }
          }
        }
        if (done) {
          return w;
        }
      }
    }
  }  // namespace

  CompletenessCertificate check_complete(Presentation const& p) {
    CompletenessCertificate cert;
    cert.terminating = std::all_of(
        p.rules().begin(), p.rules().end(), [&p](Rule const& r) {
          return p.shortlex_less(r.rhs, r.lhs);
        });
    if (!cert.terminating) {
      return cert;
    }
    cert.locally_confluent = true;
    for (auto const& r1 : p.rules()) {
      for (auto const& r2 : p.rules()) {
        auto const& u = r1.lhs;
        auto const& v = r2.lhs;
        // Proper overlaps: a suffix of u is a prefix of v.
        for (size_t k = 1; k < u.size() && k < v.size(); ++k) {
          if (!std::equal(u.end() - k, u.end(), v.begin())) {
            continue;
          }
          Word left  = r1.rhs + subword(v, k, v.size() - k);
          Word right = subword(u, 0, u.size() - k) + r2.rhs;
          ++cert.critical_pairs;
          if (reduce(left, p) != reduce(right, p)) {
            cert.locally_confluent = false;
            return cert;
          }
        }
        // Inclusions: v is a factor of u.
        for (size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
          if (r1.id == r2.id && pos == 0) {
            continue;
          }
          if (!occurs_at(u, pos, v)) {
            continue;
          }
          Word left  = r1.rhs;
          Word right = subword(u, 0, pos) + r2.rhs
                       + subword(u, pos + v.size(), u.size() - pos - v.size());
          ++cert.critical_pairs;
          if (reduce(left, p) != reduce(right, p)) {
            cert.locally_confluent = false;
            return cert;
          }
        }
      }
    }
    return cert;
  }

  std::pair<Presentation, CompletenessCertificate>
  table_presentation(FiniteSemigroup const& s) {
    Presentation        p;
    std::vector<Letter> x;
    for (size_t i = 0; i < s.size(); ++i) {
      x.push_back(letter(s.name(i)));
      p.add_letter(x.back());
    }
    for (size_t i = 0; i < s.size(); ++i) {
      for (size_t j = 0; j < s.size(); ++j) {
        p.add_rule({x[i], x[j]}, {x[s.product(i, j)]});
      }
    }
    auto cert = check_complete(p);
    return {std::move(p), cert};
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool extend(FiniteSemigroup const& s,
                FiniteSemigroup const& t,
                std::vector<size_t>&   f,
                std::vector<bool>&     used,
                size_t                 k) {
      size_t n = s.size();
      if (k == n) {
        return true;
      }
      for (size_t y = 0; y < n; ++y) {
        if (used[y] || s.is_idempotent(k) != t.is_idempotent(y)) {
          continue;
        }
        f[k]    = y;
        used[y] = true;
        bool ok = true;
        for (size_t a = 0; a <= k && ok; ++a) {
          for (size_t b = 0; b <= k; ++b) {
            size_t c = s.product(a, b);
            if (c <= k && f[c] != t.product(f[a], f[b])) {
              ok = false;
              break;
            }
          }
        }
        if (ok && extend(s, t, f, used, k + 1)) {
          return true;
        }
        used[y] = false;
      }
      return false;
    }
  }  // namespace

  bool isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t) {
    if (s.size() != t.size()) {
      return false;
    }
    std::vector<size_t> f(s.size(), 0);
    std::vector<bool>   used(s.size(), false);
    if (!extend(s, t, f, used, 0)) {
      return false;
    }
    for (size_t a = 0; a < s.size(); ++a) {
      for (size_t b = 0; b < s.size(); ++b) {
        if (f[s.product(a, b)] != t.product(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace squier
