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

#include "squier/extension.hpp"

#include <algorithm>      // for find, max
#include <deque>          // for deque
#include <set>            // for set
#include <sstream>        // for istringstream, ostringstream
#include <unordered_set>  // for unordered_set

#include "squier/exception.hpp"

namespace squier {

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  std::optional<size_t> ReesMatrix::entry(size_t lambda, size_t i) const {
    auto const& w = p.at(lambda - 1).at(i - 1);
    if (!w) {
      return std::nullopt;
    }
    return group.evaluate(*w);
  }

  ReesElement rees_mult(ReesMatrix const& r, ReesElement x, ReesElement y) {
    if (x.zero || y.zero) {
      return ReesElement{};
    }
    auto p = r.entry(x.lambda, y.i);
    if (!p) {
      return ReesElement{};
    }
    size_t g = r.group.product(r.group.product(x.g, *p), y.g);
    return ReesElement{false, x.i, g, y.lambda};
  }

  namespace {
    size_t group_identity(FiniteSemigroup const& g) {
      std::vector<size_t> all(g.size());
      for (size_t x = 0; x < g.size(); ++x) {
        all[x] = x;
      }
      try {
        return check_subgroup(g, all);
      } catch (VerificationError const& e) {
        throw InputError(std::string("the group is not a group: ") + e.what());
      }
    }
  }  // namespace

  void check_rees(ReesMatrix const& r) {
    if (r.i_size == 0 || r.l_size == 0) {
      throw InputError("I and L must be non-empty");
    }
    if (r.p.size() != r.l_size) {
      throw InputError("P must have " + std::to_string(r.l_size) + " rows");
    }
    for (auto const& row : r.p) {
      if (row.size() != r.i_size) {
        throw InputError("every row of P must have " + std::to_string(r.i_size)
                         + " entries");
      }
    }
    size_t one = group_identity(r.group);
    for (size_t l = 1; l <= r.l_size; ++l) {
      bool found = false;
      for (size_t i = 1; i <= r.i_size; ++i) {
        if (r.entry(l, i)) {
          found = true;
        } else if (!r.with_zero) {
          throw InputError("P has a zero entry but there is no zero");
        }
      }
      if (!found) {
        throw InputError("row " + std::to_string(l) + " of P is zero");
      }
    }
    for (size_t i = 1; i <= r.i_size; ++i) {
      bool found = false;
      for (size_t l = 1; l <= r.l_size; ++l) {
        found = found || r.entry(l, i).has_value();
      }
      if (!found) {
        throw InputError("column " + std::to_string(i) + " of P is zero");
      }
    }
    auto p11 = r.entry(1, 1);
    if (!p11 || *p11 != one) {
      throw InputError("p_11 must be the identity of the group");
    }
  }

  namespace {
    size_t rees_index(ReesMatrix const& r, size_t i, size_t g, size_t l) {
      return ((i - 1) * r.group.size() + g) * r.l_size + (l - 1);
    }
  }  // namespace

  FiniteSemigroup rees_semigroup(ReesMatrix const& r) {
    check_rees(r);
    std::vector<ReesElement> elts;
    std::vector<std::string> names;
    for (size_t i = 1; i <= r.i_size; ++i) {
      for (size_t g = 0; g < r.group.size(); ++g) {
        for (size_t l = 1; l <= r.l_size; ++l) {
          elts.push_back(ReesElement{false, i, g, l});
          names.push_back(std::to_string(i) + "_" + r.group.name(g) + "_"
                          + std::to_string(l));
        }
      }
    }
    size_t const zero = elts.size();
    elts.push_back(ReesElement{});
    names.emplace_back("0");
    auto index = [&](ReesElement x) {
      return x.zero ? zero : rees_index(r, x.i, x.g, x.lambda);
    };
    std::vector<std::vector<size_t>> table(elts.size());
    for (size_t x = 0; x < elts.size(); ++x) {
      for (size_t y = 0; y < elts.size(); ++y) {
        table[x].push_back(index(rees_mult(r, elts[x], elts[y])));
      }
    }
    std::vector<Letter> gens;
    std::vector<size_t> values;
    std::vector<Word>   words;
    for (size_t x = 0; x < elts.size(); ++x) {
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

  ReesMatrix parse_rees(std::string_view                                   text,
                        std::function<std::string(std::string const&)> const& load) {
    ReesMatrix               r;
    std::istringstream       in{std::string(text)};
    std::string              line;
    size_t                   line_no = 0;
    std::optional<size_t>    i_size, l_size;
    std::optional<bool>      zero;
    bool                     have_group = false;
    std::vector<std::pair<size_t, std::vector<std::string>>> rows;
    bool                     in_p = false;

    auto number = [&](std::string const& tok) {
      try {
        size_t pos = 0;
        long   v   = std::stol(tok, &pos);
        if (pos != tok.size() || v <= 0) {
          throw ParseError("expected a positive integer", line_no, 1);
        }
        return static_cast<size_t>(v);
      } catch (std::logic_error const&) {
        throw ParseError("expected a positive integer", line_no, 1);
      }
    };

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
      if (in_p && toks[0].back() != ':') {
        rows.emplace_back(line_no, toks);
        continue;
      }
      in_p = false;
      auto const& key = toks[0];
      if (key == "P:") {
        if (toks.size() != 1) {
          throw ParseError("rows of P start on the next line", line_no, 1);
        }
        in_p = true;
        continue;
      }
      if (toks.size() != 2) {
        throw ParseError("expected \"" + key + " <value>\"", line_no, 1);
      }
      if (key == "group:") {
        std::string path = toks[1];
        std::string contents;
        try {
          contents = load(path);
        } catch (Error const& e) {
          throw InputError("cannot read group file " + path + ": " + e.what());
        }
        if (path.size() >= 4 && path.substr(path.size() - 4) == ".tbl") {
          r.group              = from_table(contents);
          r.group_presentation = table_presentation(r.group).first;
        } else {
          r.group_presentation = parse_presentation(contents);
          r.group              = enumerate(r.group_presentation, 100'000);
        }
        have_group = true;
      } else if (key == "I:") {
        i_size = number(toks[1]);
      } else if (key == "L:") {
        l_size = number(toks[1]);
      } else if (key == "zero:") {
        if (toks[1] != "true" && toks[1] != "false") {
          throw ParseError("expected true or false", line_no, 1);
        }
        zero = toks[1] == "true";
      } else {
        throw ParseError("unknown directive \"" + key + "\"", line_no, 1);
      }
    }
    if (!have_group || !i_size || !l_size || !zero) {
      throw ParseError("missing group:, I:, L: or zero:", line_no, 1);
    }
    if (rows.size() != *l_size) {
      throw ParseError("P must have " + std::to_string(*l_size) + " rows",
                       line_no,
                       1);
    }
    r.i_size    = *i_size;
    r.l_size    = *l_size;
    r.with_zero = *zero;
    for (auto const& [no, toks] : rows) {
      if (toks.size() != r.i_size) {
        throw ParseError("expected " + std::to_string(r.i_size) + " entries",
                         no,
                         1);
      }
      std::vector<std::optional<Word>> row;
      for (auto const& t : toks) {
        if (t == "0") {
          row.emplace_back();
        } else {
          try {
            row.emplace_back(parse_dotted_word(t, r.group_presentation));
          } catch (InputError const& e) {
            throw ParseError(e.what(), no, 1);
          }
          if (row.back()->empty()) {
            throw ParseError("entries of P are non-empty words", no, 1);
          }
        }
      }
      r.p.push_back(std::move(row));
    }
    check_rees(r);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Extension data
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string fresh_name(std::string base, std::set<std::string> const& used) {
      while (used.count(base) != 0) {
        base += "'";
      }
      return base;
    }

    HomotopyBase complete_base(Presentation const& p, char const* what) {
      auto cert = check_complete(p);
      if (!cert.complete()) {
        throw InputError(std::string("the presentation of ") + what
                         + " is not a complete rewriting system");
      }
      return critical_pair_base(p, cert);
    }

    Presentation idempotent_presentation(Letter z) {
      Presentation p;
      p.add_letter(z);
      p.add_rule({z, z}, {z});
      return p;
    }
  }  // namespace

  ExtensionData extension_data(ReesMatrix const& r) {
    ExtensionData d;
    d.s = rees_semigroup(r);
    d.in_t.assign(d.s.size(), false);
    size_t const zero = d.s.size() - 1;
    d.in_t[zero]      = true;

    std::set<std::string> used;
    for (auto a : r.group_presentation.alphabet()) {
      used.insert(name(a));
    }
    for (size_t i = 2; i <= r.i_size; ++i) {
      d.b_names.push_back(fresh_name("b" + std::to_string(i), used));
      used.insert(d.b_names.back());
    }
    for (size_t l = 2; l <= r.l_size; ++l) {
      d.c_names.push_back(fresh_name("c" + std::to_string(l), used));
      used.insert(d.c_names.back());
    }
    Letter z         = letter(fresh_name("z", used));
    d.t_presentation = idempotent_presentation(z);
    d.z_values       = {zero};
    d.t_base         = complete_base(d.t_presentation, "T");

    d.g_presentation = r.group_presentation;
    for (auto a : d.g_presentation.alphabet()) {
      d.a_values.push_back(rees_index(r, 1, r.group.generator(a), 1));
    }
    d.g_base = complete_base(d.g_presentation, "the group");

    size_t one = group_identity(r.group);
    for (size_t i = 1; i <= r.i_size; ++i) {
      d.r.push_back(rees_index(r, i, one, 1));
    }
    for (size_t l = 1; l <= r.l_size; ++l) {
      d.q.push_back(rees_index(r, 1, one, l));
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // ExtensionContext
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string element_text(FiniteSemigroup const& s, size_t x) {
      return s.name(x);
    }
  }  // namespace

  ExtensionContext::ExtensionContext(ExtensionData data, size_t node_budget)
      : _data(std::move(data)) {
    auto const& s = _data.s;
    size_t const n = s.size();
    if (_data.in_t.size() != n) {
      throw InputError("the ideal must be given for every element");
    }
    if (_data.z_values.size() != _data.t_presentation.alphabet().size()
        || _data.a_values.size() != _data.g_presentation.alphabet().size()) {
      throw InputError("every generator needs a value");
    }
    if (_data.r.empty() || _data.q.empty() || _data.r[0] != _data.q[0]) {
      throw InputError("r_1 and q_1 must be the same idempotent");
    }
    if (_data.b_names.size() + 1 != _data.r.size()
        || _data.c_names.size() + 1 != _data.q.size()) {
      throw InputError("one name is needed per index other than 1");
    }
    for (auto x : _data.z_values) {
      if (x >= n || !_data.in_t[x]) {
        throw VerificationError("a generator of T is not in T");
      }
    }
    for (auto x : _data.a_values) {
      if (x >= n || _data.in_t[x]) {
        throw VerificationError("a generator of the group lies in T");
      }
    }

    // Letters
    std::set<std::string> names;
    auto                  fresh = [&](std::string const& nm) {
      if (!names.insert(nm).second) {
        throw InputError("the letter name \"" + nm + "\" is used twice");
      }
    };
    for (size_t k = 0; k < _data.a_values.size(); ++k) {
      auto x = _data.g_presentation.alphabet()[k];
      fresh(name(x));
      _a.push_back(letter(name(x), LetterTag::A));
      _from_g.emplace(x.id, _a.back());
      _value[_a.back().id] = _data.a_values[k];
    }
    for (size_t k = 0; k < _data.b_names.size(); ++k) {
      fresh(_data.b_names[k]);
      _b.push_back(letter(_data.b_names[k], LetterTag::B));
      _value[_b.back().id] = _data.r[k + 1];
    }
    for (size_t k = 0; k < _data.c_names.size(); ++k) {
      fresh(_data.c_names[k]);
      _c.push_back(letter(_data.c_names[k], LetterTag::C));
      _value[_c.back().id] = _data.q[k + 1];
    }
    for (size_t k = 0; k < _data.z_values.size(); ++k) {
      auto x = _data.t_presentation.alphabet()[k];
      fresh(name(x));
      _z.push_back(letter(name(x), LetterTag::Z));
      _from_t.emplace(x.id, _z.back());
      _value[_z.back().id] = _data.z_values[k];
    }
    if (_z.empty()) {
      throw InputError("T must be non-empty");
    }

    // T is an ideal
    for (size_t x = 0; x < n; ++x) {
      if (!_data.in_t[x]) {
        continue;
      }
      for (size_t y = 0; y < n; ++y) {
        if (!_data.in_t[s.product(x, y)] || !_data.in_t[s.product(y, x)]) {
          throw VerificationError("T is not an ideal: " + element_text(s, x)
                                  + " times " + element_text(s, y)
                                  + " leaves T");
        }
      }
    }

    // The group H_11 generated by A, with shortlex words over A
    size_t const                     e = _data.r[0];
    std::vector<std::optional<Word>> g_word(n);
    std::deque<size_t>               queue;
    for (auto a : _a) {
      size_t x = _value.at(a.id);
      if (!g_word[x]) {
        g_word[x] = Word({a});
        queue.push_back(x);
      }
    }
    while (!queue.empty()) {
      size_t x = queue.front();
      queue.pop_front();
      for (auto a : _a) {
        size_t y = s.product(x, _value.at(a.id));
        if (!g_word[y]) {
          g_word[y] = *g_word[x] + Word({a});
          queue.push_back(y);
        }
      }
    }
    std::vector<size_t> h;
    for (size_t x = 0; x < n; ++x) {
      if (g_word[x]) {
        if (_data.in_t[x]) {
          throw VerificationError("the group meets T");
        }
        h.push_back(x);
      }
    }
    if (!g_word[e] || check_subgroup(s, h) != e) {
      throw VerificationError("the letters of A do not generate a group with "
                              "identity r_1");
    }
    _e = *g_word[e];

    // Coordinates of S \ T
    _coords.assign(n, std::nullopt);
    for (size_t i = 1; i <= _data.r.size(); ++i) {
      for (auto g : h) {
        for (size_t l = 1; l <= _data.q.size(); ++l) {
          size_t x = s.product(s.product(_data.r[i - 1], g), _data.q[l - 1]);
          if (_data.in_t[x] || _coords[x]) {
            throw VerificationError(
                "S \\ T is not a Rees matrix semigroup over the group: "
                + element_text(s, x) + " arises twice or lies in T");
          }
          _coords[x] = Classification{false, x, i, g, l};
        }
      }
    }
    for (size_t x = 0; x < n; ++x) {
      if (!_data.in_t[x] && !_coords[x]) {
        throw VerificationError("the element " + element_text(s, x)
                                + " of S \\ T has no coordinates");
      }
    }
    for (size_t i = 1; i <= _data.r.size(); ++i) {
      if (*_coords[_data.r[i - 1]] != Classification{false, _data.r[i - 1], i, e, 1}) {
        throw VerificationError("r_" + std::to_string(i)
                                + " is not (i, 1, 1)");
      }
    }
    for (size_t l = 1; l <= _data.q.size(); ++l) {
      if (*_coords[_data.q[l - 1]] != Classification{false, _data.q[l - 1], 1, e, l}) {
        throw VerificationError("q_" + std::to_string(l)
                                + " is not (1, 1, l)");
      }
    }

    // The matrix entries as words over A
    _p.assign(_data.q.size(),
              std::vector<std::optional<Word>>(_data.r.size()));
    for (size_t l = 1; l <= _data.q.size(); ++l) {
      for (size_t i = 1; i <= _data.r.size(); ++i) {
        size_t x = s.product(_data.q[l - 1], _data.r[i - 1]);
        if (!_data.in_t[x]) {
          if (!g_word[x]) {
            throw VerificationError("q_l r_i is neither in T nor in the group");
          }
          _p[l - 1][i - 1] = g_word[x];
        }
      }
    }

    // rho: shortlex least words over Z for the elements of T
    _rho.assign(n, std::nullopt);
    for (auto z : _z) {
      size_t x = _value.at(z.id);
      if (!_rho[x]) {
        _rho[x] = Word({z});
        queue.push_back(x);
      }
    }
    while (!queue.empty()) {
      size_t x = queue.front();
      queue.pop_front();
      for (auto z : _z) {
        size_t y = s.product(x, _value.at(z.id));
        if (!_rho[y]) {
          _rho[y] = *_rho[x] + Word({z});
          queue.push_back(y);
        }
      }
    }
    for (size_t x = 0; x < n; ++x) {
      if (_data.in_t[x] && !_rho[x]) {
        throw VerificationError("the letters of Z do not generate T: "
                                + element_text(s, x) + " is missing");
      }
    }

    // The presentation
    for (auto const* family : {&_a, &_b, &_c, &_z}) {
      for (auto x : *family) {
        _ps.add_letter(x);
      }
    }
    std::map<std::pair<Word, Word>, size_t> seen;
    auto add = [&](Family f, Word lhs, Word rhs) -> size_t {
      size_t lv = evaluate(lhs), rv = evaluate(rhs);
      if (lv != rv) {
        throw VerificationError("the relation " + to_string(lhs) + " = "
                                + to_string(rhs) + " fails in S: "
                                + element_text(s, lv) + " != "
                                + element_text(s, rv));
      }
      bool dedupe = f != Family::R && f != Family::Q;
      if (dedupe) {
        auto it = seen.find({lhs, rhs});
        if (it != seen.end()) {
          return it->second;
        }
      }
      size_t id = _ps.add_rule(lhs, rhs);
      _family.push_back(f);
      if (dedupe) {
        seen.emplace(std::make_pair(std::move(lhs), std::move(rhs)), id);
      }
      return id;
    };
    for (auto const& rule : _data.g_presentation.rules()) {
      add(Family::R, translate(rule.lhs, _from_g), translate(rule.rhs, _from_g));
    }
    _q_first = _ps.rules().size();
    for (auto const& rule : _data.t_presentation.rules()) {
      add(Family::Q, translate(rule.lhs, _from_t), translate(rule.rhs, _from_t));
    }
    _q_count = _ps.rules().size() - _q_first;
    for (auto b : _b) {
      add(Family::Re, Word({b}) + _e, {b});
    }
    for (auto c : _c) {
      add(Family::Re, _e + Word({c}), {c});
    }
    std::vector<Letter> abc = _a;
    abc.insert(abc.end(), _b.begin(), _b.end());
    abc.insert(abc.end(), _c.begin(), _c.end());
    for (auto x : abc) {
      for (auto z : _z) {
        _r0[{z.id, x.id, true}] = add(Family::R0, {z, x}, rho(evaluate({z, x})));
        _r0[{z.id, x.id, false}]
            = add(Family::R0, {x, z}, rho(evaluate({x, z})));
      }
    }

    // The relations of U: (lhs, p-word or nothing, suffix) per display line.
    struct Candidate {
      Word                       lhs;
      Word                       before;
      std::optional<Word> const* p;
      Word                       after;
    };
    std::vector<Candidate> cands;
    for (size_t i = 2; i <= _data.r.size(); ++i) {
      auto b = _b[i - 2];
      cands.push_back({_e + Word({b}), {}, &p(1, i), {}});
      for (auto a : _a) {
        cands.push_back({{a, b}, {a}, &p(1, i), {}});
      }
    }
    for (size_t l = 2; l <= _data.q.size(); ++l) {
      auto c = _c[l - 2];
      cands.push_back({Word({c}) + _e, {}, &p(l, 1), {}});
      for (auto a : _a) {
        cands.push_back({{c, a}, {}, &p(l, 1), {a}});
      }
    }
    for (size_t l = 2; l <= _data.q.size(); ++l) {
      for (size_t i = 2; i <= _data.r.size(); ++i) {
        cands.push_back({{_c[l - 2], _b[i - 2]}, {}, &p(l, i), {}});
      }
    }
    for (size_t l = 2; l <= _data.q.size(); ++l) {
      for (size_t m = 2; m <= _data.q.size(); ++m) {
        cands.push_back({{_c[l - 2], _c[m - 2]}, {}, &p(l, 1), {_c[m - 2]}});
      }
    }
    for (size_t i = 2; i <= _data.r.size(); ++i) {
      for (size_t j = 2; j <= _data.r.size(); ++j) {
        cands.push_back({{_b[i - 2], _b[j - 2]}, {_b[i - 2]}, &p(1, j), {}});
      }
    }
    for (auto const& c : cands) {
      if (c.p->has_value()) {
        add(Family::RU, c.lhs, c.before + **c.p + c.after);
      }
    }
    for (auto const& c : cands) {
      if (!c.p->has_value()) {
        add(Family::RT, c.lhs, rho(evaluate(c.lhs)));
      }
    }

    // Subgraphs
    std::vector<size_t> ids_gamma, ids_r0, ids_ru, ids_q, ids_r, ids_ge, ids_all;
    for (size_t id = 0; id < _family.size(); ++id) {
      auto f = _family[id];
      ids_all.push_back(id);
      if (f == Family::R0 || f == Family::RU || f == Family::RT) {
        ids_gamma.push_back(id);
      }
      if (f == Family::R0) {
        ids_r0.push_back(id);
      }
      if (f == Family::RU) {
        ids_ru.push_back(id);
      }
      if (f == Family::Q) {
        ids_q.push_back(id);
      }
      if (f == Family::R) {
        ids_r.push_back(id);
      }
      if (f == Family::R || f == Family::Re) {
        ids_ge.push_back(id);
      }
    }
    _gamma    = SubgraphFilter("Gamma", ids_gamma);
    _gamma0   = SubgraphFilter("Gamma_0", ids_r0);
    _gamma_u  = SubgraphFilter("Gamma_U", ids_ru);
    _gamma_t  = SubgraphFilter("Gamma_T", ids_q);
    _gamma_g  = SubgraphFilter("Gamma_G", ids_r);
    _gamma_ge = SubgraphFilter("Gamma_G+R_e", ids_ge);
    _gamma_s  = SubgraphFilter("Gamma_S", ids_all);

    _fixed = std::make_unique<FixedPaths>(_ps, node_budget);
  }

  Word ExtensionContext::translate(
      Word const&                                 w,
      std::unordered_map<uint32_t, Letter> const& m) const {
    Word result;
    for (auto x : w) {
      result.push_back(m.at(x.id));
    }
    return result;
  }

  size_t ExtensionContext::evaluate(Word const& w) const {
    if (w.empty()) {
      throw InputError("cannot evaluate the empty word");
    }
    size_t x = _value.at(w[0].id);
    for (size_t k = 1; k < w.size(); ++k) {
      auto it = _value.find(w[k].id);
      if (it == _value.end()) {
        throw InputError("the letter " + name(w[k]) + " is not a generator");
      }
      x = _data.s.product(x, it->second);
    }
    return x;
  }

  Word const& ExtensionContext::rho(size_t x) const {
    auto const& w = _rho.at(x);
    if (!w) {
      throw InputError("rho is only defined on T");
    }
    return *w;
  }

  size_t ExtensionContext::r0_rule(Letter z, Letter x, bool z_left) const {
    auto it = _r0.find({z.id, x.id, z_left});
    if (it == _r0.end()) {
      throw InputError("no relation between " + name(z) + " and " + name(x));
    }
    return it->second;
  }

  Classification ExtensionContext::classify(Word const& w) const {
    size_t x = evaluate(w);
    if (_data.in_t[x]) {
      return Classification{true, x, 0, 0, 0};
    }
    return *_coords[x];
  }

  QuasiNormal const& ExtensionContext::quasi_normal(Word const& w) const {
    std::lock_guard<std::mutex> lock(_mtx);
    auto                        it = _qn.find(w);
    if (it != _qn.end()) {
      return *it->second;
    }
    size_t const      bound = f_bound(*this, w);
    Word              cur   = w;
    std::vector<Edge> edges;
    while (!is_quasi_normal(*this, cur)) {
      bool has_z = std::any_of(
          cur.begin(), cur.end(), [this](Letter x) { return is_z(x); });
      auto                out = edges_from(cur, _ps, has_z ? _gamma0 : _gamma);
      std::optional<Edge> next;
      for (auto& e : out) {
        if (e.sign > 0) {
          next = std::move(e);
          break;
        }
      }
      if (!next) {
        throw VerificationError("no positive edge leaves " + to_string(cur));
      }
      if (edges.size() == bound) {
        throw VerificationError("rewriting " + to_string(w)
                                + " exceeds the measure bound");
      }
      cur = next->target();
      edges.push_back(std::move(*next));
    }
    auto qn = std::make_unique<QuasiNormal>(
        QuasiNormal{Path(w, std::move(edges)), std::move(cur)});
    return *_qn.emplace(w, std::move(qn)).first->second;
  }

  Path ExtensionContext::fixed_path(Word const&           w1,
                                    Word const&           w2,
                                    SubgraphFilter const& filter) const {
    return _fixed->get(w1, w2, filter);
  }

  Path ExtensionContext::connecting_path(Word const& w1, Word const& w2) const {
    return fixed_path(w1, w2, classify(w1).in_t ? _gamma_t : _gamma_ge);
  }

  HomotopyBase const& ExtensionContext::base_X1() const {
    std::lock_guard<std::mutex> lock(_bmtx);
    if (!_x1) {
      _x1 = std::make_unique<HomotopyBase>(squier::base_X1(*this));
    }
    return *_x1;
  }

  HomotopyBase const& ExtensionContext::base_X1prime() const {
    std::lock_guard<std::mutex> lock(_bmtx);
    if (!_x1p) {
      _x1p = std::make_unique<HomotopyBase>(squier::base_X1prime(*this));
    }
    return *_x1p;
  }

  HomotopyBase const& ExtensionContext::push_base() const {
    auto const&                 x1  = base_X1();
    auto const&                 x1p = base_X1prime();
    std::lock_guard<std::mutex> lock(_bmtx);
    if (!_push) {
      _push = std::make_unique<HomotopyBase>(x1);
      _push->append(x1p);
    }
    return *_push;
  }

  size_t ExtensionContext::x_index(Letter x) const {
    if (is_z(x)) {
      throw InputError("the letter " + name(x) + " is in Z");
    }
    return _ps.index(x);
  }

  size_t ExtensionContext::q_index(size_t rule) const {
    if (rule < _q_first || rule >= _q_first + _q_count) {
      throw InputError("relation " + std::to_string(rule) + " is not in Q");
    }
    return rule - _q_first;
  }

  namespace {
    Path embed(Path const&                                 path,
               Presentation const&                         ps,
               std::unordered_map<uint32_t, Letter> const& m,
               size_t                                      offset) {
      auto tr = [&](Word const& w) {
        Word result;
        for (auto x : w) {
          result.push_back(m.at(x.id));
        }
        return result;
      };
      std::vector<Edge> edges;
      for (auto const& e : path.edges()) {
        edges.push_back(make_edge(
            tr(e.prefix), ps.rule(e.rule.id + offset), e.sign, tr(e.suffix)));
      }
      return Path(tr(path.source()), std::move(edges));
    }
  }  // namespace

  Path ExtensionContext::embed_t(Path const& path) const {
    return embed(path, _ps, _from_t, _q_first);
  }

  Path ExtensionContext::embed_g(Path const& path) const {
    return embed(path, _ps, _from_g, 0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  GroupedPresentation build_PS(ExtensionContext const& ctx) {
    return GroupedPresentation{ctx.presentation(), ctx.families()};
  }

  bool is_quasi_normal(ExtensionContext const& ctx, Word const& w) {
    if (w.empty()) {
      return false;
    }
    size_t nz = std::count_if(
        w.begin(), w.end(), [&ctx](Letter x) { return ctx.is_z(x); });
    if (nz == w.size()) {
      return true;
    } else if (nz != 0) {
      return false;
    }
    size_t first = tag(w.front()) == LetterTag::B ? 1 : 0;
    size_t last  = w.size();
    if (last > first && tag(w.back()) == LetterTag::C) {
      --last;
    }
    for (size_t k = first; k < last; ++k) {
      if (tag(w[k]) != LetterTag::A) {
        return false;
      }
    }
    return true;
  }

  Classification dagger_readout(ExtensionContext const& ctx, Word const& w) {
    if (!is_quasi_normal(ctx, w) || ctx.is_z(w[0])) {
      throw InputError("dagger_readout needs a word in B^1 A^* C^1");
    }
    auto const& s     = ctx.oracle();
    size_t      first = 0, last = w.size(), i = 1, l = 1;
    if (tag(w.front()) == LetterTag::B) {
      auto const& b = ctx.b_letters();
      i = std::find(b.begin(), b.end(), w.front()) - b.begin() + 2;
      first = 1;
    }
    if (last > first && tag(w.back()) == LetterTag::C) {
      auto const& c = ctx.c_letters();
      l = std::find(c.begin(), c.end(), w.back()) - c.begin() + 2;
      --last;
    }
    Word   a(w.begin() + first, w.begin() + last);
    size_t g = a.empty() ? ctx.data().r[0] : ctx.evaluate(a);
    size_t x = s.product(s.product(ctx.data().r[i - 1], g), ctx.data().q[l - 1]);
    return Classification{false, x, i, g, l};
  }

  Classification classify_word(ExtensionContext const& ctx, Word const& w) {
    if (is_quasi_normal(ctx, w) && !ctx.is_z(w[0])) {
      return dagger_readout(ctx, w);
    }
    return ctx.classify(w);
  }

  FMeasure f_measure(Word const& w) {
    FMeasure f;
    for (auto x : w) {
      auto t = tag(x);
      if (t == LetterTag::B || t == LetterTag::C) {
        ++f.n;
      } else if (t == LetterTag::A) {
        ++f.m;
      }
    }
    return f;
  }

  size_t f_bound(ExtensionContext const& ctx, Word const& w) {
    size_t k = 0;
    for (auto const& rule : ctx.presentation().rules()) {
      if (ctx.gamma().allows(rule.id)) {
        k = std::max(k, f_measure(rule.rhs).m);
      }
    }
    auto f = f_measure(w);
    return f.n + f.m + f.n * k;
  }

  QuasiNormal to_quasi_normal(ExtensionContext const& ctx, Word const& w) {
    if (w.empty()) {
      throw InputError("to_quasi_normal needs a non-empty word");
    }
    return ctx.quasi_normal(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // push_through
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Word drop_front(Word const& w, size_t k) {
      return Word(w.begin() + k, w.end());
    }

    Word drop_back(Word const& w, size_t k) {
      return Word(w.begin(), w.end() - k);
    }

    Move insert_move(size_t pos, Edge e) {
      Move m;
      m.kind     = Move::Kind::h4_insert;
      m.position = pos;
      m.edge     = std::move(e);
      return m;
    }

    Move simple_move(Move::Kind kind, size_t pos) {
      Move m;
      m.kind     = kind;
      m.position = pos;
      return m;
    }
  }  // namespace

  PushThrough push_through(ExtensionContext const& ctx,
                           Word const&             u,
                           Path const&             p,
                           Word const&             v) {
    if (p.empty()) {
      throw InputError("push_through needs a non-empty path");
    }
    if (u.empty() && v.empty()) {
      throw InputError("push_through needs a non-empty context");
    }
    auto const& ps = ctx.presentation();
    for (auto const& e : p.edges()) {
      if (!ctx.gamma_t().allows(e.rule.id)) {
        throw InputError("push_through needs a path in the subgraph of T");
      }
    }
    bool const left = !u.empty();
    Letter     x    = left ? u.back() : v.front();
    Word       u1   = left ? drop_back(u, 1) : u;
    Word       v1   = left ? v : drop_front(v, 1);

    PushThrough result;
    result.u_prime = u1;
    result.v_prime = v1;
    if (ctx.is_z(x)) {
      result.p_prime = left ? act({x}, p, {}) : act({}, p, {x});
      result.q1      = Path(u + p.source() + v);
      result.q2      = Path(u + p.target() + v);
      return result;
    }

    auto const&  base    = ctx.push_base();
    size_t const x1_size = ctx.base_X1().size();

    // F_i for the vertex w (the i-th vertex of p).
    auto f_edge = [&](Word const& w) {
      if (left) {
        Letter z = w.front();
        return make_edge(
            u1, ps.rule(ctx.r0_rule(z, x, false)), 1, drop_front(w, 1) + v1);
      }
      Letter z = w.back();
      return make_edge(
          u1 + drop_back(w, 1), ps.rule(ctx.r0_rule(z, x, true)), 1, v1);
    };

    size_t const      n   = p.size();
    Path              cur = act(u, p, v);
    std::vector<Path> s_paths;
    auto              run = [&](Move const& m) {
      cur = apply_move(cur, m, base);
      result.certificate.push_back(m);
    };
    for (size_t i = 0; i < n; ++i) {
      Edge const& e   = p[i];
      size_t      pos = cur.size() - (n - i);
      bool        edge_case
          = left ? !e.prefix.empty() : !e.suffix.empty();
      if (edge_case) {
        run(insert_move(pos + 1, f_edge(p.vertex(i + 1))));
        run(simple_move(Move::Kind::h1_interchange, pos));
        if (left) {
          Word pre = ctx.rho(ctx.evaluate({x, e.prefix.front()}))
                     + drop_front(e.prefix, 1);
          s_paths.emplace_back(make_edge(pre, e.rule, e.sign, e.suffix));
        } else {
          Word suf = drop_back(e.suffix, 1)
                     + ctx.rho(ctx.evaluate({e.suffix.back(), x}));
          s_paths.emplace_back(make_edge(e.prefix, e.rule, e.sign, suf));
        }
      } else {
        Word const& from = e.rule.side(e.sign);
        Word const& to   = e.rule.side(-e.sign);
        Move        m;
        m.kind         = Move::Kind::base_replace;
        m.position     = pos;
        size_t qi      = ctx.q_index(e.rule.id);
        size_t xi      = ctx.x_index(x);
        m.pair         = (left ? 0 : x1_size) + xi * ctx.q_count() + qi;
        auto const& pr = base.pairs[m.pair];
        m.inverted     = e.sign < 0;
        m.offset       = e.sign < 0 ? pr.right.size() : 0;
        m.split        = 1;
        m.forward      = true;
        if (left) {
          m.left  = u1;
          m.right = e.suffix + v1;
          Word w1 = ctx.rho(ctx.evaluate({x, from.front()})) + drop_front(from, 1);
          Word w2 = ctx.rho(ctx.evaluate({x, to.front()})) + drop_front(to, 1);
          s_paths.push_back(
              act({}, ctx.fixed_path(w1, w2, ctx.gamma_t()), e.suffix));
        } else {
          m.left  = e.prefix;
          m.right = v1;
          Word w1 = drop_back(from, 1) + ctx.rho(ctx.evaluate({from.back(), x}));
          Word w2 = drop_back(to, 1) + ctx.rho(ctx.evaluate({to.back(), x}));
          s_paths.push_back(
              act(e.prefix, ctx.fixed_path(w1, w2, ctx.gamma_t()), {}));
        }
        run(m);
      }
      if (i > 0) {
        run(simple_move(Move::Kind::h4_cancel, pos - 1));
      }
    }
    result.q1      = Path(f_edge(p.source()));
    result.q2      = Path(f_edge(p.target()));
    result.p_prime = compose(s_paths);
    Path expected  = compose({result.q1,
                             act(result.u_prime, result.p_prime, result.v_prime),
                             invert(result.q2)});
    if (cur != expected) {
      throw VerificationError("push_through certificate does not replay");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Base families
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<Letter> abc_letters(ExtensionContext const& ctx) {
      std::vector<Letter> abc = ctx.a_letters();
      abc.insert(abc.end(), ctx.b_letters().begin(), ctx.b_letters().end());
      abc.insert(abc.end(), ctx.c_letters().begin(), ctx.c_letters().end());
      return abc;
    }

    std::vector<size_t> q_rules(ExtensionContext const& ctx) {
      std::vector<size_t> ids;
      for (size_t id = 0; id < ctx.families().size(); ++id) {
        if (ctx.family(id) == Family::Q) {
          ids.push_back(id);
        }
      }
      return ids;
    }
  }  // namespace

  HomotopyBase base_X1(ExtensionContext const& ctx) {
    auto const&  ps = ctx.presentation();
    HomotopyBase result;
    for (auto x : abc_letters(ctx)) {
      for (auto id : q_rules(ctx)) {
        auto const& rule = ps.rule(id);
        Letter      z = rule.lhs.front(), z1 = rule.rhs.front();
        Word        l1 = drop_front(rule.lhs, 1), r1 = drop_front(rule.rhs, 1);
        Word        t  = ctx.rho(ctx.evaluate({x, z}));
        Word        t1 = ctx.rho(ctx.evaluate({x, z1}));
        Path left(make_edge({x}, rule, 1, {}));
        Path right = compose(
            {Path(make_edge({}, ps.rule(ctx.r0_rule(z, x, false)), 1, l1)),
             ctx.fixed_path(t + l1, t1 + r1, ctx.gamma_t()),
             Path(make_edge({}, ps.rule(ctx.r0_rule(z1, x, false)), -1, r1))});
        result.add(std::move(left), std::move(right));
      }
    }
    return result;
  }

  HomotopyBase base_X1prime(ExtensionContext const& ctx) {
    auto const&  ps = ctx.presentation();
    HomotopyBase result;
    for (auto x : abc_letters(ctx)) {
      for (auto id : q_rules(ctx)) {
        auto const& rule = ps.rule(id);
        Letter      z = rule.lhs.back(), z1 = rule.rhs.back();
        Word        l1 = drop_back(rule.lhs, 1), r1 = drop_back(rule.rhs, 1);
        Word        s  = ctx.rho(ctx.evaluate({z, x}));
        Word        s1 = ctx.rho(ctx.evaluate({z1, x}));
        Path left(make_edge({}, rule, 1, {x}));
        Path right = compose(
            {Path(make_edge(l1, ps.rule(ctx.r0_rule(z, x, true)), 1, {})),
             ctx.fixed_path(l1 + s, r1 + s1, ctx.gamma_t()),
             Path(make_edge(r1, ps.rule(ctx.r0_rule(z1, x, true)), -1, {}))});
        result.add(std::move(left), std::move(right));
      }
    }
    return result;
  }

  HomotopyBase base_X2(ExtensionContext const& ctx) {
    auto const&       ps = ctx.presentation();
    std::vector<Word> context = {Word()};
    for (auto x : ps.alphabet()) {
      context.push_back({x});
    }
    HomotopyBase result;
    for (auto const& rule : ps.rules()) {
      for (int sign : {1, -1}) {
        for (auto const& alpha : context) {
          for (auto const& beta : context) {
            Edge        e   = make_edge(alpha, rule, sign, beta);
            auto const& pi  = ctx.quasi_normal(e.source());
            auto const& pt  = ctx.quasi_normal(e.target());
            Path        q   = ctx.connecting_path(pi.word, pt.word);
            result.add(Path(e), compose({pi.path, q, invert(pt.path)}));
          }
        }
      }
    }
    return result;
  }

  HomotopyBase base_X3(ExtensionContext const& ctx, size_t word_budget) {
    auto const&  ps    = ctx.presentation();
    size_t const bound = 2 * ctx.e().size() + 3;
    size_t const k     = ps.alphabet().size();
    size_t       total = 0, layer = 1;
    for (size_t len = 1; len <= bound; ++len) {
      layer *= k;
      total += layer;
      if (total > word_budget) {
        throw InconclusiveError("X3 needs more than " + std::to_string(word_budget)
                                + " words; raise the word budget");
      }
    }
    HomotopyBase result;
    for (auto const& w : words_up_to(ps.alphabet(), bound)) {
      std::vector<Edge> pos;
      for (auto& e : edges_from(w, ps, ctx.gamma())) {
        if (e.sign > 0) {
          pos.push_back(std::move(e));
        }
      }
      for (auto const& e1 : pos) {
        auto const& p1 = ctx.quasi_normal(e1.target());
        for (auto const& e2 : pos) {
          auto const& p2 = ctx.quasi_normal(e2.target());
          Path        q  = ctx.connecting_path(p1.word, p2.word);
          result.add(compose({Path(e1), p1.path, q}),
                     compose(Path(e2), p2.path));
        }
      }
    }
    return result;
  }

  namespace {
    size_t find_rule(Presentation const& p, Word const& lhs, Word const& rhs) {
      for (auto const& rule : p.rules()) {
        if (rule.lhs == lhs && rule.rhs == rhs) {
          return rule.id;
        }
      }
      throw VerificationError("missing relation " + to_string(lhs) + " = "
                              + to_string(rhs));
    }
  }  // namespace

  HomotopyBase base_Xe(ExtensionContext const& ctx) {
    auto const&  ps = ctx.presentation();
    HomotopyBase result;
    for (auto b : ctx.b_letters()) {
      for (auto c : ctx.c_letters()) {
        auto const& ec = ps.rule(find_rule(ps, ctx.e() + Word({c}), {c}));
        auto const& be = ps.rule(find_rule(ps, Word({b}) + ctx.e(), {b}));
        result.add(Path(make_edge({b}, ec, 1, {})),
                   Path(make_edge({}, be, 1, {c})));
      }
    }
    return result;
  }

  HomotopyBase AssembledBase::all() const {
    HomotopyBase result;
    for (auto const* x : {&x1, &x1prime, &x2, &x3, &xe, &xg, &xt}) {
      result.append(*x);
    }
    return result;
  }

  namespace {
    void check_family(HomotopyBase const& x,
                      Presentation const& p,
                      char const*         what) {
      auto report = validate_base(x, p);
      for (size_t k = 0; k < report.failures.size(); ++k) {
        if (!report.failures[k].empty()) {
          throw VerificationError(std::string(what) + " pair "
                                  + std::to_string(k)
                                  + " is invalid: " + report.failures[k]);
        }
      }
    }
  }  // namespace

  AssembledBase assemble_X(ExtensionContext const& ctx, size_t word_budget) {
    auto const&   ps = ctx.presentation();
    AssembledBase x;
    x.x1      = ctx.base_X1();
    x.x1prime = ctx.base_X1prime();
    x.x2      = base_X2(ctx);
    x.x3      = base_X3(ctx, word_budget);
    x.xe      = base_Xe(ctx);
    for (auto const& pr : ctx.data().g_base.pairs) {
      x.xg.add(ctx.embed_g(pr.left), ctx.embed_g(pr.right));
    }
    for (auto const& pr : ctx.data().t_base.pairs) {
      x.xt.add(ctx.embed_t(pr.left), ctx.embed_t(pr.right));
    }
    check_family(x.x1, ps, "X1");
    check_family(x.x1prime, ps, "X1'");
    check_family(x.x2, ps, "X2");
    check_family(x.x3, ps, "X3");
    check_family(x.xe, ps, "Xe");
    check_family(x.xg, ps, "XG");
    check_family(x.xt, ps, "XT");
    return x;
  }

  ////////////////////////////////////////////////////////////////////////
  // Zero
  ////////////////////////////////////////////////////////////////////////

  Presentation adjoin_zero(Presentation const& p, Letter zero) {
    Presentation result = p;
    result.add_letter(zero);
    for (auto a : p.alphabet()) {
      result.add_rule({a, zero}, {zero});
      result.add_rule({zero, a}, {zero});
    }
    result.add_rule({zero, zero}, {zero});
    return result;
  }

  Restricted restrict_base(HomotopyBase const& x,
                           Presentation const& p,
                           Letter              zero) {
    auto has_zero = [zero](Word const& w) {
      return std::find(w.begin(), w.end(), zero) != w.end();
    };
    Restricted          result;
    std::vector<size_t> new_id(p.rules().size(), p.rules().size());
    for (auto a : p.alphabet()) {
      if (a != zero) {
        result.presentation.add_letter(a);
      }
    }
    for (auto const& rule : p.rules()) {
      if (!has_zero(rule.lhs) && !has_zero(rule.rhs)) {
        new_id[rule.id] = result.presentation.add_rule(rule.lhs, rule.rhs);
      }
    }
    auto restrict = [&](Path const& path) {
      std::vector<Edge> edges;
      for (auto const& e : path.edges()) {
        if (new_id[e.rule.id] == p.rules().size()) {
          throw VerificationError("a pair avoiding zero passes through it");
        }
        edges.push_back(make_edge(e.prefix,
                                  result.presentation.rule(new_id[e.rule.id]),
                                  e.sign,
                                  e.suffix));
      }
      return Path(path.source(), std::move(edges));
    };
    for (auto const& pr : x.pairs) {
      if (!has_zero(pr.left.source())) {
        result.base.add(restrict(pr.left), restrict(pr.right));
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite regular semigroups
  ////////////////////////////////////////////////////////////////////////

  void check_regular(FiniteSemigroup const& s) {
    for (size_t x = 0; x < s.size(); ++x) {
      bool found = false;
      for (size_t y = 0; y < s.size() && !found; ++y) {
        found = s.product(s.product(x, y), x) == x;
      }
      if (!found) {
        throw VerificationError("the element " + s.name(x)
                                + " is not regular");
      }
    }
  }

  namespace {
    // The letters of p mapped to elements of s; checks that p presents s.
    void check_presents(Presentation const&        p,
                        std::vector<size_t> const& values,
                        FiniteSemigroup const&     s) {
      FiniteSemigroup t;
      try {
        t = enumerate(p, s.size());
      } catch (InputError const&) {
        throw VerificationError("the presentation defines more than "
                                + std::to_string(s.size()) + " elements");
      }
      std::unordered_map<uint32_t, size_t> value;
      for (size_t k = 0; k < values.size(); ++k) {
        value[p.alphabet()[k].id] = values[k];
      }
      std::vector<size_t> phi(t.size());
      std::vector<bool>   hit(s.size(), false);
      for (size_t k = 0; k < t.size(); ++k) {
        auto const& w = t.word(k);
        size_t      x = value.at(w[0].id);
        for (size_t j = 1; j < w.size(); ++j) {
          x = s.product(x, value.at(w[j].id));
        }
        phi[k] = x;
        hit[x] = true;
      }
      if (t.size() != s.size()
          || std::find(hit.begin(), hit.end(), false) != hit.end()) {
        throw VerificationError("the presentation defines "
                                + std::to_string(t.size())
                                + " elements, expected "
                                + std::to_string(s.size()));
      }
      for (size_t a = 0; a < t.size(); ++a) {
        for (size_t b = 0; b < t.size(); ++b) {
          if (phi[t.product(a, b)] != s.product(phi[a], phi[b])) {
            throw VerificationError("the presentation does not define the "
                                    "input semigroup");
          }
        }
      }
    }

    FdtResult fdt(FiniteSemigroup const& s, FdtOptions const& opts) {
      check_regular(s);
      auto   g = green(s);
      size_t top = g.J.classes.size();
      for (size_t k = 0; k < g.J.classes.size() && top == g.J.classes.size();
           ++k) {
        size_t x       = g.J.classes[k][0];
        bool   maximal = true;
        for (size_t y = 0; y < s.size(); ++y) {
          if (g.leq_J[x][y] && !g.J.same(x, y)) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          top = k;
        }
      }
      std::vector<size_t> const& jm = g.J.classes[top];
      std::vector<bool>          in_j(s.size(), false);
      for (auto x : jm) {
        in_j[x] = true;
      }

      ExtensionData d;
      std::optional<Letter> zero;
      if (jm.size() == s.size()) {
        // Adjoin a zero and take T to be the zero.
        std::set<std::string> used(s.names().begin(), s.names().end());
        std::string           zname = fresh_name("0", used);
        size_t const          n     = s.size();
        std::vector<std::vector<size_t>> table(n + 1,
                                               std::vector<size_t>(n + 1, n));
        for (size_t x = 0; x < n; ++x) {
          for (size_t y = 0; y < n; ++y) {
            table[x][y] = s.product(x, y);
          }
        }
        auto names = s.names();
        names.push_back(zname);
        std::vector<Letter> gens;
        std::vector<size_t> values;
        std::vector<Word>   words;
        for (size_t x = 0; x <= n; ++x) {
          gens.push_back(letter(names[x]));
          values.push_back(x);
          words.push_back({gens.back()});
        }
        d.s = FiniteSemigroup(
            names, std::move(table), std::move(gens), values, std::move(words));
        d.in_t.assign(n + 1, false);
        d.in_t[n]        = true;
        zero             = letter(zname);
        d.t_presentation = idempotent_presentation(*zero);
        d.z_values       = {n};
        d.t_base         = complete_base(d.t_presentation, "T");
        zero             = letter(zname, LetterTag::Z);
      } else {
        std::vector<size_t> t;
        for (size_t x = 0; x < s.size(); ++x) {
          if (!in_j[x]) {
            t.push_back(x);
          }
        }
        auto rec = fdt(s.restriction(t), opts);
        d.s      = s;
        d.in_t.assign(s.size(), true);
        for (auto x : jm) {
          d.in_t[x] = false;
        }
        d.t_presentation = std::move(rec.presentation);
        d.t_base         = std::move(rec.base);
        for (auto v : rec.values) {
          d.z_values.push_back(t[v]);
        }
      }

      // The Rees structure of the maximal J-class.
      size_t e = s.size();
      for (auto x : jm) {
        if (s.is_idempotent(x)) {
          e = x;
          break;
        }
      }
      if (e == s.size()) {
        throw VerificationError("a regular J-class without an idempotent");
      }
      auto classes = [&](Partition const& part) {
        std::vector<std::vector<size_t>> result;
        result.push_back(part.classes[part.class_of[e]]);
        for (auto const& c : part.classes) {
          if (in_j[c[0]] && !part.same(c[0], e)) {
            result.push_back(c);
          }
        }
        return result;
      };
      auto rs = classes(g.R);
      auto ls = classes(g.L);
      auto meet_min = [&](std::vector<size_t> const& a,
                          std::vector<size_t> const& b) {
        for (auto x : a) {
          if (std::find(b.begin(), b.end(), x) != b.end()) {
            return x;
          }
        }
        throw VerificationError("an R-class misses an L-class in a regular "
                                "J-class");
      };
      std::vector<size_t> h = g.H.classes[g.H.class_of[e]];
      auto                grp = s.restriction(h);
      auto [gp, cert]         = table_presentation(grp);
      if (!cert.complete()) {
        throw VerificationError("the table presentation of the group is not "
                                "complete");
      }
      d.g_presentation = gp;
      d.g_base         = critical_pair_base(gp, cert);
      d.a_values       = h;
      d.r.push_back(e);
      for (size_t i = 1; i < rs.size(); ++i) {
        d.r.push_back(meet_min(rs[i], ls[0]));
        d.b_names.push_back(s.name(d.r.back()));
      }
      d.q.push_back(e);
      for (size_t l = 1; l < ls.size(); ++l) {
        d.q.push_back(meet_min(rs[0], ls[l]));
        d.c_names.push_back(s.name(d.q.back()));
      }

      ExtensionContext ctx(std::move(d), opts.node_budget);
      auto             x = assemble_X(ctx, opts.word_budget).all();

      FdtResult result;
      if (zero) {
        auto r              = restrict_base(x, ctx.presentation(), *zero);
        result.presentation = std::move(r.presentation);
        result.base         = std::move(r.base);
      } else {
        result.presentation = ctx.presentation();
        result.base         = std::move(x);
      }
      for (auto a : result.presentation.alphabet()) {
        result.values.push_back(ctx.evaluate({a}));
      }
      auto report = validate_base(result.base, result.presentation);
      if (!report.ok()) {
        throw VerificationError("the assembled base fails validation");
      }
      check_presents(result.presentation, result.values, s);
      return result;
    }
  }  // namespace

  FdtResult fdt_base_finite_regular(FiniteSemigroup const& s,
                                    FdtOptions const&      opts) {
    return fdt(s, opts);
  }

}  // namespace squier
