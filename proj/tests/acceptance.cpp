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

// Acceptance runner. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails.
//
//   acceptance --work-dir DIR      run criteria 1-9, writing outputs to DIR
//   acceptance --emit DIR          only write the outputs of criteria 1-8

#include <algorithm>   // for sort
#include <chrono>      // for steady_clock
#include <cstddef>     // for size_t
#include <cstdlib>     // for system
#include <exception>   // for exception
#include <filesystem>  // for path
#include <functional>  // for function
#include <iostream>    // for cout
#include <memory>      // for unique_ptr
#include <random>      // for mt19937
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "squier/exception.hpp"
#include "squier/extension.hpp"
#include "squier/io.hpp"
#include "squier/subgroup.hpp"

namespace fs = std::filesystem;

namespace squier {
  namespace {

    std::string data(std::string const& name) {
      return read_file(std::string(SQUIER_TEST_DATA) + "/" + name);
    }

    struct Outcome {
      bool        pass = true;
      std::string detail;
      // name -> contents, compared byte for byte by criterion 9
      std::vector<std::pair<std::string, std::string>> files;

      void check(bool cond, std::string const& what) {
        if (!cond && pass) {
          pass   = false;
          detail = what;
        }
      }
    };

    ////////////////////////////////////////////////////////////////////////
    // Fixtures
    ////////////////////////////////////////////////////////////////////////

    struct Fix2 {
      Presentation                  p;
      FiniteSemigroup               s;
      Letter                        a;
      std::vector<size_t>           g;
      std::unique_ptr<CosetContext> ctx;

      Fix2() : p(parse_presentation(data("fix2.sgp"))), s(enumerate(p, 100)) {
        a = p.alphabet()[0];
        g = {s.evaluate(Word(2, a)), s.evaluate(Word(4, a))};
        std::sort(g.begin(), g.end());
        ctx = std::make_unique<CosetContext>(p, s, g);
      }
    };

    ReesMatrix fix3() {
      return parse_rees(data("fix3.rees"),
                        [](std::string const& f) { return data(f); });
    }

    // Matrix units of B2 with zero, independent of the library: e_{i l} is
    // 2 (i - 1) + (l - 1) and the zero is 4.
    size_t unit_product(size_t x, size_t y) {
      if (x == 4 || y == 4) {
        return 4;
      }
      return x % 2 == y / 2 ? 2 * (x / 2) + y % 2 : 4;
    }

    size_t unit_of(Word const& w) {
      size_t x = 0;
      for (size_t k = 0; k < w.size(); ++k) {
        auto const& nm = name(w[k]);
        size_t      y  = nm == "a" ? 0 : nm == "b2" ? 2 : nm == "c2" ? 1 : 4;
        x              = k == 0 ? y : unit_product(x, y);
      }
      return x;
    }

    Word phi_psi(CosetContext const& ctx, Word const& w) {
      return phi_word(ctx, 1, psi_word(ctx, w));
    }

    ////////////////////////////////////////////////////////////////////////
    // Criteria
    ////////////////////////////////////////////////////////////////////////

    Outcome criterion1() {
      Outcome     out;
      Fix2        f;
      auto const& q = f.ctx->subgroup_presentation().presentation;
      out.check(q.alphabet().size() == 2, "|B| != 2");
      out.check(q.rules().size() == 4, "|U| != 4");
      auto t = enumerate(q, 100);
      out.check(t.size() == 2, "the output does not have 2 elements");
      out.check(isomorphic(t, f.s.restriction(f.g)),
                "the output is not isomorphic to {a^2, a^4}");
      out.files.emplace_back("c1_subgroup.sgp", to_string(q));
      out.detail = "|B| = " + std::to_string(q.alphabet().size())
                   + ", |U| = " + std::to_string(q.rules().size())
                   + ", |<B|U>| = " + std::to_string(t.size());
      return out;
    }

    Outcome criterion2() {
      Outcome     out;
      Fix2        f;
      auto const& ctx = *f.ctx;
      auto const& q   = ctx.subgroup_presentation().presentation;
      auto        x   = critical_pair_base(f.p, check_complete(f.p));
      auto        kw  = base_KW(ctx, x);
      auto        all = kw.both();
      out.check(validate_base(all, q).ok(), "K u W fails validation");
      for (auto const& pr : all.pairs) {
        out.check(is_closed(pr.left) && pr.right.empty(),
                  "K u W has a path that is not closed");
      }
      size_t contract = 0, triangle = 0, split = 0;
      auto   words    = words_up_to(q.alphabet(), 4);
      for (auto const& w : words) {
        Path l = lambda_path(ctx, w);
        out.check(l.source() == w && l.target() == phi_psi(ctx, w),
                  "Lambda endpoint contract fails at " + to_string(w));
        ++contract;
        for (auto const& e : edges_from(w, q, SubgraphFilter::all(q))) {
          Edge er  = make_edge({}, e.rule, 1, {});
          Path lhs = phi_path(ctx, 1, psi_path(ctx, Path(e)));
          Path mid = phi_path(
              ctx, 1, psi_path(ctx, Path(e.sign > 0 ? er : er.inverse())));
          Path rhs
              = act(phi_psi(ctx, e.prefix), mid, phi_psi(ctx, e.suffix));
          out.check(lhs == rhs, "triangle fails at " + to_string(e));
          ++triangle;
        }
        for (size_t i = 1; i < w.size(); ++i) {
          for (size_t j = i + 1; j < w.size(); ++j) {
            Word w1(w.begin(), w.begin() + i), w2(w.begin() + i, w.begin() + j),
                w3(w.begin() + j, w.end());
            Path rhs = compose({act({}, lambda_path(ctx, w1), w2 + w3),
                                act(phi_psi(ctx, w1), lambda_path(ctx, w2), w3),
                                act(phi_psi(ctx, w1) + phi_psi(ctx, w2),
                                    lambda_path(ctx, w3),
                                    {})});
            out.check(l == rhs, "split fails at " + to_string(w));
            ++split;
          }
        }
      }
      out.files.emplace_back("c2_base_kw.hb", to_string(all));
      if (out.pass) {
        out.detail = "|K| = " + std::to_string(kw.K.size())
                     + ", |W| = " + std::to_string(kw.W.size()) + ", "
                     + std::to_string(contract) + " Lambda, "
                     + std::to_string(triangle) + " triangle and "
                     + std::to_string(split) + " split checks";
      }
      return out;
    }

    Outcome criterion3() {
      Outcome     out;
      Fix2        f;
      auto const& ctx = *f.ctx;
      auto        ws  = words_up_to(f.p.alphabet(), 5);
      ws.insert(ws.begin(), Word());
      size_t n1 = 0, n2 = 0, n3 = 0;
      for (size_t i = 1; i <= ctx.index(); ++i) {
        for (auto const& w1 : ws) {
          size_t j = ctx.act(i, w1);
          for (auto const& w2 : ws) {
            if (ctx.act(i, w1 + w2) == 0) {
              continue;
            }
            out.check(phi_word(ctx, i, w1 + w2)
                          == phi_word(ctx, i, w1) + phi_word(ctx, j, w2),
                      "phi(i, uv) != phi(i, u) phi(iu, v)");
            ++n1;
          }
        }
      }
      for (auto const& w3 : ws) {
        if (!w3.empty() && !lang_membership(w3, f.g, f.s)) {
          continue;
        }
        for (auto const& w4 : ws) {
          if (!w4.empty() && !lang_membership(w4, f.g, f.s)) {
            continue;
          }
          out.check(phi_word(ctx, 1, w3 + w4)
                        == phi_word(ctx, 1, w3) + phi_word(ctx, 1, w4),
                    "phi(uv) != phi(u) phi(v) on G");
          ++n2;
        }
      }
      // every path of at most two edges starting at a word of length <= 5
      std::vector<Path> paths;
      auto              all = SubgraphFilter::all(f.p);
      for (auto const& w : ws) {
        if (w.empty()) {
          continue;
        }
        paths.emplace_back(w);
        for (auto const& e1 : edges_from(w, f.p, all)) {
          paths.emplace_back(e1);
          for (auto const& e2 : edges_from(e1.target(), f.p, all)) {
            paths.push_back(compose(Path(e1), Path(e2)));
          }
        }
      }
      for (size_t i = 1; i <= ctx.index(); ++i) {
        for (auto const& p : paths) {
          for (auto const& w1 : ws) {
            size_t j = ctx.act(i, w1);
            size_t k = ctx.act(j, p.source());
            for (auto const& w2 : ws) {
              if (ctx.act(k, w2) == 0) {
                continue;
              }
              Path lhs = phi_path(ctx, i, act(w1, p, w2));
              Path rhs = act(
                  phi_word(ctx, i, w1), phi_path(ctx, j, p), phi_word(ctx, k, w2));
              out.check(lhs == rhs, "phi(i, u p v) does not factor at " + to_string(p));
              ++n3;
            }
          }
        }
      }
      if (out.pass) {
        out.detail = std::to_string(n1) + " + " + std::to_string(n2) + " + "
                     + std::to_string(n3) + " instances, 0 violations";
      }
      return out;
    }

    Outcome criterion4() {
      Outcome          out;
      auto             r = fix3();
      ExtensionContext ctx(extension_data(r));
      auto             g = build_PS(ctx);
      auto const&      p = g.presentation;
      auto             s = enumerate(p, 100);
      out.check(s.size() == 5, "P_S does not have 5 elements");
      out.check(isomorphic(s, rees_semigroup(r)),
                "P_S is not isomorphic to the Rees matrix semigroup");
      for (auto const& rule : p.rules()) {
        out.check(unit_of(rule.lhs) == unit_of(rule.rhs),
                  "relation " + to_string(rule.lhs) + " = " + to_string(rule.rhs)
                      + " fails in B2");
        out.check(ctx.evaluate(rule.lhs) == ctx.evaluate(rule.rhs),
                  "relation fails in the oracle");
      }
      std::string text = to_string(p);
      out.files.emplace_back("c4_ps.sgp", text);
      if (out.pass) {
        out.detail = std::to_string(p.rules().size())
                     + " relations checked, 5 elements";
      }
      return out;
    }

    Outcome criterion5() {
      Outcome          out;
      ExtensionContext ctx(extension_data(fix3()));
      auto const&      p = ctx.presentation();
      auto const&      A = p.alphabet();
      std::vector<size_t> gamma_rules;
      for (auto const& r : p.rules()) {
        if (ctx.gamma().allows(r.id)) {
          gamma_rules.push_back(r.id);
          out.check(f_measure(r.rhs) < f_measure(r.lhs),
                    "F does not decrease on " + to_string(r.lhs));
        }
      }
      std::mt19937 rng(20240611);
      auto         rand_word = [&](size_t max) {
        Word w(std::uniform_int_distribution<size_t>(0, max)(rng));
        for (auto& x : w) {
          x = A[std::uniform_int_distribution<size_t>(0, A.size() - 1)(rng)];
        }
        return w;
      };
      for (size_t k = 0; k < 1000; ++k) {
        Word u = rand_word(4), v = rand_word(4);
        auto const& r = p.rule(gamma_rules[std::uniform_int_distribution<size_t>(
            0, gamma_rules.size() - 1)(rng)]);
        Edge e = make_edge(u, r, 1, v);
        out.check(f_measure(e.target()) < f_measure(e.source()),
                  "F does not decrease on " + to_string(e));
        out.check(f_measure(e.source())
                      == f_measure(u) + f_measure(r.lhs) + f_measure(v),
                  "F is not additive");
      }
      std::vector<std::string> lines;
      size_t                   words = 0;
      for (auto const& w : words_up_to(A, 6)) {
        bool all_z = true;
        for (auto x : w) {
          all_z = all_z && ctx.is_z(x);
        }
        out.check((f_measure(w) == FMeasure{0, 0}) == all_z,
                  "F vanishes off Z^+");
        auto q = to_quasi_normal(ctx, w);
        out.check(q.path.source() == w && q.path.target() == q.word,
                  "bad quasi-normal path");
        out.check(is_positive(q.path), "quasi-normal path not positive");
        out.check(q.path.size() <= f_bound(ctx, w),
                  "more than F-bound steps at " + to_string(w));
        out.check(is_quasi_normal(ctx, q.word), "not quasi-normal");
        bool has_z = false;
        for (auto x : w) {
          has_z = has_z || ctx.is_z(x);
        }
        for (auto const& e : q.path.edges()) {
          out.check(ctx.gamma().allows(e.rule.id), "edge outside Gamma");
          out.check(!has_z || ctx.gamma0().allows(e.rule.id),
                    "edge outside Gamma_0");
        }
        out.check(unit_of(q.word) == unit_of(w), "element changed");
        if (w.size() <= 3) {
          lines.push_back(to_string(w, ".") + " -> " + to_string(q.path));
        }
        ++words;
      }
      std::string text;
      for (auto const& l : lines) {
        text += l + "\n";
      }
      out.files.emplace_back("c5_quasi_normal.txt", text);
      if (out.pass) {
        out.detail = std::to_string(gamma_rules.size()) + " rules, 1000 edges, "
                     + std::to_string(words) + " words";
      }
      return out;
    }

    Outcome criterion6() {
      Outcome          out;
      ExtensionContext ctx(extension_data(fix3()));
      auto const&      p = ctx.presentation();
      auto             x = assemble_X(ctx);
      std::pair<char const*, HomotopyBase const*> fams[]
          = {{"X1", &x.x1},
             {"X1'", &x.x1prime},
             {"X2", &x.x2},
             {"X3", &x.x3},
             {"Xe", &x.xe}};
      std::string sizes;
      for (auto const& [nm, b] : fams) {
        out.check(validate_base(*b, p).ok(), std::string(nm) + " fails validation");
        sizes += std::string(sizes.empty() ? "" : ", ") + "|" + nm
                 + "| = " + std::to_string(b->size());
      }
      out.check(x.xe.size() == 1, "|Xe| != 1");
      size_t bound = 2 * ctx.e().size() + 3;
      out.check(bound == 5, "2|e| + 3 != 5");
      for (auto const& pr : x.x3.pairs) {
        out.check(pr.left.source().size() <= bound, "X3 exceeds the bound");
      }
      out.files.emplace_back("c6_x.hb", to_string(x.all()));
      if (out.pass) {
        out.detail = sizes;
      }
      return out;
    }

    Outcome criterion7() {
      Outcome      out;
      Fix2         f;
      auto const&  ctx  = *f.ctx;
      auto         x    = critical_pair_base(f.p, check_complete(f.p));
      auto         base = base_KW(ctx, x).both();
      size_t       per_kind[3] = {0, 0, 0}, certified = 0, inconclusive = 0;
      std::string  text;
      base_Z(ctx, x, 4, [&](ZKind k, Path const& c) {
        auto kind = static_cast<size_t>(k);
        if (per_kind[kind] == 15) {
          return per_kind[0] + per_kind[1] + per_kind[2] < 45;
        }
        ++per_kind[kind];
        auto res = homotopic_bounded(c, Path(c.source()), base, 10'000);
        text += "z" + std::to_string(kind + 1) + " " + to_string(c) + " : ";
        if (res.equivalent()) {
          Path cur = c;
          for (auto const& m : res.certificate) {
            cur = apply_move(cur, m, base);
          }
          out.check(cur == Path(c.source()), "certificate does not replay");
          ++certified;
          text += "certified, " + std::to_string(res.certificate.size())
                  + " moves\n";
        } else {
          ++inconclusive;
          text += "inconclusive\n";
        }
        return true;
      });
      out.check(certified >= 10, "fewer than 10 paths certified");
      out.files.emplace_back("c7_certificates.txt", text);
      out.detail = std::to_string(certified) + " certified, "
                   + std::to_string(inconclusive) + " inconclusive";
      return out;
    }

    Outcome criterion8(fs::path const& dir) {
      Outcome out;
      for (auto [nm, size] : {std::pair{"b2", 5}, std::pair{"t2", 4}}) {
        auto s   = from_table(data(std::string(nm) + ".tbl"));
        auto res = fdt_base_finite_regular(s);
        auto sgp = to_string(res.presentation);
        auto hb  = to_string(res.base);
        // the same route as the verify-base command
        write_file_atomic((dir / (std::string("c8_") + nm + ".sgp")).string(), sgp);
        write_file_atomic((dir / (std::string("c8_") + nm + ".hb")).string(), hb);
        auto p = parse_presentation(
            read_file((dir / (std::string("c8_") + nm + ".sgp")).string()));
        auto b = parse_base(
            read_file((dir / (std::string("c8_") + nm + ".hb")).string()), p);
        out.check(validate_base(b, p).ok(),
                  std::string(nm) + ": verify-base fails");
        auto t = enumerate(p, 1000);
        out.check(t.size() == size_t(size),
                  std::string(nm) + ": wrong number of elements");
        out.check(isomorphic(s, t), std::string(nm) + ": not isomorphic");
        if (out.pass) {
          out.detail += std::string(out.detail.empty() ? "" : "; ") + nm + ": "
                        + std::to_string(p.rules().size()) + " relations, "
                        + std::to_string(b.size()) + " pairs, "
                        + std::to_string(t.size()) + " elements";
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Driver
    ////////////////////////////////////////////////////////////////////////

    struct Criterion {
      int                                    nr;
      char const*                            what;
      double                                 limit;  // seconds
      std::function<Outcome(fs::path const&)> run;
    };

    std::vector<Criterion> criteria() {
      auto wrap = [](Outcome (*f)()) {
        return [f](fs::path const&) { return f(); };
      };
      return {{1, "subgroup presentation of <a | a^5 = a>", 1, wrap(criterion1)},
              {2, "subgroup base K u W, Lambda, triangle, split", 5, wrap(criterion2)},
              {3, "phi identities on words and paths", 10, wrap(criterion3)},
              {4, "presentation of B2 as a Rees matrix semigroup", 1, wrap(criterion4)},
              {5, "measure F and quasi-normal forms", 10, wrap(criterion5)},
              {6, "base families X1, X1', X2, X3, Xe", 30, wrap(criterion6)},
              {7, "homotopy certificates for Z", 60, wrap(criterion7)},
              {8, "finite regular semigroups B2 and T2", 60, criterion8}};
    }

    // Runs criteria 1-8, writing their outputs to dir. Returns the outcomes
    // and the elapsed times.
    std::vector<std::pair<Outcome, double>> run_all(fs::path const& dir) {
      fs::create_directories(dir);
      std::vector<std::pair<Outcome, double>> result;
      for (auto const& c : criteria()) {
        auto    t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
          out = c.run(dir);
        } catch (std::exception const& e) {
          out.pass   = false;
          out.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        for (auto const& [nm, text] : out.files) {
          write_file_atomic((dir / nm).string(), text);
        }
        result.emplace_back(std::move(out), secs);
      }
      return result;
    }

    std::vector<std::string> output_names(fs::path const& dir) {
      std::vector<std::string> result;
      for (auto const& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file()) {
          result.push_back(e.path().filename().string());
        }
      }
      std::sort(result.begin(), result.end());
      return result;
    }

    int run(std::string const& self, fs::path const& work) {
      auto   crit    = criteria();
      auto   results = run_all(work / "run1");
      bool   all     = true;
      for (size_t k = 0; k < crit.size(); ++k) {
        auto const& [out, secs] = results[k];
        bool pass               = out.pass && secs < crit[k].limit;
        all                     = all && pass;
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (pass ? "PASS" : "FAIL") << " criterion "
             << crit[k].nr << ": " << crit[k].what << " (" << secs << " s, limit "
             << crit[k].limit << " s): " << out.detail;
        std::cout << line.str() << std::endl;
      }

      auto        t0  = std::chrono::steady_clock::now();
      fs::path    two = work / "run2";
      std::string cmd = "\"" + self + "\" --emit \"" + two.string() + "\"";
      int         rc  = std::system(cmd.c_str());
      bool        same = rc == 0;
      std::string detail;
      if (!same) {
        detail = "second run exited with " + std::to_string(rc);
      } else {
        auto n1 = output_names(work / "run1"), n2 = output_names(two);
        same    = n1 == n2;
        detail  = same ? std::to_string(n1.size()) + " files identical"
                       : "different sets of output files";
        for (auto const& nm : n1) {
          if (same
              && read_file((work / "run1" / nm).string())
                     != read_file((two / nm).string())) {
            same   = false;
            detail = nm + " differs";
          }
        }
      }
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      all = all && same;
      std::ostringstream line;
      line.precision(2);
      line << std::fixed << (same ? "PASS" : "FAIL")
           << " criterion 9: byte-identical outputs across two runs (" << secs
           << " s): " << detail;
      std::cout << line.str() << std::endl;
      return all ? 0 : 1;
    }

  }  // namespace
}  // namespace squier

int main(int argc, char** argv) {
  std::string work = "acceptance_out";
  std::string emit;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--work-dir" && i + 1 < argc) {
      work = argv[++i];
    } else if (arg == "--emit" && i + 1 < argc) {
      emit = argv[++i];
    } else {
      std::cerr << "usage: " << argv[0] << " [--work-dir DIR | --emit DIR]\n";
      return 3;
    }
  }
  try {
    if (!emit.empty()) {
      fs::remove_all(emit);
      squier::run_all(emit);
      return 0;
    }
    fs::remove_all(work);
    return squier::run(fs::absolute(argv[0]).string(), work);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
