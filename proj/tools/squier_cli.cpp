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

// The squier command line tool.
//
// Exit codes: 0 success, 1 verification failure, 2 inconclusive (a budget
// ran out), 3 input error.

#include <iostream>  // for cout, cerr
#include <set>       // for set
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <vector>    // for vector

#include "CLI11.hpp"

#include "squier/exception.hpp"
#include "squier/extension.hpp"
#include "squier/graph.hpp"
#include "squier/homotopy.hpp"
#include "squier/io.hpp"
#include "squier/oracle.hpp"
#include "squier/subgroup.hpp"
#include "squier/words.hpp"

using namespace squier;

namespace {

  struct Options {
    std::string input;
    std::string second;
    std::string output;
    std::string presentation_out;
    std::string base_in;
    std::string subgroup;
    std::string left;
    std::string right;
    size_t      limit       = 1000;
    size_t      node_budget = 100'000;
    size_t      move_budget = 10'000;
    size_t      word_budget = 1'000'000;
  };

  bool ends_with(std::string const& s, std::string const& suffix) {
    return s.size() >= suffix.size()
           && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  }

  FiniteSemigroup load_semigroup(std::string const& path, size_t limit) {
    auto text = read_file(path);
    if (ends_with(path, ".tbl")) {
      return from_table(text);
    }
    return enumerate(parse_presentation(text), limit);
  }

  std::vector<size_t> parse_subgroup(std::string const&     text,
                                     Presentation const&    p,
                                     FiniteSemigroup const& s) {
    std::set<size_t>  elts;
    std::stringstream in(text);
    std::string       item;
    while (std::getline(in, item, ';')) {
      auto w = parse_word(item, p);
      if (w.empty()) {
        throw InputError("empty word in --subgroup");
      }
      elts.insert(s.evaluate(w));
    }
    if (elts.empty()) {
      throw InputError("--subgroup lists no words");
    }
    return std::vector<size_t>(elts.begin(), elts.end());
  }

  std::string header(Options const& o, bool moves = false) {
    std::string h = "# node-budget " + std::to_string(o.node_budget) + "\n";
    if (moves) {
      h += "# move-budget " + std::to_string(o.move_budget) + "\n";
    }
    return h;
  }

  // Writes to the file if one is named and to standard output otherwise.
  void emit(std::string const& path, std::string const& text) {
    if (path.empty()) {
      std::cout << text;
    } else {
      write_file_atomic(path, text);
    }
  }

  std::string classes_line(std::string const&     label,
                           Partition const&       part,
                           FiniteSemigroup const& s) {
    std::string line = label + ":";
    for (auto const& c : part.classes) {
      line += " {";
      for (size_t k = 0; k < c.size(); ++k) {
        line += (k ? " " : "") + s.name(c[k]);
      }
      line += "}";
    }
    return line + "\n";
  }

  int run_enumerate(Options const& o) {
    auto s = load_semigroup(o.input, o.limit);
    emit(o.output, std::to_string(s.size()) + " elements\n" + to_table_string(s));
    return 0;
  }

  int run_green(Options const& o) {
    auto        s = load_semigroup(o.input, o.limit);
    auto        g = green(s);
    std::string out;
    out += classes_line("R", g.R, s);
    out += classes_line("L", g.L, s);
    out += classes_line("H", g.H, s);
    out += classes_line("D", g.D, s);
    out += classes_line("J", g.J, s);
    out += "idempotents:";
    for (auto x : g.idempotents) {
      out += " " + s.name(x);
    }
    out += "\nmaximal subgroups:";
    for (auto const& h : maximal_subgroups(s)) {
      out += " {";
      for (size_t k = 0; k < h.size(); ++k) {
        out += (k ? " " : "") + s.name(h[k]);
      }
      out += "}";
    }
    emit(o.output, out + "\n");
    return 0;
  }

  struct Loaded {
    Presentation        p;
    FiniteSemigroup     s;
    std::vector<size_t> g;
  };

  Loaded load_subgroup_input(Options const& o) {
    Loaded l;
    l.p = parse_presentation(read_file(o.input));
    l.s = enumerate(l.p, o.limit);
    l.g = parse_subgroup(o.subgroup, l.p, l.s);
    return l;
  }

  int run_cosets(Options const& o) {
    auto        l = load_subgroup_input(o);
    auto        c = right_cosets(l.s, l.g, l.p);
    std::string out = std::to_string(c.size()) + " cosets\n";
    for (size_t i = 1; i <= c.size(); ++i) {
      out += "coset " + std::to_string(i) + ":";
      for (auto x : c.cosets[i - 1]) {
        out += " " + l.s.name(x);
      }
      out += "\n";
    }
    out += "action:";
    for (auto a : c.letters) {
      out += " " + name(a);
    }
    out += "\n";
    for (size_t i = 1; i <= c.size(); ++i) {
      out += std::to_string(i) + ":";
      for (auto j : c.action[i]) {
        out += " " + std::to_string(j);
      }
      out += "\n";
    }
    emit(o.output, out);
    return 0;
  }

  int run_subgroup_present(Options const& o) {
    auto         l = load_subgroup_input(o);
    CosetContext ctx(l.p, l.s, l.g, o.node_budget);
    emit(o.output,
         header(o) + to_string(ctx.subgroup_presentation().presentation));
    return 0;
  }

  int run_subgroup_base(Options const& o) {
    auto         l = load_subgroup_input(o);
    CosetContext ctx(l.p, l.s, l.g, o.node_budget);
    HomotopyBase x;
    if (o.base_in.empty()) {
      auto cert = check_complete(l.p);
      if (!cert.complete()) {
        throw InputError("the presentation is not complete; pass --base");
      }
      x = critical_pair_base(l.p, cert);
    } else {
      x = parse_base(read_file(o.base_in), l.p);
    }
    auto kw = base_KW(ctx, x);
    if (!o.presentation_out.empty()) {
      write_file_atomic(
          o.presentation_out,
          header(o) + to_string(ctx.subgroup_presentation().presentation));
    }
    emit(o.output, header(o) + to_string(kw.both()));
    return 0;
  }

  ReesMatrix load_rees(Options const& o) {
    return parse_rees(read_file(o.input), [&o](std::string const& path) {
      return read_file(resolve_path(path, o.input));
    });
  }

  int run_extension_present(Options const& o) {
    ExtensionContext ctx(extension_data(load_rees(o)), o.node_budget);
    emit(o.output, header(o) + to_string(ctx.presentation()));
    return 0;
  }

  int run_extension_base(Options const& o) {
    ExtensionContext ctx(extension_data(load_rees(o)), o.node_budget);
    auto             x = assemble_X(ctx, o.word_budget).all();
    if (!o.presentation_out.empty()) {
      write_file_atomic(o.presentation_out,
                        header(o) + to_string(ctx.presentation()));
    }
    emit(o.output, header(o) + to_string(x));
    return 0;
  }

  int run_fdt_regular(Options const& o) {
    auto       s = load_semigroup(o.input, o.limit);
    FdtOptions opts;
    opts.node_budget = o.node_budget;
    opts.word_budget = o.word_budget;
    auto result      = fdt_base_finite_regular(s, opts);
    if (!o.presentation_out.empty()) {
      write_file_atomic(o.presentation_out,
                        header(o) + to_string(result.presentation));
    }
    emit(o.output, header(o) + to_string(result.base));
    return 0;
  }

  int run_verify_base(Options const& o) {
    auto p      = parse_presentation(read_file(o.second));
    auto x      = parse_base(read_file(o.input), p);
    auto report = validate_base(x, p);
    if (report.ok()) {
      std::cout << "ok: " << x.size() << " pairs\n";
      return 0;
    }
    for (size_t k = 0; k < report.failures.size(); ++k) {
      if (!report.failures[k].empty()) {
        std::cerr << "pair " << k << ": " << report.failures[k] << "\n";
      }
    }
    std::cout << "failed: " << report.num_failures() << " of " << x.size()
              << " pairs\n";
    return 1;
  }

  int run_homotopy_check(Options const& o) {
    auto p = parse_presentation(read_file(o.input));
    auto x = parse_base(read_file(o.second), p);
    auto l = parse_path(o.left, p);
    auto r = o.right.empty() ? Path(l.source()) : parse_path(o.right, p);
    auto result = homotopic_bounded(l, r, x, o.move_budget);
    if (result.equivalent()) {
      std::cout << "equivalent: " << result.certificate.size() << " moves, "
                << result.visited << " paths visited\n";
      return 0;
    }
    std::cout << "inconclusive: " << result.visited << " paths visited\n";
    return 2;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy bases for semigroup presentations"};
  app.require_subcommand(1);
  Options o;

  auto limit = [&o](CLI::App* c) {
    c->add_option("--limit", o.limit, "Largest semigroup to enumerate")
        ->capture_default_str();
  };
  auto node = [&o](CLI::App* c) {
    c->add_option("--node-budget", o.node_budget, "Vertices per path search")
        ->capture_default_str();
  };
  auto out = [&o](CLI::App* c) {
    c->add_option("-o,--output", o.output, "Output file (default stdout)");
  };
  auto sub = [&o](CLI::App* c) {
    c->add_option("--subgroup", o.subgroup, "Words separated by ;")
        ->required();
  };
  auto words = [&o](CLI::App* c) {
    c->add_option("--word-budget", o.word_budget, "Words scanned for X3")
        ->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, int (*)(Options const&)>> verbs;
  auto verb = [&](char const* nm, char const* desc, int (*f)(Options const&)) {
    auto* c = app.add_subcommand(nm, desc);
    verbs.emplace_back(c, f);
    return c;
  };

  auto* c = verb("enumerate", "Enumerate a .sgp or .tbl file", run_enumerate);
  c->add_option("input", o.input)->required();
  limit(c);
  out(c);

  c = verb("green", "Green's relations of a .sgp or .tbl file", run_green);
  c->add_option("input", o.input)->required();
  limit(c);
  out(c);

  c = verb("cosets", "Right cosets of a subgroup", run_cosets);
  c->add_option("input", o.input)->required();
  sub(c);
  limit(c);
  out(c);

  c = verb("subgroup-present", "Presentation of a subgroup",
           run_subgroup_present);
  c->add_option("input", o.input)->required();
  sub(c);
  limit(c);
  node(c);
  out(c);

  c = verb("subgroup-base", "Homotopy base of a subgroup", run_subgroup_base);
  c->add_option("input", o.input)->required();
  sub(c);
  c->add_option("--base", o.base_in, "Homotopy base of the input (.hb)");
  c->add_option("--presentation-out", o.presentation_out);
  limit(c);
  node(c);
  out(c);

  c = verb("extension-present", "Presentation from a .rees file",
           run_extension_present);
  c->add_option("input", o.input)->required();
  node(c);
  out(c);

  c = verb("extension-base", "Homotopy base from a .rees file",
           run_extension_base);
  c->add_option("input", o.input)->required();
  c->add_option("--presentation-out", o.presentation_out);
  node(c);
  words(c);
  out(c);

  c = verb("fdt-regular", "Presentation and base of a finite regular "
           "semigroup", run_fdt_regular);
  c->add_option("input", o.input)->required();
  c->add_option("--presentation-out", o.presentation_out);
  limit(c);
  node(c);
  words(c);
  out(c);

  c = verb("verify-base", "Validate a .hb file over a .sgp file",
           run_verify_base);
  c->add_option("base", o.input)->required();
  c->add_option("presentation", o.second)->required();

  c = verb("homotopy-check", "Search for a homotopy between two paths",
           run_homotopy_check);
  c->add_option("presentation", o.input)->required();
  c->add_option("base", o.second)->required();
  c->add_option("--left", o.left)->required();
  c->add_option("--right", o.right, "Default: the empty path");
  c->add_option("--move-budget", o.move_budget)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    for (auto const& [cmd, f] : verbs) {
      if (cmd->parsed()) {
        return f(o);
      }
    }
  } catch (VerificationError const& e) {
    std::cerr << "squier: verification failed: " << e.what() << "\n";
    return 1;
  } catch (InconclusiveError const& e) {
    std::cerr << "squier: inconclusive: " << e.what() << "\n";
    return 2;
  } catch (InputError const& e) {
    std::cerr << "squier: input error: " << e.what() << "\n";
    return 3;
  } catch (Error const& e) {
    std::cerr << "squier: error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
