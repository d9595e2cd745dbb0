#include "mfr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "mfr/diagram.hpp"
#include "mfr/divisibility.hpp"
#include "mfr/ore.hpp"
#include "mfr/reduction.hpp"

namespace mfr::cli {

  namespace {

    struct Config {
      std::string source;
      std::string format      = "text";
      std::size_t class_cap   = 100000;
      std::size_t basics_cap  = 10000;
      std::size_t length_cap  = 64;
      std::size_t node_cap    = default_node_cap;
      std::size_t jobs        = 1;
      bool        assert_3ore = false;
      bool        accelerate  = false;
    };

    class Report {
     public:
      void add(std::string key, std::string value) {
        entries_.push_back({std::move(key), {std::move(value)}, false});
      }
      void list(std::string key, std::vector<std::string> items) {
        entries_.push_back({std::move(key), std::move(items), true});
      }
      void write(std::ostream& out, bool keyvalue) const {
        for (auto const& e : entries_) {
          if (!e.is_list) {
            out << e.key << ": " << e.values.front() << '\n';
          } else if (keyvalue) {
            for (auto const& v : e.values) {
              out << e.key << ": " << v << '\n';
            }
          } else {
            out << e.key << " (" << e.values.size() << "):\n";
            for (auto const& v : e.values) {
              out << "  " << v << '\n';
            }
          }
        }
      }

     private:
      struct Entry {
        std::string              key;
        std::vector<std::string> values;
        bool                     is_list;
      };
      std::vector<Entry> entries_;
    };

    // Carries a non-zero exit status out of a command after its report.
    struct Exit {
      int code;
    };

    Monoid load(Config const& c) {
      MonoidOptions o;
      o.class_cap         = c.class_cap;
      o.basics_size_cap   = c.basics_cap;
      o.basics_length_cap = c.length_cap;
      o.use_reversing     = c.accelerate;
      return Monoid(load_presentation(c.source), o);
    }

    std::string join(std::vector<std::string> const& xs) {
      std::string out;
      for (auto const& x : xs) {
        out += (out.empty() ? "" : " ") + x;
      }
      return out;
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }
    std::string pass_fail(bool b) {
      return b ? "pass" : "fail";
    }

    void add_ore(Report& r, Monoid const& m, OreReport const& rep) {
      r.add("3ore", pass_fail(rep.satisfies_3ore()));
      r.add("3ore_right", pass_fail(rep.satisfies_right_3ore));
      r.add("3ore_left", pass_fail(rep.satisfies_left_3ore));
      if (rep.witness) {
        std::vector<std::string> w;
        for (auto const& x : *rep.witness) {
          w.push_back(m.format(x));
        }
        r.add("witness", join(w));
        r.add("witness_side", rep.witness_on_left ? "left" : "right");
      }
    }

    /// True when reductions may rely on 3-Ore; otherwise reports the
    /// failure and throws Exit when `required`.
    bool establish_3ore(Monoid const& m, Config const& c, Report& r,
                        bool required) {
      if (c.assert_3ore) {
        r.add("3ore", "asserted");
        return true;
      }
      auto rep = check_3ore(m, c.jobs);
      if (rep.satisfies_3ore()) {
        return true;
      }
      if (required) {
        add_ore(r, m, rep);
        throw Exit{ore_failure};
      }
      return false;
    }

    std::string verdict_name(Verdict v) {
      switch (v) {
        case Verdict::identity: return "true";
        case Verdict::not_identity: return "false";
        case Verdict::undecided: return "undecided";
      }
      return "?";
    }

    ////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////

    void cmd_solve(Config const& c, std::string const& word, Report& r) {
      auto m    = load(c);
      auto w    = m.parse_signed_word(word);
      bool ore  = establish_3ore(m, c, r, false);
      auto d    = decide_identity(m, w, ore, c.node_cap);
      r.add("identity", verdict_name(d.verdict));
      r.add("method", d.method);
      if (d.verdict == Verdict::undecided) {
        throw Exit{undecided};
      }
    }

    void cmd_equal(Config const& c, std::string const& u, std::string const& v,
                   Report& r) {
      auto m = load(c);
      auto w = m.parse_signed_word(u);
      auto x = inverse(m.parse_signed_word(v));
      w.insert(w.end(), x.begin(), x.end());
      bool ore = establish_3ore(m, c, r, false);
      auto d   = decide_identity(m, w, ore, c.node_cap);
      r.add("equal", verdict_name(d.verdict));
      r.add("method", d.method);
      if (d.verdict == Verdict::undecided) {
        throw Exit{undecided};
      }
    }

    void cmd_nf(Config const& c, std::string const& word, Report& r) {
      auto m = load(c);
      auto w = m.parse_signed_word(word);
      establish_3ore(m, c, r, true);
      auto nf = reduce_hat(m, parse_signed(m, w)).first;
      r.add("normal_form", format(m, nf.mf));
      r.add("depth", std::to_string(depth(nf)));
      r.add("denominator", nf.mf.empty() ? "none" : m.format(denominator(nf)));
    }

    void cmd_reduce(Config const& c, std::string const& literal, bool all,
                    Report& r) {
      auto m = load(c);
      auto a = parse_multifraction(m, literal);
      r.add("input", format(m, a));
      if (all) {
        auto leaves = naive_reduce(m, a, c.node_cap);
        std::vector<std::string> items;
        for (auto const& l : leaves) {
          items.push_back(format(m, l));
        }
        r.add("confluent", yes_no(leaves.size() == 1));
        r.list("leaf", items);
        return;
      }
      establish_3ore(m, c, r, true);
      auto [nf, trace] = reduce_hat(m, a);
      std::vector<std::string> steps;
      auto text = serialize_trace(m, trace);
      for (std::size_t start = 0; start < text.size();) {
        auto nl = text.find('\n', start);
        steps.push_back(text.substr(start, nl - start));
        start = nl + 1;
      }
      r.list("step", steps);
      r.add("result", format(m, nf.mf));
    }

    void cmd_check(Config const& c, Report& r) {
      auto m   = load(c);
      auto rep = check_3ore(m, c.jobs);
      add_ore(r, m, rep);
      r.add("2ore_right", pass_fail(rep.satisfies_right_2ore));
      r.add("2ore_left", pass_fail(rep.satisfies_left_2ore));
      r.add("basics", std::to_string(rep.basics_used.all().size()));
      r.add("C", std::to_string(rep.basics_used.C));
      if (is_artin_tits(m.presentation())) {
        r.add("fc", yes_no(rep.satisfies_3ore()));
        try {
          auto direct = check_fc_direct(m);
          r.add("fc_direct", yes_no(direct.verdict == FcClass::fc));
        } catch (SubsetBlowup const&) {
          r.add("fc_direct", "skipped");
        }
      } else {
        r.add("fc", "n/a");
        r.add("note",
              "not an Artin-Tits presentation; verdict assumes the gcd "
              "property");
      }
    }

    void cmd_basics(Config const& c, Report& r) {
      auto        m = load(c);
      auto const& t = m.basics();
      auto        render = [&](std::vector<Element> const& xs) {
        std::vector<std::string> out;
        for (auto const& x : xs) {
          out.push_back(m.format(x));
        }
        return out;
      };
      auto all = t.all();
      r.add("count", std::to_string(all.size()));
      r.add("C", std::to_string(t.C));
      r.add("right", join(render(t.right_basics)));
      r.add("left", join(render(t.left_basics)));
      r.list("basic", render(all));
    }

    void cmd_class(Config const& c, std::string const& word, Report& r) {
      auto m   = load(c);
      auto w   = m.parse_word(word);
      auto cls = m.equivalence_class(w);
      std::vector<std::string> items;
      for (auto const& x : *cls) {
        items.push_back(m.format_word(x));
      }
      r.add("canonical", m.format_word(cls->front()));
      r.add("size", std::to_string(cls->size()));
      r.list("word", items);
    }

    void cmd_lcm(Config const& c, std::string const& a, std::string const& b,
                 bool left, Report& r) {
      auto m  = load(c);
      auto x  = m.parse_element(a);
      auto y  = m.parse_element(b);
      auto rs = left ? left_lcm(m, x, y) : right_lcm(m, x, y);
      if (!rs) {
        r.add("lcm", "none");
        return;
      }
      r.add("lcm", m.format(rs->lcm));
      r.add("left_complement", m.format(rs->left_complement));
      r.add("right_complement", m.format(rs->right_complement));
    }

    void cmd_gcd(Config const& c, std::string const& a, std::string const& b,
                 bool left, Report& r) {
      auto m = load(c);
      auto x = m.parse_element(a);
      auto y = m.parse_element(b);
      r.add("gcd", m.format(left ? left_gcd(m, x, y) : right_gcd(m, x, y)));
    }

    void cmd_diagram(Config const& c, std::string const& target,
                     std::string const& path, std::ostream& out, Report& r) {
      std::string text;
      if (target.starts_with("gamma:")) {
        std::size_t n = 0;
        try {
          n = std::stoul(target.substr(6));
        } catch (std::exception const&) {
          throw ParseError("bad depth in '" + target + "'");
        }
        auto g = gamma_shape(n);
        text   = render_dot(g);
        r.add("copies", std::to_string(g.tiles));
        r.add("interior", std::to_string(g.nodes.size() - g.boundary.size()));
        r.add("wells", std::to_string(g.count(NodeRole::well)));
        r.add("springs", std::to_string(g.count(NodeRole::spring)));
        r.add("four_prongs", std::to_string(g.count(NodeRole::four_prong)));
      } else {
        auto m = load(c);
        auto a = parse_multifraction(m, target);
        establish_3ore(m, c, r, true);
        auto g = emit_universal_diagram(m, a);
        text   = render_dot(g, &m);
        r.add("tiles", std::to_string(g.tiles));
      }
      if (path.empty()) {
        out << text;
        return;
      }
      std::ofstream file(path);
      if (!file || !(file << text)) {
        throw ParseError("cannot write '" + path + "'");
      }
      r.add("written", path);
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Multifraction reduction for gcd-monoids", "mfr"};
    app.require_subcommand(1);
    app.fallthrough();

    Config c;
    app.add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "keyvalue"}));
    app.add_option("--class-cap", c.class_cap, "Largest equivalence class")
        ->check(CLI::PositiveNumber);
    app.add_option("--basics-cap", c.basics_cap, "Largest basic closure")
        ->check(CLI::PositiveNumber);
    app.add_option("--length-cap", c.length_cap, "Longest basic element")
        ->check(CLI::PositiveNumber);
    app.add_option("--node-cap", c.node_cap, "Largest reduction tree")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", c.jobs, "Worker threads for the 3-Ore check")
        ->check(CLI::PositiveNumber);
    app.add_flag("--assert-3ore", c.assert_3ore,
                 "Skip the 3-Ore check and trust the presentation");
    app.add_flag("--accelerate", c.accelerate,
                 "Try word reversing before exact lcm computation");

    std::string a;
    std::string b;
    std::string path;
    bool        all  = false;
    bool        left = false;

    auto source = [&](CLI::App* sub) {
      sub->add_option("presentation", c.source, "Preset name or file")
          ->required();
    };
    auto* solve = app.add_subcommand("solve", "Decide whether a word is 1");
    source(solve);
    solve->add_option("word", a)->required();
    auto* nf = app.add_subcommand("nf", "Normal form of a word");
    source(nf);
    nf->add_option("word", a)->required();
    auto* equal = app.add_subcommand("equal", "Compare two words");
    source(equal);
    equal->add_option("first", a)->required();
    equal->add_option("second", b)->required();
    auto* reduce = app.add_subcommand("reduce", "Reduce a multifraction");
    source(reduce);
    reduce->add_option("multifraction", a)->required();
    reduce->add_flag("--all", all, "List every irreducible reduct");
    auto* check = app.add_subcommand("check", "3-Ore and FC report");
    source(check);
    auto* basics = app.add_subcommand("basics", "List basic elements");
    source(basics);
    auto* cls = app.add_subcommand("class", "Equivalence class of a word");
    source(cls);
    cls->add_option("word", a)->required();
    auto* lcm = app.add_subcommand("lcm", "Least common multiple");
    source(lcm);
    lcm->add_option("first", a)->required();
    lcm->add_option("second", b)->required();
    lcm->add_flag("--left", left, "Left lcm instead of right");
    auto* gcd = app.add_subcommand("gcd", "Greatest common divisor");
    source(gcd);
    gcd->add_option("first", a)->required();
    gcd->add_option("second", b)->required();
    gcd->add_flag("--left", left, "Left gcd instead of right");
    auto* diagram = app.add_subcommand("diagram", "Reduction diagram as DOT");
    source(diagram);
    diagram->add_option("target", a, "Multifraction or gamma:<n>")->required();
    diagram->add_option("-o,--output", path, "Write to a file");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? ok : validation;
    }

    Report r;
    int    code = ok;
    try {
      if (*solve) {
        cmd_solve(c, a, r);
      } else if (*nf) {
        cmd_nf(c, a, r);
      } else if (*equal) {
        cmd_equal(c, a, b, r);
      } else if (*reduce) {
        cmd_reduce(c, a, all, r);
      } else if (*check) {
        cmd_check(c, r);
      } else if (*basics) {
        cmd_basics(c, r);
      } else if (*cls) {
        cmd_class(c, a, r);
      } else if (*lcm) {
        cmd_lcm(c, a, b, left, r);
      } else if (*gcd) {
        cmd_gcd(c, a, b, left, r);
      } else if (*diagram) {
        cmd_diagram(c, a, path, out, r);
        // The DOT text owns stdout unless it went to a file.
        if (path.empty()) {
          r = Report();
        }
      }
    } catch (Exit const& e) {
      code = e.code;
    } catch (ThreeOreViolation const& e) {
      r.add("3ore", "fail");
      r.add("witness", join(e.witness()));
      err << "error: " << e.what() << '\n';
      code = ore_failure;
    } catch (CapExceeded const& e) {
      err << "error: " << e.what() << '\n';
      code = cap_exceeded;
    } catch (InconsistentTrace const& e) {
      err << "internal error: " << e.what() << '\n';
      code = internal;
    } catch (IrreducibilityAssertionFailed const& e) {
      err << "internal error: " << e.what() << '\n';
      code = internal;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      code = validation;
    }
    r.write(out, c.format == "keyvalue");
    return code;
  }

}  // namespace mfr::cli
