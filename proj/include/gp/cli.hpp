#ifndef GP_CLI_HPP_
#define GP_CLI_HPP_

// The `gp` command line. Exit codes: 0 affirmative, 1 well-formed negative,
// 2 input error, 3 resource limit.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conjugacy.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "moves.hpp"
#include "oracle.hpp"
#include "spec_io.hpp"
#include "words.hpp"

namespace gp::cli {

enum exit_code : int { ok = 0, negative = 1, input_error = 2, resource = 3 };

using ojson = nlohmann::ordered_json;

namespace detail {
  inline void print_text(ojson const& j, std::ostream& out,
                         std::string const& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto key = prefix + it.key();
      auto const& v = it.value();
      if (v.is_object()) {
        print_text(v, out, key + ".");
        continue;
      }
      out << key << ":";
      if (v.is_array()) {
        for (auto const& x : v) {
          out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
        }
      } else if (v.is_string()) {
        auto s = v.get<std::string>();
        out << (s.empty() ? " \"\"" : " " + s);
      } else {
        out << ' ' << v.dump();
      }
      out << '\n';
    }
  }

  struct context {
    std::string              spec_path;
    std::vector<std::string> args;
    std::string              format = "text";
    std::optional<std::size_t> limit_states;
    std::optional<std::size_t> oracle_cap;
    bool                     check_oracle = false;
    bool                     reverse      = false;
    std::string              output;
    std::vector<std::string> segments;
  };

  inline std::size_t bfs_limit(context const& c, group_spec const& s) {
    return c.limit_states.value_or(s.limits.bfs_states.value_or(default_bfs_states));
  }

  [[noreturn]] inline void usage(std::string const& what) {
    throw error(error_code::syntax_error, what);
  }

  // The spec comes from --spec or, failing that, the first positional.
  inline group_spec take_spec(context& c) {
    if (c.spec_path.empty()) {
      if (c.args.empty()) {
        usage("missing spec file");
      }
      c.spec_path = c.args.front();
      c.args.erase(c.args.begin());
    }
    return load_group_spec(c.spec_path);
  }

  inline void want_args(context const& c, std::size_t n, char const* shape) {
    if (c.args.size() != n) {
      usage(std::string("expected ") + shape);
    }
  }

  inline ojson names_of(word const& floats, graph_product const& gp) {
    ojson a = ojson::array();
    for (auto const& p : floats) {
      a.push_back(gp.graph().name(p.vertex));
    }
    return a;
  }

  inline std::uint64_t parse_count(std::string const& s) {
    try {
      std::size_t used = 0;
      auto        v    = std::stoull(s, &used);
      if (used != s.size()) {
        throw std::invalid_argument(s);
      }
      return v;
    } catch (std::exception const&) {
      usage("expected a nonnegative integer, got '" + s + "'");
    }
  }

  inline int cmd_validate(context& c, ojson& r) {
    auto s  = take_spec(c);
    auto const& gp = s.product;
    want_args(c, 0, "no words");
    ojson verts = ojson::array();
    for (std::size_t v = 0; v < gp.size(); ++v) {
      auto const& g = gp.group(v);
      std::string d = gp.graph().name(v) + "=" + std::string(to_string(g.kind()));
      if (g.kind() != group_kind::integers) {
        d += "(" + std::to_string(g.size()) + ")";
      }
      verts.push_back(d);
    }
    ojson cliques = ojson::array();
    for (auto const& cl : enumerate_cliques(gp.graph())) {
      std::string s2 = "{";
      for (std::size_t i = 0; i < cl.size(); ++i) {
        s2 += (i ? "," : "") + gp.graph().name(cl[i]);
      }
      cliques.push_back(s2 + "}");
    }
    r["verdict"]           = "valid";
    r["vertices"]          = verts;
    r["edges"]             = gp.graph().edges().size();
    r["opposite_diameter"] = opposite_diameter(gp.graph());
    r["maximal_cliques"]   = cliques;
    r["meier"]             = meier_condition(gp.graph(), gp.infinite_flags());
    return ok;
  }

  inline int cmd_reduce(context& c, ojson& r, bool canon) {
    auto s = take_spec(c);
    want_args(c, 1, "one word");
    auto w = parse_word(c.args[0], s.product);
    auto red = reduce(w, s.product);
    if (!canon) {
      r["reduced"] = format_word(red, s.product);
    }
    r["canonical"] = format_word(canonical_form(w, s.product), s.product);
    r["syllables"] = red.size();
    r["length"]    = word_length(w, s.product);
    return ok;
  }

  inline int cmd_equal(context& c, ojson& r) {
    auto s = take_spec(c);
    want_args(c, 2, "two words");
    auto const& gp = s.product;
    auto a = parse_word(c.args[0], gp);
    auto b = parse_word(c.args[1], gp);
    bool eq = equal(a, b, gp);
    r["verdict"]     = eq ? "equal" : "not-equal";
    r["canonical_1"] = format_word(canonical_form(a, gp), gp);
    r["canonical_2"] = format_word(canonical_form(b, gp), gp);
    if (c.check_oracle) {
      bool o = oracle_equal(a, b, gp, c.oracle_cap.value_or(
                                          s.limits.oracle_cap.value_or(
                                              default_oracle_cap)));
      r["oracle"] = o == eq ? "agree" : "disagree";
    }
    return eq ? ok : negative;
  }

  inline int cmd_conj(context& c, ojson& r) {
    auto s = take_spec(c);
    want_args(c, 2, "two words");
    auto const& gp = s.product;
    auto a  = parse_word(c.args[0], gp);
    auto b  = parse_word(c.args[1], gp);
    auto ra = cyclically_reduce(a, gp);
    auto rb = cyclically_reduce(b, gp);
    auto w  = are_conjugate(a, b, gp, bfs_limit(c, s));
    r["verdict"] = w ? "conjugate" : "not-conjugate";
    r["floating"]["a"] = names_of(floating_decomposition(ra.core, gp).floats, gp);
    r["floating"]["b"] = names_of(floating_decomposition(rb.core, gp).floats, gp);
    if (!w) {
      return negative;
    }
    auto text = format_word(w->conjugator, gp);
    r["witness"]         = text;
    r["witness_length"]  = w->length;
    r["certified_bound"] = w->certified_bound;
    r["verified"]        = verify_witness(a, b, parse_word(text, gp), gp);
    return r["verified"].get<bool>() ? ok : input_error;
  }

  inline int cmd_cyclred(context& c, ojson& r) {
    auto s = take_spec(c);
    want_args(c, 1, "one word");
    auto const& gp = s.product;
    auto w   = parse_word(c.args[0], gp);
    auto red = cyclically_reduce(w, gp);
    auto fd  = floating_decomposition(red.core, gp);
    r["conjugator"] = format_word(red.conjugator, gp);
    r["core"]       = format_word(red.core, gp);
    r["nonfloating"] = format_word(fd.core, gp);
    r["floats"]     = format_word(fd.floats, gp);
    r["length"]["input"]      = word_length(w, gp);
    r["length"]["core"]       = word_length(red.core, gp);
    r["length"]["conjugator"] = word_length(red.conjugator, gp);
    return ok;
  }

  inline int cmd_clf_bound(context& c, ojson& r) {
    auto s = take_spec(c);
    want_args(c, 1, "n");
    auto n = parse_count(c.args[0]);
    if (n == 0) {
      usage("n must be positive");
    }
    r["n"]                 = n;
    r["opposite_diameter"] = opposite_diameter(s.product.graph());
    r["bound"]             = clf_upper_bound(s.product, n);
    return ok;
  }

  inline int cmd_clf_scan(context& c, ojson& r) {
    auto s = take_spec(c);
    want_args(c, 1, "n");
    auto n   = parse_count(c.args[0]);
    auto cap = c.oracle_cap.value_or(default_clf_cap);
    ojson rows = ojson::array();
    bool  within = true;
    for (std::uint64_t k = 1; k <= n; ++k) {
      auto e = empirical_clf(s.product, k, cap);
      auto u = clf_upper_bound(s.product, k);
      within = within && e <= u;
      rows.push_back(std::to_string(k) + ":" + std::to_string(e) + "/" +
                     std::to_string(u));
    }
    r["verdict"]          = within ? "within-bound" : "bound-violated";
    r["n:empirical/bound"] = rows;
    return within ? ok : negative;
  }

  inline int cmd_dehn(context& c, ojson& r) {
    auto s = take_spec(c);
    want_args(c, 0, "no words");
    auto const& g  = s.product.graph();
    auto        dc = dehn_classify(g, s.product.infinite_flags());
    r["case"]       = std::string(to_string(dc.tag));
    r["expression"] = to_string(dc, g);
    return ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagram subcommands
  ////////////////////////////////////////////////////////////////////////

  struct loaded_diagram {
    group_spec spec;
    diagram    dg;
  };

  inline loaded_diagram load_diagram(context& c) {
    if (c.args.empty()) {
      usage("missing diagram file");
    }
    std::filesystem::path file = c.args.front();
    c.args.erase(c.args.begin());
    auto j = gp::detail::read_json_file(file);
    std::optional<group_spec> s;
    if (!c.spec_path.empty()) {
      s = load_group_spec(c.spec_path);
    } else if (j.contains("spec") && j.at("spec").is_string()) {
      auto p = std::filesystem::path(j.at("spec").get<std::string>());
      if (p.is_relative()) {
        p = file.parent_path() / p;
      }
      s = load_group_spec(p);
    } else if (j.contains("spec") && j.at("spec").is_object()) {
      s = parse_group_spec(j.at("spec"));
    } else {
      usage("no spec: pass --spec or add \"spec\" to the diagram file");
    }
    auto dg = validate_diagram(parse_diagram(j, s->product), s->product);
    return {std::move(*s), std::move(dg)};
  }

  inline void describe(diagram const& dg, graph_product const& gp, ojson& r) {
    auto fs = compute_faces(dg);
    auto b  = boundary_label(dg, gp);
    r["kind"]   = dg.annular() ? "annular" : "disc";
    r["faces"]  = fs.faces.size() - (dg.size() ? 1 : 0) - (dg.annular() ? 1 : 0);
    r["boundary"]["outer"] = format_word(b.outer, gp);
    if (b.inner) {
      r["boundary"]["inner"] = format_word(*b.inner, gp);
    }
  }

  inline int cmd_diagram_check(context& c, ojson& r) {
    auto [s, dg] = load_diagram(c);
    want_args(c, 0, "one diagram file");
    auto const& gp = s.product;
    std::vector<boundary_segment> segs;
    for (auto const& t : c.segments) {
      auto colon = t.find(':');
      if (colon == std::string::npos) {
        usage("segment must be START:LENGTH");
      }
      segs.push_back({parse_count(t.substr(0, colon)),
                      parse_count(t.substr(colon + 1))});
    }
    r["verdict"] = "valid";
    describe(dg, gp, r);
    ojson curves = ojson::array();
    for (auto const& cv : dual_curves(dg)) {
      curves.push_back(
          (cv.vertex == npos ? std::string("?") : gp.graph().name(cv.vertex)) +
          "/" + std::string(to_string(cv.shape)) + "/" +
          std::to_string(cv.edges.size()));
    }
    r["curves"] = curves;
    law_report rep;
    try {
      rep = check_dual_curve_laws(dg, gp, segs);
    } catch (std::out_of_range const& e) {
      usage(e.what());
    }
    for (auto const& l : rep.laws) {
      r["laws"][l.name] = l.pass ? "pass" : "fail";
    }
    if (!rep.pass()) {
      r["verdict"] = "law-violation";
      return negative;
    }
    return ok;
  }

  inline int cmd_diagram_move(context& c, ojson& r) {
    auto [s, dg] = load_diagram(c);
    want_args(c, 2, "a diagram file, a move kind and a dart id");
    auto const& gp   = s.product;
    auto        kind = parse_move_kind(c.args[0]);
    if (!kind) {
      usage("unknown move '" + c.args[0] + "'");
    }
    auto before = boundary_label(dg, gp);
    auto after_dg = apply_move(dg, {*kind, parse_count(c.args[1]), c.reverse}, gp);
    auto after = boundary_label(after_dg, gp);
    r["verdict"]            = "applied";
    r["boundary_preserved"] = before == after;
    describe(after_dg, gp, r);
    auto j = diagram_to_json(after_dg, gp);
    j["spec"] = group_spec_to_json(gp);
    if (!c.output.empty()) {
      std::ofstream f(c.output);
      if (!f) {
        throw error(error_code::bad_spec_file, "cannot write '" + c.output + "'");
      }
      f << j.dump(2) << '\n';
      r["output"] = c.output;
    } else if (c.format == "machine") {
      r["diagram"] = j;
    }
    return before == after ? ok : negative;
  }
}  // namespace detail

inline int run(std::vector<std::string> const& argv, std::ostream& out,
               std::ostream& err) {
  using namespace detail;
  CLI::App app{"Graph products of groups: words, conjugacy, diagrams", "gp"};
  app.require_subcommand(1);
  app.fallthrough();
  context c;
  app.add_option("--spec", c.spec_path, "Group spec file (JSON)");
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--limit-states", c.limit_states,
                 "State limit for the cyclic shuffle search");
  app.add_option("--oracle-cap", c.oracle_cap,
                 "Size cap for brute-force oracles");

  struct entry {
    char const* name;
    char const* help;
  };
  std::vector<entry> const cmds{
      {"validate", "Check a spec file"},
      {"reduce", "Graphically reduce a word"},
      {"canon", "Canonical normal form of a word"},
      {"equal", "Decide whether two words are equal"},
      {"conj", "Decide conjugacy and print a witness"},
      {"cyclred", "Cyclic reduction with conjugator"},
      {"clf-bound", "Upper bound on the conjugacy length function"},
      {"clf-scan", "Empirical conjugacy length function by brute force"},
      {"dehn", "Symbolic Dehn function class"},
      {"diagram-check", "Validate a diagram and its dual curves"},
      {"diagram-move", "Apply an elementary move to a diagram"},
  };
  std::vector<CLI::App*> subs;
  for (auto const& e : cmds) {
    auto* s = app.add_subcommand(e.name, e.help);
    s->add_option("args", c.args, "Positional arguments")->allow_extra_args();
    subs.push_back(s);
  }
  subs[3]->add_flag("--oracle", c.check_oracle,
                    "Cross-check with the rewrite-closure oracle");
  subs[9]->add_option("--segment", c.segments,
                      "Outer boundary segment START:LENGTH to test");
  subs[10]->add_flag("--reverse", c.reverse, "Reverse pentagonal move");
  subs[10]->add_option("--output", c.output, "Write the new diagram here");

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return ok;
  } catch (CLI::ParseError const& e) {
    err << "error: SyntaxError: " << e.what() << '\n';
    return input_error;
  }

  std::string const name = app.get_subcommands().front()->get_name();
  ojson             r;
  r["command"] = name;
  int code     = ok;
  try {
    if (name == "validate") code = cmd_validate(c, r);
    else if (name == "reduce") code = cmd_reduce(c, r, false);
    else if (name == "canon") code = cmd_reduce(c, r, true);
    else if (name == "equal") code = cmd_equal(c, r);
    else if (name == "conj") code = cmd_conj(c, r);
    else if (name == "cyclred") code = cmd_cyclred(c, r);
    else if (name == "clf-bound") code = cmd_clf_bound(c, r);
    else if (name == "clf-scan") code = cmd_clf_scan(c, r);
    else if (name == "dehn") code = cmd_dehn(c, r);
    else if (name == "diagram-check") code = cmd_diagram_check(c, r);
    else if (name == "diagram-move") code = cmd_diagram_move(c, r);
  } catch (error const& e) {
    code = is_resource_error(e.code()) ? resource : input_error;
    if (c.format == "machine") {
      out << ojson{{"command", name},
                   {"status", "error"},
                   {"code", std::string(to_string(e.code()))},
                   {"message", e.what()}}
                 .dump()
          << '\n';
    }
    err << "error: " << e.what() << '\n';
    return code;
  }
  r["exit"] = code;
  if (c.format == "machine") {
    out << r.dump() << '\n';
  } else {
    print_text(r, out);
  }
  return code;
}

}  // namespace gp::cli

#endif  // GP_CLI_HPP_
