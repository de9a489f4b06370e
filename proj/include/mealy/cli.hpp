#pragma once

/// @file cli.hpp
/// The command line front end, callable in process: run_cli(args, out, err)
/// parses the argument vector (without a program name) and executes one verb.
///
/// Exit codes: 0 success / a true answer, 1 a false answer (not isomorphic,
/// nontrivial, relation violated, suite failed), 2 usage or input errors,
/// 3 inconclusive under the configured search caps.
///
/// Query verbs print one machine-readable line on stdout; construction and
/// transformation verbs print an automaton as JSON.  File arguments accept
/// "-" for standard input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mealy/families.hpp"
#include "mealy/io.hpp"
#include "mealy/isomorphism.hpp"
#include "mealy/schreier.hpp"
#include "mealy/suites.hpp"
#include "mealy/words.hpp"

namespace mealy {

namespace detail {

inline Automaton load_automaton(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return from_json(ss.str());
  }
  return read_automaton(path);
}

inline std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      fail(errc::parse_error, "expected an integer, got '" + item + "'");
    }
    if (pos != item.size() || item.empty()) fail(errc::parse_error, "trailing characters in '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) fail(errc::parse_error, "empty integer list");
  return out;
}

/// Act by a state word.  All-positive words run the plain tables (works for
/// non-invertible automata too); words with inverse factors need gw_act.
inline Word cli_act(const Automaton& aut, const GroupWord& w, const Word& input) {
  const bool all_positive = std::all_of(w.begin(), w.end(), [](const Factor& f) { return f.sign > 0; });
  if (!all_positive) return gw_act(aut, w, input);
  Word cur = input;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act(aut, it->state, cur);
  return cur;
}

/// Section of a state word at a tree word, with the same non-invertible
/// allowance for all-positive words.
inline GroupWord cli_section(const Automaton& aut, const GroupWord& w, const Word& path) {
  const bool all_positive = std::all_of(w.begin(), w.end(), [](const Factor& f) { return f.sign > 0; });
  if (!all_positive) return gw_section(aut, w, path);
  GroupWord sec(w.size(), Factor{0, +1});
  Word local = path;
  for (std::size_t i = w.size(); i-- > 0;) {
    sec[i] = Factor{section(aut, w[i].state, local), +1};
    local = act(aut, w[i].state, local);
  }
  return sec;
}

inline DecideOptions decide_options(std::size_t max_level, std::size_t max_nodes) {
  DecideOptions opts;
  opts.max_level = max_level == 0 ? std::numeric_limits<std::size_t>::max() : max_level;
  opts.max_nodes = max_nodes == 0 ? std::numeric_limits<std::size_t>::max() : max_nodes;
  return opts;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

inline WreathState parse_wreath_state(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    fail(errc::parse_error, "expected name:outputs:sections, got '" + text + "'");
  WreathState s;
  s.name = text.substr(0, c1);
  if (s.name.empty()) fail(errc::parse_error, "empty state name in '" + text + "'");
  for (long long v : parse_int_list(text.substr(c1 + 1, c2 - c1 - 1))) s.outputs.push_back(static_cast<int>(v));
  std::stringstream ss(text.substr(c2 + 1));
  std::string item;
  while (std::getline(ss, item, ',')) s.sections.push_back(item);
  return s;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite synchronous transducers acting on the rooted n-ary tree", "mealy"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");
  int exit_code = 0;
  std::string o_path;
  auto emit_text = [&](const std::string& text) {
    if (o_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(o_path, std::ios::binary);
    if (!f) fail(errc::bad_argument, "cannot open '" + o_path + "' for writing");
    f << text;
  };
  auto emit = [&](const Automaton& a) { emit_text(to_json(a)); };
  auto add_output = [&](CLI::App* sc) {
    sc->add_option("-o,--output", o_path, "write to this file instead of standard output");
  };

  // ---- build ---------------------------------------------------------
  auto* build = app.add_subcommand("build", "construct a standard automaton and print it as JSON");
  build->require_subcommand(1);

  long long b_m = 0;
  int b_n = 0;
  auto* build_s = build->add_subcommand("s", "multiply-by-m over base n: state s_i acts as u -> m*u + i");
  build_s->add_option("-m,--m,--multiplier", b_m, "the multiplier m (coprime to n)")->required();
  build_s->add_option("-n,--n,--base", b_n, "the alphabet size n")->required();
  add_output(build_s);
  build_s->callback([&] { emit(multiplication_automaton(b_m, b_n)); });

  auto* build_d = build->add_subcommand("d", "divide-by-m over base n: state d_i acts as u -> (u - i)/m");
  build_d->add_option("-m,--m,--multiplier", b_m, "the divisor m (coprime to n)")->required();
  build_d->add_option("-n,--n,--base", b_n, "the alphabet size n")->required();
  add_output(build_d);
  build_d->callback([&] { emit(dual_multiplication_automaton(b_m, b_n)); });

  std::string b_matrix;
  bool b_allow_finite = false;
  auto* build_t = build->add_subcommand("t", "multiply-by-M on vectors: state t_v acts as u -> M u + v, symmetric carry box");
  build_t->add_option("--matrix", b_matrix, "square integer matrix, rows separated by ';' (e.g. \"3,-1;0,-1\")")->required();
  build_t->add_option("-n,--n,--base", b_n, "digit base of each coordinate")->required();
  build_t->add_flag("--allow-finite-order", b_allow_finite, "skip the infinite-order check on M");
  add_output(build_t);
  build_t->callback([&] { emit(matrix_automaton(parse_matrix(b_matrix), b_n, !b_allow_finite)); });

  auto* build_smat = build->add_subcommand("smat", "multiply-by-M on the tighter row-sum carry box");
  build_smat->add_option("--matrix", b_matrix, "square integer matrix, rows separated by ';'")->required();
  build_smat->add_option("-n,--n,--base", b_n, "digit base of each coordinate")->required();
  build_smat->add_flag("--allow-finite-order", b_allow_finite, "skip the infinite-order check on M");
  add_output(build_smat);
  build_smat->callback([&] { emit(small_matrix_automaton(parse_matrix(b_matrix), b_n, !b_allow_finite)); });

  std::string b_coeffs;
  auto* build_poly = build->add_subcommand("poly", "window transducer of a polynomial g over Z/n: states act as p -> h + g*p");
  build_poly->add_option("--coeffs", b_coeffs, "coefficients of g, constant term first (e.g. \"1,1\" for 1 + t)")->required();
  build_poly->add_option("-n,--n,--modulus", b_n, "the modulus n")->required();
  add_output(build_poly);
  build_poly->callback([&] { emit(polynomial_automaton(PolyZn{b_n, detail::parse_int_list(b_coeffs)})); });

  int b_dim = 1;
  auto* build_neg = build->add_subcommand("neg", "one-state involution x -> -x-1 in every coordinate");
  build_neg->add_option("-n,--n,--base", b_n, "digit base")->required();
  build_neg->add_option("-d,--dim", b_dim, "number of coordinates (default 1)");
  add_output(build_neg);
  build_neg->callback([&] { emit(negation_involution(b_n, b_dim)); });

  auto* build_id = build->add_subcommand("identity", "the one-state identity automaton");
  build_id->add_option("-n,--n,--base", b_n, "alphabet size")->required();
  add_output(build_id);
  build_id->callback([&] { emit(identity_automaton(b_n)); });

  std::vector<std::string> b_states;
  auto* build_wreath = build->add_subcommand("wreath", "automaton from wreath recursion rows");
  build_wreath->add_option("-n,--n,--base", b_n, "alphabet size")->required();
  build_wreath
      ->add_option("--state", b_states,
                   "one row name:outputs:sections, e.g. \"a:1,0:e,e\" (repeat per state)")
      ->required();
  add_output(build_wreath);
  build_wreath->callback([&] {
    std::vector<WreathState> rows;
    for (const auto& text : b_states) rows.push_back(detail::parse_wreath_state(text));
    emit(from_wreath_recursion(b_n, rows));
  });

  // ---- transforms ----------------------------------------------------
  std::string f_a, f_b, f_element, f_word, f_lhs, f_rhs;
  int f_k = 0;

  auto* vinvert = app.add_subcommand("invert", "print the inverse automaton as JSON");
  vinvert->add_option("file", f_a, "automaton JSON file or -")->required();
  add_output(vinvert);
  vinvert->callback([&] { emit(invert(detail::load_automaton(f_a))); });

  auto* vdual = app.add_subcommand("dual", "print the dual automaton (states and letters exchanged) as JSON");
  vdual->add_option("file", f_a, "automaton JSON file or -")->required();
  add_output(vdual);
  vdual->callback([&] { emit(dual(detail::load_automaton(f_a))); });

  auto* vminimize = app.add_subcommand("minimize", "print the action-equivalence quotient as JSON");
  vminimize->add_option("file", f_a, "automaton JSON file or -")->required();
  add_output(vminimize);
  vminimize->callback([&] { emit(minimize(detail::load_automaton(f_a)).automaton); });

  auto* vcompose = app.add_subcommand("compose", "compose two automata over the same alphabet (the right one reads the input first)");
  vcompose->add_option("left", f_a, "outer automaton JSON file or -")->required();
  vcompose->add_option("right", f_b, "inner automaton JSON file")->required();
  add_output(vcompose);
  vcompose->callback([&] { emit(compose(detail::load_automaton(f_a), detail::load_automaton(f_b))); });

  auto* vpower = app.add_subcommand("power", "k-fold composition of an automaton with itself");
  vpower->add_option("file", f_a, "automaton JSON file or -")->required();
  vpower->add_option("k", f_k, "exponent, k >= 0")->required();
  add_output(vpower);
  vpower->callback([&] { emit(power(detail::load_automaton(f_a), f_k)); });

  auto* vschreier = app.add_subcommand("schreier", "level-k action automaton: states are the level words, letters the original states");
  vschreier->add_option("file", f_a, "automaton JSON file or -")->required();
  vschreier->add_option("k", f_k, "tree level, k >= 0")->required();
  add_output(vschreier);
  vschreier->callback([&] { emit(schreier(detail::load_automaton(f_a), f_k)); });

  std::string f_name = "automaton";
  auto* vdot = app.add_subcommand("export-dot", "print the automaton as a Graphviz digraph");
  vdot->add_option("file", f_a, "automaton JSON file or -")->required();
  vdot->add_option("--name", f_name, "graph name (default: automaton)");
  add_output(vdot);
  vdot->callback([&] { emit_text(export_dot(detail::load_automaton(f_a), f_name)); });

  // ---- queries -------------------------------------------------------
  auto* vact = app.add_subcommand("act", "image of a tree word under a state word");
  vact->add_option("file", f_a, "automaton JSON file or -")->required();
  vact->add_option("element", f_element, "state word, e.g. \"s1 s0^-1\" (leftmost factor applied last)")->required();
  vact->add_option("-w,--word", f_word, "tree word: digits (\"011\") or comma list; empty = root");
  vact->callback([&] {
    Automaton aut = detail::load_automaton(f_a);
    Word input = parse_word(f_word, aut.num_letters());
    out << format_word(detail::cli_act(aut, parse_group_word(f_element, aut), input), aut.num_letters()) << "\n";
  });

  auto* vsection = app.add_subcommand("section", "section of a state word at a tree word (printed reduced)");
  vsection->add_option("file", f_a, "automaton JSON file or -")->required();
  vsection->add_option("element", f_element, "state word, e.g. \"s1 s0^-1\"")->required();
  vsection->add_option("-w,--word", f_word, "tree word; empty = root");
  vsection->callback([&] {
    Automaton aut = detail::load_automaton(f_a);
    Word path = parse_word(f_word, aut.num_letters());
    out << format_group_word(gw_reduce(detail::cli_section(aut, parse_group_word(f_element, aut), path)), aut) << "\n";
  });

  std::string f_kind;
  auto* vcheck = app.add_subcommand("check", "test a table property; prints true/false, exit 0/1");
  vcheck->add_option("property", f_kind, "invertible | bi-invertible")
      ->required()
      ->check(CLI::IsMember({"invertible", "bi-invertible"}));
  vcheck->add_option("file", f_a, "automaton JSON file or -")->required();
  vcheck->callback([&] {
    Automaton aut = detail::load_automaton(f_a);
    const bool result = f_kind == "invertible" ? aut.is_invertible() : is_bi_invertible(aut);
    out << (result ? "true" : "false") << "\n";
    exit_code = result ? 0 : 1;
  });

  bool f_fix_alphabet = false;
  auto* viso = app.add_subcommand("isomorphic", "search for an isomorphism between two automata; exit 0 if found, 1 if none");
  viso->add_option("left", f_a, "automaton JSON file or -")->required();
  viso->add_option("right", f_b, "automaton JSON file")->required();
  viso->add_flag("--fix-alphabet", f_fix_alphabet, "only consider the identity letter map");
  viso->callback([&] {
    auto iso = find_isomorphism(detail::load_automaton(f_a), detail::load_automaton(f_b), f_fix_alphabet);
    if (iso) {
      out << "isomorphic=true states=" << detail::join_ints(iso->state_map)
          << " letters=" << detail::join_ints(iso->letter_map) << "\n";
    } else {
      out << "isomorphic=false\n";
      exit_code = 1;
    }
  });

  std::size_t f_max_elements = 1000000;
  auto* vmonoid = app.add_subcommand("monoid", "closure of the per-letter state maps under composition");
  vmonoid->add_option("file", f_a, "automaton JSON file or -")->required();
  vmonoid->add_option("--max-elements", f_max_elements, "abort beyond this many elements (default 1000000)");
  vmonoid->callback([&] {
    TransitionMonoid m = transition_monoid(detail::load_automaton(f_a), f_max_elements);
    out << "order=" << m.order() << " group=" << (m.is_group ? "true" : "false")
        << " commutative=" << (m.commutative ? "true" : "false") << "\n";
  });

  // ---- word problem --------------------------------------------------
  std::size_t f_max_level = 12, f_max_nodes = 0;
  long long f_bound = 64;
  auto* vword = app.add_subcommand("word", "decide word-problem questions about state words");
  vword->require_subcommand(1);

  auto* wtrivial = vword->add_subcommand("trivial", "is the state word the identity? exit 0 yes, 1 no, 3 inconclusive");
  wtrivial->add_option("file", f_a, "automaton JSON file or -")->required();
  wtrivial->add_option("element", f_element, "state word, e.g. \"s0 s1 s0^-1\"")->required();
  wtrivial->add_option("--max-level", f_max_level, "witness search depth cap, 0 = unlimited (default 12)");
  wtrivial->add_option("--max-nodes", f_max_nodes, "visited-section cap, 0 = unlimited (default unlimited)");
  wtrivial->callback([&] {
    Automaton aut = detail::load_automaton(f_a);
    Verdict v = decide_trivial(aut, parse_group_word(f_element, aut), detail::decide_options(f_max_level, f_max_nodes));
    switch (v.kind) {
      case VerdictKind::trivial:
        out << "verdict=trivial explored=" << v.explored << "\n";
        break;
      case VerdictKind::nontrivial:
        out << "verdict=nontrivial witness=" << format_word(v.witness, aut.num_letters())
            << " explored=" << v.explored << "\n";
        exit_code = 1;
        break;
      case VerdictKind::bound_exceeded:
        out << "verdict=bound-exceeded explored=" << v.explored << "\n";
        exit_code = 3;
        break;
    }
  });

  auto* worder = vword->add_subcommand("order", "smallest power of the state word that is trivial, searched up to a bound");
  worder->add_option("file", f_a, "automaton JSON file or -")->required();
  worder->add_option("element", f_element, "state word")->required();
  worder->add_option("--bound", f_bound, "largest exponent tried (default 64)");
  worder->add_option("--max-level", f_max_level, "witness search depth cap per power, 0 = unlimited (default 12)");
  worder->add_option("--max-nodes", f_max_nodes, "visited-section cap per power, 0 = unlimited");
  worder->callback([&] {
    Automaton aut = detail::load_automaton(f_a);
    OrderResult r = order_bounded(aut, parse_group_word(f_element, aut), f_bound,
                                  detail::decide_options(f_max_level, f_max_nodes));
    switch (r.kind) {
      case OrderKind::finite:
        out << "order=" << r.order << "\n";
        break;
      case OrderKind::exceeds_bound:
        out << "order=exceeds-bound\n";
        exit_code = 1;
        break;
      case OrderKind::undecided:
        out << "order=undecided\n";
        exit_code = 3;
        break;
    }
  });

  auto* wrelation = vword->add_subcommand("relation", "do two state words act identically? exit 0 yes, 1 no, 3 inconclusive");
  wrelation->add_option("file", f_a, "automaton JSON file or -")->required();
  wrelation->add_option("lhs", f_lhs, "left state word")->required();
  wrelation->add_option("rhs", f_rhs, "right state word")->required();
  wrelation->add_option("--max-level", f_max_level, "witness search depth cap, 0 = unlimited (default 12)");
  wrelation->add_option("--max-nodes", f_max_nodes, "visited-section cap, 0 = unlimited");
  wrelation->callback([&] {
    Automaton aut = detail::load_automaton(f_a);
    Verdict v = check_relation(aut, parse_group_word(f_lhs, aut), parse_group_word(f_rhs, aut),
                               detail::decide_options(f_max_level, f_max_nodes));
    switch (v.kind) {
      case VerdictKind::trivial:
        out << "equal=true explored=" << v.explored << "\n";
        break;
      case VerdictKind::nontrivial:
        out << "equal=false witness=" << format_word(v.witness, aut.num_letters()) << " explored=" << v.explored
            << "\n";
        exit_code = 1;
        break;
      case VerdictKind::bound_exceeded:
        out << "equal=bound-exceeded explored=" << v.explored << "\n";
        exit_code = 3;
        break;
    }
  });

  // ---- relation suites -----------------------------------------------
  std::size_t s_max_level = 0, s_max_nodes = 0;
  long long s_bound = 0;
  bool s_divide_form = false, s_show_generators = false;
  std::string s_coeffs, s_matrix;
  long long s_m = 0;
  int s_n = 0;
  auto* vsuite = app.add_subcommand("suite", "run a family's expected relations; exit 0 if all behave as claimed");
  vsuite->require_subcommand(1);

  auto add_suite_common = [&](CLI::App* sc) {
    sc->add_option("--max-level", s_max_level, "witness search depth cap, 0 = unlimited (default unlimited)");
    sc->add_option("--max-nodes", s_max_nodes, "visited-section cap, 0 = unlimited (default unlimited)");
    sc->add_flag("--show-generators", s_show_generators, "also print the derived generator words");
  };
  auto run_and_report = [&](const RelationSuite& suite) {
    if (s_show_generators)
      for (const auto& g : suite.generators)
        out << "generator " << g.name << " = " << format_group_word(g.word, suite.automaton) << "\n";
    SuiteReport report = run_suite(suite, detail::decide_options(s_max_level, s_max_nodes));
    out << "ok=" << (report.ok() ? "true" : "false") << " held=" << report.held << "/" << report.held_total
        << " distinct=" << report.distinct << "/" << report.distinct_total
        << " max-witness-level=" << report.max_witness_level << "\n";
    bool all_capped = !report.violations.empty();
    for (const auto& v : report.violations) {
      out << "violation expected=" << (v.expected_identity ? "identity" : "distinct") << " verdict=";
      switch (v.verdict) {
        case VerdictKind::trivial:
          out << "trivial";
          break;
        case VerdictKind::nontrivial:
          out << "nontrivial witness=" << format_word(v.witness, suite.automaton.num_letters());
          break;
        case VerdictKind::bound_exceeded:
          out << "bound-exceeded";
          break;
      }
      if (v.verdict != VerdictKind::bound_exceeded) all_capped = false;
      out << " label=" << v.label << "\n";
    }
    if (!report.ok()) exit_code = all_capped ? 3 : 1;
  };

  auto* sbs = vsuite->add_subcommand("bs", "solvable affine group BS(1,m) over base n");
  sbs->add_option("-m,--m,--multiplier", s_m, "the multiplier m >= 2, coprime to n")->required();
  sbs->add_option("-n,--n,--base", s_n, "the alphabet size n")->required();
  sbs->add_option("--bound", s_bound, "exponent bound for the probes (default 8)");
  sbs->add_flag("--divide-form", s_divide_form, "use the divide-by-m automaton instead");
  add_suite_common(sbs);
  sbs->callback([&] { run_and_report(bs_suite(s_m, s_n, s_bound == 0 ? 8 : s_bound, s_divide_form)); });

  auto* slamp = vsuite->add_subcommand("lamplighter", "lamplighter-type group of a polynomial over Z/n");
  slamp->add_option("--coeffs", s_coeffs, "coefficients of g, constant term first")->required();
  slamp->add_option("-n,--n,--modulus", s_n, "the modulus n")->required();
  slamp->add_option("--bound", s_bound, "shift-conjugation bound (default 6)");
  add_suite_common(slamp);
  slamp->callback(
      [&] { run_and_report(lamplighter_suite(PolyZn{s_n, detail::parse_int_list(s_coeffs)}, s_bound == 0 ? 6 : s_bound)); });

  auto* shnn = vsuite->add_subcommand("hnn", "ascending HNN extension of Z^d by an integer matrix");
  shnn->add_option("--matrix", s_matrix, "square integer matrix, rows separated by ';'")->required();
  shnn->add_option("-n,--n,--base", s_n, "digit base of each coordinate")->required();
  shnn->add_option("--bound", s_bound, "exponent bound for the probe grid (default 3)");
  add_suite_common(shnn);
  shnn->callback([&] { run_and_report(hnn_suite(parse_matrix(s_matrix), s_n, s_bound == 0 ? 3 : s_bound)); });

  // ---- parse and dispatch --------------------------------------------
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const automaton_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace mealy
