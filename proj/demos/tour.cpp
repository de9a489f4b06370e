// A guided tour: build the triple automaton, watch it act on digit streams,
// decide a few word-problem questions, and recover the base-3 divider as the
// level-2 action of the base-2 one.  Run it with no arguments.

#include <iostream>

#include "mealy/families.hpp"
#include "mealy/io.hpp"
#include "mealy/schreier.hpp"
#include "mealy/suites.hpp"

using namespace mealy;

int main() {
  // The three states s0, s1, s2 read a base-2 digit stream (least significant
  // digit first) and write the stream of 3u + i.
  Automaton s32 = multiplication_automaton(3, 2);
  std::cout << "The triple automaton on binary streams:\n\n" << export_dot(s32, "s32") << "\n";

  Word six = parse_word("011", 2);  // 6 = 0 + 2 + 4
  std::cout << "s1 maps 011 (the number 6) to " << format_word(act(s32, 1, six), 2)
            << " (3*6 + 1 = 19, kept to three digits: 19 mod 8 = 3).\n\n";

  // In the group generated by the states, t = s0 is multiplication by 3 and
  // a = s1 s0^-1 adds one; together they satisfy t a t^-1 = a^3.
  GroupWord t = parse_group_word("s0", s32);
  GroupWord a = parse_group_word("s1 s0^-1", s32);
  GroupWord conj = gw_conjugate(t, a);
  Verdict v = check_relation(s32, conj, gw_pow(a, 3));
  std::cout << "t a t^-1 = a^3 is " << (v.kind == VerdictKind::trivial ? "confirmed" : "violated")
            << " after exploring " << v.explored << " sections.\n";

  v = decide_trivial(s32, a);
  std::cout << "a itself is nontrivial; the root digit " << format_word(v.witness, 2)
            << " already moves.\n\n";

  // The whole family of such relations, plus probes that must stay nontrivial:
  SuiteReport report = run_suite(bs_suite(3, 2));
  std::cout << "Relation suite for the multiplier 3: held " << report.held << "/" << report.held_total
            << ", distinct " << report.distinct << "/" << report.distinct_total
            << ", deepest witness at level " << report.max_witness_level << ".\n\n";

  // Level actions meet dualization: grouping binary digits in pairs turns
  // dividing by 3 into dividing by 4 on base-3 digits.
  Automaton d32 = dual_multiplication_automaton(3, 2);
  Automaton level2 = schreier(d32, 2);
  std::cout << "The level-2 action of the 3-divider has states";
  for (const std::string& name : level2.state_names()) std::cout << " " << name;
  std::cout << " and " << (same_tables(level2, dual_multiplication_automaton(4, 3)) ? "equals" : "differs from")
            << " the 4-divider on base-3 digits, table for table.\n";
  return 0;
}
