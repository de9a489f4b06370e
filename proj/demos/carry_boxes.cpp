// Vector multipliers: the states of the matrix transducer are the carries
// that can accumulate while multiplying a vector of digit streams by an
// integer matrix.  This demo prints both carry boxes for one matrix, checks
// the conjugation t a1 t^-1 against the matrix column, and shows the
// negation trick that swaps M and -M.

#include <iostream>

#include "mealy/families.hpp"
#include "mealy/io.hpp"
#include "mealy/isomorphism.hpp"
#include "mealy/suites.hpp"

using namespace mealy;

int main() {
  IntMatrix m = parse_matrix("3,-1;0,-1");
  std::cout << "M = " << format_matrix(m) << " acting on pairs of binary streams.\n\n";

  Automaton big = matrix_automaton(m, 2);
  Automaton small = small_matrix_automaton(m, 2);
  std::cout << "Symmetric carry box: " << big.num_states() << " states; row-sum box: "
            << small.num_states() << " states:";
  for (const std::string& name : small.state_names()) std::cout << " " << name;
  std::cout << "\n\n";

  RelationSuite suite = hnn_suite(m, 2);
  for (const NamedWord& g : suite.generators)
    std::cout << "generator " << g.name << " = " << format_group_word(g.word, suite.automaton) << "\n";
  SuiteReport report = run_suite(suite);
  std::cout << "conjugating a basis translation by t multiplies it by a column of M: held "
            << report.held << "/" << report.held_total << "; " << report.distinct << "/"
            << report.distinct_total << " probe words confirmed nontrivial.\n\n";

  // Negating every digit stream (x -> -x-1 in each coordinate) conjugates the
  // multiplier by -M into the multiplier by M.
  Automaton flip_then_negate = compose(negation_involution(2, m.dim), matrix_automaton(m.negated(), 2));
  std::cout << "negation o (-M multiplier) "
            << (find_isomorphism(flip_then_negate, big, true) ? "is" : "is not")
            << " isomorphic to the M multiplier." << std::endl;
  return 0;
}
