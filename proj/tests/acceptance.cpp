// Acceptance checks: one pass/fail line per criterion, exit 0 only if all
// pass.  Each check verifies an exact algebraic claim about the constructed
// automata; failures print an indented explanation of what broke.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mealy/families.hpp"
#include "mealy/io.hpp"
#include "mealy/isomorphism.hpp"
#include "mealy/padic.hpp"
#include "mealy/schreier.hpp"
#include "mealy/suites.hpp"
#include "mealy/words.hpp"
#include "test_util.hpp"

using namespace mealy;

namespace {

struct Check {
  bool ok = true;
  long long assertions = 0;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    ++assertions;
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

long long pow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

const std::vector<std::pair<long long, int>> kBsPairs = {{2, 3}, {3, 2}, {2, 5}, {5, 2},
                                                         {3, 4}, {4, 3}, {5, 4}};

std::string pair_tag(long long m, int n) {
  return "(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
}

void report_suite(Check& c, const RelationSuite& suite, const std::string& tag,
                  std::size_t witness_cap) {
  SuiteReport r = run_suite(suite);
  c.require(r.ok(), tag + ": " + std::to_string(r.violations.size()) + " violated relation(s), first: " +
                        (r.violations.empty() ? "-" : r.violations.front().label));
  c.require(r.max_witness_level <= witness_cap,
            tag + ": witness level " + std::to_string(r.max_witness_level) + " exceeds " +
                std::to_string(witness_cap));
}

// --- 1: solvable affine groups -------------------------------------------
void check_bs(Check& c) {
  for (auto [m, n] : kBsPairs)
    for (bool divide : {false, true})
      report_suite(c, bs_suite(m, n, 8, divide),
                   "bs " + pair_tag(m, n) + (divide ? " divide" : " multiply"), 12);
}

// --- 2: lamplighters ------------------------------------------------------
void check_lamplighters(Check& c) {
  const std::vector<PolyZn> configs = {
      {2, {1, 1}}, {3, {1, 1}}, {4, {1, 1}}, {2, {1, 1, 1}}, {3, {2, 1}}};
  for (const PolyZn& g : configs)
    report_suite(c, lamplighter_suite(g, 4), "lamplighter " + format_polynomial(g) + " mod " +
                                                 std::to_string(g.modulus), 12);
}

// --- 3: ascending HNN extensions ------------------------------------------
void check_hnn(Check& c) {
  const std::vector<std::pair<std::string, int>> configs = {
      {"3,-1;0,-1", 2}, {"-2,-1;1,0", 3}, {"-2,1;1,-1", 2}};
  for (const auto& [text, n] : configs)
    report_suite(c, hnn_suite(parse_matrix(text), n, 3),
                 "hnn [" + text + "] n=" + std::to_string(n), 12);
}

// --- 4: inversion and dualization close up --------------------------------
void check_inversion_dual(Check& c) {
  for (auto [m, n] : kBsPairs) {
    Automaton s_mn = multiplication_automaton(m, n);
    Automaton d_mn = dual_multiplication_automaton(m, n);
    Automaton d_nm = dual_multiplication_automaton(n, m);
    Automaton s_nm = multiplication_automaton(n, m);
    c.require(same_tables(invert(s_mn), d_mn), "invert(S) != D at " + pair_tag(m, n));
    c.require(same_tables(dual(d_mn), d_nm), "dual(D_{m,n}) != D_{n,m} at " + pair_tag(m, n));
    c.require(same_tables(invert(d_nm), s_nm), "invert(D_{n,m}) != S_{n,m} at " + pair_tag(m, n));
    c.require(same_tables(invert(invert(s_mn)), s_mn), "double inverse at " + pair_tag(m, n));
    c.require(same_tables(dual(dual(d_mn)), d_mn), "double dual at " + pair_tag(m, n));
  }
}

// --- 5: composition and power isomorphisms --------------------------------
void check_composition(Check& c) {
  const std::vector<std::array<long long, 3>> triples = {
      {3, 3, 2}, {3, 5, 2}, {2, 2, 3}, {2, 5, 3}};
  for (auto [m1, m2, nn] : triples) {
    const int n = static_cast<int>(nn);
    const std::string tag = "(m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2) +
                            ",n=" + std::to_string(n) + ")";

    // Multiply form: the right factor acts first, so the pair (s_i, s_j)
    // computes u -> m1*(m2*u + j) + i, the state s_{m1*j+i} of the product.
    Automaton left = compose(multiplication_automaton(m1, n), multiplication_automaton(m2, n));
    Automaton target = multiplication_automaton(m1 * m2, n);
    Isomorphism iso = identity_isomorphism(left.num_states(), n);
    for (long long i = 0; i < m1; ++i)
      for (long long j = 0; j < m2; ++j)
        iso.state_map[static_cast<std::size_t>(i * m2 + j)] = static_cast<int>(m1 * j + i);
    c.require(is_isomorphism(left, target, iso), "compose(S,S) map fails at " + tag);

    // Divide form: (d_j, d_i) computes u -> ((u - i)/m1 - j)/m2, the state
    // d_{m1*j+i} of the m1*m2 divider.
    Automaton dleft =
        compose(dual_multiplication_automaton(m2, n), dual_multiplication_automaton(m1, n));
    Automaton dtarget = dual_multiplication_automaton(m1 * m2, n);
    Isomorphism diso = identity_isomorphism(dleft.num_states(), n);
    for (long long j = 0; j < m2; ++j)
      for (long long i = 0; i < m1; ++i)
        diso.state_map[static_cast<std::size_t>(j * m1 + i)] = static_cast<int>(m1 * j + i);
    c.require(is_isomorphism(dleft, dtarget, diso), "compose(D,D) map fails at " + tag);
  }

  // Powers: the k-tuple (i_1..i_k) of s-states, rightmost acting first,
  // computes u -> m^k u + sum_j m^(j-1) i_j; for the divide form the sum has
  // the reversed weights m^(k-j).
  for (auto [m, n] : {std::pair<long long, int>{3, 2}, {5, 2}, {2, 3}, {5, 3}}) {
    for (int k = 1; k <= 3; ++k) {
      const long long mk = pow_ll(m, k);
      const std::string tag = pair_tag(m, n) + " k=" + std::to_string(k);

      Automaton sp = power(multiplication_automaton(m, n), k);
      Isomorphism iso = identity_isomorphism(static_cast<int>(mk), n);
      for (long long idx = 0; idx < mk; ++idx) {
        long long rest = idx, target = 0;
        for (int j = 1; j <= k; ++j) {  // digit j of idx (most significant first) is i_j
          const long long digit = rest / pow_ll(m, k - j);
          rest %= pow_ll(m, k - j);
          target += pow_ll(m, j - 1) * digit;
        }
        iso.state_map[static_cast<std::size_t>(idx)] = static_cast<int>(target);
      }
      c.require(is_isomorphism(sp, multiplication_automaton(mk, n), iso),
                "power(S)^k map fails at " + tag);

      Automaton dp = power(dual_multiplication_automaton(m, n), k);
      Isomorphism diso = identity_isomorphism(static_cast<int>(mk), n);
      for (long long idx = 0; idx < mk; ++idx) {
        long long rest = idx, target = 0;
        for (int j = 1; j <= k; ++j) {
          const long long digit = rest / pow_ll(m, k - j);
          rest %= pow_ll(m, k - j);
          target += pow_ll(m, k - j) * digit;
        }
        diso.state_map[static_cast<std::size_t>(idx)] = static_cast<int>(target);
      }
      c.require(is_isomorphism(dp, dual_multiplication_automaton(mk, n), diso),
                "power(D)^k map fails at " + tag);
    }
  }
}

// --- 6: level actions are powers of the dual ------------------------------
void check_schreier(Check& c) {
  const std::vector<std::pair<std::string, Automaton>> subjects = {
      {"S_{3,2}", multiplication_automaton(3, 2)},
      {"D_{3,2}", dual_multiplication_automaton(3, 2)},
      {"A_{1+t} mod 2", polynomial_automaton(PolyZn{2, {1, 1}})}};
  for (const auto& [name, a] : subjects)
    for (int k = 0; k <= 4; ++k)
      c.require(same_tables(schreier(a, k), power(dual(a), k)),
                name + " level " + std::to_string(k) + ": level action != dual power");

  Automaton sch = schreier(dual_multiplication_automaton(3, 2), 2);
  c.require(same_tables(sch, dual_multiplication_automaton(4, 3)),
            "level-2 action of the 3-divider is not the 4-divider over base 3");
  c.require(sch.state_names() == std::vector<std::string>{"00", "10", "01", "11"},
            "level-2 states are not ordered 00,10,01,11");
}

// --- 7: digit-stream oracles ----------------------------------------------
void check_oracles(Check& c) {
  long long checked = 0;

  // Scalar multipliers and dividers against the affine maps m*u+i and
  // (u-i)/m (the latter via the inverse of m modulo n^k).
  for (auto [m, n] : kBsPairs) {
    Automaton s = multiplication_automaton(m, n);
    Automaton d = dual_multiplication_automaton(m, n);
    for (const Word& w : testing::words_up_to(n, 6)) {
      const long long modulus = pow_ll(n, static_cast<int>(w.size()));
      const long long minv = w.empty() ? 1 : mod_inverse(m, modulus);
      for (int i = 0; i < s.num_states(); ++i) {
        if (act(s, i, w) != padic::affine_action(m, i, n, w)) {
          c.require(false, "multiplier state " + std::to_string(i) + " wrong at " + pair_tag(m, n));
          return;
        }
        if (act(d, i, w) != padic::affine_action(minv, -minv * i, n, w)) {
          c.require(false, "divider state " + std::to_string(i) + " wrong at " + pair_tag(m, n));
          return;
        }
        checked += 2;
      }
    }
  }

  // Shift registers against the series map p -> h_y + g*p.
  for (const PolyZn& g : {PolyZn{2, {1, 1}}, PolyZn{3, {1, 1}}, PolyZn{4, {1, 1}},
                          PolyZn{2, {1, 1, 1}}, PolyZn{3, {2, 1}}}) {
    Automaton a = polynomial_automaton(g);
    for (const Word& w : testing::words_up_to(g.modulus, 6))
      for (int q = 0; q < a.num_states(); ++q) {
        if (act(a, q, w) !=
            padic::series_action(g, padic::letter_to_vec(q, g.modulus, g.degree()), w)) {
          c.require(false, "register state " + std::to_string(q) + " wrong for " +
                               format_polynomial(g) + " mod " + std::to_string(g.modulus));
          return;
        }
        ++checked;
      }
  }

  // Vector multipliers (both carry boxes) against u -> M u + v, and the
  // negation involution against u -> -u - 1.
  struct MatrixCase {
    std::string text;
    int n;
    bool small;
  };
  const std::vector<MatrixCase> cases = {{"3,-1;0,-1", 2, false}, {"-2,-1;1,0", 3, false},
                                         {"-2,1;1,-1", 2, false}, {"3", 2, false},
                                         {"-3", 2, false},        {"-3,1;0,1", 2, false},
                                         {"3", 2, true},          {"-2,1;1,-1", 2, true}};
  for (const auto& mc : cases) {
    IntMatrix mat = parse_matrix(mc.text);
    Automaton a = mc.small ? small_matrix_automaton(mat, mc.n) : matrix_automaton(mat, mc.n);
    auto vectors = mc.small ? small_matrix_state_vectors(mat) : matrix_state_vectors(mat);
    const int max_len = mat.dim >= 2 ? 4 : 6;
    for (const Word& w : testing::words_up_to(a.num_letters(), max_len))
      for (int q = 0; q < a.num_states(); ++q) {
        if (act(a, q, w) != padic::matrix_affine_action(mat, vectors[q], mc.n, w)) {
          c.require(false, "matrix state " + std::to_string(q) + " wrong for [" + mc.text +
                               "] n=" + std::to_string(mc.n) + (mc.small ? " small" : ""));
          return;
        }
        ++checked;
      }
  }
  for (int d : {1, 2}) {
    Automaton neg = negation_involution(2, d);
    IntMatrix minus_one = IntMatrix::identity(d).negated();
    const std::vector<long long> shift(static_cast<std::size_t>(d), -1);
    for (const Word& w : testing::words_up_to(neg.num_letters(), d >= 2 ? 4 : 6)) {
      if (act(neg, 0, w) != padic::matrix_affine_action(minus_one, shift, 2, w)) {
        c.require(false, "negation involution wrong in dimension " + std::to_string(d));
        return;
      }
      ++checked;
    }
  }

  c.require(checked > 0, "no oracle comparisons ran");
  c.assertions += checked - 1;  // count every compared pair, not just the final gate
}

// --- 8: transition monoids ------------------------------------------------
void check_monoids(Check& c) {
  for (int n : {3, 4, 5}) {
    TransitionMonoid m = transition_monoid(invert(polynomial_automaton(PolyZn{n, {1, 1}})));
    const std::string tag = "inverse register mod " + std::to_string(n);
    c.require(m.order() == 2 * static_cast<std::size_t>(n),
              tag + ": order " + std::to_string(m.order()) + " != " + std::to_string(2 * n));
    c.require(m.is_group, tag + ": not a group");
    c.require(!m.commutative, tag + ": unexpectedly abelian");
  }
  TransitionMonoid m2 = transition_monoid(invert(polynomial_automaton(PolyZn{2, {1, 1}})));
  c.require(m2.order() == 2 && m2.is_group, "inverse register mod 2 is not the 2-element group");
  TransitionMonoid s32 = transition_monoid(multiplication_automaton(3, 2));
  c.require(!s32.is_group, "triple-by-3 monoid should not be a group");
  c.require(s32.order() == 7, "triple-by-3 monoid order " + std::to_string(s32.order()) + " != 7");
}

// --- 9: conjugation by the negation involution ----------------------------
void check_negation_conjugation(Check& c) {
  for (const std::string& text : {std::string("3"), std::string("3,-1;0,-1")}) {
    IntMatrix mat = parse_matrix(text);
    IntMatrix neg_mat = mat.negated();
    Automaton t_pos = matrix_automaton(mat, 2);
    Automaton t_neg = matrix_automaton(neg_mat, 2);
    Automaton xi = negation_involution(2, mat.dim);
    Automaton composed = compose(xi, t_neg);

    auto neg_vectors = matrix_state_vectors(neg_mat);
    auto pos_vectors = matrix_state_vectors(mat);
    Isomorphism iso = identity_isomorphism(composed.num_states(), composed.num_letters());
    bool mapped = true;
    for (std::size_t q = 0; q < neg_vectors.size(); ++q) {
      std::vector<long long> image = neg_vectors[q];
      for (long long& x : image) x = -x - 1;
      const int target = find_state_vector(pos_vectors, image);
      if (target < 0) mapped = false;
      iso.state_map[q] = target;
    }
    c.require(mapped, "[" + text + "]: -v-1 leaves the carry box");
    c.require(mapped && is_isomorphism(composed, t_pos, iso),
              "[" + text + "]: negation followed by the -M multiplier is not the M multiplier");
  }
}

// --- 10: row-sum carry boxes ----------------------------------------------
void check_small_box(Check& c) {
  c.require(same_tables(small_matrix_automaton(parse_matrix("3"), 2), multiplication_automaton(3, 2)),
            "row-sum box of [3] is not the triple automaton");

  IntMatrix mat = parse_matrix("-2,1;1,-1");
  auto vectors = small_matrix_state_vectors(mat);
  const std::vector<std::vector<long long>> expected = {
      {0, 0}, {-1, 0}, {-2, 0}, {0, -1}, {-1, -1}, {-2, -1}};
  c.require(vectors.size() == expected.size(), "row-sum box size != 6");
  bool same_set = vectors.size() == expected.size();
  for (const auto& v : expected)
    if (find_state_vector(vectors, v) < 0) same_set = false;
  c.require(same_set, "row-sum box is not the expected 6 carries");

  // Dropping the first and last carries of that list keeps a closed table.
  Automaton a = small_matrix_automaton(mat, 2);
  std::vector<bool> kept(vectors.size(), true);
  const int first = find_state_vector(vectors, {0, 0});
  const int last = find_state_vector(vectors, {-2, -1});
  c.require(first >= 0 && last >= 0, "boundary carries missing from the box");
  if (first >= 0 && last >= 0) {
    kept[static_cast<std::size_t>(first)] = false;
    kept[static_cast<std::size_t>(last)] = false;
    bool closed = true;
    for (int q = 0; q < a.num_states(); ++q) {
      if (!kept[static_cast<std::size_t>(q)]) continue;
      for (int x = 0; x < a.num_letters(); ++x)
        if (!kept[static_cast<std::size_t>(a.tau(q, x))]) closed = false;
    }
    c.require(closed, "4-state interior is not closed under transitions");
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"solvable affine relations over seven bases, both forms", check_bs},
      {"lamplighter relations for five register configurations", check_lamplighters},
      {"HNN-extension relations for three integer matrices", check_hnn},
      {"inversion and dualization exchange the four table families", check_inversion_dual},
      {"composition and powers multiply the scalar constants", check_composition},
      {"level-k actions equal powers of the dual", check_schreier},
      {"every state matches its digit-stream oracle", check_oracles},
      {"transition monoids: dihedral sizes and a non-group", check_monoids},
      {"negation conjugates the -M multiplier to the M multiplier", check_negation_conjugation},
      {"row-sum carry boxes: scalar match and closed interior", check_small_box},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %2zu. %s (%lld checks)\n", c.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), c.assertions);
    for (const std::string& note : c.notes) std::printf("       - %s\n", note.c_str());
    if (!c.ok) ++failed;
  }
  if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
