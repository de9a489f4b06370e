#pragma once

/// @file suites.hpp
/// Ready-made relation suites: for each family automaton, the group
/// presentation its states are expected to realize, split into identities
/// that must hold on the whole tree and probe words that must not.
/// run_suite checks every entry with the exact word-problem decision.

#include <string>
#include <vector>

#include "mealy/families.hpp"
#include "mealy/words.hpp"

namespace mealy {

/// A claimed identity (or, in must_fail position, a claimed non-identity)
/// between two words over the automaton's states.
struct Relation {
  GroupWord lhs;
  GroupWord rhs;
  std::string label;
};

/// A derived generator with its display name.
struct NamedWord {
  std::string name;
  GroupWord word;
};

/// An automaton together with the relations its group is expected to
/// satisfy (must_hold) and the probe words expected to stay nontrivial
/// (must_fail).
struct RelationSuite {
  Automaton automaton;
  std::string description;
  std::vector<NamedWord> generators;
  std::vector<Relation> must_hold;
  std::vector<Relation> must_fail;
};

namespace detail {

inline std::string pow_label(const std::string& base, long long k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

/// "t^k a t^-k" with the right signs and collapsed exponents.
inline std::string conj_label(const std::string& t, long long k, const std::string& inner) {
  return pow_label(t, k) + " " + inner + " " + pow_label(t, -k);
}

inline std::string commutator_label(const std::string& a, const std::string& b) {
  return "[" + a + ", " + b + "]";
}

}  // namespace detail

/// Suite for the solvable Baumslag-Solitar group BS(1,m) = <a, t | t a t^-1
/// = a^m> realized on the base-n tree (gcd(m, n) = 1, m >= 2).  In the
/// multiply form the states s_i act as u -> m u + i and the generators are
/// t = s0, a = s1 s0^-1 (so a adds 1); in the divide form (on_dual) the
/// states d_i act as u -> (u - i) / m and t = d0^-1, a = d1^-1 d0.
/// must_hold: t a^e t^-1 = a^(m e) for 0 < |e| <= bound.
/// must_fail: t and the powers a^k, 1 <= k <= bound.
inline RelationSuite bs_suite(long long m, int n, long long bound = 8, bool on_dual = false) {
  if (m < 2) fail(errc::bad_argument, "BS(1,m) needs m >= 2");
  if (bound < 1) fail(errc::bad_argument, "bound must be at least 1");
  RelationSuite suite{
      on_dual ? dual_multiplication_automaton(m, n) : multiplication_automaton(m, n),
      "Baumslag-Solitar group BS(1," + std::to_string(m) + ") on the base-" + std::to_string(n) +
          " tree (" + (on_dual ? "divide" : "multiply") + " form)",
      {},
      {},
      {}};
  GroupWord t, a;
  if (on_dual) {
    t = gw_inverse(gw(0));
    a = gw_concat(gw_inverse(gw(1)), gw(0));
  } else {
    t = gw(0);
    a = gw_concat(gw(1), gw_inverse(gw(0)));
  }
  suite.generators = {{"t", t}, {"a", a}};
  for (long long e = -bound; e <= bound; ++e) {
    if (e == 0) continue;
    suite.must_hold.push_back({gw_conjugate(t, gw_pow(a, e)), gw_pow(a, m * e),
                               detail::conj_label("t", 1, detail::pow_label("a", e)) + " = " +
                                   detail::pow_label("a", m * e)});
  }
  suite.must_fail.push_back({t, {}, "t"});
  for (long long k = 1; k <= bound; ++k) suite.must_fail.push_back({gw_pow(a, k), {}, detail::pow_label("a", k)});
  return suite;
}

/// Suite for the lamplighter-type group of a polynomial g over Z/n (monic,
/// unit constant term, degree d): the wreath-like extension of (Z/n)^(Z) by
/// the shift, realized by polynomial_automaton(g).  The state with window y
/// acts on series as p -> U y + g p, so t = q_0 multiplies by g and
/// a_i = q_{y(i)} q_0^-1 with U y(i) = e_i adds the monomial t^i.
/// must_hold: a_i^n, pairwise commutators, and commutators with every
/// t-conjugate t^k a_j t^-k for 0 < |k| <= bound.
/// must_fail: t and the powers a_i^k with k not divisible by n.
inline RelationSuite lamplighter_suite(const PolyZn& g_in, long long bound = 6) {
  if (bound < 1) fail(errc::bad_argument, "bound must be at least 1");
  PolyZn g = normalize_polynomial(g_in);
  const int d = g.degree();
  const int n = g.modulus;
  RelationSuite suite{polynomial_automaton(g),
                      "lamplighter group of " + format_polynomial(g) + " over Z/" + std::to_string(n),
                      {},
                      {},
                      {}};
  GroupWord t = gw(0);
  suite.generators.push_back({"t", t});
  std::vector<GroupWord> a;
  std::vector<std::string> a_name;
  for (int i = 0; i < d; ++i) {
    // back substitution for U y = e_i; U is upper triangular with unit
    // diagonal, U[r][c] = coeff(d - (c - r)) for c >= r
    std::vector<int> y(static_cast<std::size_t>(d), 0);
    for (int r = d - 1; r >= 0; --r) {
      long long acc = (r == i) ? 1 : 0;
      for (int c = r + 1; c < d; ++c) acc -= g.coeffs[static_cast<std::size_t>(d - (c - r))] * y[static_cast<std::size_t>(c)];
      y[static_cast<std::size_t>(r)] = static_cast<int>(padic::floor_divmod(acc, n).rem);
    }
    a.push_back(gw_concat(gw(padic::vec_to_letter(y, n)), gw_inverse(gw(0))));
    a_name.push_back("a" + std::to_string(i));
    suite.generators.push_back({a_name.back(), a.back()});
  }
  for (int i = 0; i < d; ++i)
    suite.must_hold.push_back({gw_pow(a[static_cast<std::size_t>(i)], n), {}, detail::pow_label(a_name[static_cast<std::size_t>(i)], n)});
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      suite.must_hold.push_back({gw_commutator(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]),
                                 {},
                                 detail::commutator_label(a_name[static_cast<std::size_t>(i)], a_name[static_cast<std::size_t>(j)])});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (long long k = -bound; k <= bound; ++k) {
        if (k == 0) continue;
        GroupWord conj = gw_concat(gw_pow(t, k), gw_concat(a[static_cast<std::size_t>(j)], gw_pow(t, -k)));
        suite.must_hold.push_back({gw_commutator(a[static_cast<std::size_t>(i)], conj),
                                   {},
                                   detail::commutator_label(a_name[static_cast<std::size_t>(i)],
                                                            detail::conj_label("t", k, a_name[static_cast<std::size_t>(j)]))});
      }
  suite.must_fail.push_back({t, {}, "t"});
  for (int i = 0; i < d; ++i)
    for (long long k = 1; k <= bound; ++k) {
      if (k % n == 0) continue;
      suite.must_fail.push_back({gw_pow(a[static_cast<std::size_t>(i)], k), {}, detail::pow_label(a_name[static_cast<std::size_t>(i)], k)});
    }
  return suite;
}

/// Suite for the ascending HNN extension of Z^d by an infinite-order matrix
/// M with gcd(det M, n) = 1: <a_1..a_d, t | [a_i, a_j], t a_i t^-1 =
/// a_1^M(1,i) ... a_d^M(d,i)>, realized by matrix_automaton(M, n).  The
/// state t_v acts as u -> M u + v, so t = t_0 and a_i = t_{e_i} t_0^-1 adds
/// the basis vector e_i.
/// must_hold: the commutators, the conjugation relations, and commutators
/// of a_j with every deeper conjugate t^k a_i t^-k, 1 <= k <= bound.
/// must_fail: every grid word a_1^k1 ... a_d^kd t^-k0 with exponents in
/// [-bound, bound], not all zero.
inline RelationSuite hnn_suite(const IntMatrix& m, int n, long long bound = 3) {
  if (bound < 1) fail(errc::bad_argument, "bound must be at least 1");
  RelationSuite suite{matrix_automaton(m, n),
                      "ascending HNN extension of Z^" + std::to_string(m.dim) + " by the matrix " + format_matrix(m) +
                          " on the base-" + std::to_string(n) + " tree",
                      {},
                      {},
                      {}};
  const int d = m.dim;
  auto vectors = matrix_state_vectors(m);
  const int zero = find_state_vector(vectors, std::vector<long long>(static_cast<std::size_t>(d), 0));
  if (zero < 0) fail(errc::bad_argument, "carry box is missing the zero vector");
  GroupWord t = gw(zero);
  suite.generators.push_back({"t", t});
  std::vector<GroupWord> a;
  std::vector<std::string> a_name;
  for (int i = 0; i < d; ++i) {
    std::vector<long long> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i)] = 1;
    const int idx = find_state_vector(vectors, e);
    if (idx < 0) fail(errc::bad_argument, "carry box is missing a basis vector");
    a.push_back(gw_concat(gw(idx), gw_inverse(gw(zero))));
    a_name.push_back("a" + std::to_string(i + 1));
    suite.generators.push_back({a_name.back(), a.back()});
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      suite.must_hold.push_back({gw_commutator(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]),
                                 {},
                                 detail::commutator_label(a_name[static_cast<std::size_t>(i)], a_name[static_cast<std::size_t>(j)])});
  for (int i = 0; i < d; ++i) {
    GroupWord column;
    std::string column_label;
    for (int j = 0; j < d; ++j) {
      const long long e = m.at(j, i);
      column = gw_concat(column, gw_pow(a[static_cast<std::size_t>(j)], e));
      if (e != 0) {
        if (!column_label.empty()) column_label += ' ';
        column_label += detail::pow_label(a_name[static_cast<std::size_t>(j)], e);
      }
    }
    if (column_label.empty()) column_label = "1";
    suite.must_hold.push_back({gw_conjugate(t, a[static_cast<std::size_t>(i)]), column,
                               detail::conj_label("t", 1, a_name[static_cast<std::size_t>(i)]) + " = " + column_label});
  }
  for (long long k = 1; k <= bound; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        GroupWord conj = gw_concat(gw_pow(t, k), gw_concat(a[static_cast<std::size_t>(i)], gw_pow(t, -k)));
        suite.must_hold.push_back({gw_commutator(conj, a[static_cast<std::size_t>(j)]),
                                   {},
                                   detail::commutator_label(detail::conj_label("t", k, a_name[static_cast<std::size_t>(i)]),
                                                            a_name[static_cast<std::size_t>(j)])});
      }
  // every nonzero point of the exponent grid must stay nontrivial
  std::vector<long long> k(static_cast<std::size_t>(d) + 1, -bound);  // k[0] is the t exponent
  for (;;) {
    bool all_zero = true;
    for (long long v : k) all_zero = all_zero && v == 0;
    if (!all_zero) {
      GroupWord probe;
      std::string label;
      for (int i = 0; i < d; ++i) {
        probe = gw_concat(probe, gw_pow(a[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i) + 1]));
        if (k[static_cast<std::size_t>(i) + 1] != 0) {
          if (!label.empty()) label += ' ';
          label += detail::pow_label(a_name[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i) + 1]);
        }
      }
      probe = gw_concat(probe, gw_pow(t, -k[0]));
      if (k[0] != 0) {
        if (!label.empty()) label += ' ';
        label += detail::pow_label("t", -k[0]);
      }
      suite.must_fail.push_back({probe, {}, label});
    }
    std::size_t c = 0;
    while (c < k.size()) {
      if (++k[c] <= bound) break;
      k[c] = -bound;
      ++c;
    }
    if (c == k.size()) break;
  }
  return suite;
}

/// One unexpected outcome: an identity that did not hold (expected_identity)
/// or a probe that did not stay nontrivial.
struct SuiteViolation {
  std::string label;
  bool expected_identity;
  VerdictKind verdict;
  Word witness;  ///< for an unexpectedly nontrivial identity
};

struct SuiteReport {
  std::size_t held = 0;
  std::size_t held_total = 0;
  std::size_t distinct = 0;
  std::size_t distinct_total = 0;
  std::size_t max_witness_level = 0;  ///< longest witness among confirmed probes
  std::vector<SuiteViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Decide every relation of the suite.  Identities must come back trivial,
/// probes nontrivial; anything else (including an inconclusive verdict under
/// capped options) is recorded as a violation.
inline SuiteReport run_suite(const RelationSuite& suite, const DecideOptions& opts = {}) {
  SuiteReport report;
  report.held_total = suite.must_hold.size();
  report.distinct_total = suite.must_fail.size();
  for (const Relation& rel : suite.must_hold) {
    Verdict v = check_relation(suite.automaton, rel.lhs, rel.rhs, opts);
    if (v.kind == VerdictKind::trivial)
      ++report.held;
    else
      report.violations.push_back({rel.label, true, v.kind, v.witness});
  }
  for (const Relation& rel : suite.must_fail) {
    Verdict v = check_relation(suite.automaton, rel.lhs, rel.rhs, opts);
    if (v.kind == VerdictKind::nontrivial) {
      ++report.distinct;
      report.max_witness_level = std::max(report.max_witness_level, v.witness.size());
    } else {
      report.violations.push_back({rel.label, false, v.kind, v.witness});
    }
  }
  return report;
}

}  // namespace mealy
