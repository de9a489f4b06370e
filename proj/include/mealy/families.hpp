#pragma once

/// @file families.hpp
/// The standard automaton families the library ships:
///
///  * multiplication_automaton(m, n): binary (= base-n) multiply-by-m with
///    carry states; dual_multiplication_automaton is its inverse written
///    directly.
///  * shift_register / polynomial_automaton: sliding window of the last d
///    inputs; with a polynomial output rule the states realize affine series
///    maps p -> h + g*p over Z/n.
///  * matrix_automaton / small_matrix_automaton: multiply-by-M with vector
///    carries on the product alphabet {0..n-1}^d, on the symmetric carry box
///    or the tighter row-sum box.
///  * negation_involution: the one-state map x -> -x-1 in every coordinate.
///  * from_wreath_recursion: explicit permutation/section rows.

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/padic.hpp"
#include "mealy/ring.hpp"

namespace mealy {

/// Multiply-by-m over base n (coprime to m): state s_i holds carry i,
/// rho(s_i, x) = (m*x + i) mod n, tau(s_i, x) = s_{(m*x + i) div n}.
/// State s_i acts on the encoded integer as u -> m*u + i.
inline Automaton multiplication_automaton(long long m, int n) {
  if (m < 1) fail(errc::bad_argument, "multiplier must be at least 1 (use matrix_automaton for negative multipliers)");
  if (n < 2) fail(errc::bad_argument, "base must be at least 2");
  if (std::gcd(m, static_cast<long long>(n)) != 1)
    fail(errc::not_coprime, "multiplier " + std::to_string(m) + " shares a factor with base " + std::to_string(n));
  std::vector<std::string> names;
  std::vector<int> rho, tau;
  for (long long i = 0; i < m; ++i) {
    names.push_back("s" + std::to_string(i));
    for (int x = 0; x < n; ++x) {
      auto [q, r] = padic::floor_divmod(m * x + i, n);
      rho.push_back(static_cast<int>(r));
      tau.push_back(static_cast<int>(q));
    }
  }
  return Automaton(std::move(names), n, std::move(rho), std::move(tau));
}

/// Divide-by-m over base n: state d_i acts as u -> (u - i) / m on encoded
/// integers (the inverse of s_i).  With m' = m^{-1} mod n and n' = n^{-1}
/// mod m: rho(d_i, x) = m'*(x - i) mod n, tau(d_i, x) = d_{n'*(i - x) mod m}.
inline Automaton dual_multiplication_automaton(long long m, int n) {
  if (m < 1) fail(errc::bad_argument, "multiplier must be at least 1");
  if (n < 2) fail(errc::bad_argument, "base must be at least 2");
  if (std::gcd(m, static_cast<long long>(n)) != 1)
    fail(errc::not_coprime, "multiplier " + std::to_string(m) + " shares a factor with base " + std::to_string(n));
  const long long mp = mod_inverse(m, n);
  const long long np = (m == 1) ? 0 : mod_inverse(n, m);
  std::vector<std::string> names;
  std::vector<int> rho, tau;
  for (long long i = 0; i < m; ++i) {
    names.push_back("d" + std::to_string(i));
    for (int x = 0; x < n; ++x) {
      rho.push_back(static_cast<int>(padic::floor_divmod(mp * (x - i), n).rem));
      tau.push_back(static_cast<int>(padic::floor_divmod(np * (i - x), m).rem));
    }
  }
  return Automaton(std::move(names), n, std::move(rho), std::move(tau));
}

/// Sliding-window transducer: a state remembers the last d letters read
/// (oldest first); reading x it emits f(window, x) and shifts x in.  States
/// are indexed with the oldest window slot least significant, named "q" plus
/// the window rendered as a word.
inline Automaton shift_register(int d, int n, const std::function<int(const std::vector<int>&)>& f) {
  if (d < 1) fail(errc::bad_argument, "window length must be at least 1");
  if (n < 2) fail(errc::bad_argument, "base must be at least 2");
  std::size_t count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(n);
  std::vector<std::string> names;
  std::vector<int> rho, tau;
  std::vector<int> args(static_cast<std::size_t>(d) + 1);
  for (std::size_t idx = 0; idx < count; ++idx) {
    auto window = padic::letter_to_vec(static_cast<int>(idx), n, d);
    names.push_back("q" + format_word(window, n));
    for (int x = 0; x < n; ++x) {
      std::copy(window.begin(), window.end(), args.begin());
      args[static_cast<std::size_t>(d)] = x;
      rho.push_back(f(args));
      // shift out the oldest slot (least significant), shift x in at the top
      tau.push_back(static_cast<int>(idx / static_cast<std::size_t>(n) + static_cast<std::size_t>(x) * (count / static_cast<std::size_t>(n))));
    }
  }
  return Automaton(std::move(names), n, std::move(rho), std::move(tau));
}

/// Normalize a polynomial's coefficients into [0, n) and validate the shape
/// required by polynomial_automaton: monic with a unit constant term.
inline PolyZn normalize_polynomial(const PolyZn& g) {
  if (g.modulus < 2) fail(errc::bad_argument, "polynomial modulus must be at least 2");
  if (g.degree() < 1) fail(errc::bad_argument, "polynomial degree must be at least 1");
  PolyZn out{g.modulus, {}};
  for (long long c : g.coeffs) out.coeffs.push_back(padic::floor_divmod(c, g.modulus).rem);
  if (out.coeffs.back() != 1) fail(errc::non_monic, "leading coefficient must be 1 modulo " + std::to_string(g.modulus));
  if (std::gcd(out.coeffs.front(), static_cast<long long>(g.modulus)) != 1)
    fail(errc::non_invertible_constant_term, "constant term " + std::to_string(out.coeffs.front()) + " is not a unit modulo " + std::to_string(g.modulus));
  return out;
}

/// Transducer of the polynomial g = a_0 + a_1 t + ... + a_d t^d over Z/n
/// (monic, unit constant term): the shift register whose output pairs the
/// letter from i steps ago with a_i.  The state with window digits y acts on
/// power series as p -> h_y + g*p (see padic::series_action).
inline Automaton polynomial_automaton(const PolyZn& g_in) {
  PolyZn g = normalize_polynomial(g_in);
  const int d = g.degree();
  const int n = g.modulus;
  return shift_register(d, n, [g, d, n](const std::vector<int>& args) {
    long long acc = 0;
    // args = (oldest .. newest, current); the slot i steps back carries a_i
    for (int s = 0; s <= d; ++s) acc += g.coeffs[static_cast<std::size_t>(d - s)] * args[static_cast<std::size_t>(s)];
    return static_cast<int>(padic::floor_divmod(acc, n).rem);
  });
}

namespace detail {

/// Odometer enumeration of the integer box [lo_1, hi_1] x ... x [lo_d, hi_d],
/// first coordinate fastest, each coordinate ascending.
inline std::vector<std::vector<long long>> box_vectors(const std::vector<long long>& lo, const std::vector<long long>& hi) {
  const std::size_t d = lo.size();
  std::vector<std::vector<long long>> out;
  std::vector<long long> v(lo);
  for (std::size_t c = 0; c < d; ++c)
    if (lo[c] > hi[c]) return out;  // empty box
  for (;;) {
    out.push_back(v);
    std::size_t c = 0;
    while (c < d) {
      if (++v[c] <= hi[c]) break;
      v[c] = lo[c];
      ++c;
    }
    if (c == d) return out;
  }
}

inline std::string vector_state_name(const std::vector<long long>& v) {
  std::string name = "t(";
  for (std::size_t c = 0; c < v.size(); ++c) name += (c ? "," : "") + std::to_string(v[c]);
  return name + ")";
}

/// Build the multiply-by-M transducer on a given carry-vector list.  The
/// list must be closed under the carry map v -> (M x + v) div n.
inline Automaton matrix_automaton_on(const IntMatrix& m, int n, const std::vector<std::vector<long long>>& carries) {
  const int d = m.dim;
  if (carries.empty()) fail(errc::empty_state_set, "carry box is empty");
  int letters = 1;
  for (int c = 0; c < d; ++c) letters *= n;
  std::vector<std::string> names;
  std::vector<int> rho, tau;
  for (const auto& v : carries) names.push_back(vector_state_name(v));
  for (const auto& v : carries) {
    for (int letter = 0; letter < letters; ++letter) {
      auto xs = padic::letter_to_vec(letter, n, d);
      std::vector<long long> xl(xs.begin(), xs.end());
      auto mx = m.apply(xl);
      std::vector<int> out(static_cast<std::size_t>(d));
      std::vector<long long> carry(static_cast<std::size_t>(d));
      for (int c = 0; c < d; ++c) {
        auto [q, r] = padic::floor_divmod(mx[static_cast<std::size_t>(c)] + v[static_cast<std::size_t>(c)], n);
        out[static_cast<std::size_t>(c)] = static_cast<int>(r);
        carry[static_cast<std::size_t>(c)] = q;
      }
      auto it = std::find(carries.begin(), carries.end(), carry);
      if (it == carries.end()) fail(errc::bad_argument, "carry box is not closed under the carry map");
      rho.push_back(padic::vec_to_letter(out, n));
      tau.push_back(static_cast<int>(it - carries.begin()));
    }
  }
  return Automaton(std::move(names), letters, std::move(rho), std::move(tau));
}

inline void check_matrix_base(const IntMatrix& m, int n, bool check_order) {
  if (n < 2) fail(errc::bad_argument, "base must be at least 2");
  long long det = m.det();
  if (std::gcd(std::llabs(det), static_cast<long long>(n)) != 1)
    fail(errc::not_coprime_determinant, "determinant " + std::to_string(det) + " shares a factor with base " + std::to_string(n));
  if (check_order && has_finite_order(m))
    fail(errc::finite_order_matrix, "matrix has finite multiplicative order; its transducer states act with torsion");
}

}  // namespace detail

/// Carry vectors of the full matrix transducer: the symmetric box
/// [-|M|, |M|-1]^d for the row-sum norm |M|.
inline std::vector<std::vector<long long>> matrix_state_vectors(const IntMatrix& m) {
  long long norm = m.norm_inf();
  std::vector<long long> lo(static_cast<std::size_t>(m.dim), -norm);
  std::vector<long long> hi(static_cast<std::size_t>(m.dim), norm - 1);
  return detail::box_vectors(lo, hi);
}

/// Carry vectors of the small matrix transducer: coordinate c ranges over
/// [row_negative_sum(c), row_positive_sum(c) - 1].
inline std::vector<std::vector<long long>> small_matrix_state_vectors(const IntMatrix& m) {
  std::vector<long long> lo, hi;
  for (int c = 0; c < m.dim; ++c) {
    lo.push_back(m.row_negative_sum(c));
    hi.push_back(m.row_positive_sum(c) - 1);
  }
  return detail::box_vectors(lo, hi);
}

/// Index of a carry vector in an enumeration, or -1.
inline int find_state_vector(const std::vector<std::vector<long long>>& states, const std::vector<long long>& v) {
  auto it = std::find(states.begin(), states.end(), v);
  return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

/// Multiply-by-M transducer on the product alphabet {0..n-1}^d: state t_v
/// acts on the vector of encoded integers as u -> M u + v.  Letters are
/// flattened componentwise (first coordinate least significant).  Requires
/// gcd(det M, n) = 1; by default also rejects matrices of finite
/// multiplicative order, whose transducer would act with torsion.
inline Automaton matrix_automaton(const IntMatrix& m, int n, bool check_order = true) {
  detail::check_matrix_base(m, n, check_order);
  return detail::matrix_automaton_on(m, n, matrix_state_vectors(m));
}

/// The sub-transducer of matrix_automaton on the row-sum carry box, which is
/// again closed under carries.
inline Automaton small_matrix_automaton(const IntMatrix& m, int n, bool check_order = true) {
  detail::check_matrix_base(m, n, check_order);
  return detail::matrix_automaton_on(m, n, small_matrix_state_vectors(m));
}

/// One-state involution sending every letter digit to -x-1 mod n, in each
/// of the d coordinates.  Conjugates multiply-by-M onto multiply-by-(-M).
inline Automaton negation_involution(int n, int d = 1) {
  if (n < 2) fail(errc::bad_argument, "base must be at least 2");
  if (d < 1) fail(errc::bad_argument, "dimension must be at least 1");
  int letters = 1;
  for (int c = 0; c < d; ++c) letters *= n;
  std::vector<int> rho, tau;
  for (int letter = 0; letter < letters; ++letter) {
    auto xs = padic::letter_to_vec(letter, n, d);
    for (auto& x : xs) x = static_cast<int>(padic::floor_divmod(-x - 1, n).rem);
    rho.push_back(padic::vec_to_letter(xs, n));
    tau.push_back(0);
  }
  return Automaton({"neg"}, letters, std::move(rho), std::move(tau));
}

/// One explicit wreath-recursion row: the state permutes letters by outputs
/// and continues below letter x in the state named sections[x].
struct WreathState {
  std::string name;
  std::vector<int> outputs;
  std::vector<std::string> sections;
};

/// Build an (always invertible) automaton from wreath recursion rows.
inline Automaton from_wreath_recursion(int n_letters, const std::vector<WreathState>& states) {
  if (n_letters <= 0) fail(errc::empty_alphabet, "an automaton needs at least one letter");
  if (states.empty()) fail(errc::empty_state_set, "an automaton needs at least one state");
  std::vector<std::string> names;
  for (const auto& s : states) {
    for (const auto& seen : names)
      if (seen == s.name) fail(errc::bad_argument, "duplicate state name '" + s.name + "'");
    names.push_back(s.name);
  }
  auto index_of = [&names](const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    fail(errc::undeclared_section, "section references unknown state '" + name + "'");
  };
  std::vector<int> rho, tau;
  for (const auto& s : states) {
    if (s.outputs.size() != static_cast<std::size_t>(n_letters) || s.sections.size() != static_cast<std::size_t>(n_letters))
      fail(errc::table_shape, "state '" + s.name + "' needs one output and one section per letter");
    if (!detail::is_permutation_row(s.outputs))
      fail(errc::invalid_permutation, "outputs of state '" + s.name + "' are not a permutation of the alphabet");
    rho.insert(rho.end(), s.outputs.begin(), s.outputs.end());
    for (const auto& sec : s.sections) tau.push_back(index_of(sec));
  }
  return Automaton(std::move(names), n_letters, std::move(rho), std::move(tau));
}

}  // namespace mealy
