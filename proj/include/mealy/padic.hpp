#pragma once

/// @file padic.hpp
/// Reference semantics for the library's standard automata, computed with
/// plain integer arithmetic on base-n expansions — deliberately free of any
/// transducer machinery so it can cross-validate the table-driven path.
///
/// A word w of length k encodes the integer u = sum_i w[i] * n^i (first
/// letter least significant); an automaton state acts on the truncation
/// u mod n^k.  The functions here compute those truncated actions directly.

#include <string>
#include <vector>

#include "mealy/base.hpp"
#include "mealy/ring.hpp"

namespace mealy::padic {

/// Floored division: quot = floor(a / n), rem = a - n*quot, so 0 <= rem < n.
/// Requires n > 0.  (Distinct from C++ '/' which truncates toward zero.)
struct DivMod {
  long long quot;
  long long rem;
};

inline DivMod floor_divmod(long long a, long long n) {
  if (n <= 0) fail(errc::bad_argument, "floor_divmod requires a positive divisor, got " + std::to_string(n));
  long long q = a / n;
  long long r = a % n;
  if (r < 0) {
    r += n;
    q -= 1;
  }
  return {q, r};
}

/// The k low base-n digits of value (value may be any integer; digits are of
/// value mod n^k), least significant first.
inline Word digits_encode(long long value, int n, int k) {
  if (n < 1) fail(errc::bad_argument, "base must be at least 1");
  Word w(static_cast<std::size_t>(k));
  long long v = value;
  for (int i = 0; i < k; ++i) {
    auto [q, r] = floor_divmod(v, n);
    w[i] = static_cast<int>(r);
    v = q;
  }
  return w;
}

/// The integer a word encodes: sum of w[i] * n^i.
inline long long digits_decode(const Word& w, int n) {
  long long value = 0;
  long long weight = 1;
  for (int x : w) {
    value += weight * x;
    weight *= n;
  }
  return value;
}

/// Digits of (m*u + c) mod n^k where u is the value of w and k its length:
/// the affine maps realized by multiplication-type states.
inline Word affine_action(long long m, long long c, int n, const Word& w) {
  const int k = static_cast<int>(w.size());
  long long modulus = 1;
  for (int i = 0; i < k; ++i) modulus *= n;
  long long u = digits_decode(w, n);
  __int128 v = static_cast<__int128>(m) * u + c;
  long long r = static_cast<long long>(v % modulus);
  if (r < 0) r += modulus;
  return digits_encode(r, n, k);
}

/// Componentwise letter codec for vector alphabets: a letter over the product
/// alphabet {0..n-1}^d is the integer sum_c vec[c] * n^c (component 0 least
/// significant).
inline std::vector<int> letter_to_vec(int letter, int n, int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  int rest = letter;
  for (int c = 0; c < d; ++c) {
    v[c] = rest % n;
    rest /= n;
  }
  return v;
}

inline int vec_to_letter(const std::vector<int>& v, int n) {
  int letter = 0;
  int weight = 1;
  for (int x : v) {
    letter += weight * x;
    weight *= n;
  }
  return letter;
}

/// Digits of M*u + v acting on a d-component word: each letter of w is a
/// vector over {0..n-1}^d (encoded via vec_to_letter); component c of the
/// word decodes to an integer u_c, the map sends the vector u to M*u + v,
/// and each component is re-encoded mod n^k.
inline Word matrix_affine_action(const IntMatrix& m, const std::vector<long long>& v, int n, const Word& w) {
  const int d = m.dim;
  if (v.size() != static_cast<std::size_t>(d)) fail(errc::dimension_mismatch, "shift vector length does not match matrix dimension");
  const int k = static_cast<int>(w.size());
  std::vector<long long> u(static_cast<std::size_t>(d), 0);
  long long weight = 1;
  for (int i = 0; i < k; ++i) {
    auto digits = letter_to_vec(w[i], n, d);
    for (int c = 0; c < d; ++c) u[c] += weight * digits[c];
    weight *= n;
  }
  std::vector<long long> out = m.apply(u);
  std::vector<Word> comp(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) comp[c] = digits_encode(out[c] + v[c], n, k);
  Word result(static_cast<std::size_t>(k));
  std::vector<int> letter(static_cast<std::size_t>(d));
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < d; ++c) letter[c] = comp[c][i];
    result[i] = vec_to_letter(letter, n);
  }
  return result;
}

/// Action of a shift-register state on a power series over Z/n.
///
/// For the register built from g = a_0 + a_1 t + ... + a_d t^d (monic, a_0 a
/// unit mod n), the state holding digits y = (y_0..y_{d-1}) maps the series p
/// to h_y + g*p, where h_y is determined by the upper-triangular system
/// U y with U[i][j] = a_{d-(j-i)} for j >= i.  w carries the first k
/// coefficients of p; the result carries the first k coefficients of the
/// image.
inline Word series_action(const PolyZn& g, const std::vector<int>& y, const Word& w) {
  const int n = g.modulus;
  const int d = g.degree();
  if (y.size() != static_cast<std::size_t>(d)) fail(errc::dimension_mismatch, "state digit count does not match polynomial degree");
  const int k = static_cast<int>(w.size());
  Word out(static_cast<std::size_t>(k), 0);
  for (int j = 0; j < k; ++j) {
    long long acc = 0;
    if (j < d) {
      // h_y coefficient j: row j of U times y.
      for (int i = j; i < d; ++i) acc += g.coeffs[d - (i - j)] * y[i];
    }
    for (int i = 0; i <= std::min(j, d); ++i) acc += g.coeffs[i] * w[j - i];
    out[j] = static_cast<int>(floor_divmod(acc, n).rem);
  }
  return out;
}

}  // namespace mealy::padic
