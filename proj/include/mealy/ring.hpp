#pragma once

/// @file ring.hpp
/// Small exact-arithmetic helpers: extended gcd, modular inverses, integer
/// matrices, and polynomials over Z/n.  Everything is desk-scale: matrices a
/// few rows wide, moduli in the single digits, exact 64/128-bit arithmetic.

#include <array>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "mealy/base.hpp"

namespace mealy {

/// Extended Euclid: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
inline long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = (a >= 0) ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  long long x1 = 0, y1 = 0;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/// Least non-negative inverse of a modulo n (n >= 1); throws not_coprime.
inline long long mod_inverse(long long a, long long n) {
  if (n <= 0) fail(errc::bad_argument, "modulus must be positive, got " + std::to_string(n));
  long long x = 0, y = 0;
  long long g = egcd(a % n, n, x, y);
  if (g != 1) fail(errc::not_coprime, std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  long long r = x % n;
  return r < 0 ? r + n : r;
}

/// A polynomial over Z/n, c[i] multiplying t^i; degree = coeffs.size() - 1.
struct PolyZn {
  int modulus = 0;
  std::vector<long long> coeffs;  // constant term first

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Render a polynomial as "2 + t + 3 t^2" (zero terms skipped, unit
/// coefficients of positive powers left implicit); the zero polynomial is "0".
inline std::string format_polynomial(const PolyZn& g) {
  std::string out;
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    long long c = g.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0)
      out += std::to_string(c);
    else {
      if (c != 1) out += std::to_string(c) + " ";
      out += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

/// Square integer matrix, row-major, exact 64-bit entries.
struct IntMatrix {
  int dim = 0;
  std::vector<long long> a;  // a[i*dim + j] is row i, column j

  IntMatrix() = default;
  IntMatrix(int d, std::vector<long long> entries) : dim(d), a(std::move(entries)) {
    if (d <= 0) fail(errc::bad_argument, "matrix dimension must be positive");
    if (a.size() != static_cast<std::size_t>(d) * d)
      fail(errc::dimension_mismatch, "expected " + std::to_string(d * d) + " entries, got " + std::to_string(a.size()));
  }

  static IntMatrix identity(int d) {
    IntMatrix m(d, std::vector<long long>(static_cast<std::size_t>(d) * d, 0));
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }

  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }

  bool operator==(const IntMatrix& o) const { return dim == o.dim && a == o.a; }

  IntMatrix operator*(const IntMatrix& o) const {
    if (dim != o.dim) fail(errc::dimension_mismatch, "matrix product of different dimensions");
    IntMatrix r(dim, std::vector<long long>(a.size(), 0));
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k) {
        long long aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < dim; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  IntMatrix negated() const {
    IntMatrix r = *this;
    for (auto& v : r.a) v = -v;
    return r;
  }

  /// Matrix-vector product M x.
  std::vector<long long> apply(const std::vector<long long>& x) const {
    if (x.size() != static_cast<std::size_t>(dim)) fail(errc::dimension_mismatch, "vector length does not match matrix dimension");
    std::vector<long long> y(dim, 0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) y[i] += at(i, j) * x[j];
    return y;
  }

  /// Determinant by cofactor expansion; exact, intended for dim <= 8.
  long long det() const {
    if (dim == 1) return a[0];
    if (dim == 2) return a[0] * a[3] - a[1] * a[2];
    long long sum = 0;
    for (int j = 0; j < dim; ++j) {
      if (at(0, j) == 0) continue;
      IntMatrix minor(dim - 1, std::vector<long long>(static_cast<std::size_t>(dim - 1) * (dim - 1), 0));
      for (int r = 1; r < dim; ++r) {
        int cc = 0;
        for (int c = 0; c < dim; ++c) {
          if (c == j) continue;
          minor.at(r - 1, cc++) = at(r, c);
        }
      }
      long long term = at(0, j) * minor.det();
      sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
  }

  /// Row-sum norm: max over rows of the sum of absolute entries.
  long long norm_inf() const {
    long long best = 0;
    for (int i = 0; i < dim; ++i) {
      long long s = 0;
      for (int j = 0; j < dim; ++j) s += std::llabs(at(i, j));
      best = std::max(best, s);
    }
    return best;
  }

  /// Sum of the negative entries of row i (a non-positive number).
  long long row_negative_sum(int i) const {
    long long s = 0;
    for (int j = 0; j < dim; ++j) s += std::min(at(i, j), 0LL);
    return s;
  }

  /// Sum of the positive entries of row i.
  long long row_positive_sum(int i) const {
    long long s = 0;
    for (int j = 0; j < dim; ++j) s += std::max(at(i, j), 0LL);
    return s;
  }
};

/// Render a matrix in the same "a,b;c,d" shape parse_matrix reads.
inline std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.dim; ++i) {
    if (i) out += ';';
    for (int j = 0; j < m.dim; ++j) {
      if (j) out += ',';
      out += std::to_string(m.at(i, j));
    }
  }
  return out;
}

/// Parse "a,b;c,d" (rows separated by ';', entries by ',') into a square matrix.
inline IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<long long> entries;
    std::stringstream rs(row);
    std::string item;
    while (std::getline(rs, item, ',')) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(item, &pos);
      } catch (const std::exception&) {
        fail(errc::parse_error, "expected integer matrix entry, got '" + item + "'");
      }
      if (pos != item.size()) fail(errc::parse_error, "trailing characters in matrix entry '" + item + "'");
      entries.push_back(v);
    }
    if (!entries.empty()) rows.push_back(std::move(entries));
  }
  if (rows.empty()) fail(errc::parse_error, "empty matrix");
  const std::size_t d = rows.size();
  std::vector<long long> flat;
  for (const auto& r : rows) {
    if (r.size() != d) fail(errc::parse_error, "matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return IntMatrix(static_cast<int>(d), std::move(flat));
}

/// Exponent bound sufficient to detect finite multiplicative order of a d x d
/// integer matrix: any finite order divides this value.
inline long long finite_order_exponent_bound(int dim) {
  switch (dim) {
    case 1: return 2;
    case 2: return 6;
    case 3: return 12;
    case 4: return 12;
    default: return 420;
  }
}

/// True iff M^k is the identity for some k >= 1.  Pre-check: |det| must be 1,
/// otherwise no power is the identity.  Powers are tracked in 128-bit; entry
/// growth beyond 1e30 proves an eigenvalue off the unit circle, hence infinite
/// order, and short-circuits.
inline bool has_finite_order(const IntMatrix& m) {
  long long d = m.det();
  if (d != 1 && d != -1) return false;
  const int n = m.dim;
  const long long bound = finite_order_exponent_bound(n);
  std::vector<__int128> p(m.a.begin(), m.a.end());
  const __int128 guard = static_cast<__int128>(1000000000000000LL) * 1000000000000000LL;  // 1e30
  for (long long k = 1; k <= bound; ++k) {
    bool is_id = true;
    for (int i = 0; i < n && is_id; ++i)
      for (int j = 0; j < n; ++j)
        if (p[static_cast<std::size_t>(i) * n + j] != (i == j ? 1 : 0)) {
          is_id = false;
          break;
        }
    if (is_id) return true;
    std::vector<__int128> q(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int kk = 0; kk < n; ++kk) {
        __int128 pik = p[static_cast<std::size_t>(i) * n + kk];
        if (pik == 0) continue;
        for (int j = 0; j < n; ++j) q[static_cast<std::size_t>(i) * n + j] += pik * m.at(kk, j);
      }
    for (const auto& v : q)
      if (v > guard || v < -guard) return false;
    p = std::move(q);
  }
  return false;
}

}  // namespace mealy
