#pragma once

/// @file automaton.hpp
/// Finite synchronous transducers (Mealy machines) acting on the rooted
/// n-ary tree, plus their basic algebra: running words, taking sections,
/// inversion, duality, composition, powers, action equality, minimization.
///
/// An automaton is a finite set of states over a finite alphabet with two
/// total tables: rho(q, x) — the letter written when state q reads x — and
/// tau(q, x) — the state that processes the rest of the word.  Extending
/// letter by letter, every state acts on the whole tree of finite words;
/// when each rho(q, ·) is a permutation that action is a tree automorphism.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mealy/base.hpp"

namespace mealy {

namespace detail {

/// True iff row holds each of 0..row.size()-1 exactly once.
inline bool is_permutation_row(const std::vector<int>& row) {
  std::vector<char> seen(row.size(), 0);
  for (int v : row) {
    if (v < 0 || v >= static_cast<int>(row.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace detail

/// Immutable transducer: states 0..num_states()-1 (display names carried
/// separately), letters 0..num_letters()-1.  Tables are validated on
/// construction; instances are never mutated afterwards.
class Automaton {
 public:
  /// Build from flat tables indexed [state * n_letters + letter].
  Automaton(std::vector<std::string> state_names, int n_letters,
            std::vector<int> rho, std::vector<int> tau)
      : names_(std::move(state_names)),
        n_states_(static_cast<int>(names_.size())),
        n_letters_(n_letters),
        rho_(std::move(rho)),
        tau_(std::move(tau)) {
    if (n_states_ == 0) fail(errc::empty_state_set, "an automaton needs at least one state");
    if (n_letters_ <= 0) fail(errc::empty_alphabet, "an automaton needs at least one letter");
    const std::size_t cells = static_cast<std::size_t>(n_states_) * n_letters_;
    if (rho_.size() != cells || tau_.size() != cells)
      fail(errc::table_shape, "tables must hold " + std::to_string(cells) + " entries (" +
                                  std::to_string(rho_.size()) + " outputs, " + std::to_string(tau_.size()) + " successors given)");
    for (std::size_t i = 0; i < cells; ++i) {
      if (rho_[i] < 0 || rho_[i] >= n_letters_)
        fail(errc::out_of_range_entry, "output entry " + std::to_string(rho_[i]) + " at cell " + std::to_string(i) +
                                           " outside alphabet of size " + std::to_string(n_letters_));
      if (tau_[i] < 0 || tau_[i] >= n_states_)
        fail(errc::out_of_range_entry, "successor entry " + std::to_string(tau_[i]) + " at cell " + std::to_string(i) +
                                           " outside state set of size " + std::to_string(n_states_));
    }
    invertible_ = true;
    for (int q = 0; q < n_states_ && invertible_; ++q) invertible_ = detail::is_permutation_row(rho_row(q));
  }

  /// Build from one row per state.
  static Automaton from_rows(std::vector<std::string> state_names, int n_letters,
                             const std::vector<std::vector<int>>& rho_rows,
                             const std::vector<std::vector<int>>& tau_rows) {
    std::vector<int> rho, tau;
    if (rho_rows.size() != state_names.size() || tau_rows.size() != state_names.size())
      fail(errc::table_shape, "need exactly one output row and one successor row per state");
    for (std::size_t q = 0; q < state_names.size(); ++q) {
      if (rho_rows[q].size() != static_cast<std::size_t>(n_letters) || tau_rows[q].size() != static_cast<std::size_t>(n_letters))
        fail(errc::table_shape, "row " + std::to_string(q) + " does not have one entry per letter");
      rho.insert(rho.end(), rho_rows[q].begin(), rho_rows[q].end());
      tau.insert(tau.end(), tau_rows[q].begin(), tau_rows[q].end());
    }
    return Automaton(std::move(state_names), n_letters, std::move(rho), std::move(tau));
  }

  int num_states() const { return n_states_; }
  int num_letters() const { return n_letters_; }

  /// Letter written when state q reads letter x.  Indices must be in range.
  Letter rho(int q, Letter x) const { return rho_[static_cast<std::size_t>(q) * n_letters_ + x]; }

  /// State that continues after state q reads letter x.
  int tau(int q, Letter x) const { return tau_[static_cast<std::size_t>(q) * n_letters_ + x]; }

  std::vector<int> rho_row(int q) const {
    auto base = rho_.begin() + static_cast<std::size_t>(q) * n_letters_;
    return std::vector<int>(base, base + n_letters_);
  }

  std::vector<int> tau_row(int q) const {
    auto base = tau_.begin() + static_cast<std::size_t>(q) * n_letters_;
    return std::vector<int>(base, base + n_letters_);
  }

  const std::string& state_name(int q) const { return names_[static_cast<std::size_t>(q)]; }
  const std::vector<std::string>& state_names() const { return names_; }

  /// Index of the state with this display name, or -1.
  int state_by_name(const std::string& name) const {
    for (int q = 0; q < n_states_; ++q)
      if (names_[static_cast<std::size_t>(q)] == name) return q;
    return -1;
  }

  /// True iff every output row is a permutation of the alphabet, i.e. every
  /// state acts as a tree automorphism.
  bool is_invertible() const { return invertible_; }

  void check_state(int q) const {
    if (q < 0 || q >= n_states_)
      fail(errc::state_out_of_range, "state " + std::to_string(q) + " with " + std::to_string(n_states_) + " states");
  }

  void check_letter(Letter x) const {
    if (x < 0 || x >= n_letters_)
      fail(errc::letter_out_of_range, "letter " + std::to_string(x) + " with alphabet size " + std::to_string(n_letters_));
  }

  const std::vector<int>& rho_table() const { return rho_; }
  const std::vector<int>& tau_table() const { return tau_; }

 private:
  std::vector<std::string> names_;
  int n_states_;
  int n_letters_;
  std::vector<int> rho_;
  std::vector<int> tau_;
  bool invertible_ = false;
};

/// Identical transition behaviour, display names ignored.
inline bool same_tables(const Automaton& a, const Automaton& b) {
  return a.num_states() == b.num_states() && a.num_letters() == b.num_letters() &&
         a.rho_table() == b.rho_table() && a.tau_table() == b.tau_table();
}

/// Image of word w under the action of state q: letter i of the result is
/// produced while reading letter i of w.
inline Word act(const Automaton& a, int q, const Word& w) {
  a.check_state(q);
  Word out(w.size());
  int s = q;
  for (std::size_t i = 0; i < w.size(); ++i) {
    a.check_letter(w[i]);
    out[i] = a.rho(s, w[i]);
    s = a.tau(s, w[i]);
  }
  return out;
}

/// State reached after q has read all of w — the section of q at w, which
/// acts on the subtree hanging below w.
inline int section(const Automaton& a, int q, const Word& w) {
  a.check_state(q);
  int s = q;
  for (Letter x : w) {
    a.check_letter(x);
    s = a.tau(s, x);
  }
  return s;
}

inline bool is_invertible(const Automaton& a) { return a.is_invertible(); }

/// The inverse automaton: state ~q undoes q.  Reading the letter q wrote,
/// it writes the letter q read, and continues in the inverse of q's
/// continuation: rho~(q, y) = rho(q, ·)^{-1}(y), tau~(q, y) = ~tau(q, rho(q, ·)^{-1}(y)).
inline Automaton invert(const Automaton& a) {
  if (!a.is_invertible()) fail(errc::not_invertible, "some output row is not a permutation");
  const int n = a.num_letters();
  std::vector<std::string> names;
  names.reserve(a.num_states());
  for (const auto& s : a.state_names()) names.push_back("~" + s);
  std::vector<int> rho(static_cast<std::size_t>(a.num_states()) * n);
  std::vector<int> tau(rho.size());
  for (int q = 0; q < a.num_states(); ++q) {
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[a.rho(q, x)] = x;
    for (int y = 0; y < n; ++y) {
      rho[static_cast<std::size_t>(q) * n + y] = inv[y];
      tau[static_cast<std::size_t>(q) * n + y] = a.tau(q, inv[y]);
    }
  }
  return Automaton(std::move(names), n, std::move(rho), std::move(tau));
}

/// The dual automaton: states and letters swap roles.  State x of the dual
/// reads a state q of the original, outputs tau(q, x) and moves to letter
/// rho(q, x).
inline Automaton dual(const Automaton& a) {
  const int q_count = a.num_states();
  const int x_count = a.num_letters();
  std::vector<std::string> names;
  names.reserve(x_count);
  for (int x = 0; x < x_count; ++x) names.push_back("x" + std::to_string(x));
  std::vector<int> rho(static_cast<std::size_t>(x_count) * q_count);
  std::vector<int> tau(rho.size());
  for (int x = 0; x < x_count; ++x)
    for (int q = 0; q < q_count; ++q) {
      rho[static_cast<std::size_t>(x) * q_count + q] = a.tau(q, x);
      tau[static_cast<std::size_t>(x) * q_count + q] = a.rho(q, x);
    }
  return Automaton(std::move(names), q_count, std::move(rho), std::move(tau));
}

/// Invertible with invertible dual: every output row and every successor
/// column is a permutation.
inline bool is_bi_invertible(const Automaton& a) {
  if (!a.is_invertible()) return false;
  for (int x = 0; x < a.num_letters(); ++x) {
    std::vector<int> column(a.num_states());
    for (int q = 0; q < a.num_states(); ++q) column[static_cast<std::size_t>(q)] = a.tau(q, x);
    if (!detail::is_permutation_row(column)) return false;
  }
  return true;
}

/// Product automaton: state (p, q) acts as p after q (the right factor reads
/// the input first).  Pair (p, q) has index p * b.num_states() + q.
inline Automaton compose(const Automaton& a, const Automaton& b) {
  if (a.num_letters() != b.num_letters())
    fail(errc::alphabet_mismatch, "cannot compose over alphabets of size " + std::to_string(a.num_letters()) + " and " +
                                      std::to_string(b.num_letters()));
  const int n = a.num_letters();
  const int qb = b.num_states();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(a.num_states()) * qb);
  std::vector<int> rho, tau;
  rho.reserve(names.capacity() * n);
  tau.reserve(names.capacity() * n);
  for (int p = 0; p < a.num_states(); ++p)
    for (int q = 0; q < qb; ++q) {
      names.push_back("(" + a.state_name(p) + "," + b.state_name(q) + ")");
      for (int x = 0; x < n; ++x) {
        int mid = b.rho(q, x);
        rho.push_back(a.rho(p, mid));
        tau.push_back(a.tau(p, mid) * qb + b.tau(q, x));
      }
    }
  return Automaton(std::move(names), n, std::move(rho), std::move(tau));
}

/// One-state automaton fixing every word.
inline Automaton identity_automaton(int n_letters) {
  std::vector<int> rho(static_cast<std::size_t>(n_letters));
  std::vector<int> tau(static_cast<std::size_t>(n_letters), 0);
  for (int x = 0; x < n_letters; ++x) rho[static_cast<std::size_t>(x)] = x;
  return Automaton({"e"}, n_letters, std::move(rho), std::move(tau));
}

/// k-fold product: state (q_1, ..., q_k) acts as q_1 after ... after q_k
/// (the rightmost component reads the input first).  Tuple indices are
/// big-endian: q_1 carries weight num_states()^(k-1).  power(a, 1) is a
/// itself; power(a, 0) is the one-state identity.
inline Automaton power(const Automaton& a, int k) {
  if (k < 0) fail(errc::bad_argument, "power exponent must be non-negative, got " + std::to_string(k));
  if (k == 0) return identity_automaton(a.num_letters());
  if (k == 1) return a;
  const int qn = a.num_states();
  const int n = a.num_letters();
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(qn);
  std::vector<std::string> names;
  names.reserve(count);
  std::vector<int> rho, tau;
  rho.reserve(count * n);
  tau.reserve(count * n);
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::string name = "(";
    for (int j = 0; j < k; ++j) name += (j ? "," : "") + a.state_name(tuple[static_cast<std::size_t>(j)]);
    names.push_back(name + ")");
    for (int x = 0; x < n; ++x) {
      int y = x;
      std::size_t next_idx = 0;
      std::vector<int> next(static_cast<std::size_t>(k));
      for (int j = k - 1; j >= 0; --j) {
        next[static_cast<std::size_t>(j)] = a.tau(tuple[static_cast<std::size_t>(j)], y);
        y = a.rho(tuple[static_cast<std::size_t>(j)], y);
      }
      for (int j = 0; j < k; ++j) next_idx = next_idx * static_cast<std::size_t>(qn) + static_cast<std::size_t>(next[static_cast<std::size_t>(j)]);
      rho.push_back(y);
      tau.push_back(static_cast<int>(next_idx));
    }
    // advance the big-endian odometer: last component fastest
    for (int j = k - 1; j >= 0; --j) {
      if (++tuple[static_cast<std::size_t>(j)] < qn) break;
      tuple[static_cast<std::size_t>(j)] = 0;
    }
  }
  return Automaton(std::move(names), n, std::move(rho), std::move(tau));
}

/// Do state p of a and state q of b act identically on every word?
/// Decided exactly by closing the pair under sections and comparing output
/// rows (bisimulation).
inline bool equal_action(const Automaton& a, int p, const Automaton& b, int q) {
  if (a.num_letters() != b.num_letters())
    fail(errc::alphabet_mismatch, "actions over different alphabets are never compared");
  a.check_state(p);
  b.check_state(q);
  const int n = a.num_letters();
  std::vector<char> seen(static_cast<std::size_t>(a.num_states()) * b.num_states(), 0);
  std::vector<std::pair<int, int>> todo{{p, q}};
  seen[static_cast<std::size_t>(p) * b.num_states() + q] = 1;
  while (!todo.empty()) {
    auto [s, t] = todo.back();
    todo.pop_back();
    for (int x = 0; x < n; ++x) {
      if (a.rho(s, x) != b.rho(t, x)) return false;
      int s2 = a.tau(s, x), t2 = b.tau(t, x);
      std::size_t key = static_cast<std::size_t>(s2) * b.num_states() + t2;
      if (!seen[key]) {
        seen[key] = 1;
        todo.emplace_back(s2, t2);
      }
    }
  }
  return true;
}

/// Result of minimization: the quotient automaton plus, for every original
/// state, the class (= quotient state) it collapsed to.
struct Minimized {
  Automaton automaton;
  std::vector<int> state_class;
};

/// Merge states with identical tree actions.  Classes are numbered by first
/// occurrence, so an already-minimal automaton round-trips with unchanged
/// tables.  Each class keeps the display name of its first member.
inline Minimized minimize(const Automaton& a) {
  const int qn = a.num_states();
  const int n = a.num_letters();
  // Initial colouring by output row; refine by successor colours to a fixpoint.
  std::vector<int> colour(static_cast<std::size_t>(qn));
  {
    std::vector<std::vector<int>> keys;
    for (int q = 0; q < qn; ++q) {
      auto row = a.rho_row(q);
      auto it = std::find(keys.begin(), keys.end(), row);
      if (it == keys.end()) {
        keys.push_back(row);
        colour[static_cast<std::size_t>(q)] = static_cast<int>(keys.size()) - 1;
      } else {
        colour[static_cast<std::size_t>(q)] = static_cast<int>(it - keys.begin());
      }
    }
  }
  for (;;) {
    std::vector<std::vector<int>> keys;
    std::vector<int> next(static_cast<std::size_t>(qn));
    for (int q = 0; q < qn; ++q) {
      std::vector<int> key{colour[static_cast<std::size_t>(q)]};
      for (int x = 0; x < n; ++x) key.push_back(colour[static_cast<std::size_t>(a.tau(q, x))]);
      auto it = std::find(keys.begin(), keys.end(), key);
      if (it == keys.end()) {
        keys.push_back(key);
        next[static_cast<std::size_t>(q)] = static_cast<int>(keys.size()) - 1;
      } else {
        next[static_cast<std::size_t>(q)] = static_cast<int>(it - keys.begin());
      }
    }
    if (next == colour) break;
    colour = std::move(next);
  }
  int classes = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<int> rep(static_cast<std::size_t>(classes), -1);
  for (int q = 0; q < qn; ++q)
    if (rep[static_cast<std::size_t>(colour[static_cast<std::size_t>(q)])] < 0) rep[static_cast<std::size_t>(colour[static_cast<std::size_t>(q)])] = q;
  std::vector<std::string> names;
  std::vector<int> rho, tau;
  for (int c = 0; c < classes; ++c) {
    int q = rep[static_cast<std::size_t>(c)];
    names.push_back(a.state_name(q));
    for (int x = 0; x < n; ++x) {
      rho.push_back(a.rho(q, x));
      tau.push_back(colour[static_cast<std::size_t>(a.tau(q, x))]);
    }
  }
  return Minimized{Automaton(std::move(names), n, std::move(rho), std::move(tau)), std::move(colour)};
}

}  // namespace mealy
