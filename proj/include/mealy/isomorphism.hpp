#pragma once

/// @file isomorphism.hpp
/// Structural isomorphism of transducers: a relabelling of states and
/// (optionally) letters carrying one table onto the other exactly.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "mealy/automaton.hpp"

namespace mealy {

/// A candidate witness: state q of the first automaton corresponds to
/// state_map[q] in the second, letter x to letter_map[x].
struct Isomorphism {
  std::vector<int> state_map;
  std::vector<int> letter_map;
};

/// Identity witness for automata of the given shape.
inline Isomorphism identity_isomorphism(int n_states, int n_letters) {
  Isomorphism iso;
  iso.state_map.resize(static_cast<std::size_t>(n_states));
  iso.letter_map.resize(static_cast<std::size_t>(n_letters));
  for (int q = 0; q < n_states; ++q) iso.state_map[static_cast<std::size_t>(q)] = q;
  for (int x = 0; x < n_letters; ++x) iso.letter_map[static_cast<std::size_t>(x)] = x;
  return iso;
}

/// Check a witness exactly: both maps are bijections and carry rho to rho
/// and tau to tau cell by cell.
inline bool is_isomorphism(const Automaton& a, const Automaton& b, const Isomorphism& iso) {
  if (a.num_states() != b.num_states() || a.num_letters() != b.num_letters()) return false;
  if (iso.state_map.size() != static_cast<std::size_t>(a.num_states())) return false;
  if (iso.letter_map.size() != static_cast<std::size_t>(a.num_letters())) return false;
  if (!detail::is_permutation_row(iso.state_map) || !detail::is_permutation_row(iso.letter_map)) return false;
  for (int q = 0; q < a.num_states(); ++q)
    for (int x = 0; x < a.num_letters(); ++x) {
      int p = iso.state_map[static_cast<std::size_t>(q)];
      int y = iso.letter_map[static_cast<std::size_t>(x)];
      if (b.rho(p, y) != iso.letter_map[static_cast<std::size_t>(a.rho(q, x))]) return false;
      if (b.tau(p, y) != iso.state_map[static_cast<std::size_t>(a.tau(q, x))]) return false;
    }
  return true;
}

namespace detail {

/// Backtracking state-map search for one fixed letter bijection.
/// Assignments propagate: mapping q -> p forces tau(q, x) -> tau(p, beta(x)).
class StateMapSearch {
 public:
  StateMapSearch(const Automaton& a, const Automaton& b, const std::vector<int>& beta)
      : a_(a), b_(b), beta_(beta), alpha_(static_cast<std::size_t>(a.num_states()), -1), used_(static_cast<std::size_t>(b.num_states()), -1) {
    // Candidate images must have the matching output row: beta applied to
    // a's row, then sorted, must equal b's sorted row.
    const int n = a_.num_letters();
    std::vector<std::vector<int>> b_sigs;
    for (int p = 0; p < b_.num_states(); ++p) {
      auto row = b_.rho_row(p);
      std::sort(row.begin(), row.end());
      b_sigs.push_back(std::move(row));
    }
    cand_.resize(static_cast<std::size_t>(a_.num_states()));
    for (int q = 0; q < a_.num_states(); ++q) {
      std::vector<int> sig(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) sig[static_cast<std::size_t>(x)] = beta_[static_cast<std::size_t>(a_.rho(q, x))];
      std::sort(sig.begin(), sig.end());
      for (int p = 0; p < b_.num_states(); ++p)
        if (sig == b_sigs[static_cast<std::size_t>(p)]) cand_[static_cast<std::size_t>(q)].push_back(p);
      if (cand_[static_cast<std::size_t>(q)].empty()) hopeless_ = true;
    }
  }

  std::optional<std::vector<int>> run() {
    if (hopeless_) return std::nullopt;
    if (dfs()) return alpha_;
    return std::nullopt;
  }

 private:
  bool consistent(int q, int p) const {
    for (int x = 0; x < a_.num_letters(); ++x)
      if (b_.rho(p, beta_[static_cast<std::size_t>(x)]) != beta_[static_cast<std::size_t>(a_.rho(q, x))]) return false;
    return true;
  }

  /// Assign q -> p and everything it forces; log assignments into trail.
  bool assign(int q, int p, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> todo{{q, p}};
    while (!todo.empty()) {
      auto [s, t] = todo.back();
      todo.pop_back();
      int cur = alpha_[static_cast<std::size_t>(s)];
      if (cur != -1) {
        if (cur != t) return false;
        continue;
      }
      if (used_[static_cast<std::size_t>(t)] != -1) return false;
      if (!consistent(s, t)) return false;
      alpha_[static_cast<std::size_t>(s)] = t;
      used_[static_cast<std::size_t>(t)] = s;
      trail.push_back(s);
      for (int x = 0; x < a_.num_letters(); ++x) todo.emplace_back(a_.tau(s, x), b_.tau(t, beta_[static_cast<std::size_t>(x)]));
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int s : trail) {
      used_[static_cast<std::size_t>(alpha_[static_cast<std::size_t>(s)])] = -1;
      alpha_[static_cast<std::size_t>(s)] = -1;
    }
  }

  bool dfs() {
    int q = -1;
    std::size_t best = 0;
    for (int s = 0; s < a_.num_states(); ++s)
      if (alpha_[static_cast<std::size_t>(s)] == -1) {
        std::size_t c = cand_[static_cast<std::size_t>(s)].size();
        if (q == -1 || c < best) {
          q = s;
          best = c;
        }
      }
    if (q == -1) return true;
    for (int p : cand_[static_cast<std::size_t>(q)]) {
      if (used_[static_cast<std::size_t>(p)] != -1) continue;
      std::vector<int> trail;
      if (assign(q, p, trail) && dfs()) return true;
      undo(trail);
    }
    return false;
  }

  const Automaton& a_;
  const Automaton& b_;
  const std::vector<int>& beta_;
  std::vector<int> alpha_;
  std::vector<int> used_;
  std::vector<std::vector<int>> cand_;
  bool hopeless_ = false;
};

}  // namespace detail

/// Search for an isomorphism witness.  With fix_alphabet the letter map is
/// pinned to the identity; otherwise all letter bijections are tried in
/// lexicographic order, so the returned witness is deterministic.  Intended
/// for the desk scale this library works at (letter bijections are
/// enumerated exhaustively).
inline std::optional<Isomorphism> find_isomorphism(const Automaton& a, const Automaton& b, bool fix_alphabet = false) {
  if (a.num_states() != b.num_states() || a.num_letters() != b.num_letters()) return std::nullopt;
  const int n = a.num_letters();
  std::vector<int> beta(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) beta[static_cast<std::size_t>(x)] = x;
  do {
    detail::StateMapSearch search(a, b, beta);
    if (auto alpha = search.run()) return Isomorphism{std::move(*alpha), beta};
    if (fix_alphabet) return std::nullopt;
  } while (std::next_permutation(beta.begin(), beta.end()));
  return std::nullopt;
}

}  // namespace mealy
