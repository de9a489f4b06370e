#pragma once

/// @file schreier.hpp
/// The level-k action automaton (states = level-k tree words, letters = the
/// original states) and the transition monoid generated by the per-letter
/// successor maps.

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "mealy/automaton.hpp"

namespace mealy {

/// Transducer of the action on level k: its states are the n^k tree words
/// of length k (indexed little-endian, first letter least significant,
/// named by their digits), its letters are the states of a.  Reading state
/// q at word u outputs the section of q at u and moves to the image of u
/// under q.  For k = 1 this is exactly the dual.
inline Automaton schreier(const Automaton& a, int k) {
  if (!a.is_invertible()) fail(errc::not_invertible, "the level action automaton needs an invertible automaton");
  if (k < 0) fail(errc::bad_argument, "level must be non-negative");
  const int n = a.num_letters();
  const int q_count = a.num_states();
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(n);
  std::vector<std::string> names;
  names.reserve(count);
  std::vector<int> rho, tau;
  rho.reserve(count * static_cast<std::size_t>(q_count));
  tau.reserve(count * static_cast<std::size_t>(q_count));
  Word u(static_cast<std::size_t>(k), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    names.push_back(k == 0 ? std::string("e") : format_word(u, n));
    for (int q = 0; q < q_count; ++q) {
      rho.push_back(section(a, q, u));
      Word image = act(a, q, u);
      std::size_t image_idx = 0;
      for (std::size_t i = image.size(); i-- > 0;) image_idx = image_idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(image[i]);
      tau.push_back(static_cast<int>(image_idx));
    }
    // little-endian odometer: first letter fastest
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (++u[i] < n) break;
      u[i] = 0;
    }
  }
  return Automaton(std::move(names), q_count, std::move(rho), std::move(tau));
}

/// The transition monoid: all distinct compositions of the per-letter
/// successor maps q -> tau(q, x), as transformations of the state set.
struct TransitionMonoid {
  std::vector<std::vector<int>> elements;  ///< in discovery (BFS) order
  bool is_group = false;                   ///< every element is a permutation
  bool commutative = false;

  std::size_t order() const { return elements.size(); }
};

/// Close the per-letter successor maps under composition (breadth first, so
/// elements appear shortest-product first).  The identity map belongs to the
/// result exactly when some product of generators equals it.  Throws when
/// the closure would exceed max_elements.
inline TransitionMonoid transition_monoid(const Automaton& a, std::size_t max_elements = 1000000) {
  const int n = a.num_letters();
  const int q_count = a.num_states();
  std::vector<std::vector<int>> generators;
  for (int x = 0; x < n; ++x) {
    std::vector<int> gen(static_cast<std::size_t>(q_count));
    for (int q = 0; q < q_count; ++q) gen[static_cast<std::size_t>(q)] = a.tau(q, x);
    generators.push_back(std::move(gen));
  }
  TransitionMonoid result;
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> todo;
  for (const auto& g : generators)
    if (seen.insert(g).second) todo.push(g);
  while (!todo.empty()) {
    std::vector<int> f = std::move(todo.front());
    todo.pop();
    result.elements.push_back(f);
    if (result.elements.size() > max_elements)
      fail(errc::bad_argument, "transition monoid exceeds " + std::to_string(max_elements) + " elements");
    for (const auto& g : generators) {
      // extend the defining word by one letter: first f, then g
      std::vector<int> fg(static_cast<std::size_t>(q_count));
      for (int q = 0; q < q_count; ++q) fg[static_cast<std::size_t>(q)] = g[static_cast<std::size_t>(f[static_cast<std::size_t>(q)])];
      if (seen.insert(fg).second) todo.push(std::move(fg));
    }
  }
  result.is_group = std::all_of(result.elements.begin(), result.elements.end(), [](const std::vector<int>& f) {
    return detail::is_permutation_row(f);
  });
  result.commutative = true;
  for (std::size_t i = 0; i < result.elements.size() && result.commutative; ++i)
    for (std::size_t j = i + 1; j < result.elements.size(); ++j) {
      const auto& f = result.elements[i];
      const auto& g = result.elements[j];
      bool same = true;
      for (int q = 0; q < q_count && same; ++q)
        same = f[static_cast<std::size_t>(g[static_cast<std::size_t>(q)])] == g[static_cast<std::size_t>(f[static_cast<std::size_t>(q)])];
      if (!same) {
        result.commutative = false;
        break;
      }
    }
  return result;
}

}  // namespace mealy
