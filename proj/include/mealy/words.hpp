#pragma once

/// @file words.hpp
/// Elements of the group generated by an invertible automaton's states,
/// written as words in the states and their inverses, plus an exact decision
/// procedure for the word problem.
///
/// A GroupWord lists factors left to right in function-composition order:
/// the leftmost factor is applied last.  Everything here requires an
/// invertible automaton, since inverse factors read its tables backwards.

#include <cstdint>
#include <limits>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mealy/automaton.hpp"

namespace mealy {

/// One factor: a state index with an exponent sign.
struct Factor {
  int state;
  int sign;  // +1 or -1

  friend bool operator==(const Factor& a, const Factor& b) = default;
};

using GroupWord = std::vector<Factor>;

/// Positive one-letter word.
inline GroupWord gw(int state) { return {Factor{state, +1}}; }

inline GroupWord gw_inverse(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Factor{it->state, -it->sign});
  return out;
}

inline GroupWord gw_concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// w^k for any integer k (k < 0 uses the inverse word).
inline GroupWord gw_pow(const GroupWord& w, long long k) {
  const GroupWord base = k < 0 ? gw_inverse(w) : w;
  if (k < 0) k = -k;
  GroupWord out;
  out.reserve(base.size() * static_cast<std::size_t>(k));
  for (long long i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

/// t w t^{-1}.
inline GroupWord gw_conjugate(const GroupWord& t, const GroupWord& w) {
  return gw_concat(t, gw_concat(w, gw_inverse(t)));
}

/// a b a^{-1} b^{-1}.
inline GroupWord gw_commutator(const GroupWord& a, const GroupWord& b) {
  return gw_concat(a, gw_concat(b, gw_concat(gw_inverse(a), gw_inverse(b))));
}

/// Free reduction: cancel adjacent inverse pairs until none remain.
inline GroupWord gw_reduce(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (const Factor& f : w) {
    if (!out.empty() && out.back().state == f.state && out.back().sign == -f.sign)
      out.pop_back();
    else
      out.push_back(f);
  }
  return out;
}

/// Render using state display names: "s1 s0^-1".  The empty word renders as "1".
inline std::string format_group_word(const GroupWord& w, const Automaton& aut) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += aut.state_name(w[i].state);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

/// Parse whitespace-separated factors "name", "name^k" (k any non-zero
/// integer; |k| > 1 expands to repeated factors).  Names are resolved
/// against the automaton's display names, falling back to a plain state
/// index.  "1" on its own denotes the empty word.
inline GroupWord parse_group_word(const std::string& text, const Automaton& aut) {
  GroupWord out;
  std::stringstream ss(text);
  std::string token;
  while (ss >> token) {
    if (token == "1") continue;
    std::string name = token;
    long long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string exp = token.substr(caret + 1);
      std::size_t pos = 0;
      try {
        exponent = std::stoll(exp, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != exp.size() || exp.empty()) fail(errc::parse_error, "bad exponent in '" + token + "'");
      if (exponent == 0) fail(errc::parse_error, "zero exponent in '" + token + "'");
    }
    int state = aut.state_by_name(name);
    if (state < 0) {
      std::size_t pos = 0;
      try {
        state = std::stoi(name, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != name.size() || name.empty() || state < 0 || state >= aut.num_states())
        fail(errc::parse_error, "unknown state '" + name + "'");
    }
    int sign = exponent < 0 ? -1 : +1;
    for (long long i = 0; i < std::llabs(exponent); ++i) out.push_back(Factor{state, sign});
  }
  return out;
}

namespace detail {

/// Per-automaton context for word evaluation: the inverse output rows needed
/// by negative factors.
struct GwContext {
  const Automaton& aut;
  std::vector<int> inv_rho;  // [state * n_letters + output] = input

  explicit GwContext(const Automaton& a) : aut(a) {
    if (!a.is_invertible()) fail(errc::not_invertible, "group words need an invertible automaton");
    inv_rho.resize(static_cast<std::size_t>(a.num_states()) * a.num_letters());
    for (int q = 0; q < a.num_states(); ++q)
      for (int x = 0; x < a.num_letters(); ++x)
        inv_rho[static_cast<std::size_t>(q) * a.num_letters() + a.rho(q, x)] = x;
  }

  /// Image of letter x under the word, and the word's section at x (factor
  /// by factor, positions preserved, not reduced).
  std::pair<Letter, GroupWord> step(const GroupWord& w, Letter x) const {
    GroupWord sec(w.size(), Factor{0, +1});
    Letter y = x;
    for (std::size_t i = w.size(); i-- > 0;) {
      const Factor& f = w[i];
      if (f.sign > 0) {
        sec[i] = Factor{aut.tau(f.state, y), +1};
        y = aut.rho(f.state, y);
      } else {
        Letter pre = inv_rho[static_cast<std::size_t>(f.state) * aut.num_letters() + y];
        sec[i] = Factor{aut.tau(f.state, pre), -1};
        y = pre;
      }
    }
    return {y, std::move(sec)};
  }
};

struct GwKeyHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int32_t x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::vector<std::int32_t> gw_key(const GroupWord& w) {
  std::vector<std::int32_t> key;
  key.reserve(w.size());
  for (const Factor& f : w) key.push_back(static_cast<std::int32_t>(f.state) * 2 + (f.sign < 0 ? 1 : 0));
  return key;
}

}  // namespace detail

/// Image of a tree word under the element the group word denotes.
inline Word gw_act(const Automaton& aut, const GroupWord& w, const Word& input) {
  detail::GwContext ctx(aut);
  Word out(input.size());
  GroupWord cur = w;
  for (std::size_t i = 0; i < input.size(); ++i) {
    aut.check_letter(input[i]);
    auto [y, sec] = ctx.step(cur, input[i]);
    out[i] = y;
    cur = std::move(sec);
  }
  return out;
}

/// Section of the element at a letter: the word of factor sections, one per
/// factor, positions preserved (not freely reduced).
inline GroupWord gw_section(const Automaton& aut, const GroupWord& w, Letter x) {
  detail::GwContext ctx(aut);
  aut.check_letter(x);
  return ctx.step(w, x).second;
}

/// Section at a whole tree word, one letter at a time.
inline GroupWord gw_section(const Automaton& aut, const GroupWord& w, const Word& path) {
  detail::GwContext ctx(aut);
  GroupWord cur = w;
  for (Letter x : path) {
    aut.check_letter(x);
    cur = ctx.step(cur, x).second;
  }
  return cur;
}

enum class VerdictKind {
  trivial,         ///< the element is the identity on the whole tree
  nontrivial,      ///< a moved word was found (see witness)
  bound_exceeded,  ///< inconclusive: a search cap cut the closure short
};

struct Verdict {
  VerdictKind kind;
  Word witness;          ///< when nontrivial: a shortest moved tree word
  std::size_t explored;  ///< number of distinct reduced sections visited
};

struct DecideOptions {
  /// Maximum witness length to search (levels of the tree); unlimited by
  /// default — exactness is then guaranteed by the finiteness of the
  /// reduced-section closure.
  std::size_t max_level = std::numeric_limits<std::size_t>::max();
  /// Cap on distinct reduced sections visited.
  std::size_t max_nodes = std::numeric_limits<std::size_t>::max();
};

/// Decide whether the group word is the identity automorphism, by breadth
/// first search over the closure of its freely reduced sections.  Sections
/// never lengthen, so with unlimited options the search terminates and the
/// verdict is exact.  The witness is level-minimal and deterministic:
/// parents are explored in queue order and letters in ascending order, and
/// the smallest moved letter is appended.
inline Verdict decide_trivial(const Automaton& aut, const GroupWord& w, const DecideOptions& opts = {}) {
  detail::GwContext ctx(aut);
  const int n = aut.num_letters();
  std::unordered_set<std::vector<std::int32_t>, detail::GwKeyHash> seen;
  std::queue<std::pair<GroupWord, Word>> todo;
  GroupWord root = gw_reduce(w);
  seen.insert(detail::gw_key(root));
  todo.emplace(std::move(root), Word{});
  bool capped = false;
  std::size_t explored = 0;
  while (!todo.empty()) {
    auto [cur, path] = std::move(todo.front());
    todo.pop();
    ++explored;
    if (explored > opts.max_nodes) return {VerdictKind::bound_exceeded, {}, explored};
    if (path.size() + 1 > opts.max_level) {
      capped = true;
      continue;
    }
    std::vector<GroupWord> sections(static_cast<std::size_t>(n));
    for (Letter x = 0; x < n; ++x) {
      auto [y, sec] = ctx.step(cur, x);
      if (y != x) {
        Word witness = path;
        witness.push_back(x);
        return {VerdictKind::nontrivial, std::move(witness), explored};
      }
      sections[static_cast<std::size_t>(x)] = std::move(sec);
    }
    for (Letter x = 0; x < n; ++x) {
      GroupWord sec = gw_reduce(sections[static_cast<std::size_t>(x)]);
      auto key = detail::gw_key(sec);
      if (seen.contains(key)) continue;
      if (path.size() + 2 > opts.max_level) {
        // a child witness would already be longer than the cap
        capped = true;
        continue;
      }
      seen.insert(std::move(key));
      Word next = path;
      next.push_back(x);
      todo.emplace(std::move(sec), std::move(next));
    }
  }
  if (capped) return {VerdictKind::bound_exceeded, {}, explored};
  return {VerdictKind::trivial, {}, explored};
}

/// Exact triviality (unlimited search; terminates by finiteness).
inline bool is_trivial(const Automaton& aut, const GroupWord& w) {
  return decide_trivial(aut, w).kind == VerdictKind::trivial;
}

/// Do two words denote the same automorphism?  The verdict is for
/// lhs * rhs^{-1}; a nontrivial witness is a tree word on which they differ.
inline Verdict check_relation(const Automaton& aut, const GroupWord& lhs, const GroupWord& rhs,
                              const DecideOptions& opts = {}) {
  return decide_trivial(aut, gw_concat(lhs, gw_inverse(rhs)), opts);
}

enum class OrderKind {
  finite,          ///< order found within the bound
  exceeds_bound,   ///< no power up to the bound is trivial
  undecided,       ///< a search cap made some power inconclusive
};

struct OrderResult {
  OrderKind kind;
  long long order;  ///< valid when kind == finite
};

/// Smallest k in [1, bound] with w^k trivial.
inline OrderResult order_bounded(const Automaton& aut, const GroupWord& w, long long bound,
                                 const DecideOptions& opts = {}) {
  if (bound < 1) fail(errc::bad_argument, "order bound must be at least 1");
  for (long long k = 1; k <= bound; ++k) {
    Verdict v = decide_trivial(aut, gw_pow(w, k), opts);
    if (v.kind == VerdictKind::trivial) return {OrderKind::finite, k};
    if (v.kind == VerdictKind::bound_exceeded) return {OrderKind::undecided, 0};
  }
  return {OrderKind::exceeds_bound, 0};
}

}  // namespace mealy
