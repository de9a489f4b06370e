#pragma once

/// @file base.hpp
/// Shared primitives: the error taxonomy, the tree-word type and its textual form.
///
/// A word is a finite path in the rooted n-ary tree, stored little-endian:
/// the first letter is the topmost tree level and the least significant digit
/// of the integer the word encodes.  All letters are ints in [0, n_letters).

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mealy {

/// One letter of the alphabet, canonically an index in [0, n_letters).
using Letter = int;

/// A path in the rooted tree; w[0] is the first (topmost, least significant) letter.
using Word = std::vector<Letter>;

/// Machine-inspectable failure categories thrown as automaton_error.
enum class errc {
  empty_alphabet,               ///< automaton declared with no letters
  empty_state_set,              ///< automaton declared with no states
  out_of_range_entry,           ///< a transition-table entry outside its range
  table_shape,                  ///< rho/tau tables do not match states x letters
  state_out_of_range,           ///< a state argument outside [0, n_states)
  letter_out_of_range,          ///< a letter argument outside [0, n_letters)
  not_invertible,               ///< an output row is not a permutation
  alphabet_mismatch,            ///< two automata over different alphabets
  not_coprime,                  ///< multiplier shares a factor with the base
  not_coprime_determinant,      ///< matrix determinant shares a factor with the base
  finite_order_matrix,          ///< matrix has finite multiplicative order
  non_monic,                    ///< polynomial leading coefficient is not 1
  non_invertible_constant_term, ///< polynomial constant term not a unit mod n
  undeclared_section,           ///< wreath recursion references an unknown state
  invalid_permutation,          ///< wreath recursion row is not a permutation
  dimension_mismatch,           ///< vector/matrix dimensions disagree
  parse_error,                  ///< malformed textual input
  bad_argument,                 ///< argument outside the documented domain
};

/// Human-readable tag for an errc, used in what() strings and CLI messages.
inline const char* to_string(errc c) {
  switch (c) {
    case errc::empty_alphabet: return "empty-alphabet";
    case errc::empty_state_set: return "empty-state-set";
    case errc::out_of_range_entry: return "out-of-range-entry";
    case errc::table_shape: return "table-shape";
    case errc::state_out_of_range: return "state-out-of-range";
    case errc::letter_out_of_range: return "letter-out-of-range";
    case errc::not_invertible: return "not-invertible";
    case errc::alphabet_mismatch: return "alphabet-mismatch";
    case errc::not_coprime: return "not-coprime";
    case errc::not_coprime_determinant: return "not-coprime-determinant";
    case errc::finite_order_matrix: return "finite-order-matrix";
    case errc::non_monic: return "non-monic";
    case errc::non_invertible_constant_term: return "non-invertible-constant-term";
    case errc::undeclared_section: return "undeclared-section";
    case errc::invalid_permutation: return "invalid-permutation";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::parse_error: return "parse-error";
    case errc::bad_argument: return "bad-argument";
  }
  return "unknown";
}

/// Exception carrying a category tag plus a context message.
class automaton_error : public std::runtime_error {
 public:
  automaton_error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw automaton_error(code, detail);
}

/// Render a word for display: digits are concatenated when the alphabet fits
/// in single digits ("0211"), comma-separated otherwise ("3,17,2").
inline std::string format_word(const Word& w, int n_letters) {
  std::string out;
  const bool compact = n_letters <= 10;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (compact) {
      out += static_cast<char>('0' + w[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(w[i]);
    }
  }
  return out;
}

/// Parse the textual word form accepted by the CLI: a digit string for small
/// alphabets, or comma-separated letter indices for any alphabet.  The empty
/// string is the empty word (the tree root).
inline Word parse_word(const std::string& text, int n_letters) {
  Word w;
  if (text.empty()) return w;
  if (text.find(',') == std::string::npos && n_letters <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') fail(errc::parse_error, "expected digit, got '" + std::string(1, c) + "'");
      int x = c - '0';
      if (x >= n_letters) fail(errc::letter_out_of_range, "letter " + std::to_string(x) + " with alphabet size " + std::to_string(n_letters));
      w.push_back(x);
    }
    return w;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int x = 0;
    try {
      x = std::stoi(item, &pos);
    } catch (const std::exception&) {
      fail(errc::parse_error, "expected letter index, got '" + item + "'");
    }
    if (pos != item.size()) fail(errc::parse_error, "trailing characters in letter '" + item + "'");
    if (x < 0 || x >= n_letters) fail(errc::letter_out_of_range, "letter " + std::to_string(x) + " with alphabet size " + std::to_string(n_letters));
    w.push_back(x);
  }
  return w;
}

}  // namespace mealy
