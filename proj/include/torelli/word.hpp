#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "torelli/params.hpp"

namespace torelli {

// Free-group words over the alphabet x_1..x_g, y_1..y_{b-1}.
//
// Words are plain letter sequences; nothing here reduces implicitly.
// free_reduce is the only operation that cancels, so callers can keep
// unreduced products around (conjugators in certificates rely on this).

enum class GenKind { X, Y };

struct Generator {
  GenKind kind = GenKind::X;
  int index = 1;  // 1-based

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator xgen(int i) { return Generator{GenKind::X, i}; }
inline Generator ygen(int j) { return Generator{GenKind::Y, j}; }

struct Letter {
  Generator gen;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return Letter{gen, -exp}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
};

// Parses the textual grammar: tokens x<k> / y<k> with an optional
// nonzero integer exponent after '^', separated by whitespace or '*'.
// The token 1 denotes the empty word.  Powers are expanded into single
// letters at parse time.  Raises syntax_error for malformed text and
// index_error for indices outside 1..g / 1..b-1.
Word parse_word(std::string_view text, const SurfaceParams& params);

// Lowercase tokens, single spaces, ^-1 as the only exponent ("1" for
// the empty word).  parse_word(format_word(w)) == w for valid words.
std::string format_word(const Word& w);

// Raises index_error unless every letter fits the parameter ranges.
void validate_word(const Word& w, const SurfaceParams& params);

bool is_reduced(const Word& w);

// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

Word invert(const Word& w);

// Plain concatenation, no reduction.
Word concat(const Word& lhs, const Word& rhs);

// u w u^-1, unreduced.
Word conjugate(const Word& u, const Word& w);

// a b a^-1 b^-1, unreduced.
Word commutator(const Word& a, const Word& b);

}  // namespace torelli
