#pragma once

#include <compare>
#include <string>
#include <vector>

#include "torelli/params.hpp"
#include "torelli/word.hpp"

namespace torelli {

// Projection and position-parity bookkeeping for words in the
// fundamental group of N_{g,b}, plus Schreier rewriting into the
// even-projection (index two) subgroup.

// Deletes every y letter and freely reduces the remainder, landing in
// the free group on x_1..x_g.
Word project_p(const Word& w, const SurfaceParams& params);

// Occurrence counts of each x index at odd and at even positions of
// the reduced projection (1-based positions; entry [i-1] belongs to
// x_i).  Signs are ignored.  The differences odd[i]-even[i] do not
// depend on the chosen representative of the group element.
struct OEProfile {
  std::vector<int> odd;
  std::vector<int> even;
};

// Raises parity_error when the reduced projection has odd length.
OEProfile oe_profile(const Word& w, const SurfaceParams& params);

// Membership in the kernel subgroup: even projection with every index
// appearing equally often at odd and even positions.  Odd projection
// length reports false rather than raising.
bool in_gamma(const Word& w, const SurfaceParams& params);

// Membership in the even-projection subgroup (index two).
bool in_plus(const Word& w, const SurfaceParams& params);

// Free generators of the even-projection subgroup, obtained from the
// transversal {1, x_g}:
//   A_i = x_i x_g^-1   (1 <= i <= g-1)
//   B_j = x_g x_j      (1 <= j <= g)
//   y_k                (1 <= k <= b-1)
//   C_k = x_g y_k x_g^-1
enum class PlusKind { A, B, Y, C };

struct PlusGenerator {
  PlusKind kind = PlusKind::A;
  int index = 1;

  friend auto operator<=>(const PlusGenerator&, const PlusGenerator&) = default;
};

struct PlusLetter {
  PlusGenerator gen;
  int exp = 1;

  friend auto operator<=>(const PlusLetter&, const PlusLetter&) = default;
};

struct PlusWord {
  std::vector<PlusLetter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const PlusWord&, const PlusWord&) = default;
};

struct PlusAlphabetEntry {
  PlusGenerator gen;
  Word expansion;
};

// The full generator list in the order A_1..A_{g-1}, B_1..B_g,
// y_1..y_{b-1}, C_1..C_{b-1}.
std::vector<PlusAlphabetEntry> plus_alphabet(const SurfaceParams& params);

Word plus_expansion(const PlusGenerator& gen, const SurfaceParams& params);

// Rewrites an even-projection word over the A/B/y/C alphabet (freely
// reduced at the symbol level).  Expanding the result and reducing
// recovers free_reduce(w).  Raises parity_error on odd words.
PlusWord schreier_rewrite_plus(const Word& w, const SurfaceParams& params);

Word expand_plus(const PlusWord& w, const SurfaceParams& params);

PlusWord plus_free_reduce(const PlusWord& w);

// Tokens like "A1", "B3^-1", "y2", "C1"; "1" for the empty word.
std::string format_plus_word(const PlusWord& w);

}  // namespace torelli
