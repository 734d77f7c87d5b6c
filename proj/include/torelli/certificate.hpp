#pragma once

#include <vector>

#include "json.hpp"
#include "torelli/params.hpp"
#include "torelli/word.hpp"

namespace torelli {

// The relator families whose normal closure is the kernel of the map onto the
// free product of g copies of Z/2: generator squares, y generators, pairwise
// commutators of degree-two positive words, and squares of degree-three
// positive words.
enum class RelatorFamily { Square, Ykill, PairCommutator, TripleSquare };

// One concrete relator: a family tag plus the generator indices it mentions.
//   Square(i)                : x_i^2
//   Ykill(j)                 : y_j
//   PairCommutator(p,q,r,s)  : [x_p x_q, x_r x_s]
//   TripleSquare(i,j,k)      : (x_i x_j x_k)^2 with i, j, k distinct
struct RelatorInstance {
  RelatorFamily family = RelatorFamily::Square;
  std::vector<int> indices;

  static RelatorInstance square(int i) { return {RelatorFamily::Square, {i}}; }
  static RelatorInstance ykill(int j) { return {RelatorFamily::Ykill, {j}}; }
  static RelatorInstance pair_commutator(int p, int q, int r, int s) {
    return {RelatorFamily::PairCommutator, {p, q, r, s}};
  }
  static RelatorInstance triple_square(int i, int j, int k) {
    return {RelatorFamily::TripleSquare, {i, j, k}};
  }

  friend bool operator==(const RelatorInstance&, const RelatorInstance&) =
      default;
};

// The word a relator instance stands for.  Commutators come back unreduced
// (eight letters); everything else is already reduced.
Word relator_word(const RelatorInstance& relator);

// Checks the index ranges of a relator against the ambient surface.  Throws
// index_error for out-of-range indices and constraint_error when a triple
// square repeats an index.
void validate(const RelatorInstance& relator, const SurfaceParams& params);

// One factor u r^e u^-1 of a normal-closure decomposition.
struct CertificateEntry {
  Word conjugator;  // stored as written, not freely reduced
  RelatorInstance relator;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const CertificateEntry&, const CertificateEntry&) =
      default;
};

// An ordered product of conjugated relators witnessing membership in the
// normal closure of the relator families.
struct Certificate {
  std::vector<CertificateEntry> entries;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Multiplies the certificate out and freely reduces the result.
Word expand_certificate(const Certificate& cert);

// True when the certificate expands to the free reduction of w.
bool verify_certificate(const Certificate& cert, const Word& w);

// Produces a certificate decomposing w as a product of conjugated relators.
// Works on the word exactly as given (no prior reduction), so the certificate
// replays the letters of w itself.  Throws membership_error when w is not in
// the kernel subgroup.
Certificate gamma_certificate(const Word& w, const SurfaceParams& params);

// Rewrites one relator as a certificate over the other commutator-type
// family together with generator squares.  Supported directions: a triple
// square into pair commutators, and a pair commutator into triple squares
// (degenerate index patterns come back as squares only).  Anything else
// throws constraint_error.
Certificate convert_relator(const RelatorInstance& relator,
                            RelatorFamily target);

// JSON shape: [{"conj": "<word>", "relator": {"family": "...",
// "indices": [...]}, "exp": +-1}, ...].
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j,
                                  const SurfaceParams& params);

}  // namespace torelli
