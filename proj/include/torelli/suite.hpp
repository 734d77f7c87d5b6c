#pragma once

#include <string>
#include <vector>

#include "torelli/params.hpp"

namespace torelli {

// Outcome of one self-contained consistency check.  detail carries either a
// short success summary (counts, sizes) or the failure description.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  long long millis = 0;
};

// Replays the frozen end-to-end example: projection, position profile,
// membership, normal form, homology action and certificate of one fixed
// word on the genus-4, six-boundary surface.
CheckResult check_worked_example();

// All g^4 ordered pairs of the basic homology matrices commute exactly, and
// the corresponding word-level commutators land in the kernel subgroup.
CheckResult check_pair_action_commutation(const SurfaceParams& params);

// Exhaustive concordance on the genus-3, two-boundary surface: for every
// signed x word of length at most six, membership, normal-form triviality
// and (for even words) triviality of the homology action coincide.
CheckResult check_concordance_exhaustive();

// Same concordance on random words (with y letters) over a chosen surface.
CheckResult check_concordance_random(const SurfaceParams& params,
                                     unsigned long long seed, int count,
                                     int max_len);

// Inserting a cancelling pair, a y letter or the closed-surface relator
// x_1^2..x_g^2 anywhere in a word leaves every O_i - E_i difference, the
// membership predicate, the normal form and the homology action unchanged.
CheckResult check_insertion_invariance(const SurfaceParams& params,
                                       unsigned long long seed, int trials);

// The five commutator-to-square identities and the degenerate collapses,
// exhaustively over all index patterns at the given genus (needs g >= 4).
CheckResult check_commutator_identities(int g);

// The rewriting of the standard presentation to the even-word subgroup
// reproduces the expected relator families exactly.
CheckResult check_rewriting_families(const SurfaceParams& params);

// Rewriting along the trivial (index-one) subgroup returns the presentation
// unchanged.
CheckResult check_rewriting_identity_subgroup(const SurfaceParams& params);

// Certificates: random products of conjugated relators certify and verify
// within the quadratic entry bound; random words certify exactly when they
// are members; relator conversions expand correctly in both directions.
CheckResult check_certificates(const SurfaceParams& params,
                               unsigned long long seed, int member_trials,
                               int random_trials, int random_max_len);

// Correction twist vectors with zero sum compose to the identity on
// homology, one twist per nonzero entry; nonzero sums are rejected.
CheckResult check_correction_twists(const SurfaceParams& params,
                                    unsigned long long seed, int trials);

// Catalog sanity over a small grid of surfaces: generating set contents,
// lift rules and boundary product formulas.
CheckResult check_catalog();

// All checks with default sizes, randomized parts driven by the seed.
std::vector<CheckResult> run_all(const SurfaceParams& params,
                                 unsigned long long seed);

}  // namespace torelli
