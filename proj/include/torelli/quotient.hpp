#pragma once

#include <vector>

#include "json.hpp"
#include "torelli/params.hpp"
#include "torelli/word.hpp"

namespace torelli {

// Normal forms in the quotient (Z^{g-1}) x| Z/2 that detects kernel
// membership: each y_j dies, each x_i with i < g maps to (e_i, 1), and
// x_g maps to (0, 1).  The parity bit acts on the vector part by
// negation, so multiplication is (v1, e1)(v2, e2) =
// (v1 + (-1)^{e1} v2, e1 xor e2).
struct NormalForm {
  std::vector<long long> v;  // g-1 coordinates
  int parity = 0;            // 0 or 1

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm nf_identity(const SurfaceParams& params);

// Evaluates a word letter by letter.  Letter signs are irrelevant
// because every generator image is an involution.
NormalForm nf(const Word& w, const SurfaceParams& params);

// Raises constraint_error on mismatched vector lengths.
NormalForm nf_mul(const NormalForm& lhs, const NormalForm& rhs);

bool is_trivial(const NormalForm& form);

void to_json(nlohmann::json& j, const NormalForm& form);

}  // namespace torelli
