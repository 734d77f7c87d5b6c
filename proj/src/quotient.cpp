#include "torelli/quotient.hpp"

#include <string>

#include "torelli/errors.hpp"

namespace torelli {

NormalForm nf_identity(const SurfaceParams& params) {
  params.validate();
  return NormalForm{std::vector<long long>(params.g - 1, 0), 0};
}

NormalForm nf(const Word& w, const SurfaceParams& params) {
  validate_word(w, params);
  NormalForm acc = nf_identity(params);
  for (const Letter& l : w.letters) {
    if (l.gen.kind == GenKind::Y) continue;
    // Image of x_i: (e_i, 1) for i < g, (0, 1) for i = g, regardless
    // of the letter's sign.
    const int sign = acc.parity == 0 ? 1 : -1;
    if (l.gen.index < params.g) {
      acc.v[l.gen.index - 1] += sign;
    }
    acc.parity ^= 1;
  }
  return acc;
}

NormalForm nf_mul(const NormalForm& lhs, const NormalForm& rhs) {
  if (lhs.v.size() != rhs.v.size()) {
    throw constraint_error("normal forms live in different ranks: " +
                           std::to_string(lhs.v.size()) + " vs " +
                           std::to_string(rhs.v.size()));
  }
  NormalForm out = lhs;
  const int sign = lhs.parity == 0 ? 1 : -1;
  for (std::size_t t = 0; t < rhs.v.size(); ++t) {
    out.v[t] += sign * rhs.v[t];
  }
  out.parity ^= rhs.parity;
  return out;
}

bool is_trivial(const NormalForm& form) {
  if (form.parity != 0) return false;
  for (long long c : form.v) {
    if (c != 0) return false;
  }
  return true;
}

void to_json(nlohmann::json& j, const NormalForm& form) {
  j = nlohmann::json{{"v", form.v}, {"parity", form.parity}};
}

}  // namespace torelli
