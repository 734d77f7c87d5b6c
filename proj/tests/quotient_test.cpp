#include "torelli/quotient.hpp"

#include <random>

#include "doctest.h"
#include "json.hpp"
#include "torelli/errors.hpp"
#include "torelli/surface.hpp"
#include "torelli/word.hpp"

using namespace torelli;

namespace {

const SurfaceParams kN32{3, 2};
const SurfaceParams kN53{5, 3};

Word random_word(std::mt19937_64& rng, const SurfaceParams& params, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, params.g + params.y_count() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  Word w;
  const int n = len_dist(rng);
  for (int t = 0; t < n; ++t) {
    const int pick = gen_dist(rng);
    Generator gen = pick < params.g ? xgen(pick + 1) : ygen(pick - params.g + 1);
    w.letters.push_back(Letter{gen, sign_dist(rng) == 0 ? 1 : -1});
  }
  return w;
}

}  // namespace

TEST_CASE("normal form of generators and small words") {
  // x1 x2 at g=3: v = (1, -1), parity 0.
  const NormalForm a = nf(parse_word("x1 x2", kN32), kN32);
  CHECK(a.v == std::vector<long long>{1, -1});
  CHECK(a.parity == 0);

  // Signs are ignored: x1^-1 evaluates like x1.
  CHECK(nf(parse_word("x1^-1", kN32), kN32) == nf(parse_word("x1", kN32), kN32));

  // y letters evaluate to the identity.
  CHECK(is_trivial(nf(parse_word("y1", kN32), kN32)));

  // x_g contributes only parity.
  const NormalForm c = nf(parse_word("x3", kN32), kN32);
  CHECK(c.v == std::vector<long long>{0, 0});
  CHECK(c.parity == 1);

  CHECK(is_trivial(nf(Word{}, kN32)));
}

TEST_CASE("each generator image squares to the identity") {
  for (int i = 1; i <= kN53.g; ++i) {
    Word sq{{Letter{xgen(i), 1}, Letter{xgen(i), 1}}};
    CHECK(is_trivial(nf(sq, kN53)));
  }
}

TEST_CASE("multiplication matches letter-by-letter evaluation") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const Word a = random_word(rng, kN53, 14);
    const Word b = random_word(rng, kN53, 14);
    CHECK(nf_mul(nf(a, kN53), nf(b, kN53)) == nf(concat(a, b), kN53));
  }
}

TEST_CASE("multiplication twists by parity") {
  // (v1, 1) * (v2, e2) subtracts v2.
  const NormalForm odd{{2, 0, 0, 0}, 1};
  const NormalForm other{{1, 1, 0, 0}, 0};
  const NormalForm prod = nf_mul(odd, other);
  CHECK(prod.v == std::vector<long long>{1, -1, 0, 0});
  CHECK(prod.parity == 1);
  CHECK_THROWS_AS(nf_mul(odd, NormalForm{{1}, 0}), constraint_error);
}

TEST_CASE("normal form is a free-group invariant") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, kN53, 16);
    CHECK(nf(w, kN53) == nf(free_reduce(w), kN53));
    CHECK(is_trivial(nf_mul(nf(w, kN53), nf(invert(w), kN53))));
  }
}

TEST_CASE("triviality coincides with kernel membership") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 600; ++trial) {
    const Word w = random_word(rng, kN53, 18);
    CHECK(is_trivial(nf(w, kN53)) == in_gamma(w, kN53));
  }
  // Coordinates are the odd/even imbalances of the first g-1 indices.
  const Word w = parse_word("x1 x2 x1 x3", kN53);
  const OEProfile prof = oe_profile(w, kN53);
  const NormalForm form = nf(w, kN53);
  for (int i = 0; i < kN53.g - 1; ++i) {
    CHECK(form.v[i] == prof.odd[i] - prof.even[i]);
  }
}

TEST_CASE("normal form serializes to v and parity") {
  const nlohmann::json j = nf(parse_word("x1 x2", kN32), kN32);
  CHECK(j["v"] == nlohmann::json::array({1, -1}));
  CHECK(j["parity"] == 0);
}
