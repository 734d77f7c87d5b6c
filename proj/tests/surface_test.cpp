#include "torelli/surface.hpp"

#include <random>

#include "doctest.h"
#include "torelli/errors.hpp"
#include "torelli/word.hpp"

using namespace torelli;

namespace {

const SurfaceParams kN36{3, 6};   // the worked-example surface
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

TEST_CASE("projection deletes y letters and reduces") {
  const Word x = parse_word("x1 y2 x2 x3^-1 y5 y1^-2 x1 x2^-1 y4^3 x3^-1", kN36);
  CHECK(project_p(x, kN36) == parse_word("x1 x2 x3^-1 x1 x2^-1 x3^-1", kN36));
  CHECK(project_p(parse_word("y1 y2 y3", kN36), kN36).empty());
  // Deleting y letters can expose new cancellations.
  CHECK(project_p(parse_word("x1 y1 x1^-1", kN36), kN36).empty());
}

TEST_CASE("odd/even profile of the worked example") {
  const Word x = parse_word("x1 y2 x2 x3^-1 y5 y1^-2 x1 x2^-1 y4^3 x3^-1", kN36);
  const OEProfile prof = oe_profile(x, kN36);
  REQUIRE(prof.odd.size() == 3);
  REQUIRE(prof.even.size() == 3);
  // Projection x1 x2 x3^-1 x1 x2^-1 x3^-1: each index once odd, once even.
  for (int i = 0; i < 3; ++i) {
    CHECK(prof.odd[i] == 1);
    CHECK(prof.even[i] == 1);
  }
  CHECK(in_gamma(x, kN36));
  CHECK(in_plus(x, kN36));
}

TEST_CASE("profile counts positions by parity, signs ignored") {
  // Projection x1 x2 x1 x2: odd slots 1,3 hold x1, even slots 2,4 hold x2.
  const OEProfile prof = oe_profile(parse_word("x1 x2^-1 x1^-1 x2", kN53), kN53);
  CHECK(prof.odd == std::vector<int>{2, 0, 0, 0, 0});
  CHECK(prof.even == std::vector<int>{0, 2, 0, 0, 0});
}

TEST_CASE("profile requires an even projection") {
  CHECK_THROWS_AS(oe_profile(parse_word("x1", kN53), kN53), parity_error);
  CHECK_THROWS_AS(oe_profile(parse_word("x1 x2 x3", kN53), kN53), parity_error);
  // in_gamma reports false rather than raising on odd projections.
  CHECK_FALSE(in_gamma(parse_word("x1", kN53), kN53));
  CHECK_FALSE(in_plus(parse_word("x1", kN53), kN53));
  CHECK(in_plus(parse_word("x1 x2", kN53), kN53));
  CHECK_FALSE(in_gamma(parse_word("x1 x2", kN53), kN53));
}

TEST_CASE("kernel membership is invariant under free insertion") {
  const Word member = parse_word("x1 x2 x2 x1", kN53);
  REQUIRE(in_gamma(member, kN53));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Word noisy = member;
    // Insert a cancelling pair and a y letter at random spots.
    std::uniform_int_distribution<int> pos_dist(0, static_cast<int>(noisy.size()));
    std::uniform_int_distribution<int> idx_dist(1, kN53.g);
    int at = pos_dist(rng);
    const int i = idx_dist(rng);
    noisy.letters.insert(noisy.letters.begin() + at,
                         {Letter{xgen(i), 1}, Letter{xgen(i), -1}});
    std::uniform_int_distribution<int> pos2(0, static_cast<int>(noisy.size()));
    noisy.letters.insert(noisy.letters.begin() + pos2(rng), Letter{ygen(1), 1});
    CHECK(in_gamma(noisy, kN53));
    const OEProfile a = oe_profile(member, kN53);
    const OEProfile b = oe_profile(noisy, kN53);
    for (int t = 0; t < kN53.g; ++t) {
      CHECK(a.odd[t] - a.even[t] == b.odd[t] - b.even[t]);
    }
  }
}

TEST_CASE("kernel is closed under products and conjugation") {
  std::mt19937_64 rng(11);
  int members = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Word w = random_word(rng, kN53, 16);
    if (!in_gamma(w, kN53)) continue;
    ++members;
    const Word u = random_word(rng, kN53, 9);
    CHECK(in_gamma(conjugate(u, w), kN53));
    CHECK(in_gamma(concat(w, w), kN53));
    CHECK(in_gamma(invert(w), kN53));
  }
  CHECK(members > 0);
}

TEST_CASE("parity rewriting emits the expected symbols") {
  CHECK(format_plus_word(schreier_rewrite_plus(parse_word("x5 x5", kN53), kN53)) ==
        "B5");
  CHECK(format_plus_word(schreier_rewrite_plus(parse_word("x1 x5^-1", kN53), kN53)) ==
        "A1");
  CHECK(format_plus_word(schreier_rewrite_plus(parse_word("x1 x2", kN53), kN53)) ==
        "A1 B2");
  CHECK(format_plus_word(schreier_rewrite_plus(parse_word("x5 x1", kN53), kN53)) ==
        "B1");
  CHECK(format_plus_word(schreier_rewrite_plus(parse_word("y1", kN53), kN53)) ==
        "y1");
  CHECK(format_plus_word(schreier_rewrite_plus(parse_word("x5 y1 x5^-1", kN53), kN53)) ==
        "C1");
  CHECK(format_plus_word(schreier_rewrite_plus(parse_word("x5^-1 x5^-1", kN53), kN53)) ==
        "B5^-1");
  CHECK(format_plus_word(schreier_rewrite_plus(Word{}, kN53)) == "1");
}

TEST_CASE("parity rewriting rejects odd words") {
  CHECK_THROWS_AS(schreier_rewrite_plus(parse_word("x1", kN53), kN53),
                  parity_error);
  CHECK_THROWS_AS(schreier_rewrite_plus(parse_word("x5 y1 x5 x5", kN53), kN53),
                  parity_error);
}

TEST_CASE("parity alphabet lists A, B, y, C with their expansions") {
  const auto alphabet = plus_alphabet(kN53);
  // (g-1) + g + (b-1) + (b-1) symbols.
  REQUIRE(alphabet.size() == 4u + 5u + 2u + 2u);
  CHECK(alphabet[0].gen == PlusGenerator{PlusKind::A, 1});
  CHECK(alphabet[0].expansion == parse_word("x1 x5^-1", kN53));
  CHECK(alphabet[4].gen == PlusGenerator{PlusKind::B, 1});
  CHECK(alphabet[4].expansion == parse_word("x5 x1", kN53));
  CHECK(alphabet[8].gen == PlusGenerator{PlusKind::B, 5});
  CHECK(alphabet[8].expansion == parse_word("x5 x5", kN53));
  CHECK(alphabet[9].gen == PlusGenerator{PlusKind::Y, 1});
  CHECK(alphabet[9].expansion == parse_word("y1", kN53));
  CHECK(alphabet[11].gen == PlusGenerator{PlusKind::C, 1});
  CHECK(alphabet[11].expansion == parse_word("x5 y1 x5^-1", kN53));
}

TEST_CASE("parity rewriting round-trips through expansion") {
  std::mt19937_64 rng(23);
  int evens = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Word w = random_word(rng, kN53, 20);
    if (!in_plus(w, kN53)) continue;
    ++evens;
    const PlusWord rewritten = schreier_rewrite_plus(w, kN53);
    CHECK(free_reduce(expand_plus(rewritten, kN53)) == free_reduce(w));
  }
  CHECK(evens > 100);
}

TEST_CASE("parity rewriting works at g = 1") {
  const SurfaceParams tiny{1, 2};
  // x1 x1 is the whole even subgroup's first generator here.
  CHECK(format_plus_word(schreier_rewrite_plus(parse_word("x1 x1", tiny), tiny)) ==
        "B1");
  const auto alphabet = plus_alphabet(tiny);
  REQUIRE(alphabet.size() == 3);  // B1, y1, C1
  CHECK(alphabet[0].gen == PlusGenerator{PlusKind::B, 1});
}
