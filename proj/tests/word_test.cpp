#include "torelli/word.hpp"

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "torelli/errors.hpp"
#include "torelli/params.hpp"

using namespace torelli;

namespace {

const SurfaceParams kWide{5, 6};  // x1..x5, y1..y5

// Independent oracle: multiply words one letter at a time, cancelling
// against the tail of the accumulator as we go.  This never calls
// free_reduce, so it provides a second opinion on concat/reduce.
Word naive_mul(const Word& lhs, const Word& rhs) {
  std::vector<Letter> acc = lhs.letters;
  for (const Letter& l : rhs.letters) {
    if (!acc.empty() && acc.back().gen == l.gen && acc.back().exp == -l.exp) {
      acc.pop_back();
    } else {
      acc.push_back(l);
    }
  }
  // lhs may itself contain cancelling pairs; fold it through once more.
  std::vector<Letter> out;
  for (const Letter& l : acc) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word{out};
}

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

TEST_CASE("parse expands powers and counts letters") {
  // Worked example word: 13 letters once the powers y1^-2 and y4^3 are
  // spelled out.
  const Word w =
      parse_word("x1 y2 x2 x3^-1 y5 y1^-2 x1 x2^-1 y4^3 x3^-1", kWide);
  CHECK(w.size() == 13);
  CHECK(w.letters[0] == Letter{xgen(1), 1});
  CHECK(w.letters[1] == Letter{ygen(2), 1});
  CHECK(w.letters[3] == Letter{xgen(3), -1});
  CHECK(w.letters[5] == Letter{ygen(1), -1});
  CHECK(w.letters[6] == Letter{ygen(1), -1});
  CHECK(w.letters[9] == Letter{ygen(4), 1});
  CHECK(w.letters[11] == Letter{ygen(4), 1});
  CHECK(w.letters[12] == Letter{xgen(3), -1});
}

TEST_CASE("parse accepts the identity token and both separators") {
  CHECK(parse_word("1", kWide).empty());
  CHECK(parse_word("  1  ", kWide).empty());
  const Word w = parse_word("x1*x2^-1 * y3", kWide);
  REQUIRE(w.size() == 3);
  CHECK(w.letters[0] == Letter{xgen(1), 1});
  CHECK(w.letters[1] == Letter{xgen(2), -1});
  CHECK(w.letters[2] == Letter{ygen(3), 1});
  CHECK(parse_word("x2^3", kWide) == parse_word("x2 x2 x2", kWide));
  CHECK(parse_word("x2^-2", kWide) == parse_word("x2^-1 x2^-1", kWide));
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(parse_word("z1", kWide), syntax_error);
  CHECK_THROWS_AS(parse_word("x", kWide), syntax_error);
  CHECK_THROWS_AS(parse_word("x1^0", kWide), syntax_error);
  CHECK_THROWS_AS(parse_word("x1^", kWide), syntax_error);
  CHECK_THROWS_AS(parse_word("x1^two", kWide), syntax_error);
  CHECK_THROWS_AS(parse_word("x1x2", kWide), syntax_error);
  CHECK_THROWS_AS(parse_word("X1", kWide), syntax_error);
}

TEST_CASE("parse rejects out-of-range indices") {
  CHECK_THROWS_AS(parse_word("x0", kWide), index_error);
  CHECK_THROWS_AS(parse_word("x6", kWide), index_error);
  CHECK_THROWS_AS(parse_word("y0", kWide), index_error);
  CHECK_THROWS_AS(parse_word("y6", kWide), index_error);
  // b = 1 admits no y generators at all.
  CHECK_THROWS_AS(parse_word("y1", SurfaceParams{3, 1}), index_error);
  CHECK_NOTHROW(parse_word("x3", SurfaceParams{3, 1}));
}

TEST_CASE("format is lowercase, space separated, powers spelled out") {
  CHECK(format_word(Word{}) == "1");
  CHECK(format_word(parse_word("x1 x2^-1 y3", kWide)) == "x1 x2^-1 y3");
  CHECK(format_word(parse_word("y4^3", kWide)) == "y4 y4 y4");
  // Round trip through text is the identity on words.
  const std::string s = "x1 y2 x2 x3^-1 y5 y1^-1 y1^-1 x1 x2^-1 y4 y4 y4 x3^-1";
  CHECK(format_word(parse_word(s, kWide)) == s);
}

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  CHECK(free_reduce(parse_word("x1 x2 x2^-1 x1", kWide)) ==
        parse_word("x1 x1", kWide));
  CHECK(free_reduce(parse_word("x1 y1 y1^-1 x1^-1", kWide)).empty());
  // Cancellation cascades through the point where a pair is removed.
  CHECK(free_reduce(parse_word("x1 x2 x3 x3^-1 x2^-1 x1^-1", kWide)).empty());
  CHECK(free_reduce(parse_word("x2 x2", kWide)) == parse_word("x2 x2", kWide));
  CHECK(is_reduced(free_reduce(parse_word("x1 x1^-1 x1 x1^-1 x1", kWide))));
}

TEST_CASE("invert reverses and flips exponents") {
  CHECK(invert(parse_word("x1 x2^-1 y3", kWide)) ==
        parse_word("y3^-1 x2 x1^-1", kWide));
  CHECK(invert(Word{}).empty());
}

TEST_CASE("concat and conjugate do not reduce") {
  const Word u = parse_word("x1", kWide);
  const Word w = parse_word("x1^-1 x2", kWide);
  CHECK(concat(u, w) == parse_word("x1 x1^-1 x2", kWide));
  CHECK(conjugate(u, w) == parse_word("x1 x1^-1 x2 x1^-1", kWide));
  CHECK(conjugate(Word{}, w) == w);
}

TEST_CASE("commutator of pair words reduces to the frozen form") {
  const Word a = parse_word("x1 x2", kWide);
  const Word b = parse_word("x3 x2", kWide);
  // [a, b] = a b a^-1 b^-1; the two middle x2 letters cancel.
  const Word c = free_reduce(commutator(a, b));
  CHECK(c == parse_word("x1 x2 x3 x1^-1 x2^-1 x3^-1", kWide));
  // Second opinion from the naive letter-at-a-time multiplier.
  CHECK(c == naive_mul(naive_mul(naive_mul(a, b), invert(a)), invert(b)));
}

TEST_CASE("free_reduce agrees with the naive multiplier on random words") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 500; ++trial) {
    const Word a = random_word(rng, kWide, 18);
    const Word b = random_word(rng, kWide, 18);
    CHECK(free_reduce(concat(a, b)) ==
          naive_mul(free_reduce(a), free_reduce(b)));
    CHECK(free_reduce(concat(a, invert(a))).empty());
    CHECK(free_reduce(invert(free_reduce(a))) == invert(free_reduce(a)));
  }
}

TEST_CASE("validate_word flags letters outside the parameter range") {
  const Word w = parse_word("x3 y2", kWide);
  CHECK_NOTHROW(validate_word(w, kWide));
  CHECK_THROWS_AS(validate_word(w, SurfaceParams{2, 6}), index_error);
  CHECK_THROWS_AS(validate_word(w, SurfaceParams{5, 2}), index_error);
}
