#include "torelli/homology.hpp"

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

Word random_even_word(std::mt19937_64& rng, const SurfaceParams& params,
                      int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, params.g + params.y_count() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (;;) {
    Word w;
    const int n = len_dist(rng);
    for (int t = 0; t < n; ++t) {
      const int pick = gen_dist(rng);
      Generator gen =
          pick < params.g ? xgen(pick + 1) : ygen(pick - params.g + 1);
      w.letters.push_back(Letter{gen, sign_dist(rng) == 0 ? 1 : -1});
    }
    if (in_plus(w, params)) return w;
  }
}

}  // namespace

TEST_CASE("boundary class expands to -2 on crosscaps, -1 on boundaries") {
  CHECK(db_class(kN32).coords == std::vector<long long>{-2, -2, -2, -1});
  CHECK(db_class(SurfaceParams{1, 1}).coords == std::vector<long long>{-2});
  CHECK(h1_rank(kN53) == 7);
  CHECK(h1_basis_labels(kN32) ==
        std::vector<std::string>{"c1", "c2", "c3", "d1"});
}

TEST_CASE("pair matrix x_12 at g=3, b=2 has the frozen columns") {
  const H1Matrix m = xij_matrix(1, 2, kN32);
  REQUIRE(m.dim == 4);
  // Column of c1 (= c1 - d_b expanded): (3, 2, 2, 1).
  CHECK(m.at(0, 0) == 3);
  CHECK(m.at(1, 0) == 2);
  CHECK(m.at(2, 0) == 2);
  CHECK(m.at(3, 0) == 1);
  // Column of c2 (= c2 + d_b expanded): (-2, -1, -2, -1).
  CHECK(m.at(0, 1) == -2);
  CHECK(m.at(1, 1) == -1);
  CHECK(m.at(2, 1) == -2);
  CHECK(m.at(3, 1) == -1);
  // Remaining columns are untouched basis vectors.
  CHECK(m.at(2, 2) == 1);
  CHECK(m.at(3, 3) == 1);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(0, 3) == 0);
}

TEST_CASE("pair matrices are inverse in transposed index order") {
  for (int i = 1; i <= kN53.g; ++i) {
    for (int j = 1; j <= kN53.g; ++j) {
      if (i == j) {
        CHECK(xij_matrix(i, j, kN53) == H1Matrix::identity(h1_rank(kN53)));
      } else {
        CHECK(is_identity(
            compose(xij_matrix(i, j, kN53), xij_matrix(j, i, kN53))));
      }
    }
  }
  CHECK_THROWS_AS(xij_matrix(0, 1, kN53), index_error);
  CHECK_THROWS_AS(xij_matrix(1, 6, kN53), index_error);
}

TEST_CASE("pair matrices commute pairwise") {
  // Exhaustive sweep lives in the acceptance suite; spot check here.
  const H1Matrix a = xij_matrix(1, 2, kN53);
  const H1Matrix b = xij_matrix(4, 5, kN53);
  const H1Matrix c = xij_matrix(2, 3, kN53);
  CHECK(compose(a, b) == compose(b, a));
  CHECK(compose(a, c) == compose(c, a));
}

TEST_CASE("push action of a single pair is the pair matrix") {
  CHECK(push_action(parse_word("x1 x2", kN32), kN32) == xij_matrix(1, 2, kN32));
  // Signs do not matter.
  CHECK(push_action(parse_word("x1^-1 x2", kN32), kN32) ==
        xij_matrix(1, 2, kN32));
  // Pairs multiply left to right.
  CHECK(push_action(parse_word("x1 x2 x3 x1", kN32), kN32) ==
        compose(xij_matrix(1, 2, kN32), xij_matrix(3, 1, kN32)));
  CHECK(push_action(Word{}, kN32) == H1Matrix::identity(4));
  CHECK_THROWS_AS(push_action(parse_word("x1", kN32), kN32), parity_error);
}

TEST_CASE("push action is multiplicative over concatenation") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 200; ++trial) {
    const Word a = random_even_word(rng, kN53, 14);
    const Word b = random_even_word(rng, kN53, 14);
    CHECK(push_action(concat(a, b), kN53) ==
          compose(push_action(a, kN53), push_action(b, kN53)));
  }
}

TEST_CASE("push action is trivial exactly on the kernel") {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_even_word(rng, kN53, 16);
    CHECK(is_identity(push_action(w, kN53)) == in_gamma(w, kN53));
  }
}

TEST_CASE("push action shifts each crosscap class by a boundary multiple") {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_even_word(rng, kN53, 16);
    const auto m = db_multiples(push_action(w, kN53), kN53);
    REQUIRE(m.has_value());
    const OEProfile prof = oe_profile(w, kN53);
    long long sum = 0;
    for (int i = 0; i < kN53.g; ++i) {
      CHECK((*m)[i] == prof.even[i] - prof.odd[i]);
      sum += (*m)[i];
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("correction twists for the frozen example") {
  const auto res = correction_twists({1, -1, 0}, SurfaceParams{3, 1});
  REQUIRE(res.twists.size() == 2);
  CHECK(res.twists[0] == std::pair<int, long long>{2, -1});
  CHECK(res.twists[1] == std::pair<int, long long>{1, 1});
  CHECK(is_identity(res.composed));
}

TEST_CASE("correction twists require exponent sum zero and length g") {
  CHECK_THROWS_AS(correction_twists({1, 0, 0}, SurfaceParams{3, 1}),
                  constraint_error);
  CHECK_THROWS_AS(correction_twists({1, -1}, SurfaceParams{3, 1}),
                  constraint_error);
  const auto zero = correction_twists({0, 0, 0}, SurfaceParams{3, 1});
  CHECK(zero.twists.empty());
  CHECK(is_identity(zero.composed));
}

TEST_CASE("correction twists cancel random balanced exponents") {
  std::mt19937_64 rng(313);
  std::uniform_int_distribution<long long> n_dist(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long long> n(kN53.g);
    long long sum = 0;
    for (int i = 0; i + 1 < kN53.g; ++i) {
      n[i] = n_dist(rng);
      sum += n[i];
    }
    n[kN53.g - 1] = -sum;
    const auto res = correction_twists(n, kN53);
    CHECK(is_identity(res.composed));
    std::size_t nonzero = 0;
    for (int i = 0; i + 1 < kN53.g; ++i) {
      if (n[i] != 0) ++nonzero;
    }
    CHECK(res.twists.size() == nonzero);
  }
}

TEST_CASE("matrix vector action and serialization") {
  const H1Matrix m = xij_matrix(1, 2, kN32);
  H1Vector e1{std::vector<long long>{1, 0, 0, 0}};
  CHECK(act(m, e1).coords == std::vector<long long>{3, 2, 2, 1});
  CHECK_THROWS_AS(act(m, H1Vector{{1, 0}}), constraint_error);

  const nlohmann::json j = matrix_to_json(m, kN32);
  CHECK(j["basis"] == nlohmann::json::array({"c1", "c2", "c3", "d1"}));
  CHECK(j["rows"][0] == nlohmann::json::array({3, -2, 0, 0}));
  CHECK(j["rows"][3] == nlohmann::json::array({1, -1, 0, 1}));
}
