#include "torelli/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <vector>

#include "torelli/catalog.hpp"
#include "torelli/certificate.hpp"
#include "torelli/errors.hpp"
#include "torelli/homology.hpp"
#include "torelli/presentation.hpp"
#include "torelli/quotient.hpp"
#include "torelli/surface.hpp"
#include "torelli/word.hpp"

namespace torelli {

namespace {

CheckResult run_timed(std::string name,
                      const std::function<std::string()>& body) {
  CheckResult result;
  result.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = body();
    result.passed = true;
  } catch (const std::exception& ex) {
    result.detail = ex.what();
  }
  result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return result;
}

[[noreturn]] void fail(const std::string& message) { throw error(message); }

void require(bool condition, const std::string& message) {
  if (!condition) fail(message);
}

Word random_word(std::mt19937_64& rng, const SurfaceParams& params,
                 int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, params.g + params.y_count() -
                                                     1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  Word w;
  const int n = len_dist(rng);
  for (int t = 0; t < n; ++t) {
    const int pick = gen_dist(rng);
    Generator gen =
        pick < params.g ? xgen(pick + 1) : ygen(pick - params.g + 1);
    w.letters.push_back(Letter{gen, sign_dist(rng) == 0 ? 1 : -1});
  }
  return w;
}

RelatorInstance random_relator(std::mt19937_64& rng,
                               const SurfaceParams& params) {
  std::uniform_int_distribution<int> family_dist(0,
                                                 params.b >= 2 ? 3 : 2);
  std::uniform_int_distribution<int> x_dist(1, params.g);
  switch (family_dist(rng)) {
    case 0:
      return RelatorInstance::square(x_dist(rng));
    case 1:
      return RelatorInstance::pair_commutator(x_dist(rng), x_dist(rng),
                                              x_dist(rng), x_dist(rng));
    case 2: {
      int i = x_dist(rng), j = x_dist(rng), k = x_dist(rng);
      while (j == i) j = x_dist(rng);
      while (k == i || k == j) k = x_dist(rng);
      return RelatorInstance::triple_square(i, j, k);
    }
    default: {
      std::uniform_int_distribution<int> y_dist(1, params.y_count());
      return RelatorInstance::ykill(y_dist(rng));
    }
  }
}

Word random_member(std::mt19937_64& rng, const SurfaceParams& params,
                   int max_factors) {
  std::uniform_int_distribution<int> count_dist(1, max_factors);
  std::uniform_int_distribution<int> exp_dist(0, 1);
  Word w;
  const int n = count_dist(rng);
  for (int t = 0; t < n; ++t) {
    const Word u = random_word(rng, params, 4);
    const Word r = relator_word(random_relator(rng, params));
    w = concat(w, conjugate(u, exp_dist(rng) == 0 ? r : invert(r)));
  }
  return free_reduce(w);
}

// Membership, normal-form triviality and (on even words) triviality of the
// homology action must tell the same story for w.
void check_concordance_word(const Word& w, const SurfaceParams& params) {
  const bool member = in_gamma(w, params);
  if (member != is_trivial(nf(w, params))) {
    fail("membership and normal form disagree on \"" + format_word(w) + "\"");
  }
  if (in_plus(w, params) &&
      member != is_identity(push_action(w, params))) {
    fail("membership and homology action disagree on \"" + format_word(w) +
         "\"");
  }
}

}  // namespace

CheckResult check_worked_example() {
  return run_timed("worked-example", []() -> std::string {
    const SurfaceParams params{4, 6};
    const Word x =
        parse_word("x1 y2 x2 x3^-1 y5 y1^-2 x1 x2^-1 y4^3 x3^-1", params);
    require(project_p(x, params) ==
                parse_word("x1 x2 x3^-1 x1 x2^-1 x3^-1", params),
            "projection of the worked example changed");
    const OEProfile profile = oe_profile(x, params);
    require(profile.odd == std::vector<int>{1, 1, 1, 0} &&
                profile.even == std::vector<int>{1, 1, 1, 0},
            "position profile of the worked example changed");
    require(in_gamma(x, params), "worked example left the kernel subgroup");
    require(is_trivial(nf(x, params)),
            "worked example has a nontrivial normal form");
    require(in_plus(x, params) && is_identity(push_action(x, params)),
            "worked example acts nontrivially on homology");
    const Certificate cert = gamma_certificate(x, params);
    require(verify_certificate(cert, x),
            "worked example certificate failed to verify");
    const std::size_t len = x.size();
    require(cert.entries.size() <= len * len + len,
            "worked example certificate exceeds the entry bound");
    return "projection, profile, membership, normal form, action and "
           "certificate all reproduce";
  });
}

CheckResult check_pair_action_commutation(const SurfaceParams& params) {
  return run_timed("pair-actions-commute", [&]() -> std::string {
    params.validate();
    // Cache the g^2 basic matrices, then try every ordered pair.
    std::vector<H1Matrix> basic;
    basic.reserve(static_cast<std::size_t>(params.g) * params.g);
    for (int i = 1; i <= params.g; ++i) {
      for (int j = 1; j <= params.g; ++j) {
        basic.push_back(xij_matrix(i, j, params));
      }
    }
    int checked = 0;
    for (const H1Matrix& lhs : basic) {
      for (const H1Matrix& rhs : basic) {
        if (!(compose(lhs, rhs) == compose(rhs, lhs))) {
          fail("two basic homology matrices do not commute");
        }
        ++checked;
      }
    }
    // The same fact at word level: pair commutators die in the kernel.
    for (int i = 1; i <= params.g; ++i) {
      for (int j = 1; j <= params.g; ++j) {
        for (int k = 1; k <= params.g; ++k) {
          for (int l = 1; l <= params.g; ++l) {
            const Word w = commutator(
                Word{{Letter{xgen(i), 1}, Letter{xgen(j), 1}}},
                Word{{Letter{xgen(k), 1}, Letter{xgen(l), 1}}});
            if (!in_gamma(w, params) || !is_trivial(nf(w, params)) ||
                !is_identity(push_action(w, params))) {
              fail("pair commutator (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + "," +
                   std::to_string(l) + ") is not in the kernel");
            }
          }
        }
      }
    }
    return std::to_string(checked) + " matrix pairs commute at g=" +
           std::to_string(params.g);
  });
}

CheckResult check_concordance_exhaustive() {
  return run_timed("membership-concordance-exhaustive", []() -> std::string {
    const SurfaceParams params{3, 2};
    const int signed_letters = 2 * params.g;
    long long checked = 0;
    for (int len = 0; len <= 6; ++len) {
      std::vector<int> digits(len, 0);
      while (true) {
        Word w;
        for (int d : digits) {
          w.letters.push_back(Letter{xgen(d / 2 + 1), d % 2 == 0 ? 1 : -1});
        }
        check_concordance_word(w, params);
        ++checked;
        int pos = len - 1;
        while (pos >= 0 && digits[pos] == signed_letters - 1) {
          digits[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++digits[pos];
      }
    }
    return std::to_string(checked) + " signed x words of length <= 6 agree";
  });
}

CheckResult check_concordance_random(const SurfaceParams& params,
                                     unsigned long long seed, int count,
                                     int max_len) {
  return run_timed("membership-concordance-random", [&]() -> std::string {
    params.validate();
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < count; ++trial) {
      check_concordance_word(random_word(rng, params, max_len), params);
    }
    return std::to_string(count) + " random words up to length " +
           std::to_string(max_len) + " agree";
  });
}

CheckResult check_insertion_invariance(const SurfaceParams& params,
                                       unsigned long long seed, int trials) {
  return run_timed("insertion-invariance", [&]() -> std::string {
    params.validate();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gen_dist(
        0, params.g + params.y_count() - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    // Menu: cancelling pair, the closed-surface relator x_1^2..x_g^2, and
    // (when the surface has them) a single y letter.
    std::uniform_int_distribution<int> kind_dist(0, params.b >= 2 ? 2 : 1);
    auto oe_difference = [&](const Word& w) {
      std::vector<int> diff;
      const OEProfile profile = oe_profile(w, params);
      for (int i = 0; i < params.g; ++i) {
        diff.push_back(profile.odd[i] - profile.even[i]);
      }
      return diff;
    };
    for (int trial = 0; trial < trials; ++trial) {
      const Word w = random_word(rng, params, 12);
      const bool member = in_gamma(w, params);
      const NormalForm form = nf(w, params);
      const bool even = in_plus(w, params);
      const std::vector<int> diff =
          even ? oe_difference(w) : std::vector<int>{};
      const H1Matrix action =
          even ? push_action(w, params) : H1Matrix::identity(h1_rank(params));

      Word modified = w;
      std::uniform_int_distribution<std::size_t> pos_dist(
          0, modified.letters.size());
      const std::size_t at = pos_dist(rng);
      std::vector<Letter> inserted;
      switch (kind_dist(rng)) {
        case 0: {  // cancelling pair of any generator
          const int pick = gen_dist(rng);
          const Generator gen =
              pick < params.g ? xgen(pick + 1) : ygen(pick - params.g + 1);
          const Letter l{gen, sign_dist(rng) == 0 ? 1 : -1};
          inserted = {l, l.inverse()};
          break;
        }
        case 1: {  // the closed-surface relator
          for (int i = 1; i <= params.g; ++i) {
            inserted.push_back(Letter{xgen(i), 1});
            inserted.push_back(Letter{xgen(i), 1});
          }
          break;
        }
        default: {  // single y letter
          std::uniform_int_distribution<int> y_dist(1, params.y_count());
          inserted = {Letter{ygen(y_dist(rng)), sign_dist(rng) == 0 ? 1 : -1}};
          break;
        }
      }
      modified.letters.insert(modified.letters.begin() + at, inserted.begin(),
                              inserted.end());

      if (in_gamma(modified, params) != member ||
          !(nf(modified, params) == form) ||
          in_plus(modified, params) != even ||
          (even && oe_difference(modified) != diff) ||
          (even && !(push_action(modified, params) == action))) {
        fail("an insertion changed an invariant of \"" + format_word(w) +
             "\"");
      }
    }
    return std::to_string(trials) +
           " insertions leave the position differences, membership, normal "
           "form and action unchanged";
  });
}

CheckResult check_commutator_identities(int g) {
  return run_timed("commutator-identities", [&]() -> std::string {
    const EquivalenceReport report = verify_commutator_identities(g);
    if (!report.ok()) {
      fail("identity failures at g=" + std::to_string(g) + ": " +
           report.failures.front());
    }
    return std::to_string(report.checked) + " identities hold at g=" +
           std::to_string(g);
  });
}

CheckResult check_rewriting_families(const SurfaceParams& params) {
  return run_timed("rewriting-families", [&]() -> std::string {
    params.validate();
    const Presentation base = pi_presentation(params);
    const CosetTable table = parity_coset_table(base, params);
    const SubgroupPresentation sub = reidemeister_schreier(base, table);
    const std::vector<PlusAlphabetEntry> alphabet = plus_alphabet(params);
    require(sub.presentation.generators.size() == alphabet.size(),
            "rewriting generator count differs from the expected alphabet");

    // Locate each expected symbol among the rewritten generators by its
    // expansion in the base group.
    auto locate = [&](PlusKind kind, int index) -> int {
      const Word target =
          free_reduce(plus_expansion(PlusGenerator{kind, index}, params));
      for (std::size_t t = 0; t < sub.expansions.size(); ++t) {
        if (free_reduce(to_base_word(sub.expansions[t], base.generators,
                                     params)) == target) {
          return static_cast<int>(t);
        }
      }
      fail("rewriting lost an expected generator");
    };
    const int g = params.g;
    std::vector<int> A(g), B(g + 1), Y(params.y_count() + 1),
        C(params.y_count() + 1);
    for (int i = 1; i < g; ++i) A[i] = locate(PlusKind::A, i);
    for (int i = 1; i <= g; ++i) B[i] = locate(PlusKind::B, i);
    for (int j = 1; j <= params.y_count(); ++j) {
      Y[j] = locate(PlusKind::Y, j);
      C[j] = locate(PlusKind::C, j);
    }

    // The six relator families, spelled out over the located symbols.  The
    // A symbol of the largest crosscap index never appears: its expansion
    // is trivial and the rewriting drops it.
    std::vector<SymWord> expected;
    auto add = [&](const std::vector<int>& ids) {
      SymWord w;
      for (int id : ids) w.push_back(SymLetter{id, 1});
      if (std::find(expected.begin(), expected.end(), w) == expected.end()) {
        expected.push_back(w);
      }
    };
    for (int i = 1; i < g; ++i) add({A[i], B[i]});
    add({B[g]});
    for (int j = 1; j <= params.y_count(); ++j) add({Y[j]});
    for (int i = 1; i <= g; ++i) {
      for (int j = i + 1; j <= g; ++j) {
        for (int k = j + 1; k <= g; ++k) {
          std::vector<int> fam3{A[i], B[j]};
          if (k < g) fam3.push_back(A[k]);
          fam3.insert(fam3.end(), {B[i], A[j], B[k]});
          add(fam3);
        }
      }
    }
    for (int i = 1; i < g; ++i) add({B[i], A[i]});
    for (int j = 1; j <= params.y_count(); ++j) add({C[j]});
    for (int i = 1; i <= g; ++i) {
      for (int j = i + 1; j <= g; ++j) {
        for (int k = j + 1; k <= g; ++k) {
          std::vector<int> fam6{B[i], A[j], B[k], A[i], B[j]};
          if (k < g) fam6.push_back(A[k]);
          add(fam6);
        }
      }
    }

    std::vector<SymWord> got = sub.presentation.relators;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    if (got != expected) {
      fail("rewritten relators differ from the expected families (" +
           std::to_string(got.size()) + " vs " +
           std::to_string(expected.size()) + ")");
    }
    return std::to_string(expected.size()) + " relators in " +
           std::to_string(alphabet.size()) + " generators match the "
           "expected families";
  });
}

CheckResult check_rewriting_identity_subgroup(const SurfaceParams& params) {
  return run_timed("rewriting-identity-subgroup", [&]() -> std::string {
    params.validate();
    const Presentation base = pi_presentation(params);
    const SubgroupPresentation sub =
        reidemeister_schreier(base, identity_coset_table(base));
    require(sub.presentation.generators.size() == base.generators.size(),
            "index-one rewriting changed the generator count");
    for (std::size_t t = 0; t < sub.expansions.size(); ++t) {
      require(sub.expansions[t] ==
                  SymWord{SymLetter{static_cast<int>(t), 1}},
              "index-one rewriting changed a generator expansion");
    }
    std::vector<SymWord> got = sub.presentation.relators;
    std::vector<SymWord> want = base.relators;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    require(got == want, "index-one rewriting changed the relators");
    return "presentation passes through unchanged (" +
           std::to_string(want.size()) + " relators)";
  });
}

CheckResult check_certificates(const SurfaceParams& params,
                               unsigned long long seed, int member_trials,
                               int random_trials, int random_max_len) {
  return run_timed("certificates", [&]() -> std::string {
    params.validate();
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < member_trials; ++trial) {
      const Word w = random_member(rng, params, 20);
      const Certificate cert = gamma_certificate(w, params);
      if (!verify_certificate(cert, w)) {
        fail("certificate failed to verify on \"" + format_word(w) + "\"");
      }
      const std::size_t len = w.size();
      if (cert.entries.size() > len * len + len) {
        fail("certificate for \"" + format_word(w) +
             "\" exceeds the quadratic entry bound");
      }
    }

    int members_among_random = 0;
    for (int trial = 0; trial < random_trials; ++trial) {
      const Word w = random_word(rng, params, random_max_len);
      if (in_gamma(w, params)) {
        ++members_among_random;
        if (!verify_certificate(gamma_certificate(w, params), w)) {
          fail("certificate failed on random member \"" + format_word(w) +
               "\"");
        }
      } else {
        bool rejected = false;
        try {
          gamma_certificate(w, params);
        } catch (const membership_error&) {
          rejected = true;
        }
        if (!rejected) {
          fail("non-member \"" + format_word(w) + "\" was certified");
        }
      }
    }

    // Conversions: every pair commutator converts away from its family, and
    // every distinct triple converts back, with matching expansions.
    int conversions = 0;
    for (int p = 1; p <= params.g; ++p) {
      for (int q = 1; q <= params.g; ++q) {
        for (int r = 1; r <= params.g; ++r) {
          for (int s = 1; s <= params.g; ++s) {
            const RelatorInstance pc =
                RelatorInstance::pair_commutator(p, q, r, s);
            const Certificate cert =
                convert_relator(pc, RelatorFamily::TripleSquare);
            for (const CertificateEntry& e : cert.entries) {
              if (e.relator.family == RelatorFamily::PairCommutator) {
                fail("conversion left a pair commutator behind");
              }
            }
            if (expand_certificate(cert) != free_reduce(relator_word(pc))) {
              fail("pair commutator conversion expands incorrectly");
            }
            ++conversions;
          }
        }
      }
    }
    for (int i = 1; i <= params.g; ++i) {
      for (int j = 1; j <= params.g; ++j) {
        for (int k = 1; k <= params.g; ++k) {
          if (i == j || i == k || j == k) continue;
          const RelatorInstance ts = RelatorInstance::triple_square(i, j, k);
          const Certificate cert =
              convert_relator(ts, RelatorFamily::PairCommutator);
          for (const CertificateEntry& e : cert.entries) {
            if (e.relator.family == RelatorFamily::TripleSquare) {
              fail("conversion left a triple square behind");
            }
          }
          if (expand_certificate(cert) != free_reduce(relator_word(ts))) {
            fail("triple square conversion expands incorrectly");
          }
          ++conversions;
        }
      }
    }
    return std::to_string(member_trials) + " member products certified, " +
           std::to_string(members_among_random) + "/" +
           std::to_string(random_trials) +
           " random words were members, " + std::to_string(conversions) +
           " conversions expand correctly";
  });
}

CheckResult check_correction_twists(const SurfaceParams& params,
                                    unsigned long long seed, int trials) {
  return run_timed("correction-twists", [&]() -> std::string {
    params.validate();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> entry_dist(-5, 5);
    std::uniform_int_distribution<int> index_dist(0, params.g - 1);
    for (int trial = 0; trial < trials; ++trial) {
      // Draw entries in [-5, 5], then nudge random entries until the sum is
      // zero while keeping every entry inside the band.
      std::vector<long long> n(params.g);
      long long sum = 0;
      for (int i = 0; i < params.g; ++i) {
        n[i] = entry_dist(rng);
        sum += n[i];
      }
      while (sum != 0) {
        const int at = index_dist(rng);
        if (sum > 0 && n[at] > -5) {
          --n[at];
          --sum;
        } else if (sum < 0 && n[at] < 5) {
          ++n[at];
          ++sum;
        }
      }
      const CorrectionTwists res = correction_twists(n, params);
      if (!is_identity(res.composed)) {
        fail("correction twists do not cancel a balanced vector");
      }
      std::size_t nonzero = 0;
      for (int i = 0; i + 1 < params.g; ++i) {
        if (n[i] != 0) ++nonzero;
      }
      if (res.twists.size() != nonzero) {
        fail("correction twist count differs from the nonzero entries");
      }
      for (const auto& [index, power] : res.twists) {
        if (index < 1 || index >= params.g || power != n[index - 1]) {
          fail("a correction twist does not match its exponent entry");
        }
      }

      // Unbalance the vector and expect rejection.
      std::vector<long long> bad = n;
      bad[index_dist(rng)] += 1;
      bool rejected = false;
      try {
        correction_twists(bad, params);
      } catch (const constraint_error&) {
        rejected = true;
      }
      if (!rejected) fail("an unbalanced vector was accepted");
    }
    return std::to_string(trials) +
           " balanced vectors cancel, unbalanced ones are rejected";
  });
}

CheckResult check_catalog() {
  return run_timed("catalog", []() -> std::string {
    int surfaces = 0;
    for (int g : {4, 5, 6}) {
      for (int b : {0, 1, 2, 3}) {
        const SurfaceParams params{g, b};
        const std::vector<MappingClassName> set = generating_set(params);
        const int pairs = b >= 2 ? (b - 1) * (b - 2) / 2 : 0;
        const std::size_t want =
            2 + (g == 4 ? 1 : 0) + 2 * std::max(b - 1, 0) + 2 * pairs;
        require(set.size() == want, "generating set size is off");
        bool has_gamma = false;
        for (const MappingClassName& name : set) {
          if (name.symbol == TwistSymbol::Gamma) has_gamma = true;
        }
        require(has_gamma == (g == 4),
                "the extra genus-four twist appears at the wrong genus");

        if (b >= 1) {
          const std::vector<LiftRule> rules = lift_table(params);
          require(rules.size() == static_cast<std::size_t>(2 * b - 1),
                  "lift rule count is off");
          for (const LiftRule& rule : rules) {
            require(in_gamma(rule.base_word, params),
                    "a lift rule word left the kernel");
            require(is_identity(push_action(rule.base_word, params)),
                    "a lift rule word acts nontrivially");
            for (const auto& [name, exp] : rule.classes) {
              validate(name, params);
              require(exp == 1 || exp == -1, "lift exponent out of range");
            }
          }
          const std::vector<NamedProductFormula> products =
              boundary_twist_products(params);
          require(products.size() == static_cast<std::size_t>(1 + b),
                  "boundary product count is off");
          for (const NamedProductFormula& formula : products) {
            validate(formula.lhs, params);
            for (const ProductFactor& f : formula.factors) {
              validate(f.name, params);
              require(f.exponent != 0, "a product carries a zero exponent");
            }
          }
        }
        const nlohmann::json j = catalog_to_json(params);
        require(j.contains("generators") && j.contains("lifts") &&
                    j.contains("products"),
                "catalog JSON lost a section");
        ++surfaces;
      }
    }
    bool low_genus_rejected = false;
    try {
      generating_set(SurfaceParams{3, 1});
    } catch (const constraint_error&) {
      low_genus_rejected = true;
    }
    require(low_genus_rejected, "genus three slipped past the catalog");
    return std::to_string(surfaces) + " surfaces catalogued consistently";
  });
}

std::vector<CheckResult> run_all(const SurfaceParams& params,
                                 unsigned long long seed) {
  std::vector<CheckResult> results;
  results.push_back(check_worked_example());
  results.push_back(check_pair_action_commutation(params));
  results.push_back(check_concordance_exhaustive());
  results.push_back(check_concordance_random(params, seed, 10000, 40));
  results.push_back(check_insertion_invariance(params, seed + 1, 1000));
  results.push_back(check_commutator_identities(std::max(params.g, 4)));
  results.push_back(check_rewriting_families(params));
  results.push_back(check_rewriting_identity_subgroup(params));
  results.push_back(check_certificates(params, seed + 2, 1000, 1000, 40));
  results.push_back(check_correction_twists(params, seed + 3, 1000));
  results.push_back(check_catalog());
  return results;
}

}  // namespace torelli
