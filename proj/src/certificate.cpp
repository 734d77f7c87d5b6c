#include "torelli/certificate.hpp"

#include <cstddef>
#include <string>

#include "torelli/errors.hpp"
#include "torelli/surface.hpp"

namespace torelli {

namespace {

// Appends a letter to a freely reduced stack, cancelling when possible.
void push_reduced(std::vector<Letter>& stack, const Letter& letter) {
  if (!stack.empty() && stack.back() == letter.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(letter);
  }
}

void push_reduced(std::vector<Letter>& stack, const Word& w, bool inverted) {
  if (inverted) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      push_reduced(stack, it->inverse());
    }
  } else {
    for (const Letter& letter : w.letters) push_reduced(stack, letter);
  }
}

Word prefix_word(const std::vector<Letter>& v, std::size_t count) {
  return Word{std::vector<Letter>(v.begin(), v.begin() + count)};
}

// Replaces every inverse x letter in v by its positive counterpart, recording
// for each flip the factor (prefix) x^-2 (prefix)^-1 that accounts for it.
void flip_negatives(std::vector<Letter>& v, Certificate& cert) {
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (v[pos].exp == -1) {
      cert.entries.push_back({prefix_word(v, pos),
                              RelatorInstance::square(v[pos].gen.index), -1});
      v[pos].exp = 1;
    }
  }
}

// Removes adjacent equal letters from the positive word v one square at a
// time, always taking the leftmost pair, until v is empty.  Used for the
// commutator patterns whose positive form collapses entirely.
void peel_squares(std::vector<Letter>& v, Certificate& cert) {
  while (!v.empty()) {
    std::size_t pos = 0;
    while (pos + 1 < v.size() && v[pos].gen != v[pos + 1].gen) ++pos;
    if (pos + 1 >= v.size()) {
      throw constraint_error("square removal stalled on a non-collapsing word");
    }
    cert.entries.push_back({prefix_word(v, pos),
                            RelatorInstance::square(v[pos].gen.index), 1});
    v.erase(v.begin() + pos, v.begin() + pos + 2);
  }
}

std::string family_name(RelatorFamily family) {
  switch (family) {
    case RelatorFamily::Square: return "Square";
    case RelatorFamily::Ykill: return "Ykill";
    case RelatorFamily::PairCommutator: return "PairCommutator";
    case RelatorFamily::TripleSquare: return "TripleSquare";
  }
  throw constraint_error("unknown relator family");
}

std::size_t family_arity(RelatorFamily family) {
  switch (family) {
    case RelatorFamily::Square:
    case RelatorFamily::Ykill: return 1;
    case RelatorFamily::PairCommutator: return 4;
    case RelatorFamily::TripleSquare: return 3;
  }
  throw constraint_error("unknown relator family");
}

void check_arity(const RelatorInstance& relator) {
  if (relator.indices.size() != family_arity(relator.family)) {
    throw constraint_error("relator " + family_name(relator.family) +
                           " expects " +
                           std::to_string(family_arity(relator.family)) +
                           " indices, got " +
                           std::to_string(relator.indices.size()));
  }
}

}  // namespace

Word relator_word(const RelatorInstance& relator) {
  check_arity(relator);
  const std::vector<int>& ix = relator.indices;
  switch (relator.family) {
    case RelatorFamily::Square:
      return Word{{Letter{xgen(ix[0]), 1}, Letter{xgen(ix[0]), 1}}};
    case RelatorFamily::Ykill:
      return Word{{Letter{ygen(ix[0]), 1}}};
    case RelatorFamily::PairCommutator:
      return commutator(
          Word{{Letter{xgen(ix[0]), 1}, Letter{xgen(ix[1]), 1}}},
          Word{{Letter{xgen(ix[2]), 1}, Letter{xgen(ix[3]), 1}}});
    case RelatorFamily::TripleSquare: {
      Word w;
      for (int rep = 0; rep < 2; ++rep) {
        for (int idx : ix) w.letters.push_back(Letter{xgen(idx), 1});
      }
      return w;
    }
  }
  throw constraint_error("unknown relator family");
}

void validate(const RelatorInstance& relator, const SurfaceParams& params) {
  params.validate();
  check_arity(relator);
  const int limit =
      relator.family == RelatorFamily::Ykill ? params.y_count() : params.g;
  for (int idx : relator.indices) {
    if (idx < 1 || idx > limit) {
      throw index_error("relator index " + std::to_string(idx) +
                        " out of range 1.." + std::to_string(limit));
    }
  }
  if (relator.family == RelatorFamily::TripleSquare) {
    const std::vector<int>& ix = relator.indices;
    if (ix[0] == ix[1] || ix[0] == ix[2] || ix[1] == ix[2]) {
      throw constraint_error("triple square indices must be distinct");
    }
  }
}

Word expand_certificate(const Certificate& cert) {
  std::vector<Letter> stack;
  for (const CertificateEntry& entry : cert.entries) {
    if (entry.exponent != 1 && entry.exponent != -1) {
      throw constraint_error("certificate exponent must be +1 or -1");
    }
    const Word r = relator_word(entry.relator);
    push_reduced(stack, entry.conjugator, false);
    push_reduced(stack, r, entry.exponent == -1);
    push_reduced(stack, entry.conjugator, true);
  }
  return Word{std::move(stack)};
}

bool verify_certificate(const Certificate& cert, const Word& w) {
  return expand_certificate(cert) == free_reduce(w);
}

Certificate gamma_certificate(const Word& w, const SurfaceParams& params) {
  validate_word(w, params);
  if (!in_gamma(w, params)) {
    throw membership_error(
        "word is outside the kernel subgroup; no certificate exists");
  }

  Certificate cert;
  std::vector<Letter> v = w.letters;

  // Stage 1: split off the y letters, leftmost first.  Each one contributes
  // the factor (prefix) y^e (prefix)^-1 and vanishes from the working word.
  std::size_t pos = 0;
  while (pos < v.size()) {
    if (v[pos].gen.kind == GenKind::Y) {
      cert.entries.push_back({prefix_word(v, pos),
                              RelatorInstance::ykill(v[pos].gen.index),
                              v[pos].exp});
      v.erase(v.begin() + pos);
    } else {
      ++pos;
    }
  }

  // Stage 2: make every letter positive, replacing x^-1 by x at the cost of
  // an inverse square.
  flip_negatives(v, cert);

  // Stage 3: v is now a positive x word with balanced odd/even counts for
  // every index.  Repeatedly cancel its first letter against the matching
  // occurrence at the nearest even position: commutator moves bring the
  // leading two-letter block next to that occurrence, then one square
  // removes the doubled letter.  Each round shortens v by two letters.
  while (!v.empty()) {
    const int lead = v[0].gen.index;
    std::size_t match = 0;  // 1-based block number of the matching position
    for (std::size_t t = 1; 2 * t - 1 < v.size(); ++t) {
      if (v[2 * t - 1].gen.index == lead) {
        match = t;
        break;
      }
    }
    if (match == 0) {
      throw constraint_error(
          "balanced word lost its even-position match; internal invariant "
          "broken");
    }
    if (match == 1) {
      cert.entries.push_back({Word{}, RelatorInstance::square(lead), 1});
      v.erase(v.begin(), v.begin() + 2);
      continue;
    }
    // Swap the leading block past the next block match-1 times.  With the
    // block at offset 2*step, the recorded factor is
    //   (passed blocks) [x_a x_b, x_c x_d] (passed blocks)^-1.
    const int second = v[1].gen.index;
    for (std::size_t step = 0; step + 1 < match; ++step) {
      const std::size_t at = 2 * step;
      cert.entries.push_back(
          {prefix_word(v, at),
           RelatorInstance::pair_commutator(lead, second,
                                            v[at + 2].gen.index,
                                            v[at + 3].gen.index),
           1});
      std::swap(v[at], v[at + 2]);
      std::swap(v[at + 1], v[at + 3]);
    }
    // The leading block now sits right after its match: positions 2*match-3
    // and 2*match-2 hold the same letter.
    const std::size_t square_at = 2 * match - 3;
    cert.entries.push_back(
        {prefix_word(v, square_at), RelatorInstance::square(lead), 1});
    v.erase(v.begin() + square_at, v.begin() + square_at + 2);
  }
  return cert;
}

Certificate convert_relator(const RelatorInstance& relator,
                            RelatorFamily target) {
  check_arity(relator);
  Certificate cert;

  if (relator.family == RelatorFamily::TripleSquare &&
      target == RelatorFamily::PairCommutator) {
    const int i = relator.indices[0];
    const int j = relator.indices[1];
    const int k = relator.indices[2];
    if (i == j || i == k || j == k) {
      throw constraint_error("triple square indices must be distinct");
    }
    // (x_i x_j x_k)^2 = [x_i x_j, x_k x_j]
    //                   . (x_k x_j) x_i^2 (x_k x_j)^-1 . x_k x_j^2 x_k^-1
    //                   . x_k^2
    const Word xk{{Letter{xgen(k), 1}}};
    const Word xkxj{{Letter{xgen(k), 1}, Letter{xgen(j), 1}}};
    cert.entries.push_back(
        {Word{}, RelatorInstance::pair_commutator(i, j, k, j), 1});
    cert.entries.push_back({xkxj, RelatorInstance::square(i), 1});
    cert.entries.push_back({xk, RelatorInstance::square(j), 1});
    cert.entries.push_back({Word{}, RelatorInstance::square(k), 1});
    return cert;
  }

  if (relator.family != RelatorFamily::PairCommutator ||
      target != RelatorFamily::TripleSquare) {
    throw constraint_error(
        "unsupported conversion; only triple square <-> pair commutator "
        "directions exist");
  }

  const int p = relator.indices[0];
  const int q = relator.indices[1];
  const int r = relator.indices[2];
  const int s = relator.indices[3];

  // First make the commutator positive: flipping the four inverse letters of
  // [x_p x_q, x_r x_s] leaves the positive word x_p x_q x_r x_s x_q x_p x_s
  // x_r, at the cost of four inverse squares.
  std::vector<Letter> v = relator_word(relator).letters;
  flip_negatives(v, cert);

  const int shares =
      static_cast<int>(p == r) + static_cast<int>(p == s) +
      static_cast<int>(q == r) + static_cast<int>(q == s);
  const bool degenerate = p == q || r == s || shares >= 2;

  const Word xp{{Letter{xgen(p), 1}}};
  const Word xr{{Letter{xgen(r), 1}}};

  if (degenerate) {
    // The positive form collapses by square removals alone; no triple square
    // is needed.
    peel_squares(v, cert);
  } else if (shares == 0) {
    // Four distinct indices: split off (x_p x_q x_r)^2 in front, then the
    // remainder r^-1 q^-1 p^-1 s q p s r positivizes into a conjugated
    // (x_q x_p x_s)^2 and a square of x_r.
    const Word xrxq{{Letter{xgen(r), 1}, Letter{xgen(q), 1}}};
    cert.entries.push_back(
        {Word{}, RelatorInstance::triple_square(p, q, r), 1});
    cert.entries.push_back({Word{}, RelatorInstance::square(r), -1});
    cert.entries.push_back({xr, RelatorInstance::square(q), -1});
    cert.entries.push_back({xrxq, RelatorInstance::square(p), -1});
    cert.entries.push_back({xr, RelatorInstance::triple_square(q, p, s), 1});
    cert.entries.push_back({Word{}, RelatorInstance::square(r), 1});
  } else if (p == r) {
    // x_p x_q x_p x_s x_q x_p x_s x_p = x_p (x_q x_p x_s)^2 x_p^-1 . x_p^2
    cert.entries.push_back({xp, RelatorInstance::triple_square(q, p, s), 1});
    cert.entries.push_back({Word{}, RelatorInstance::square(p), 1});
  } else if (q == s) {
    // One square removal exposes (x_p x_q x_r)^2.
    const Word pqr{{Letter{xgen(p), 1}, Letter{xgen(q), 1},
                    Letter{xgen(r), 1}}};
    cert.entries.push_back({pqr, RelatorInstance::square(q), 1});
    cert.entries.push_back(
        {Word{}, RelatorInstance::triple_square(p, q, r), 1});
  } else if (p == s) {
    const Word pqrpq{{Letter{xgen(p), 1}, Letter{xgen(q), 1},
                      Letter{xgen(r), 1}, Letter{xgen(p), 1},
                      Letter{xgen(q), 1}}};
    cert.entries.push_back({pqrpq, RelatorInstance::square(p), 1});
    cert.entries.push_back(
        {Word{}, RelatorInstance::triple_square(p, q, r), 1});
  } else {  // q == r
    cert.entries.push_back({xp, RelatorInstance::square(q), 1});
    cert.entries.push_back(
        {Word{}, RelatorInstance::triple_square(p, s, q), 1});
  }
  return cert;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json j = nlohmann::json::array();
  for (const CertificateEntry& entry : cert.entries) {
    j.push_back({{"conj", format_word(entry.conjugator)},
                 {"relator",
                  {{"family", family_name(entry.relator.family)},
                   {"indices", entry.relator.indices}}},
                 {"exp", entry.exponent}});
  }
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j,
                                  const SurfaceParams& params) {
  if (!j.is_array()) {
    throw syntax_error("certificate JSON must be an array of entries");
  }
  Certificate cert;
  for (const nlohmann::json& item : j) {
    if (!item.is_object() || !item.contains("conj") ||
        !item.contains("relator") || !item.contains("exp")) {
      throw syntax_error(
          "certificate entry needs \"conj\", \"relator\" and \"exp\"");
    }
    CertificateEntry entry;
    entry.conjugator = parse_word(item["conj"].get<std::string>(), params);
    const nlohmann::json& rel = item["relator"];
    if (!rel.is_object() || !rel.contains("family") ||
        !rel.contains("indices")) {
      throw syntax_error("relator needs \"family\" and \"indices\"");
    }
    const std::string family = rel["family"].get<std::string>();
    if (family == "Square") {
      entry.relator.family = RelatorFamily::Square;
    } else if (family == "Ykill") {
      entry.relator.family = RelatorFamily::Ykill;
    } else if (family == "PairCommutator") {
      entry.relator.family = RelatorFamily::PairCommutator;
    } else if (family == "TripleSquare") {
      entry.relator.family = RelatorFamily::TripleSquare;
    } else {
      throw syntax_error("unknown relator family \"" + family + "\"");
    }
    entry.relator.indices = rel["indices"].get<std::vector<int>>();
    validate(entry.relator, params);
    entry.exponent = item["exp"].get<int>();
    if (entry.exponent != 1 && entry.exponent != -1) {
      throw constraint_error("certificate exponent must be +1 or -1");
    }
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

}  // namespace torelli
