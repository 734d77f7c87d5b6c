#include "torelli/surface.hpp"

#include <string>

#include "torelli/errors.hpp"

namespace torelli {

Word project_p(const Word& w, const SurfaceParams& params) {
  validate_word(w, params);
  Word kept;
  kept.letters.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (l.gen.kind == GenKind::X) kept.letters.push_back(l);
  }
  return free_reduce(kept);
}

OEProfile oe_profile(const Word& w, const SurfaceParams& params) {
  const Word proj = project_p(w, params);
  if (proj.size() % 2 != 0) {
    throw parity_error("projection has odd length " +
                       std::to_string(proj.size()) +
                       "; odd/even profile undefined");
  }
  OEProfile prof;
  prof.odd.assign(params.g, 0);
  prof.even.assign(params.g, 0);
  for (std::size_t pos = 0; pos < proj.letters.size(); ++pos) {
    const int i = proj.letters[pos].gen.index;
    // Positions are 1-based, so even vector slots hold odd positions.
    if (pos % 2 == 0) {
      ++prof.odd[i - 1];
    } else {
      ++prof.even[i - 1];
    }
  }
  return prof;
}

bool in_gamma(const Word& w, const SurfaceParams& params) {
  const Word proj = project_p(w, params);
  if (proj.size() % 2 != 0) return false;
  std::vector<int> balance(params.g, 0);
  for (std::size_t pos = 0; pos < proj.letters.size(); ++pos) {
    balance[proj.letters[pos].gen.index - 1] += pos % 2 == 0 ? 1 : -1;
  }
  for (int d : balance) {
    if (d != 0) return false;
  }
  return true;
}

bool in_plus(const Word& w, const SurfaceParams& params) {
  return project_p(w, params).size() % 2 == 0;
}

Word plus_expansion(const PlusGenerator& gen, const SurfaceParams& params) {
  params.validate();
  const Generator last = xgen(params.g);
  switch (gen.kind) {
    case PlusKind::A:
      return Word{{Letter{xgen(gen.index), 1}, Letter{last, -1}}};
    case PlusKind::B:
      return Word{{Letter{last, 1}, Letter{xgen(gen.index), 1}}};
    case PlusKind::Y:
      return Word{{Letter{ygen(gen.index), 1}}};
    case PlusKind::C:
      return Word{{Letter{last, 1}, Letter{ygen(gen.index), 1},
                   Letter{last, -1}}};
  }
  throw constraint_error("unknown parity generator kind");
}

std::vector<PlusAlphabetEntry> plus_alphabet(const SurfaceParams& params) {
  params.validate();
  std::vector<PlusAlphabetEntry> out;
  for (int i = 1; i <= params.g - 1; ++i) {
    out.push_back({PlusGenerator{PlusKind::A, i},
                   plus_expansion(PlusGenerator{PlusKind::A, i}, params)});
  }
  for (int j = 1; j <= params.g; ++j) {
    out.push_back({PlusGenerator{PlusKind::B, j},
                   plus_expansion(PlusGenerator{PlusKind::B, j}, params)});
  }
  for (int k = 1; k <= params.y_count(); ++k) {
    out.push_back({PlusGenerator{PlusKind::Y, k},
                   plus_expansion(PlusGenerator{PlusKind::Y, k}, params)});
  }
  for (int k = 1; k <= params.y_count(); ++k) {
    out.push_back({PlusGenerator{PlusKind::C, k},
                   plus_expansion(PlusGenerator{PlusKind::C, k}, params)});
  }
  return out;
}

PlusWord schreier_rewrite_plus(const Word& w, const SurfaceParams& params) {
  validate_word(w, params);
  if (!in_plus(w, params)) {
    throw parity_error("word has odd projection; it lies outside the "
                       "even-projection subgroup");
  }
  PlusWord out;
  // Coset 0 is the identity representative, coset 1 is x_g.  Every x
  // letter swaps cosets; y letters stay put.  The Schreier generator
  // for (coset, letter) is trivial exactly when the step runs along
  // the transversal: (0, x_g) in either direction.
  int coset = 0;
  auto emit = [&out](PlusKind kind, int index, int exp) {
    const PlusLetter next{PlusGenerator{kind, index}, exp};
    if (!out.letters.empty()) {
      const PlusLetter& top = out.letters.back();
      if (top.gen == next.gen && top.exp == -next.exp) {
        out.letters.pop_back();
        return;
      }
    }
    out.letters.push_back(next);
  };
  for (const Letter& l : w.letters) {
    const bool is_x = l.gen.kind == GenKind::X;
    const int i = l.gen.index;
    if (l.exp == 1) {
      // Schreier generator for (coset, gen), then advance.
      if (is_x) {
        if (coset == 0) {
          if (i != params.g) emit(PlusKind::A, i, 1);  // (0, x_g) is trivial
        } else {
          emit(PlusKind::B, i, 1);
        }
        coset ^= 1;
      } else {
        emit(coset == 0 ? PlusKind::Y : PlusKind::C, i, 1);
      }
    } else {
      // Step back to the source coset, then emit that generator
      // inverted.
      if (is_x) {
        coset ^= 1;
        if (coset == 0) {
          if (i != params.g) emit(PlusKind::A, i, -1);
        } else {
          emit(PlusKind::B, i, -1);
        }
      } else {
        emit(coset == 0 ? PlusKind::Y : PlusKind::C, i, -1);
      }
    }
  }
  if (coset != 0) {
    throw parity_error("rewriting ended outside the identity coset");
  }
  return out;
}

Word expand_plus(const PlusWord& w, const SurfaceParams& params) {
  Word out;
  for (const PlusLetter& l : w.letters) {
    const Word base = plus_expansion(l.gen, params);
    out = concat(out, l.exp == 1 ? base : invert(base));
  }
  return out;
}

PlusWord plus_free_reduce(const PlusWord& w) {
  PlusWord out;
  out.letters.reserve(w.letters.size());
  for (const PlusLetter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen &&
        out.letters.back().exp == -l.exp) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

std::string format_plus_word(const PlusWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const PlusLetter& l : w.letters) {
    if (!out.empty()) out += ' ';
    switch (l.gen.kind) {
      case PlusKind::A: out += 'A'; break;
      case PlusKind::B: out += 'B'; break;
      case PlusKind::Y: out += 'y'; break;
      case PlusKind::C: out += 'C'; break;
    }
    out += std::to_string(l.gen.index);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace torelli
