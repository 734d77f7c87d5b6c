#include "torelli/presentation.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "torelli/errors.hpp"

namespace torelli {

namespace {

// Generator names joined with '*' so a name stays a single token.
std::string compact_name(const SymWord& w,
                         const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const SymLetter& l : w) {
    if (!out.empty()) out += '*';
    out += names[l.sym];
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

int trace(const SymWord& w, int start, const CosetTable& table,
          const std::vector<std::vector<int>>& inverse_action) {
  int coset = start;
  for (const SymLetter& l : w) {
    coset = l.exp == 1 ? table.action[l.sym][coset]
                       : inverse_action[l.sym][coset];
  }
  return coset;
}

std::vector<std::vector<int>> invert_action(const CosetTable& table) {
  std::vector<std::vector<int>> inv(table.action.size());
  for (std::size_t gen = 0; gen < table.action.size(); ++gen) {
    inv[gen].assign(table.index(), -1);
    for (int c = 0; c < table.index(); ++c) {
      inv[gen][table.action[gen][c]] = c;
    }
  }
  return inv;
}

Word word_of_letters(std::vector<Letter> letters) {
  return Word{std::move(letters)};
}

Word xw(std::initializer_list<int> indices) {
  std::vector<Letter> letters;
  for (int i : indices) letters.push_back(Letter{xgen(i), 1});
  return word_of_letters(std::move(letters));
}

// (x_a x_b x_c)^2
Word triple_square_word(int a, int b, int c) {
  return xw({a, b, c, a, b, c});
}

bool trivial_mod_squares(const Word& w) {
  return reduce_mod_orders(w, GeneratorOrders{2, 1}).empty();
}

}  // namespace

SymWord sym_reduce(const SymWord& w) {
  SymWord out;
  out.reserve(w.size());
  for (const SymLetter& l : w) {
    if (!out.empty() && out.back().sym == l.sym && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

SymWord sym_invert(const SymWord& w) {
  SymWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(SymLetter{it->sym, -it->exp});
  }
  return out;
}

std::string format_sym_word(const SymWord& w,
                            const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const SymLetter& l : w) {
    if (!out.empty()) out += ' ';
    out += names[l.sym];
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

void validate(const Presentation& pres) {
  std::set<std::string> seen;
  for (const std::string& name : pres.generators) {
    if (name.empty()) throw constraint_error("empty generator name");
    if (!seen.insert(name).second) {
      throw constraint_error("duplicate generator name '" + name + "'");
    }
  }
  for (const SymWord& r : pres.relators) {
    for (const SymLetter& l : r) {
      if (l.sym < 0 || l.sym >= static_cast<int>(pres.generators.size())) {
        throw constraint_error("relator uses undeclared generator index " +
                               std::to_string(l.sym));
      }
      if (l.exp != 1 && l.exp != -1) {
        throw constraint_error("relator exponent must be +1 or -1");
      }
    }
  }
}

nlohmann::json presentation_to_json(const Presentation& pres) {
  nlohmann::json relators = nlohmann::json::array();
  for (const SymWord& r : pres.relators) {
    relators.push_back(format_sym_word(r, pres.generators));
  }
  return nlohmann::json{{"generators", pres.generators},
                        {"relators", std::move(relators)}};
}

Word to_base_word(const SymWord& w, const std::vector<std::string>& names,
                  const SurfaceParams& params) {
  Word out;
  for (const SymLetter& l : w) {
    const Word piece = parse_word(names[l.sym], params);
    out = concat(out, l.exp == 1 ? piece : invert(piece));
  }
  return out;
}

Word reduce_mod_orders(const Word& w, const GeneratorOrders& orders) {
  if (orders.x_order < 0 || orders.y_order < 0) {
    throw constraint_error("generator orders must be >= 0");
  }
  struct Syllable {
    Generator gen;
    long long exp;
  };
  std::vector<Syllable> stack;
  auto order_of = [&orders](const Generator& gen) {
    return gen.kind == GenKind::X ? orders.x_order : orders.y_order;
  };
  auto normalize = [](long long e, int order) {
    if (order == 0) return e;
    e %= order;
    return e < 0 ? e + order : e;
  };
  for (const Letter& l : w.letters) {
    const int order = order_of(l.gen);
    if (order == 1) continue;
    if (!stack.empty() && stack.back().gen == l.gen) {
      stack.back().exp = normalize(stack.back().exp + l.exp, order);
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      const long long e = normalize(l.exp, order);
      if (e != 0) stack.push_back(Syllable{l.gen, e});
    }
  }
  Word out;
  for (const Syllable& s : stack) {
    const int sign = s.exp > 0 ? 1 : -1;
    for (long long t = 0; t < (s.exp > 0 ? s.exp : -s.exp); ++t) {
      out.letters.push_back(Letter{s.gen, sign});
    }
  }
  return out;
}

EquivalenceReport verify_commutator_identities(int g) {
  if (g < 4) {
    throw constraint_error(
        "equivalence sweep needs g >= 4 for the four-index identity");
  }
  EquivalenceReport report;
  auto pair_commutator = [](int p, int q, int r, int s) {
    return commutator(xw({p, q}), xw({r, s}));
  };
  auto check = [&report](const std::string& label, const Word& lhs,
                         const Word& rhs) {
    ++report.checked;
    if (!trivial_mod_squares(concat(lhs, invert(rhs))) ||
        !trivial_mod_squares(concat(invert(rhs), lhs))) {
      report.failures.push_back(label);
    }
  };

  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      if (j == i) continue;
      // Two-index degenerate patterns collapse outright.
      const int d[8][4] = {{i, i, i, i}, {i, i, i, j}, {i, i, j, i},
                           {i, j, i, i}, {j, i, i, i}, {i, i, j, j},
                           {i, j, i, j}, {i, j, j, i}};
      for (const auto& p : d) {
        check("degenerate [" + std::to_string(p[0]) + "," +
                  std::to_string(p[1]) + "," + std::to_string(p[2]) + "," +
                  std::to_string(p[3]) + "]",
              pair_commutator(p[0], p[1], p[2], p[3]), Word{});
      }
      for (int k = 1; k <= g; ++k) {
        if (k == i || k == j) continue;
        const std::string ijk = std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k);
        // [x_i x_j, x_i x_k] == x_i (x_j x_i x_k)^2 x_i^-1
        check("share-first (" + ijk + ")", pair_commutator(i, j, i, k),
              conjugate(xw({i}), triple_square_word(j, i, k)));
        // [x_i x_j, x_k x_j] == (x_i x_j x_k)^2
        check("share-last (" + ijk + ")", pair_commutator(i, j, k, j),
              triple_square_word(i, j, k));
        // [x_i x_j, x_k x_i] == (x_i x_j x_k)^2
        check("wrap (" + ijk + ")", pair_commutator(i, j, k, i),
              triple_square_word(i, j, k));
        // [x_i x_j, x_j x_k] == (x_i x_k x_j)^2
        check("chain (" + ijk + ")", pair_commutator(i, j, j, k),
              triple_square_word(i, k, j));
        // Three-index degenerate patterns.
        check("degenerate [i,i,j,k] (" + ijk + ")",
              pair_commutator(i, i, j, k), Word{});
        check("degenerate [i,j,k,k] (" + ijk + ")",
              pair_commutator(i, j, k, k), Word{});
        for (int l = 1; l <= g; ++l) {
          if (l == i || l == j || l == k) continue;
          // [x_i x_j, x_k x_l] ==
          //   (x_i x_j x_k)^2  x_k x_l  (x_l x_j x_i)^2  (x_k x_l)^-1
          const Word rhs = concat(
              triple_square_word(i, j, k),
              conjugate(xw({k, l}), triple_square_word(l, j, i)));
          check("disjoint (" + ijk + "," + std::to_string(l) + ")",
                pair_commutator(i, j, k, l), rhs);
        }
      }
    }
  }
  return report;
}

Presentation free_pi_presentation(const SurfaceParams& params) {
  params.validate();
  Presentation pres;
  for (int i = 1; i <= params.g; ++i) {
    pres.generators.push_back("x" + std::to_string(i));
  }
  for (int j = 1; j <= params.y_count(); ++j) {
    pres.generators.push_back("y" + std::to_string(j));
  }
  return pres;
}

Presentation pi_presentation(const SurfaceParams& params) {
  Presentation pres = free_pi_presentation(params);
  for (int i = 0; i < params.g; ++i) {
    pres.relators.push_back(SymWord{{i, 1}, {i, 1}});
  }
  for (int j = 0; j < params.y_count(); ++j) {
    pres.relators.push_back(SymWord{{params.g + j, 1}});
  }
  for (int i = 0; i < params.g; ++i) {
    for (int j = i + 1; j < params.g; ++j) {
      for (int k = j + 1; k < params.g; ++k) {
        pres.relators.push_back(
            SymWord{{i, 1}, {j, 1}, {k, 1}, {i, 1}, {j, 1}, {k, 1}});
      }
    }
  }
  return pres;
}

void validate(const CosetTable& table, const Presentation& pres) {
  const int n = table.index();
  if (n < 1) throw constraint_error("coset table needs at least one coset");
  if (table.action.size() != pres.generators.size()) {
    throw constraint_error("coset table covers " +
                           std::to_string(table.action.size()) +
                           " generators, presentation has " +
                           std::to_string(pres.generators.size()));
  }
  for (const auto& column : table.action) {
    if (static_cast<int>(column.size()) != n) {
      throw constraint_error("coset action column has wrong length");
    }
    std::vector<bool> hit(n, false);
    for (int c : column) {
      if (c < 0 || c >= n || hit[c]) {
        throw constraint_error("coset action is not a permutation");
      }
      hit[c] = true;
    }
  }
  if (!table.transversal[0].empty()) {
    throw constraint_error("transversal must start with the empty word");
  }
  const auto inverse = invert_action(table);
  for (int c = 0; c < n; ++c) {
    const SymWord& rep = table.transversal[c];
    if (sym_reduce(rep) != rep) {
      throw constraint_error("transversal words must be freely reduced");
    }
    if (trace(rep, 0, table, inverse) != c) {
      throw constraint_error("transversal word " + std::to_string(c) +
                             " does not reach its coset");
    }
    // Schreier condition: each prefix is itself a representative.
    for (std::size_t len = 0; len < rep.size(); ++len) {
      const SymWord prefix(rep.begin(), rep.begin() + len);
      const int reached = trace(prefix, 0, table, inverse);
      if (table.transversal[reached] != prefix) {
        throw constraint_error("transversal is not prefix-closed");
      }
    }
  }
}

CosetTable parity_coset_table(const Presentation& pres,
                              const SurfaceParams& params) {
  if (pres.generators != free_pi_presentation(params).generators) {
    throw constraint_error(
        "parity table needs the x1..xg, y1..y<b-1> alphabet");
  }
  CosetTable table;
  table.transversal = {SymWord{}, SymWord{{params.g - 1, 1}}};  // 1, x_g
  for (int gen = 0; gen < static_cast<int>(pres.generators.size()); ++gen) {
    if (gen < params.g) {
      table.action.push_back({1, 0});
    } else {
      table.action.push_back({0, 1});
    }
  }
  return table;
}

CosetTable identity_coset_table(const Presentation& pres) {
  CosetTable table;
  table.transversal = {SymWord{}};
  table.action.assign(pres.generators.size(), {0});
  return table;
}

SubgroupPresentation reidemeister_schreier(const Presentation& pres,
                                           const CosetTable& table) {
  validate(pres);
  validate(table, pres);
  const auto inverse = invert_action(table);
  const int n = table.index();
  const int gens = static_cast<int>(pres.generators.size());

  // Schreier generators, coset-major.  sgen[c][x] is the index of the
  // subgroup generator for (coset c, generator x), or -1 when the step
  // runs along the transversal and the generator collapses.
  SubgroupPresentation out;
  std::vector<std::vector<int>> sgen(n, std::vector<int>(gens, -1));
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < gens; ++x) {
      const int target = table.action[x][c];
      SymWord expansion = table.transversal[c];
      expansion.push_back(SymLetter{x, 1});
      const SymWord back = sym_invert(table.transversal[target]);
      expansion.insert(expansion.end(), back.begin(), back.end());
      expansion = sym_reduce(expansion);
      if (expansion.empty()) continue;
      sgen[c][x] = static_cast<int>(out.presentation.generators.size());
      out.presentation.generators.push_back(
          compact_name(expansion, pres.generators));
      out.expansions.push_back(std::move(expansion));
    }
  }
  {
    std::set<std::string> names(out.presentation.generators.begin(),
                                out.presentation.generators.end());
    if (names.size() != out.presentation.generators.size()) {
      throw constraint_error("Schreier generators collide; table is "
                             "inconsistent");
    }
  }

  // Rewrite u r u^-1 starting from the identity coset.
  std::set<SymWord> seen;
  for (int c = 0; c < n; ++c) {
    for (const SymWord& r : pres.relators) {
      SymWord word = table.transversal[c];
      word.insert(word.end(), r.begin(), r.end());
      const SymWord back = sym_invert(table.transversal[c]);
      word.insert(word.end(), back.begin(), back.end());

      SymWord rewritten;
      int coset = 0;
      for (const SymLetter& l : word) {
        if (l.exp == 1) {
          const int s = sgen[coset][l.sym];
          if (s >= 0) rewritten.push_back(SymLetter{s, 1});
          coset = table.action[l.sym][coset];
        } else {
          coset = inverse[l.sym][coset];
          const int s = sgen[coset][l.sym];
          if (s >= 0) rewritten.push_back(SymLetter{s, -1});
        }
      }
      if (coset != 0) {
        throw constraint_error(
            "coset table does not respect relator '" +
            format_sym_word(r, pres.generators) + "'");
      }
      rewritten = sym_reduce(rewritten);
      if (rewritten.empty()) continue;
      if (seen.insert(rewritten).second) {
        out.presentation.relators.push_back(std::move(rewritten));
      }
    }
  }
  return out;
}

nlohmann::json subgroup_to_json(const SubgroupPresentation& sub,
                                const Presentation& base) {
  nlohmann::json j = presentation_to_json(sub.presentation);
  nlohmann::json expansions = nlohmann::json::array();
  for (const SymWord& e : sub.expansions) {
    expansions.push_back(format_sym_word(e, base.generators));
  }
  j["expansions"] = std::move(expansions);
  return j;
}

}  // namespace torelli
