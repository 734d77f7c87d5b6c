#pragma once

#include <compare>
#include <string>
#include <vector>

#include "json.hpp"
#include "torelli/params.hpp"
#include "torelli/word.hpp"

namespace torelli {

// Finite presentations over abstract named generators, coset tables
// for finite-index subgroups, and Reidemeister-Schreier rewriting.
// Symbol words index into a presentation's generator list so the same
// machinery serves the surface alphabet and rewritten subgroup
// alphabets alike.

struct SymLetter {
  int sym = 0;  // index into the owning presentation's generator list
  int exp = 1;  // +1 or -1

  friend auto operator<=>(const SymLetter&, const SymLetter&) = default;
};

using SymWord = std::vector<SymLetter>;

SymWord sym_reduce(const SymWord& w);
SymWord sym_invert(const SymWord& w);

// name or name^-1 per letter, space separated; "1" when empty.
std::string format_sym_word(const SymWord& w,
                            const std::vector<std::string>& names);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<SymWord> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Unique nonempty names, relator letters within range, exponents +-1.
void validate(const Presentation& pres);

nlohmann::json presentation_to_json(const Presentation& pres);

// Interprets each generator name through the word grammar (x<k>/y<k>
// tokens, '*' separators) and concatenates.
Word to_base_word(const SymWord& w, const std::vector<std::string>& names,
                  const SurfaceParams& params);

// Per-kind generator orders for the canonical form in the free product
// of cyclic groups: order 2 folds squares away, order 1 kills a
// generator outright, order 0 leaves it of infinite order.
struct GeneratorOrders {
  int x_order = 2;
  int y_order = 1;
};

// Canonical form of w in the free product < x_i | x_i^o > * < y_j | y_j^o >.
// Two words are equal in that quotient iff their canonical forms are
// equal letter for letter.
Word reduce_mod_orders(const Word& w, const GeneratorOrders& orders);

// Sweep of the commutator/triple-square identities behind the
// presentation reduction, checked modulo squares over every admissible
// index tuple.
struct EquivalenceReport {
  int checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Requires g >= 4 (the four-index identity needs four distinct
// crosscaps); raises constraint_error below that.
EquivalenceReport verify_commutator_identities(int g);

// Presentation of the quotient pi with relators x_i^2, y_j and
// (x_i x_j x_k)^2 for i < j < k, over generators x1..xg, y1..y<b-1>.
Presentation pi_presentation(const SurfaceParams& params);

// Same generator list, no relators.
Presentation free_pi_presentation(const SurfaceParams& params);

// Right-coset table: action[gen][coset] gives the coset reached by the
// generator (exponent +1).  transversal[0] must be empty and every
// prefix of a representative must be the representative of the coset
// it reaches (Schreier condition).
struct CosetTable {
  std::vector<SymWord> transversal;
  std::vector<std::vector<int>> action;

  int index() const { return static_cast<int>(transversal.size()); }
};

void validate(const CosetTable& table, const Presentation& pres);

// The index-two table of the even-projection subgroup: x generators
// swap the cosets, y generators fix them, transversal {1, x_g}.  The
// presentation must carry exactly the alphabet of pi_presentation.
CosetTable parity_coset_table(const Presentation& pres,
                              const SurfaceParams& params);

// Index-one table; rewriting through it returns the input presentation.
CosetTable identity_coset_table(const Presentation& pres);

// Output of rewriting: a presentation over the Schreier generators
// (named by their compact expansions, e.g. "x1*x5^-1") together with
// each generator's expansion over the base symbols.
struct SubgroupPresentation {
  Presentation presentation;
  std::vector<SymWord> expansions;
};

// Schreier generators u x (ux)^-1 for transversal u and generator x,
// dropping those whose expansion reduces to nothing; relators are each
// u r u^-1 rewritten over the new symbols, freely reduced, with exact
// duplicates kept once.  Raises constraint_error when the table does
// not respect a relator.
SubgroupPresentation reidemeister_schreier(const Presentation& pres,
                                           const CosetTable& table);

nlohmann::json subgroup_to_json(const SubgroupPresentation& sub,
                                const Presentation& base);

}  // namespace torelli
