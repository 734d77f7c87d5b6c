#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "torelli/params.hpp"
#include "torelli/word.hpp"

namespace torelli {

// Symbols for the mapping classes the library talks about.  The first block
// names twists about specific curves (alpha, gamma and the boundary-related
// delta/rho/sigma families), beta_betaprime names a bounding-pair map, and
// the curve_* symbols name the indexed curves whose twists appear inside
// product formulas.
enum class TwistSymbol {
  Alpha,
  BetaBetaPrime,
  Gamma,
  Delta,
  Rho,
  Sigma,
  SigmaBar,
  CurveA,
  CurveB,
  CurveC,
};

// What a name denotes: a Dehn twist about one curve, a bounding-pair map, or
// a shorthand for a product of other classes (the curve_* twists and any
// name carrying a puncture-push decoration).
enum class NameKind { CurveTwist, BoundingPairMap, NamedProduct };

// A displayable mapping class name: symbol, its indices, and an optional
// puncture-push decoration ("a(1,2;3)" pushes along boundary component 3).
struct MappingClassName {
  TwistSymbol symbol = TwistSymbol::Alpha;
  std::vector<int> indices;
  std::optional<int> push;

  static MappingClassName alpha() { return {TwistSymbol::Alpha, {}, {}}; }
  static MappingClassName beta_betaprime() {
    return {TwistSymbol::BetaBetaPrime, {}, {}};
  }
  static MappingClassName gamma() { return {TwistSymbol::Gamma, {}, {}}; }
  static MappingClassName delta(int i) { return {TwistSymbol::Delta, {i}, {}}; }
  static MappingClassName rho(int i) { return {TwistSymbol::Rho, {i}, {}}; }
  static MappingClassName sigma(int i, int j) {
    return {TwistSymbol::Sigma, {i, j}, {}};
  }
  static MappingClassName sigmabar(int i, int j) {
    return {TwistSymbol::SigmaBar, {i, j}, {}};
  }
  static MappingClassName curve_a(int i, int j) {
    return {TwistSymbol::CurveA, {i, j}, {}};
  }
  static MappingClassName curve_b(int j, int k) {
    return {TwistSymbol::CurveB, {j, k}, {}};
  }
  static MappingClassName curve_c(int k, int l) {
    return {TwistSymbol::CurveC, {k, l}, {}};
  }

  MappingClassName pushed(int m) const {
    MappingClassName copy = *this;
    copy.push = m;
    return copy;
  }

  NameKind kind() const;

  friend bool operator==(const MappingClassName&, const MappingClassName&) =
      default;
};

// "t_sigma(1,2)", "a(1,2;3)", ...
std::string format_name(const MappingClassName& name);

// Checks index ranges against the surface: boundary indices up to b, genus
// indices up to g, the second curve_b index up to b-1.  Out-of-range indices
// raise index_error; violated orderings (sigma, curve_a, curve_c want
// strictly increasing indices) raise constraint_error.
void validate(const MappingClassName& name, const SurfaceParams& params);

// The normal generating set for the twist subgroup: the alpha twist and the
// bounding-pair map, the extra gamma twist exactly at genus four, and for
// each boundary component past the first its delta/rho twists and the
// sigma/sigmabar twists of component pairs.  Genus at most three is not
// covered and throws constraint_error.  The closed surface reuses the
// one-boundary set.
std::vector<MappingClassName> generating_set(const SurfaceParams& params);

// One row of the lift table: a kernel word together with the mapping class
// product realizing it.
struct LiftRule {
  Word base_word;
  std::vector<std::pair<MappingClassName, int>> classes;  // (class, exponent)
};

// Lifts of the kernel generators through the point-pushing map, one rule per
// generator: x_g^2, each y_j and each conjugate x_g y_j x_g^-1.  Requires at
// least one boundary component.
std::vector<LiftRule> lift_table(const SurfaceParams& params);

struct ProductFactor {
  MappingClassName name;
  int exponent = 1;

  friend bool operator==(const ProductFactor&, const ProductFactor&) = default;
};

// lhs written as the ordered product of the factors.
struct NamedProductFormula {
  MappingClassName lhs;
  std::vector<ProductFactor> factors;
};

// Product formulas expressing the twists about the last boundary component
// through twists about the indexed a/b/c curves and the remaining delta
// twists.  All require b >= 1; sigma_product additionally requires
// 1 <= k <= b-1.
NamedProductFormula delta_product(const SurfaceParams& params);
NamedProductFormula rho_product(const SurfaceParams& params);
NamedProductFormula sigma_product(const SurfaceParams& params, int k);

// delta, rho, then sigma_1 .. sigma_{b-1}.
std::vector<NamedProductFormula> boundary_twist_products(
    const SurfaceParams& params);

// {"generators": [...], "lifts": [...], "products": [...]}; the closed
// surface gets empty lift and product lists.
nlohmann::json catalog_to_json(const SurfaceParams& params);

}  // namespace torelli
