#include "torelli/catalog.hpp"

#include <string>

#include "torelli/errors.hpp"

namespace torelli {

namespace {

struct SymbolInfo {
  const char* text;
  std::size_t arity;
};

SymbolInfo symbol_info(TwistSymbol symbol) {
  switch (symbol) {
    case TwistSymbol::Alpha: return {"t_alpha", 0};
    case TwistSymbol::BetaBetaPrime: return {"t_beta_betaprime", 0};
    case TwistSymbol::Gamma: return {"t_gamma", 0};
    case TwistSymbol::Delta: return {"t_delta", 1};
    case TwistSymbol::Rho: return {"t_rho", 1};
    case TwistSymbol::Sigma: return {"t_sigma", 2};
    case TwistSymbol::SigmaBar: return {"t_sigmabar", 2};
    case TwistSymbol::CurveA: return {"a", 2};
    case TwistSymbol::CurveB: return {"b", 2};
    case TwistSymbol::CurveC: return {"c", 2};
  }
  throw constraint_error("unknown twist symbol");
}

void check_range(int value, int low, int high, const std::string& what) {
  if (value < low || value > high) {
    throw index_error(what + " index " + std::to_string(value) +
                      " out of range " + std::to_string(low) + ".." +
                      std::to_string(high));
  }
}

// Catalog data also exists for the closed surface, so b = 0 is allowed here
// (unlike the word-level modules, which need the boundary base point).
void check_surface(const SurfaceParams& params) {
  if (params.g < 1 || params.b < 0) {
    throw constraint_error(
        "genus must be positive and the boundary count nonnegative");
  }
}

void require_boundary(const SurfaceParams& params) {
  if (params.b < 1) {
    throw constraint_error("at least one boundary component is required");
  }
}

nlohmann::json factor_json(const MappingClassName& name, int exponent) {
  return {{"name", format_name(name)}, {"exp", exponent}};
}

}  // namespace

NameKind MappingClassName::kind() const {
  if (push.has_value()) return NameKind::NamedProduct;
  switch (symbol) {
    case TwistSymbol::BetaBetaPrime:
      return NameKind::BoundingPairMap;
    case TwistSymbol::CurveA:
    case TwistSymbol::CurveB:
    case TwistSymbol::CurveC:
      return NameKind::NamedProduct;
    default:
      return NameKind::CurveTwist;
  }
}

std::string format_name(const MappingClassName& name) {
  const SymbolInfo info = symbol_info(name.symbol);
  std::string out = info.text;
  if (!name.indices.empty() || name.push.has_value()) {
    out += '(';
    for (std::size_t t = 0; t < name.indices.size(); ++t) {
      if (t > 0) out += ',';
      out += std::to_string(name.indices[t]);
    }
    if (name.push.has_value()) {
      out += ';';
      out += std::to_string(*name.push);
    }
    out += ')';
  }
  return out;
}

void validate(const MappingClassName& name, const SurfaceParams& params) {
  check_surface(params);
  const SymbolInfo info = symbol_info(name.symbol);
  if (name.indices.size() != info.arity) {
    throw constraint_error(std::string(info.text) + " expects " +
                           std::to_string(info.arity) + " indices, got " +
                           std::to_string(name.indices.size()));
  }
  switch (name.symbol) {
    case TwistSymbol::Alpha:
    case TwistSymbol::BetaBetaPrime:
    case TwistSymbol::Gamma:
      break;
    case TwistSymbol::Delta:
    case TwistSymbol::Rho:
      check_range(name.indices[0], 1, params.b, "boundary");
      break;
    case TwistSymbol::Sigma:
    case TwistSymbol::SigmaBar:
      check_range(name.indices[0], 1, params.b, "boundary");
      check_range(name.indices[1], 1, params.b, "boundary");
      if (name.indices[0] >= name.indices[1]) {
        throw constraint_error("boundary pair indices must increase");
      }
      break;
    case TwistSymbol::CurveA:
      check_range(name.indices[0], 1, params.g, "genus");
      check_range(name.indices[1], 1, params.g, "genus");
      if (name.indices[0] >= name.indices[1]) {
        throw constraint_error("crosscap pair indices must increase");
      }
      break;
    case TwistSymbol::CurveB:
      check_range(name.indices[0], 1, params.g, "genus");
      check_range(name.indices[1], 1, params.y_count(), "puncture");
      break;
    case TwistSymbol::CurveC:
      check_range(name.indices[0], 1, params.y_count(), "puncture");
      check_range(name.indices[1], 1, params.y_count(), "puncture");
      if (name.indices[0] >= name.indices[1]) {
        throw constraint_error("puncture pair indices must increase");
      }
      break;
  }
  if (name.push.has_value()) {
    check_range(*name.push, 1, params.b, "push");
  }
}

std::vector<MappingClassName> generating_set(const SurfaceParams& params) {
  check_surface(params);
  if (params.g < 4) {
    throw constraint_error(
        "the normal generating set needs genus at least four");
  }
  std::vector<MappingClassName> set{MappingClassName::alpha(),
                                    MappingClassName::beta_betaprime()};
  if (params.g == 4) set.push_back(MappingClassName::gamma());
  for (int i = 1; i <= params.b - 1; ++i) {
    set.push_back(MappingClassName::delta(i));
  }
  for (int i = 1; i <= params.b - 1; ++i) {
    set.push_back(MappingClassName::rho(i));
  }
  for (int i = 1; i <= params.b - 1; ++i) {
    for (int j = i + 1; j <= params.b - 1; ++j) {
      set.push_back(MappingClassName::sigma(i, j));
    }
  }
  for (int i = 1; i <= params.b - 1; ++i) {
    for (int j = i + 1; j <= params.b - 1; ++j) {
      set.push_back(MappingClassName::sigmabar(i, j));
    }
  }
  return set;
}

std::vector<LiftRule> lift_table(const SurfaceParams& params) {
  check_surface(params);
  require_boundary(params);
  std::vector<LiftRule> rules;

  const Letter xg{xgen(params.g), 1};
  rules.push_back(LiftRule{Word{{xg, xg}},
                           {{MappingClassName::rho(params.b), 1}}});
  for (int j = 1; j <= params.y_count(); ++j) {
    rules.push_back(LiftRule{Word{{Letter{ygen(j), 1}}},
                             {{MappingClassName::sigma(j, params.b), 1},
                              {MappingClassName::delta(j), -1}}});
  }
  for (int j = 1; j <= params.y_count(); ++j) {
    rules.push_back(LiftRule{Word{{xg, Letter{ygen(j), 1}, xg.inverse()}},
                             {{MappingClassName::sigmabar(j, params.b), 1},
                              {MappingClassName::delta(j), -1}}});
  }
  return rules;
}

namespace {

// Shared skeleton of the three boundary product formulas.  Every formula is
// a block of delta twists raised to a fixed negative power, then for each
// crosscap row the a twists of that row followed by its b twists, then the
// c twists; the parameters say which delta/puncture index is skipped and
// where the a rows stop.
NamedProductFormula boundary_product(const SurfaceParams& params,
                                     MappingClassName lhs, int delta_exponent,
                                     int a_limit, int skip_puncture) {
  NamedProductFormula formula;
  formula.lhs = std::move(lhs);
  for (int i = 1; i <= params.y_count(); ++i) {
    if (i == skip_puncture) continue;
    formula.factors.push_back(
        ProductFactor{MappingClassName::delta(i), delta_exponent});
  }
  for (int i = 1; i <= a_limit; ++i) {
    for (int j = i + 1; j <= a_limit; ++j) {
      formula.factors.push_back(
          ProductFactor{MappingClassName::curve_a(i, j), 1});
    }
    for (int k = 1; k <= params.y_count(); ++k) {
      if (k == skip_puncture) continue;
      formula.factors.push_back(
          ProductFactor{MappingClassName::curve_b(i, k), 1});
    }
  }
  for (int r = 1; r <= params.y_count() - 1; ++r) {
    if (r == skip_puncture) continue;
    for (int l = r + 1; l <= params.y_count(); ++l) {
      if (l == skip_puncture) continue;
      formula.factors.push_back(
          ProductFactor{MappingClassName::curve_c(r, l), 1});
    }
  }
  return formula;
}

}  // namespace

NamedProductFormula delta_product(const SurfaceParams& params) {
  check_surface(params);
  require_boundary(params);
  return boundary_product(params, MappingClassName::delta(params.b),
                          -(params.g + params.b - 3), params.g, 0);
}

NamedProductFormula rho_product(const SurfaceParams& params) {
  check_surface(params);
  require_boundary(params);
  return boundary_product(params, MappingClassName::rho(params.b),
                          -(params.g + params.b - 4), params.g - 1, 0);
}

NamedProductFormula sigma_product(const SurfaceParams& params, int k) {
  check_surface(params);
  require_boundary(params);
  check_range(k, 1, params.y_count(), "puncture");
  return boundary_product(params, MappingClassName::sigma(k, params.b),
                          -(params.g + params.b - 4), params.g, k);
}

std::vector<NamedProductFormula> boundary_twist_products(
    const SurfaceParams& params) {
  check_surface(params);
  require_boundary(params);
  std::vector<NamedProductFormula> all{delta_product(params),
                                       rho_product(params)};
  for (int k = 1; k <= params.y_count(); ++k) {
    all.push_back(sigma_product(params, k));
  }
  return all;
}

nlohmann::json catalog_to_json(const SurfaceParams& params) {
  check_surface(params);
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (const MappingClassName& name : generating_set(params)) {
    j["generators"].push_back(format_name(name));
  }
  j["lifts"] = nlohmann::json::array();
  j["products"] = nlohmann::json::array();
  if (params.b >= 1) {
    for (const LiftRule& rule : lift_table(params)) {
      nlohmann::json classes = nlohmann::json::array();
      for (const auto& [name, exp] : rule.classes) {
        classes.push_back(factor_json(name, exp));
      }
      j["lifts"].push_back({{"word", format_word(rule.base_word)},
                            {"classes", std::move(classes)}});
    }
    for (const NamedProductFormula& formula : boundary_twist_products(params)) {
      nlohmann::json factors = nlohmann::json::array();
      for (const ProductFactor& f : formula.factors) {
        factors.push_back(factor_json(f.name, f.exponent));
      }
      j["products"].push_back({{"lhs", format_name(formula.lhs)},
                               {"factors", std::move(factors)}});
    }
  }
  return j;
}

}  // namespace torelli
