// Command-line front end: every library operation behind one subcommand,
// with text output for reading and --json for machines.  Exit status is 0
// only when the requested computation succeeded and, for the verifying
// commands (verify-cert, suite), the verification passed.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "torelli/catalog.hpp"
#include "torelli/certificate.hpp"
#include "torelli/errors.hpp"
#include "torelli/homology.hpp"
#include "torelli/presentation.hpp"
#include "torelli/quotient.hpp"
#include "torelli/suite.hpp"
#include "torelli/surface.hpp"
#include "torelli/word.hpp"

namespace {

using namespace torelli;

struct Options {
  int g = 1;
  int b = 1;
  bool json = false;
  unsigned long long seed = 1;
  std::string word_text;
  std::string cert_path;
  bool with_relators = false;
};

SurfaceParams surface(const Options& opt) { return SurfaceParams{opt.g, opt.b}; }

void emit(const nlohmann::json& j, bool json_mode) {
  std::cout << (json_mode ? j.dump() : j.dump(2)) << "\n";
}

int run_gamma(const Options& opt) {
  const SurfaceParams params = surface(opt);
  const Word w = parse_word(opt.word_text, params);
  const bool member = in_gamma(w, params);
  nlohmann::json j;
  j["member"] = member;
  if (in_plus(w, params)) {
    const OEProfile profile = oe_profile(w, params);
    j["profile"] = {{"O", profile.odd}, {"E", profile.even}};
  } else {
    j["profile"] = nullptr;
  }
  if (opt.json) {
    emit(j, true);
  } else {
    std::cout << "member: " << (member ? "true" : "false") << "\n";
    if (j["profile"].is_null()) {
      std::cout << "profile: none (odd projection)\n";
    } else {
      std::cout << "O:";
      for (int v : j["profile"]["O"]) std::cout << ' ' << v;
      std::cout << "\nE:";
      for (int v : j["profile"]["E"]) std::cout << ' ' << v;
      std::cout << "\n";
    }
  }
  return 0;
}

int run_nf(const Options& opt) {
  const SurfaceParams params = surface(opt);
  const NormalForm form = nf(parse_word(opt.word_text, params), params);
  const nlohmann::json j = form;
  if (opt.json) {
    emit(j, true);
  } else {
    std::cout << "v:";
    for (long long v : form.v) std::cout << ' ' << v;
    std::cout << "\nparity: " << form.parity << "\n";
    std::cout << "trivial: " << (is_trivial(form) ? "true" : "false") << "\n";
  }
  return 0;
}

int run_act(const Options& opt) {
  const SurfaceParams params = surface(opt);
  const H1Matrix m = push_action(parse_word(opt.word_text, params), params);
  const nlohmann::json j = matrix_to_json(m, params);
  if (opt.json) {
    emit(j, true);
  } else {
    std::cout << "basis:";
    for (const auto& label : j["basis"]) {
      std::cout << ' ' << label.get<std::string>();
    }
    std::cout << "\n";
    for (const auto& row : j["rows"]) {
      for (long long v : row) std::cout << v << '\t';
      std::cout << "\n";
    }
  }
  return 0;
}

int run_certify(const Options& opt) {
  const SurfaceParams params = surface(opt);
  const Word w = parse_word(opt.word_text, params);
  const Certificate cert = gamma_certificate(w, params);
  emit(certificate_to_json(cert), opt.json);
  return 0;
}

int run_verify_cert(const Options& opt) {
  const SurfaceParams params = surface(opt);
  std::ifstream in(opt.cert_path);
  if (!in) {
    throw error("cannot open certificate file \"" + opt.cert_path + "\"");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw syntax_error(std::string("certificate file is not JSON: ") +
                       ex.what());
  }
  const Certificate cert = certificate_from_json(j, params);
  const Word w = parse_word(opt.word_text, params);
  const bool valid = verify_certificate(cert, w);
  if (opt.json) {
    emit(nlohmann::json{{"valid", valid}}, true);
  } else {
    std::cout << "valid: " << (valid ? "true" : "false") << "\n";
  }
  return valid ? 0 : 1;
}

int run_rs(const Options& opt) {
  const SurfaceParams params = surface(opt);
  const Presentation base =
      opt.with_relators ? pi_presentation(params) : free_pi_presentation(params);
  const SubgroupPresentation sub =
      reidemeister_schreier(base, parity_coset_table(base, params));
  if (opt.json) {
    emit(subgroup_to_json(sub, base), true);
    return 0;
  }
  std::cout << "generators (" << sub.presentation.generators.size() << "):\n";
  for (std::size_t t = 0; t < sub.presentation.generators.size(); ++t) {
    std::cout << "  " << sub.presentation.generators[t] << " = "
              << format_word(
                     free_reduce(to_base_word(sub.expansions[t],
                                              base.generators, params)))
              << "\n";
  }
  std::cout << "relators (" << sub.presentation.relators.size() << "):\n";
  for (const SymWord& r : sub.presentation.relators) {
    std::cout << "  " << format_sym_word(r, sub.presentation.generators)
              << "\n";
  }
  return 0;
}

int run_catalog(const Options& opt) {
  const nlohmann::json j = catalog_to_json(surface(opt));
  if (opt.json) {
    emit(j, true);
    return 0;
  }
  std::cout << "generators:\n";
  for (const auto& name : j["generators"]) {
    std::cout << "  " << name.get<std::string>() << "\n";
  }
  std::cout << "lifts:\n";
  for (const auto& rule : j["lifts"]) {
    std::cout << "  " << rule["word"].get<std::string>() << " ->";
    for (const auto& cls : rule["classes"]) {
      std::cout << ' ' << cls["name"].get<std::string>() << '^'
                << cls["exp"].get<int>();
    }
    std::cout << "\n";
  }
  std::cout << "products:\n";
  for (const auto& formula : j["products"]) {
    std::cout << "  " << formula["lhs"].get<std::string>() << " =";
    for (const auto& f : formula["factors"]) {
      std::cout << ' ' << f["name"].get<std::string>();
      if (f["exp"].get<int>() != 1) std::cout << '^' << f["exp"].get<int>();
    }
    std::cout << "\n";
  }
  return 0;
}

int run_suite(const Options& opt) {
  const std::vector<CheckResult> results = run_all(surface(opt), opt.seed);
  bool all_passed = true;
  nlohmann::json j = nlohmann::json::array();
  for (const CheckResult& result : results) {
    all_passed = all_passed && result.passed;
    if (opt.json) {
      j.push_back({{"name", result.name},
                   {"passed", result.passed},
                   {"detail", result.detail},
                   {"millis", result.millis}});
    } else {
      std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << result.name
                << " (" << result.millis << " ms): " << result.detail << "\n";
    }
  }
  if (opt.json) emit(j, true);
  if (!opt.json) {
    std::cout << (all_passed ? "all checks passed" : "some checks FAILED")
              << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic toolkit for twist-map kernels on non-orientable "
               "surfaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_surface_flags = [&](CLI::App* cmd) {
    cmd->add_option("--g", opt.g, "genus")->required();
    cmd->add_option("--b", opt.b, "boundary components")->required();
    cmd->add_flag("--json", opt.json, "machine-readable output");
  };
  auto add_word_arg = [&](CLI::App* cmd) {
    cmd->add_option("word", opt.word_text, "word over x1..xg, y1..y<b-1>")
        ->required();
  };

  CLI::App* gamma = app.add_subcommand(
      "gamma", "membership in the kernel subgroup, with the position profile");
  add_surface_flags(gamma);
  add_word_arg(gamma);

  CLI::App* nf_cmd =
      app.add_subcommand("nf", "normal form in the solved quotient");
  add_surface_flags(nf_cmd);
  add_word_arg(nf_cmd);

  CLI::App* act =
      app.add_subcommand("act", "homology action of an even word");
  add_surface_flags(act);
  add_word_arg(act);

  CLI::App* certify = app.add_subcommand(
      "certify", "produce a normal-closure certificate for a kernel word");
  add_surface_flags(certify);
  add_word_arg(certify);

  CLI::App* verify = app.add_subcommand(
      "verify-cert", "check a certificate file against a word");
  add_surface_flags(verify);
  verify->add_option("cert", opt.cert_path, "certificate JSON file")
      ->required();
  add_word_arg(verify);

  CLI::App* rs = app.add_subcommand(
      "rs", "rewrite the presentation to the even-word subgroup");
  add_surface_flags(rs);
  rs->add_flag("--with-relators", opt.with_relators,
               "start from the quotient presentation instead of the free one");

  CLI::App* catalog = app.add_subcommand(
      "catalog", "generating set, lift rules and boundary products");
  add_surface_flags(catalog);

  CLI::App* suite =
      app.add_subcommand("suite", "run every consistency check");
  add_surface_flags(suite);
  suite->add_option("--seed", opt.seed, "seed for the randomized checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gamma->parsed()) return run_gamma(opt);
    if (nf_cmd->parsed()) return run_nf(opt);
    if (act->parsed()) return run_act(opt);
    if (certify->parsed()) return run_certify(opt);
    if (verify->parsed()) return run_verify_cert(opt);
    if (rs->parsed()) return run_rs(opt);
    if (catalog->parsed()) return run_catalog(opt);
    if (suite->parsed()) return run_suite(opt);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
