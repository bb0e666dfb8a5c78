#include <iostream>

#include <CLI11.hpp>

#include "cli_commands.hpp"
#include "twisted_hodge/report_json.hpp"

namespace th = twisted_hodge;

int main(int argc, char** argv) {
  th::cli::RunConfig cfg;
  std::string showKey;

  CLI::App app{"Twisted Bott-Chern, Aeppli and Dolbeault cohomology of invariant complexes"};
  app.require_subcommand(1);

  auto modelOptions = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "catalog key (torus1..3, nakamura, iwasawa)");
    sub->add_option("--file", cfg.file, "model document (JSON)");
    sub->add_option("--theta1", cfg.theta1, "(1,0)-form theta1, e.g. \"1/2*mu1\"");
    sub->add_option("--theta2", cfg.theta2, "(1,0)-form theta2");
    sub->add_option("--metric", cfg.metric, "Gram matrix as JSON rows of coefficient strings");
    sub->add_option("--format", cfg.format, "json or table");
    sub->add_option("--degrees", cfg.degrees, "degree list, e.g. 0,2-4");
    sub->add_flag("--allow-large", cfg.allowLarge, "allow n up to 8");
  };

  CLI::App* compute = app.add_subcommand("compute", "five cohomologies, maps and verdicts");
  modelOptions(compute);
  CLI::App* verify = app.add_subcommand("verify", "run exact identity suites");
  modelOptions(verify);
  verify->add_option("--suite", cfg.suite, "operators|hodge|kahler|duality|frolicher|all");
  CLI::App* witness = app.add_subcommand("witness", "explicit class breaking the ddbar-lemma");
  modelOptions(witness);
  witness->add_option("--primitive", cfg.primitive, "candidate primitive to try first");
  CLI::App* catalog = app.add_subcommand("catalog", "built-in models");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "list built-in models");
  list->add_option("--format", cfg.format, "json or table");
  CLI::App* show = catalog->add_subcommand("show", "show one built-in model");
  show->add_option("key", showKey, "catalog key")->required();
  show->add_option("--format", cfg.format, "json or table");
  CLI::App* exportCmd = app.add_subcommand("export", "print a model as a spec document");
  modelOptions(exportCmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return th::cli::runCompute(cfg, std::cout);
    if (verify->parsed()) return th::cli::runVerify(cfg, std::cout);
    if (witness->parsed()) return th::cli::runWitness(cfg, std::cout);
    if (list->parsed()) return th::cli::runCatalogList(cfg, std::cout);
    if (show->parsed()) return th::cli::runCatalogShow(cfg, showKey, std::cout);
    if (exportCmd->parsed()) return th::cli::runExport(cfg, std::cout);
  } catch (const th::Error& e) {
    std::cout << th::errorToJson(e).dump(2) << "\n";
    std::cerr << "error: " << th::errorKindName(e.kind()) << ": " << e.what() << "\n";
    return th::exitCodeFor(e.kind());
  } catch (const std::exception& e) {
    const th::Error wrapped(th::ErrorKind::InternalError, e.what());
    std::cout << th::errorToJson(wrapped).dump(2) << "\n";
    std::cerr << "error: InternalError: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
