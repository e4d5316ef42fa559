#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catt/session.hpp"

namespace {

// Presets and fine-grained flags are applied in command-line order, so a
// later flag overrides whatever an earlier one set.
catt::nbe::EvalConfig resolve(const CLI::App& app) {
  catt::nbe::EvalConfig cfg = catt::nbe::EvalConfig::weak();
  std::map<const CLI::Option*, std::size_t> seen;
  for (const CLI::Option* o : app.parse_order()) {
    const std::size_t k = seen[o]++;
    const auto& res = o->results();
    const std::string v = k < res.size() ? res[k] : std::string();
    const std::string name = o->get_name();
    if (name == "--su") {
      cfg = catt::nbe::EvalConfig::su();
    } else if (name == "--sua") {
      cfg = catt::nbe::EvalConfig::sua();
    } else if (name == "--dr") {
      cfg.disc_removal = v == "on";
    } else if (name == "--ecr") {
      cfg.endo_coherence_removal = v == "on";
    } else if (name == "--insertion") {
      cfg.insertion = v == "none" ? catt::nbe::Insertion::None
                      : v == "id" ? catt::nbe::Insertion::Identities
                                  : catt::nbe::Insertion::Full;
    } else if (name == "--ops") {
      cfg.ops = v == "groupoidal" ? catt::ps::OpSet::Groupoidal : catt::ps::OpSet::Regular;
    } else if (name == "--keep-implicits") {
      cfg.keep_implicits = true;
    }
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typechecker and interpreter for CATT and its semistrict variants"};
  app.name("catt-kernel");
  std::vector<std::string> files;
  std::string unused;
  bool oracle = false;
  const auto on_off = CLI::IsMember({"on", "off"});
  app.add_flag("--su", "strict units: disc removal, endo-coherence removal, insertion of identities");
  app.add_flag("--sua", "strict units and associativity: as --su with full insertion");
  app.add_option("--dr", unused, "disc removal")->check(on_off)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--ecr", unused, "endo-coherence removal")->check(on_off)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--insertion", unused, "which arguments may be inserted")
      ->check(CLI::IsMember({"none", "id", "full"}))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--ops", unused, "operation set for coherences")
      ->check(CLI::IsMember({"regular", "groupoidal"}))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_flag("--keep-implicits", "print implicit arguments and annotations");
  app.add_flag("--oracle", oracle)->group("");
  app.add_option("files", files, "files to run; with none, start a REPL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  catt::Session session(resolve(app), std::cout, std::cerr);
  session.oracle_trace = oracle;
  if (files.empty()) {
    session.repl(std::cin, isatty(fileno(stdin)) != 0);
    return 0;
  }
  bool ok = true;
  for (const auto& f : files) ok = session.run_file(f) && ok;
  return ok ? 0 : 1;
}
