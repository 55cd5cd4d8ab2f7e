// ifcheck: check generic-interface sources, verify golden transcripts, or run
// the algebra law suites.
//
//   ifcheck [--mode java8|extended] [--emit-members[=text|machine]]
//           [--no-ambient] [--corpus] FILE...
//   ifcheck --golden DIR
//   ifcheck laws --structure rationals|integers|vectors --samples N --seed S

#include <iostream>

#include "CLI11.hpp"
#include "ifcheck/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Checker for a small language of generic interfaces"};
  app.set_version_flag("--version", "ifcheck 0.1.0");

  ifcheck::CliConfig config;
  std::string mode = "java8";
  std::string emit;
  std::string goldenDir;
  std::string writeGoldens;
  bool noAmbient = false;
  std::vector<std::string> inputs;

  app.add_option("--mode", mode, "java8 or extended")
      ->check(CLI::IsMember({"java8", "extended"}));
  app.add_flag("--emit-members{text}", emit, "print member tables (text or machine)")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--golden", goldenDir, "verify the corpus against goldens in DIR");
  app.add_option("--write-goldens", writeGoldens, "regenerate corpus goldens into DIR");
  app.add_flag("--corpus", config.corpus, "check the embedded corpus");
  app.add_flag("--no-ambient", noAmbient, "do not preload the clean corpus interfaces");
  app.add_option("--suffix", config.suffix, "file suffix for corpus listings");
  app.add_option("files", inputs, "source files to check");

  auto* laws = app.add_subcommand("laws", "check the algebraic laws of a shipped structure");
  std::string structure;
  int samples = 1000;
  std::uint64_t seed = 42;
  laws->add_option("--structure", structure, "rationals, integers or vectors")
      ->required()
      ->check(CLI::IsMember({"rationals", "integers", "vectors"}));
  laws->add_option("--samples", samples, "samples per law")->check(CLI::PositiveNumber);
  laws->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ifcheck::exit_code::kUsage;
  }

  try {
    if (laws->parsed()) return ifcheck::run_laws(structure, samples, seed, std::cout, std::cerr);

    config.mode = *ifcheck::parse_mode(mode);
    if (emit == "text") config.emitMembers = ifcheck::EmitMembers::Text;
    if (emit == "machine") config.emitMembers = ifcheck::EmitMembers::Machine;
    config.ambient = !noAmbient;
    for (const auto& f : inputs) config.inputs.emplace_back(f);

    if (!writeGoldens.empty()) {
      ifcheck::write_goldens(writeGoldens, config.suffix);
      return ifcheck::exit_code::kOk;
    }
    if (!goldenDir.empty()) {
      config.goldenDir = goldenDir;
      return ifcheck::verify_goldens(config, std::cout, std::cerr);
    }
    return ifcheck::run(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "ifcheck: " << e.what() << "\n";
    return ifcheck::exit_code::kUsage;
  }
}
