#include "sepaut/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups of hypersurfaces with separated variables"};
  app.require_subcommand(1);

  sepaut::AnalyzeOptions options;
  bool ascii = false;
  std::string input;

  auto* analyze = app.add_subcommand("analyze", "Full analysis of a polynomial");
  analyze->add_option("input", input, "Polynomial expression or file containing one")->required();
  analyze->add_flag("--json", options.json, "Emit the JSON report");
  analyze->add_flag("--verify", options.verify, "Also run the brute-force oracles");
  analyze->add_flag("--ascii", ascii, "ASCII group symbols in the text report");

  std::string oracle;
  std::optional<std::uint64_t> modulus;
  auto* verify = app.add_subcommand("verify", "Run one verification oracle");
  verify->add_option("input", input, "Polynomial expression or file containing one")->required();
  verify->add_option("--oracle", oracle, "perms, torsion or generators")
      ->required()
      ->check(CLI::IsMember({"perms", "torsion", "generators"}));
  verify->add_option("--mod", modulus, "Modulus N for the torsion oracle")
      ->check(CLI::PositiveNumber);

  std::string matrix_path;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
  snf->add_option("matrix-file", matrix_path, "\"rows cols\" then row-major entries")
      ->required();

  std::size_t n = 0;
  sepaut::Exponent alpha = 0;
  auto* fermat = app.add_subcommand("fermat", "Analyze Y1^alpha + ... + Yn^alpha");
  fermat->add_option("n", n, "Number of variables")->required();
  fermat->add_option("alpha", alpha, "Exponent")->required();
  fermat->add_flag("--json", options.json, "Emit the JSON report");
  fermat->add_flag("--verify", options.verify, "Also run the brute-force oracles");
  fermat->add_flag("--ascii", ascii, "ASCII group symbols in the text report");

  CLI11_PARSE(app, argc, argv);
  options.unicode = !ascii && sepaut::terminal_is_utf8();

  if (*analyze) return sepaut::cmd_analyze(input, options, std::cout, std::cerr);
  if (*verify) return sepaut::cmd_verify(input, oracle, modulus, std::cout, std::cerr);
  if (*snf) return sepaut::cmd_snf(matrix_path, std::cout, std::cerr);
  return sepaut::cmd_fermat(n, alpha, options, std::cout, std::cerr);
}
