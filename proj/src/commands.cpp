#include "sepaut/commands.hpp"

#include "sepaut/errors.hpp"
#include "sepaut/intlat.hpp"
#include "sepaut/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sepaut {

namespace {

std::string trim(std::string text) {
  auto const not_space = [](unsigned char c) { return !std::isspace(c); };
  text.erase(text.begin(), std::find_if(text.begin(), text.end(), not_space));
  text.erase(std::find_if(text.rbegin(), text.rend(), not_space).base(), text.end());
  return text;
}

void report_parse_error(std::string const& input, ParseError const& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (input.find('\n') == std::string::npos) {
    err << "  " << input << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
  }
}

// Runs body and maps library errors onto exit codes.
template <typename Body>
int guarded(std::string const& input, std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (NotSeparatedError const& e) {
    err << "error: not separated: " << e.what() << '\n';
    return kExitNotSeparated;
  } catch (ParseError const& e) {
    report_parse_error(input, e, err);
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

int emit(AnalysisReport const& report, AnalyzeOptions const& options, std::ostream& out) {
  if (options.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(report, options.unicode);
  }
  bool const ok = std::all_of(report.verification.begin(), report.verification.end(),
                              [](OracleResult const& r) { return !r.ran || r.passed; });
  return ok ? kExitOk : kExitError;
}

}  // namespace

std::string resolve_input(std::string const& argument) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(argument, ec)) {
    std::ifstream in(argument);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return trim(buffer.str());
  }
  return trim(argument);
}

int cmd_analyze(std::string const& argument, AnalyzeOptions const& options, std::ostream& out,
                std::ostream& err) {
  std::string const input = resolve_input(argument);
  return guarded(input, err, [&] {
    return emit(analyze(parse_canonical(input), input, options.verify), options, out);
  });
}

int cmd_verify(std::string const& argument, std::string const& oracle,
               std::optional<std::uint64_t> modulus, std::ostream& out, std::ostream& err) {
  std::string const input = resolve_input(argument);
  return guarded(input, err, [&] {
    CanonicalForm const form = parse_canonical(input);
    AutGroupDescription const aut = aut_group(form);
    OracleResult result;
    if (oracle == "perms") {
      result = run_permutation_oracle(aut);
    } else if (oracle == "torsion") {
      std::uint64_t const N = modulus.value_or(default_torsion_modulus(aut));
      if (N == 0) throw std::invalid_argument("--mod must be positive");
      result = run_torsion_oracle(aut, N);
    } else if (oracle == "generators") {
      result = run_generator_oracle(aut, torus_generators(form));
    } else {
      throw std::invalid_argument("unknown oracle '" + oracle +
                                  "' (expected perms, torsion or generators)");
    }
    out << result.oracle << ": " << result.detail << ", " << (result.passed ? "pass" : "FAIL")
        << '\n';
    return result.passed ? kExitOk : kExitError;
  });
}

int cmd_snf(std::string const& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << '\n';
    return kExitError;
  }
  return guarded(path, err, [&] {
    IntMatrix const A = read_matrix(in);
    SNFResult const snf = smith_normal_form(A);
    out << "rank " << snf.rank() << '\n' << "divisors";
    for (auto const& d : snf.divisors) out << ' ' << d;
    out << "\nU\n" << snf.U << "S\n" << snf.S << "V\n" << snf.V;
    return kExitOk;
  });
}

int cmd_fermat(std::size_t n, Exponent alpha, AnalyzeOptions const& options, std::ostream& out,
               std::ostream& err) {
  return guarded("", err, [&] {
    AutGroupDescription const aut = fermat_aut(n, alpha);
    return emit(analyze(aut.form, render(aut.form), options.verify), options, out);
  });
}

bool terminal_is_utf8() {
  for (char const* name : {"LC_ALL", "LC_CTYPE", "LANG"}) {
    char const* value = std::getenv(name);
    if (value == nullptr || *value == '\0') continue;
    std::string v(value);
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return v.find("utf-8") != std::string::npos || v.find("utf8") != std::string::npos;
  }
  return false;
}

}  // namespace sepaut
