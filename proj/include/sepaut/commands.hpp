#pragma once

#include "sepaut/polyio.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sepaut {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotSeparated = 2;

// Reads the file when `argument` names a regular file, otherwise returns the
// argument itself as an inline expression.
std::string resolve_input(std::string const& argument);

struct AnalyzeOptions {
  bool json = false;
  bool verify = false;
  bool unicode = true;
};

int cmd_analyze(std::string const& argument, AnalyzeOptions const& options, std::ostream& out,
                std::ostream& err);

// oracle is one of "perms", "torsion", "generators".
int cmd_verify(std::string const& argument, std::string const& oracle,
               std::optional<std::uint64_t> modulus, std::ostream& out, std::ostream& err);

int cmd_snf(std::string const& path, std::ostream& out, std::ostream& err);

int cmd_fermat(std::size_t n, Exponent alpha, AnalyzeOptions const& options, std::ostream& out,
               std::ostream& err);

// True when the locale environment advertises UTF-8.
bool terminal_is_utf8();

}  // namespace sepaut
