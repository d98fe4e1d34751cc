#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "schedalg/semantics/universe.hpp"

namespace schedalg {

// "vars=A,B,C len=4" (either field optional, ',' or ' ' between fields).
// Throws std::invalid_argument.
Universe parse_universe_spec(const std::string& spec, Universe base = {});

// Runs one subcommand; args exclude the program name. Returns 0 on success
// or a true verdict, 1 on a false verdict or unexpected law result, 2 on
// usage, parse or resource errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schedalg
