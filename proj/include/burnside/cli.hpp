#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "burnside/beta.hpp"

namespace burnside {

// Parses a group description document:
//   domain: permutation <n> | gf <p> <dim> | cyclotomic <e> <dim>
// followed by one generator per line (permutation image lists or row-major
// matrix entries; cyclotomic entries are a0,a1,... with an optional /den).
// Throws std::invalid_argument with line/column positions on bad input.
std::vector<GroupElement> parse_group_spec(const std::string& document);

// Entry point of the command-line tool.  Exit codes: 0 success, 1 reference
// verification mismatch, 2 usage error, 3 computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Report emitters.
std::string emit_text(const BetaReport& report);
std::string emit_json(const BetaReport& report);
std::string emit_latex(const BetaReport& report);

}  // namespace burnside
