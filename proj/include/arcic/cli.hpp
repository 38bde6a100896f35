#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arcic {

/// Runs one arc-ic subcommand. `args` excludes the program name.
///
/// JSON goes to `out`; the human-readable table goes to `err` when
/// `human_table` is set. Returns 0 when every check passed, 1 when any row
/// failed and 2 on input, domain or unsupported errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool human_table = false);

}  // namespace arcic
