#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "h2leader/selection.hpp"

namespace h2leader::cli {

/// Runs a full command line (program name excluded), writing primary output
/// to `out` and diagnostics to `err`. Lives in the library so tests can
/// drive commands in-process. Exit status: 0 success, 1 domain error
/// (structured JSON on err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Candidate table as CSV: header "new_leaders,f", one row per candidate in
/// report order, sets rendered "{2,3}" (quoted), values fixed to `decimals`
/// places. Empty candidate sets (nothing left to select) render no row.
std::string format_table(const SelectionReport& report, int decimals = 4);

}  // namespace h2leader::cli
