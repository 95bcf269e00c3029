#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace islm::cli {

enum class OutputFormat { HumanTable, StructuredText, DelimitedColumns };

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 on success (in-band diagnostics allowed), 1 otherwise.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace islm::cli
