#pragma once

#include <iosfwd>
#include <vector>
#include <string>

namespace ktmax::cli {

/// Dispatches a full command line. Streams are injectable so the tool can be
/// exercised in-process. Returns the exit status: 0 success / all checks
/// pass, 1 assertion or check failure, 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ktmax::cli
