#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tiled::cli {

/// Exit codes: 0 answered, 1 invalid order / negative answer where the
/// command defines one / size limit hit, 2 usage, file or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiled::cli
