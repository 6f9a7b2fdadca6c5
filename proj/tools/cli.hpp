#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace partcat::cli {

// Exit status: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partcat::cli
