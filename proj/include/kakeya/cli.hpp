#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kakeya {

/// Run one toolkit command. Exit codes: 0 pass, 1 mathematically
/// meaningful failure (failing direction, failed identity), 2 usage or
/// parse error. I/O problems are always 2, never 1.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kakeya
