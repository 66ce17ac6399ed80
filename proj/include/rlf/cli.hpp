#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlf::cli {

// Exit codes: 0 ok, 1 usage/parse error, 2 domain error, 3 resource limit.
// `in` backs --input - (stdin); all JSON lands on `out`, diagnostics on `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace rlf::cli
