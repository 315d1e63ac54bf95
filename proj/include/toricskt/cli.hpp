#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricskt::cli {

// Exit codes: 0 success, 1 verification-false (verify-certificate only),
// 2 usage errors, 3 parse errors, 4 mathematical failures. On success the
// payload JSON goes to `out`; on failure nothing is written to `out` and the
// diagnostic goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricskt::cli
