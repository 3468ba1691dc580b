#ifndef HKFACE_CLI_APP_HPP
#define HKFACE_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hkface::cli {

// Exit codes: 0 success, 1 usage/input error, 2 verification mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkface::cli

#endif
