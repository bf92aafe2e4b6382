#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace steffenlab {

// Exit codes: 0 success, 1 a bound or structure check failed, 2 usage or input error,
// 3 internal error, 130 scan interrupted.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
    const std::atomic<bool>* stop = nullptr);

} // namespace steffenlab
