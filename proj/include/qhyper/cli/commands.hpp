#pragma once

#include <iosfwd>

namespace qhyper::cli {

/// Entry point of the qhyper tool. Returns the process exit code:
/// 0 success, 1 some identity failed, 2 usage or configuration error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qhyper::cli
