#ifndef GQS_CLI_HPP
#define GQS_CLI_HPP

#include <iosfwd>

namespace gqs {

// Runs one command: parses argv, writes results to out and diagnostics to
// err, reads `-` inputs from in.  Returns the process exit code: 0 success,
// 1 domain or capacity error, 2 usage or parse error.  Limits are reset on
// entry, overridden by --max-nodes/--max-edges (or GQS_MAX_NODES and
// GQS_MAX_EDGES, with the flags winning), and restored before returning.
int run(int argc, const char* const* argv, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace gqs

#endif
