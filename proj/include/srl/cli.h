#ifndef SRL_CLI_H_
#define SRL_CLI_H_

#include <iosfwd>

namespace srl {

// Exit codes of the srl tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the `srl` command line tool. Subcommands: preprocess,
// split, baseline, decode, eval, run, report, select, stats, synth.
// Results go to files (or to `out` where a path is "-"); diagnostics go to
// `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srl

#endif  // SRL_CLI_H_
