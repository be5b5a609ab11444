#pragma once

#include <iosfwd>

#include "ncg/config.hpp"

namespace ncg {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitConfig = 2 };

// Each command writes its files under cfg.out_dir and returns an exit code.
// Library errors propagate; run_cli maps them onto exit codes.
int cmd_verify(const RunConfig& cfg, std::ostream& log);
int cmd_action(const RunConfig& cfg, std::ostream& log);
int cmd_spectrum(const RunConfig& cfg, std::ostream& log);
int cmd_sample(const RunConfig& cfg, std::ostream& log);

/// Full command line entry point: parse, load config, apply flag overrides,
/// dispatch. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker cap from NCG_YMH_THREADS (unset or invalid: hardware concurrency).
int worker_limit();

}  // namespace ncg
