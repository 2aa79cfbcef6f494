#pragma once

namespace steiner {

/// Batch front-end entry point (subcommands: symmetrize, schedule, exitprob,
/// eigen, verify). Returns the process exit status: 0 on success, 1 when a
/// verification check fails, 2 on usage/validation/IO errors.
int run_cli(int argc, const char* const* argv);

}  // namespace steiner
