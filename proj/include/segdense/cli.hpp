#pragma once

#include <string>
#include <vector>

namespace segdense {

// Entry point behind the `segdense` binary; returns the process exit code.
// Subcommands: synth, prepare, augment, train, predict, eval seg, eval roc.
int run_cli(const std::vector<std::string>& args);

}  // namespace segdense
