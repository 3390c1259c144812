#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bfamily/cli/manifest.hpp"

namespace bfamily::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitConfig = 2,
    kExitOverflow = 3,
    kExitInsufficientData = 4,
};

/// Writes spectra.csv, fields.csv, summary.csv and plot_simulate.py into output_dir.
/// Exit 3 when the run overflowed before t_end.
int cmd_simulate(const RunManifest& manifest, std::ostream& log);

/// Tracks a trajectory loaded from a previous simulate output directory, or simulates one first.
/// Writes spectra_magnitude.csv, trace.csv, singularity.csv and plot_track.py.
/// Exit 4 when the trajectory is too short to track.
int cmd_track(const RunManifest& manifest, const std::optional<std::string>& trajectory_dir, std::ostream& log);

/// One simulate+track run per (b, initial) pair on a worker pool; writes sweep.csv and one
/// directory per run. b < -1 is rejected, b = -1 needs allow_b_minus_one.
int cmd_sweep(const RunManifest& manifest, std::ostream& log);

struct ValidateOptions {
    int modes = 2048;
    bool mutate_exponent = false;  // report s instead of s - 1; the suite must then fail
    std::optional<std::string> output_dir;
    unsigned threads = 0;
};

/// Tracker closure against the synthetic branch family; exit 0 iff every non-skipped case passes.
int cmd_validate(const ValidateOptions& options, std::ostream& log);

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bfamily::cli
