#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfamily/tracker.hpp"

namespace bfamily::cli {

inline constexpr int kSchemaVersion = 1;

/// Flat key=value run description. Blank lines and lines starting with '#' are ignored.
/// Every field has a manifest key of the same name; command-line flags use the same names
/// with '_' spelled '-'.
struct RunManifest {
    double b = 3.0;
    int modes = 1024;
    std::optional<std::string> dt;             // decimal text, parsed at run precision; default from u0
    std::optional<std::string> t_end;          // default depends on the command
    std::string initial = "I";                 // I, II or custom
    std::string initial_file;                  // K samples, one per line, for initial = custom
    bool dealias = false;
    std::optional<int> sample_every;           // steps between snapshots
    std::optional<double> sample_interval;     // time between snapshots, used when sample_every is unset
    int fit_kmin = 8;
    std::string precision = "double";          // double or extended
    std::string output_dir = "bfamily_out";
    int schema_version = kSchemaVersion;
    bool stop_at_resolution = true;            // end the run once delta < 2pi/K
    int regression_samples = 5;
    double ts_exponent = 1.5;
    std::vector<double> b_list;                // sweep only
    std::vector<std::string> initials;         // sweep only; defaults to {initial}
    bool allow_b_minus_one = false;            // sweep only
    unsigned threads = 0;

    /// Throws Error(InvalidConfig) for unknown keys or malformed values.
    void set(std::string_view key, std::string_view value);

    /// Checks cross-field constraints (schema version, precision name, positive sizes).
    void validate() const;

    TrackerOptions tracker_options() const;

    /// Canonical key=value lines, in a fixed order.
    std::vector<std::string> lines() const;
};

/// Keys accepted by RunManifest::set, in canonical order.
const std::vector<std::string>& manifest_keys();

RunManifest parse_manifest(std::string_view text, RunManifest base = {});
/// Error(Io) if the file cannot be read.
RunManifest load_manifest(const std::string& path, RunManifest base = {});

}  // namespace bfamily::cli
