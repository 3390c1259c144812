#include "bfamily/cli/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "bfamily/error.hpp"
#include "bfamily/scalar.hpp"

namespace bfamily::cli {

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

[[noreturn]] void bad(std::string_view key, std::string_view value, std::string_view why) {
    throw Error(ErrorCode::InvalidConfig,
                std::string(key) + " = '" + std::string(value) + "': " + std::string(why));
}

int to_int(std::string_view key, std::string_view value) {
    const std::string v = trim(value);
    try {
        std::size_t used = 0;
        const long n = std::stol(v, &used);
        if (used != v.size()) bad(key, value, "not an integer");
        return static_cast<int>(n);
    } catch (const std::logic_error&) {
        bad(key, value, "not an integer");
    }
}

double to_real(std::string_view key, std::string_view value) {
    try {
        return parse_real<double>(value);
    } catch (const Error&) {
        bad(key, value, "not a number");
    }
}

bool to_bool(std::string_view key, std::string_view value) {
    std::string v = trim(value);
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    bad(key, value, "expected true/false");
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(value)};
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
    return out;
}

std::string show(double v) { return format_real(v); }

}  // namespace

const std::vector<std::string>& manifest_keys() {
    static const std::vector<std::string> keys{
        "schema_version", "b",          "modes",   "dt",          "t_end",        "initial",
        "initial_file",   "dealias",    "sample_every", "sample_interval", "fit_kmin", "precision",
        "output_dir",     "stop_at_resolution", "regression_samples", "ts_exponent", "b_list",
        "initials",       "allow_b_minus_one", "threads"};
    return keys;
}

void RunManifest::set(std::string_view key_in, std::string_view value_in) {
    std::string key = trim(key_in);
    std::replace(key.begin(), key.end(), '-', '_');
    const std::string value = trim(value_in);
    if (key == "schema_version") schema_version = to_int(key, value);
    else if (key == "b") b = to_real(key, value);
    else if (key == "modes") modes = to_int(key, value);
    else if (key == "dt") { to_real(key, value); dt = value; }
    else if (key == "t_end") { to_real(key, value); t_end = value; }
    else if (key == "initial") initial = value;
    else if (key == "initial_file") initial_file = value;
    else if (key == "dealias") dealias = to_bool(key, value);
    else if (key == "sample_every") sample_every = to_int(key, value);
    else if (key == "sample_interval") sample_interval = to_real(key, value);
    else if (key == "fit_kmin") fit_kmin = to_int(key, value);
    else if (key == "precision") precision = value;
    else if (key == "output_dir") output_dir = value;
    else if (key == "stop_at_resolution") stop_at_resolution = to_bool(key, value);
    else if (key == "regression_samples") regression_samples = to_int(key, value);
    else if (key == "ts_exponent") ts_exponent = to_real(key, value);
    else if (key == "b_list") {
        b_list.clear();
        for (const auto& item : split_list(value)) b_list.push_back(to_real(key, item));
    } else if (key == "initials") initials = split_list(value);
    else if (key == "allow_b_minus_one") allow_b_minus_one = to_bool(key, value);
    else if (key == "threads") threads = static_cast<unsigned>(std::max(0, to_int(key, value)));
    else throw Error(ErrorCode::InvalidConfig, "unknown manifest key '" + key + "'");
}

void RunManifest::validate() const {
    if (schema_version != kSchemaVersion) {
        throw Error(ErrorCode::InvalidConfig, "schema_version " + std::to_string(schema_version) +
                                                  " does not match " + std::to_string(kSchemaVersion));
    }
    if (precision != "double" && precision != "extended") {
        throw Error(ErrorCode::InvalidConfig, "precision must be 'double' or 'extended'");
    }
    if (dt && !(parse_real<double>(*dt) > 0)) throw Error(ErrorCode::InvalidConfig, "dt must be positive");
    if (t_end && !(parse_real<double>(*t_end) > 0)) throw Error(ErrorCode::InvalidConfig, "t_end must be positive");
    if (sample_every && *sample_every < 1) throw Error(ErrorCode::InvalidConfig, "sample_every must be at least 1");
    if (sample_interval && !(*sample_interval > 0)) {
        throw Error(ErrorCode::InvalidConfig, "sample_interval must be positive");
    }
    if (fit_kmin < 2) throw Error(ErrorCode::InvalidConfig, "fit_kmin must be at least 2");
    if (regression_samples < 3) throw Error(ErrorCode::InvalidConfig, "regression_samples must be at least 3");
    if (!(ts_exponent > 0)) throw Error(ErrorCode::InvalidConfig, "ts_exponent must be positive");
    if (output_dir.empty()) throw Error(ErrorCode::InvalidConfig, "output_dir must not be empty");
}

TrackerOptions RunManifest::tracker_options() const {
    TrackerOptions o;
    o.k_min = fit_kmin;
    o.regression_samples = regression_samples;
    o.ts_exponent = ts_exponent;
    o.threads = threads;
    return o;
}

std::vector<std::string> RunManifest::lines() const {
    std::vector<std::string> out;
    out.push_back("schema_version=" + std::to_string(schema_version));
    out.push_back("b=" + show(b));
    out.push_back("modes=" + std::to_string(modes));
    out.push_back("dt=" + dt.value_or("auto"));
    out.push_back("t_end=" + t_end.value_or("auto"));
    out.push_back("initial=" + initial);
    if (!initial_file.empty()) out.push_back("initial_file=" + initial_file);
    out.push_back(std::string("dealias=") + (dealias ? "true" : "false"));
    out.push_back("sample_every=" + (sample_every ? std::to_string(*sample_every) : std::string("auto")));
    out.push_back("sample_interval=" + (sample_interval ? show(*sample_interval) : std::string("auto")));
    out.push_back("fit_kmin=" + std::to_string(fit_kmin));
    out.push_back("precision=" + precision);
    out.push_back("output_dir=" + output_dir);
    out.push_back(std::string("stop_at_resolution=") + (stop_at_resolution ? "true" : "false"));
    out.push_back("regression_samples=" + std::to_string(regression_samples));
    out.push_back("ts_exponent=" + show(ts_exponent));
    if (!b_list.empty()) {
        std::vector<std::string> items;
        for (double v : b_list) items.push_back(show(v));
        out.push_back("b_list=" + join(items));
    }
    if (!initials.empty()) out.push_back("initials=" + join(initials));
    if (allow_b_minus_one) out.push_back("allow_b_minus_one=true");
    return out;
}

RunManifest parse_manifest(std::string_view text, RunManifest base) {
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::InvalidConfig, "manifest line " + std::to_string(number) + " has no '='");
        }
        const std::string value = trim(std::string_view(t).substr(eq + 1));
        // "auto" restores the command default for optional keys.
        const std::string key = trim(std::string_view(t).substr(0, eq));
        if (value == "auto") {
            if (key == "dt") base.dt.reset();
            else if (key == "t_end") base.t_end.reset();
            else if (key == "sample_every") base.sample_every.reset();
            else if (key == "sample_interval") base.sample_interval.reset();
            else base.set(key, value);
            continue;
        }
        base.set(key, value);
    }
    return base;
}

RunManifest load_manifest(const std::string& path, RunManifest base) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot read manifest '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str(), std::move(base));
}

}  // namespace bfamily::cli
