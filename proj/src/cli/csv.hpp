#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "bfamily/cli/manifest.hpp"
#include "bfamily/error.hpp"

namespace bfamily::cli {

/// CSV file whose first lines are '#' comments carrying the schema version, the producing
/// command and the full manifest, followed by one header line naming the columns.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& command, const RunManifest& manifest,
              const std::vector<std::string>& columns)
        : out_(path), path_(path) {
        if (!out_) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
        out_ << "# schema_version=" << kSchemaVersion << '\n';
        out_ << "# command=" << command << '\n';
        for (const auto& line : manifest.lines()) out_ << "# manifest " << line << '\n';
        for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
        out_ << '\n';
    }

    template <class... Fields>
    void row(const Fields&... fields) {
        std::size_t i = 0;
        ((out_ << (i++ ? "," : "") << fields), ...);
        out_ << '\n';
    }

    ~CsvWriter() { out_.flush(); }

private:
    std::ofstream out_;
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
    out << text;
}

}  // namespace bfamily::cli
