#include "trustlab/csv.hpp"

#include <filesystem>
#include <stdexcept>

namespace trustlab {

CsvWriter::CsvWriter(const std::string& path,
                     const std::map<std::string, std::string>& metadata) {
    out_.open(path);
    if (!out_) throw std::runtime_error("cannot open output file " + path);
    out_ << "# artifact_version: " << kArtifactVersion << '\n';
    for (const auto& [key, value] : metadata) out_ << "# " << key << ": " << value << '\n';
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    bool first = true;
    for (const auto& c : columns) {
        out_ << (first ? "" : ",") << c;
        first = false;
    }
    out_ << '\n';
}

std::string join_path(const std::string& dir, const std::string& file) {
    return (std::filesystem::path(dir) / file).string();
}

void ensure_directory(const std::string& dir) {
    std::filesystem::create_directories(dir);
}

}  // namespace trustlab
