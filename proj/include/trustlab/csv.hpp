// CSV emission with a leading metadata comment block so every output file
// records the seed and configuration that produced it.

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace trustlab {

inline constexpr const char* kArtifactVersion = "0.1.0";

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::map<std::string, std::string>& metadata);

    void header(const std::vector<std::string>& columns);

    template <typename... Fields>
    void row(const Fields&... fields) {
        std::ostringstream line;
        bool first = true;
        ((line << (first ? "" : ",") << fields, first = false), ...);
        out_ << line.str() << '\n';
    }

private:
    std::ofstream out_;
};

std::string join_path(const std::string& dir, const std::string& file);
void ensure_directory(const std::string& dir);

}  // namespace trustlab
